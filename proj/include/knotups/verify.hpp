#pragma once

#include <functional>
#include <string>
#include <vector>

namespace knotups {

struct CheckResult {
    int id = 0;
    std::string title;
    bool passed = false;
    bool skipped = false;
    std::string detail;       // deterministic summary of what was compared
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

struct VerifyOptions {
    // Skips the tensor-product checks (criteria 11 to 13).
    bool fast = false;
    // Called after each check completes.
    std::function<void(const CheckResult&)> on_result;
};

// Runs the full reproduction suite. A check fails on any value mismatch or
// when it exceeds its time budget.
std::vector<CheckResult> run_reproduction_suite(const VerifyOptions& options = {});

// "PASS  [ 5] title: detail" (no timings, so output is reproducible).
std::string format_result(const CheckResult& r);

}  // namespace knotups
