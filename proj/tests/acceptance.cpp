// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <iostream>

#include "knotups/verify.hpp"

int main() {
    knotups::VerifyOptions opts;
    opts.on_result = [](const knotups::CheckResult& r) {
        char timing[64];
        std::snprintf(timing, sizeof timing, "  (%.3fs, budget %.0fs)", r.seconds, r.budget_seconds);
        std::cout << knotups::format_result(r) << timing << std::endl;
    };
    int failed = 0;
    for (const auto& r : knotups::run_reproduction_suite(opts)) failed += !r.passed;
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
