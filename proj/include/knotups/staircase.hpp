#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotups/plfunction.hpp"

namespace knotups {

// Integer Laurent polynomial; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<int, std::int64_t> terms);

    const std::map<int, std::int64_t>& terms() const { return terms_; }
    std::int64_t coefficient(int exponent) const;
    void add_term(int exponent, std::int64_t coefficient);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // e.g. "1 - t + t^3 - t^5 + t^6"
    std::string str() const;

private:
    std::map<int, std::int64_t> terms_;
};

struct LatticePoint {
    std::int64_t alg = 0;
    std::int64_t alex = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Inclusive run [start, end] of consecutive semigroup elements.
struct Run {
    std::int64_t start = 0;
    std::int64_t end = 0;

    friend bool operator==(const Run&, const Run&) = default;
};

// The semigroup {a*p + b*q : a, b >= 0} as maximal runs below the conductor.
struct SemigroupRuns {
    std::vector<Run> runs;
    std::int64_t tail_start = 0;

    bool contains(std::int64_t n) const;
};

struct Staircase {
    std::vector<std::int64_t> steps;
    std::vector<LatticePoint> whites;
    std::vector<LatticePoint> blacks;
    std::int64_t genus = 0;
};

// Validates 1 <= p < q and gcd(p, q) == 1; throws std::invalid_argument otherwise.
void check_torus_params(std::int64_t p, std::int64_t q);

SemigroupRuns semigroup_runs(std::int64_t p, std::int64_t q);

// Alexander polynomial read off the semigroup runs.
LaurentPoly alexander_torus(std::int64_t p, std::int64_t q);
// Alexander polynomial by exact division of (1 - t^pq)(1 - t) by (1 - t^p)(1 - t^q).
LaurentPoly alexander_oracle(std::int64_t p, std::int64_t q);

std::vector<std::int64_t> staircase_steps(std::int64_t p, std::int64_t q);

// Staircase in absolute coordinates: leftmost white at algebraic level 0,
// lowest white at Alexander level 0.
Staircase build_staircase(std::int64_t p, std::int64_t q);

// Upsilon of T(p, q) as -2 times the lower envelope over the whites.
PLFunction upsilon_staircase(std::int64_t p, std::int64_t q);

}  // namespace knotups
