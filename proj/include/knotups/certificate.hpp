#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knotups/knot_expr.hpp"
#include "knotups/rational.hpp"

namespace knotups {

// What is known about Upsilon^2_J(s) and Upsilon^2_{-J}(s) for one summand J.
// The lower bounds always hold; `exact` is set when the value itself is known.
struct SummandBounds {
    ExtRational lower;
    ExtRational mirror_lower;
    std::optional<ExtRational> exact;
    std::optional<ExtRational> mirror_exact;
};

// Connected-sum lemma: if Upsilon^2_K(s) = m and every other summand J has
// min(Upsilon^2_J(s), Upsilon^2_{-J}(s)) > m, then Upsilon^2 of the whole sum is m.
std::optional<ExtRational> certify_sum(const ExtRational& base, std::span<const SummandBounds> others);

// Multiples lemma: Upsilon^2_K(s) < Upsilon^2_{-K}(s) implies
// Upsilon^2_{nK}(s) = Upsilon^2_K(s) for n >= 1. Subadditivity alone gives
// the lower bounds for n * K and -(n * K).
SummandBounds bounds_for_multiple(const SummandBounds& k, std::int64_t n);

struct Certificate {
    std::optional<ExtRational> value;
    std::vector<std::string> steps;
};

// Upsilon^2_K(s) for K a connected sum of torus knots, mirrors and
// multiples, derived from per-summand values only (no tensor products).
Certificate certify_upsilon2(const KnotExpr& e, const Rational& s);

}  // namespace knotups
