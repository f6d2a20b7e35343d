#pragma once

#include "json.hpp"

#include "knotups/complex.hpp"
#include "knotups/plfunction.hpp"
#include "knotups/rational.hpp"
#include "knotups/staircase.hpp"
#include "knotups/upsilon.hpp"

// JSON schemas:
//
//   Rational      {"num": N, "den": D}   (N, D as strings when beyond 64 bits)
//   ExtRational   a Rational, or the strings "inf" / "-inf"
//   PLFunction    {"breakpoints": [{"t": Rational, "v": Rational}, ...]}
//   LaurentPoly   {"terms": [{"exp": E, "coef": C}, ...]}   sorted by exponent
//   Complex       {"generators": [{"name", "maslov", "alg", "alex"}, ...],
//                  "differential": [{"source", "target", "u_power"}, ...]}
//   JumpReport    {"t": Rational, "is_jump": bool, "upsilon2": ExtRational}
namespace knotups {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const ExtRational& r);
nlohmann::json to_json(const PLFunction& f);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const BifilteredComplex& c);
nlohmann::json to_json(const JumpReport& j);

// Throw std::invalid_argument on schema violations.
Rational rational_from_json(const nlohmann::json& j);
PLFunction plfunction_from_json(const nlohmann::json& j);
BifilteredComplex complex_from_json(const nlohmann::json& j);

}  // namespace knotups
