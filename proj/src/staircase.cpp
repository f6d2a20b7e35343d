#include "knotups/staircase.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotups {

LaurentPoly::LaurentPoly(std::map<int, std::int64_t> terms) {
    for (auto [e, c] : terms) add_term(e, c);
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto& c = terms_[exponent];
    c += coefficient;
    if (c == 0) terms_.erase(exponent);
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << 't';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

bool SemigroupRuns::contains(std::int64_t n) const {
    if (n >= tail_start) return true;
    for (const auto& r : runs) {
        if (n >= r.start && n <= r.end) return true;
    }
    return false;
}

void check_torus_params(std::int64_t p, std::int64_t q) {
    if (p < 1 || q <= p) {
        throw std::invalid_argument("torus knot T(" + std::to_string(p) + "," + std::to_string(q) +
                                    ") needs 1 <= p < q");
    }
    if (std::gcd(p, q) != 1) {
        throw std::invalid_argument("torus knot T(" + std::to_string(p) + "," + std::to_string(q) +
                                    ") needs coprime parameters");
    }
}

SemigroupRuns semigroup_runs(std::int64_t p, std::int64_t q) {
    check_torus_params(p, q);
    // Every integer from the conductor (p-1)(q-1) on is in the semigroup.
    const std::int64_t conductor = (p - 1) * (q - 1);
    std::vector<bool> member(static_cast<std::size_t>(conductor), false);
    for (std::int64_t a = 0; a * p < conductor; ++a) {
        for (std::int64_t v = a * p; v < conductor; v += q) {
            member[static_cast<std::size_t>(v)] = true;
        }
    }

    SemigroupRuns out;
    out.tail_start = conductor;
    for (std::int64_t n = 0; n < conductor; ++n) {
        if (!member[static_cast<std::size_t>(n)]) continue;
        if (!out.runs.empty() && out.runs.back().end == n - 1) {
            out.runs.back().end = n;
        } else {
            out.runs.push_back({n, n});
        }
    }
    return out;
}

LaurentPoly alexander_torus(std::int64_t p, std::int64_t q) {
    auto sg = semigroup_runs(p, q);
    LaurentPoly poly;
    for (const auto& r : sg.runs) {
        poly.add_term(static_cast<int>(r.start), 1);
        poly.add_term(static_cast<int>(r.end + 1), -1);
    }
    poly.add_term(static_cast<int>(sg.tail_start), 1);
    return poly;
}

namespace {

using Coeffs = std::vector<std::int64_t>;

Coeffs divide_by_one_minus_power(const Coeffs& num, std::size_t k) {
    if (num.size() <= k) {
        throw std::logic_error("polynomial division: divisor degree too large");
    }
    Coeffs quot(num.size() - k, 0);
    for (std::size_t i = 0; i < quot.size(); ++i) {
        quot[i] = num[i] + (i >= k ? quot[i - k] : 0);
    }
    // Exactness: quot * (1 - t^k) must reproduce num.
    for (std::size_t i = 0; i < num.size(); ++i) {
        std::int64_t v = (i < quot.size() ? quot[i] : 0) - (i >= k ? quot[i - k] : 0);
        if (v != num[i]) {
            throw std::logic_error("polynomial division left a remainder");
        }
    }
    return quot;
}

}  // namespace

LaurentPoly alexander_oracle(std::int64_t p, std::int64_t q) {
    check_torus_params(p, q);
    const auto pq = static_cast<std::size_t>(p * q);
    // (1 - t^pq)(1 - t) = 1 - t - t^pq + t^(pq+1)
    Coeffs num(pq + 2, 0);
    num[0] += 1;
    num[1] -= 1;
    num[pq] -= 1;
    num[pq + 1] += 1;
    Coeffs quot = divide_by_one_minus_power(num, static_cast<std::size_t>(p));
    quot = divide_by_one_minus_power(quot, static_cast<std::size_t>(q));

    LaurentPoly poly;
    for (std::size_t i = 0; i < quot.size(); ++i) poly.add_term(static_cast<int>(i), quot[i]);
    return poly;
}

std::vector<std::int64_t> staircase_steps(std::int64_t p, std::int64_t q) {
    auto sg = semigroup_runs(p, q);
    std::vector<std::int64_t> steps;
    for (std::size_t i = 0; i < sg.runs.size(); ++i) {
        const auto& r = sg.runs[i];
        std::int64_t next_start = i + 1 < sg.runs.size() ? sg.runs[i + 1].start : sg.tail_start;
        steps.push_back(r.end - r.start + 1);
        steps.push_back(next_start - r.end - 1);
    }
    return steps;
}

Staircase build_staircase(std::int64_t p, std::int64_t q) {
    auto sg = semigroup_runs(p, q);
    Staircase sc;
    sc.genus = (p - 1) * (q - 1) / 2;
    sc.steps = staircase_steps(p, q);

    // White i sits at (alpha(i), alpha(i) - s_i) relative to the first white,
    // where alpha(i) counts semigroup elements below s_i.
    std::int64_t alpha = 0;
    for (const auto& r : sg.runs) {
        sc.whites.push_back({alpha, alpha - r.start + sc.genus});
        alpha += r.end - r.start + 1;
    }
    sc.whites.push_back({alpha, alpha - sg.tail_start + sc.genus});

    for (std::size_t i = 0; i + 1 < sc.whites.size(); ++i) {
        sc.blacks.push_back({sc.whites[i + 1].alg, sc.whites[i].alex});
    }
    return sc;
}

PLFunction upsilon_staircase(std::int64_t p, std::int64_t q) {
    auto sc = build_staircase(p, q);
    // Filtration level of a white at parameter t: alg + t * (alex - alg) / 2.
    std::vector<Line> lines;
    lines.reserve(sc.whites.size());
    for (const auto& w : sc.whites) {
        lines.push_back({Rational(BigInt(w.alex - w.alg), BigInt(2)), Rational(w.alg)});
    }
    return PLFunction::lower_envelope(lines).scaled(-2);
}

}  // namespace knotups
