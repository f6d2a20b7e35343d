#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

std::set<std::int64_t> semigroup(std::int64_t p, std::int64_t q, std::int64_t limit) {
    std::set<std::int64_t> s;
    for (std::int64_t a = 0; a * p <= limit; ++a) {
        for (std::int64_t b = 0; a * p + b * q <= limit; ++b) s.insert(a * p + b * q);
    }
    return s;
}

std::vector<std::pair<std::int64_t, std::int64_t>> runs(std::int64_t p, std::int64_t q) {
    std::int64_t conductor = (p - 1) * (q - 1);
    auto s = semigroup(p, q, conductor);
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t n = 0; n < conductor; ++n) {
        if (!s.count(n)) continue;
        if (!out.empty() && out.back().second == n - 1) {
            out.back().second = n;
        } else {
            out.push_back({n, n});
        }
    }
    return out;
}

std::map<int, std::int64_t> alexander_series(std::int64_t p, std::int64_t q) {
    int deg = static_cast<int>(p * q + 1);
    std::vector<std::int64_t> c(deg + 1, 0);
    // 1/((1-t^p)(1-t^q)) counts representations a*p + b*q.
    for (std::int64_t a = 0; a * p <= deg; ++a) {
        for (std::int64_t b = 0; a * p + b * q <= deg; ++b) c[a * p + b * q] += 1;
    }
    auto times_one_minus = [deg](std::vector<std::int64_t> v, std::int64_t k) {
        for (int i = deg; i >= k; --i) v[i] -= v[i - k];
        return v;
    };
    c = times_one_minus(c, 1);
    c = times_one_minus(c, p * q);
    std::map<int, std::int64_t> out;
    for (int i = 0; i <= deg; ++i) {
        if (c[i] != 0) out[i] = c[i];
    }
    return out;
}

std::size_t rank_by_span(const knotups::f2::F2Matrix& m) {
    if (m.rows() > 16) throw std::invalid_argument("too many rows for span enumeration");
    std::set<std::vector<bool>> span;
    for (std::uint32_t mask = 0; mask < (1U << m.rows()); ++mask) {
        std::vector<bool> v(m.cols(), false);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (!(mask >> r & 1U)) continue;
            for (std::size_t c = 0; c < m.cols(); ++c) v[c] = v[c] != m.get(r, c);
        }
        span.insert(v);
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size()) ++rank;
    return rank;
}

std::size_t staircase_size(std::int64_t p, std::int64_t q) {
    if (p == 1) return 1;
    return 2 * runs(p, q).size() + 1;
}

knotups::Rational upsilon_torus(std::int64_t p, std::int64_t q, const knotups::Rational& t) {
    using knotups::Rational;
    std::int64_t genus = (p - 1) * (q - 1) / 2;
    auto rs = runs(p, q);
    rs.push_back({(p - 1) * (q - 1), (p - 1) * (q - 1)});
    // White i sits at (#semigroup elements below s_i, that count - s_i + genus).
    std::int64_t below = 0;
    Rational best;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        std::int64_t alg = below;
        std::int64_t alex = below - rs[i].first + genus;
        Rational f = t / Rational(2) * Rational(alex) + (Rational(1) - t / Rational(2)) * Rational(alg);
        if (i == 0 || f < best) best = f;
        below += rs[i].second - rs[i].first + 1;
    }
    return Rational(-2) * best;
}

}  // namespace oracle
