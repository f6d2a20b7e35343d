#include "knotups/upsilon.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace knotups {

namespace {

std::string join_violations(const std::vector<std::string>& v) {
    std::string msg = "invalid knot complex";
    for (const auto& s : v) msg += "\n  " + s;
    return msg;
}

const Rational kZero{0};
const Rational kTwo{2};

void require_open(const Rational& t, const char* what) {
    if (t <= kZero || t >= kTwo) {
        throw std::out_of_range(std::string(what) + "=" + t.str() + " must lie in (0,2)");
    }
}

void require_closed(const Rational& t, const char* what) {
    if (t < kZero || t > kTwo) {
        throw std::out_of_range(std::string(what) + "=" + t.str() + " must lie in [0,2]");
    }
}

// Indices 0..n-1 sorted by key, returned with their keys.
template <typename KeyFn>
std::vector<std::pair<std::int64_t, std::size_t>> sorted_by_key(std::size_t n, KeyFn key) {
    std::vector<std::pair<std::int64_t, std::size_t>> order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i) order.emplace_back(key(i), i);
    std::sort(order.begin(), order.end());
    return order;
}

f2::F2Matrix from_columns(const std::vector<const f2::BitVector*>& cols, std::size_t rows) {
    f2::F2Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < rows; ++r) {
            if (cols[c]->get(r)) m.set(r, c);
        }
    }
    return m;
}

}  // namespace

InvalidComplex::InvalidComplex(const std::vector<std::string>& violations)
    : std::invalid_argument(join_violations(violations)), violations_(violations) {}

UpsilonEngine::UpsilonEngine(const BifilteredComplex& complex) : complex_(complex) {
    auto problems = validate(complex_);
    if (!problems.empty()) throw InvalidComplex(problems);

    GradingSlice s0 = grading_slice(complex_, 0);
    GradingSlice s1 = grading_slice(complex_, 1);
    const std::size_t dim0 = s0.dim();
    dim_below_ = s0.boundary_out.rows();

    for (const auto& e : s0.basis) slice0_.push_back(e.level);
    for (const auto& e : s1.basis) slice1_.push_back(e.level);

    // A cycle outside the boundaries generates H_0.
    f2::IncrementalSpan boundaries(dim0);
    for (std::size_t w = 0; w < s1.dim(); ++w) {
        boundary_columns_.push_back(s0.boundary_in.column(w));
        boundaries.insert(boundary_columns_.back());
    }
    std::optional<f2::BitVector> generator;
    for (auto& z : f2::nullspace(s0.boundary_out)) {
        if (!boundaries.contains(z)) {
            generator = std::move(z);
            break;
        }
    }
    if (!generator) throw std::logic_error("complex has no nontrivial grading-0 homology");

    // The class functional: zero on every boundary, one on the generator.
    f2::F2Matrix system(s1.dim() + 1, dim0);
    for (std::size_t w = 0; w < s1.dim(); ++w) {
        for (std::size_t e = 0; e < dim0; ++e) {
            if (boundary_columns_[w].get(e)) system.set(w, e);
        }
    }
    for (std::size_t e = 0; e < dim0; ++e) {
        if (generator->get(e)) system.set(s1.dim(), e);
    }
    f2::BitVector rhs(s1.dim() + 1);
    rhs.set(s1.dim());
    auto functional = f2::solve(system, rhs);
    if (!functional) throw std::logic_error("no homology class functional exists");
    homology_class_ = std::move(*functional);

    for (std::size_t e = 0; e < dim0; ++e) {
        f2::BitVector col(dim_below_ + 1);
        for (std::size_t r = 0; r < dim_below_; ++r) {
            if (s0.boundary_out.get(r, e)) col.set(r);
        }
        if (homology_class_.get(e)) col.set(dim_below_);
        cycle_columns_.push_back(std::move(col));
    }

    // Critical parameters: f_t(L1) == f_t(L2) for distinct levels, i.e.
    // t = 2 da / (da - dA).
    std::vector<LatticePoint> levels = slice0_;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::set<std::pair<std::int64_t, std::int64_t>> fractions;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        for (std::size_t j = i + 1; j < levels.size(); ++j) {
            std::int64_t da = levels[i].alg - levels[j].alg;
            std::int64_t dA = levels[i].alex - levels[j].alex;
            std::int64_t num = 2 * da;
            std::int64_t den = da - dA;
            if (den == 0) continue;
            if (den < 0) {
                num = -num;
                den = -den;
            }
            if (num <= 0 || num >= 2 * den) continue;
            std::int64_t g = std::gcd(num, den);
            fractions.emplace(num / g, den / g);
        }
    }
    for (auto [n, d] : fractions) critical_.emplace_back(BigInt(n), BigInt(d));
    std::sort(critical_.begin(), critical_.end());
}

bool UpsilonEngine::is_critical(const Rational& t) const {
    return std::binary_search(critical_.begin(), critical_.end(), t);
}

UpsilonEngine::ScaledParam UpsilonEngine::scale(const Rational& t) const {
    constexpr std::int64_t kLimit = std::int64_t{1} << 40;
    if (abs(t.num()) > kLimit || t.den() > kLimit) {
        throw std::range_error("parameter " + t.str() + " has too large a numerator or denominator");
    }
    return {static_cast<std::int64_t>(t.num()), static_cast<std::int64_t>(t.den())};
}

std::int64_t UpsilonEngine::key(const ScaledParam& t, const LatticePoint& level) {
    return t.num * level.alex + (2 * t.den - t.num) * level.alg;
}

UpsilonEngine::GammaResult UpsilonEngine::gamma_scaled(const Rational& t) const {
    require_closed(t, "t");
    ScaledParam param = scale(t);
    auto order = sorted_by_key(slice0_.size(), [&](std::size_t i) { return key(param, slice0_[i]); });

    f2::IncrementalSpan span(dim_below_ + 1);
    f2::BitVector target(dim_below_ + 1);
    target.set(dim_below_);
    span.set_target(std::move(target));
    for (std::size_t i = 0; i < order.size();) {
        std::int64_t level = order[i].first;
        for (; i < order.size() && order[i].first == level; ++i) {
            span.insert(cycle_columns_[order[i].second]);
        }
        if (span.target_reached()) return {level, param};
    }
    throw std::logic_error("no grading-0 cycle generates homology");
}

Rational UpsilonEngine::gamma(const Rational& t) const {
    auto g = gamma_scaled(t);
    return Rational(BigInt(g.key), BigInt(2 * g.param.den));
}

PLFunction UpsilonEngine::upsilon() const {
    std::vector<Rational> points{kZero};
    points.insert(points.end(), critical_.begin(), critical_.end());
    points.push_back(kTwo);

    std::vector<Breakpoint> samples;
    samples.reserve(points.size());
    for (const auto& t : points) samples.push_back({t, Rational(-2) * gamma(t)});

    // gamma is linear between consecutive critical parameters; check it at midpoints.
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        Rational mid = (samples[i].t + samples[i + 1].t) / kTwo;
        Rational expected = (samples[i].value + samples[i + 1].value) / kTwo;
        if (Rational(-2) * gamma(mid) != expected) {
            throw std::logic_error("Upsilon is not linear between critical parameters near t=" + mid.str());
        }
    }
    return PLFunction::from_samples(std::move(samples));
}

Rational UpsilonEngine::delta_at(const Rational& t) const {
    auto hi = std::upper_bound(critical_.begin(), critical_.end(), t);
    auto lo = std::lower_bound(critical_.begin(), critical_.end(), t);
    Rational upper = hi == critical_.end() ? kTwo : *hi;
    Rational lower = lo == critical_.begin() ? kZero : *std::prev(lo);
    return std::min(t - lower, upper - t) / kTwo;
}

std::vector<std::size_t> UpsilonEngine::sublevel0(const ScaledParam& t, std::int64_t threshold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < slice0_.size(); ++i) {
        if (key(t, slice0_[i]) <= threshold) out.push_back(i);
    }
    return out;
}

PivotPair UpsilonEngine::pivot_points(const Rational& t) const {
    require_open(t, "t");
    PivotPair out;
    out.delta = delta_at(t);
    auto on_line = [&](const Rational& side) {
        auto g = gamma_scaled(side);
        std::set<LatticePoint> hits;
        for (const auto& level : slice0_) {
            if (key(g.param, level) == g.key) hits.insert(level);
        }
        if (hits.size() != 1) {
            throw std::logic_error("support line at t=" + side.str() + " meets " + std::to_string(hits.size()) +
                                   " grading-0 levels; delta too large");
        }
        return *hits.begin();
    };
    out.negative = on_line(t - out.delta);
    out.positive = on_line(t + out.delta);
    return out;
}

f2::F2AffineSpace UpsilonEngine::cycle_space(const Rational& t_side) const {
    auto g = gamma_scaled(t_side);
    auto support = sublevel0(g.param, g.key);

    std::vector<const f2::BitVector*> cols;
    cols.reserve(support.size());
    for (auto i : support) cols.push_back(&cycle_columns_[i]);
    f2::F2Matrix system = from_columns(cols, dim_below_ + 1);

    f2::BitVector rhs(dim_below_ + 1);
    rhs.set(dim_below_);
    auto particular = f2::solve(system, rhs);
    if (!particular) throw std::logic_error("gamma level holds no homology generator");

    auto embed = [&](const f2::BitVector& local) {
        f2::BitVector v(slice0_.size());
        for (std::size_t k = 0; k < support.size(); ++k) {
            if (local.get(k)) v.set(support[k]);
        }
        return v;
    };
    std::vector<f2::BitVector> directions;
    for (const auto& d : f2::nullspace(system)) directions.push_back(embed(d));
    return f2::F2AffineSpace(embed(*particular), directions);
}

ExtRational UpsilonEngine::gamma2_with(const f2::F2AffineSpace& z_plus, const f2::F2AffineSpace& z_minus,
                                       const Rational& t, const Rational& s) const {
    // z+ + z- = d w with z+- ranging over their cycle sets and w supported in
    // C^t_{gamma(t)} + C^s_r: one F2 span-membership question per threshold r.
    f2::IncrementalSpan span(slice0_.size());
    span.set_target(z_plus.base() ^ z_minus.base());
    for (const auto& d : z_plus.directions()) span.insert(d);
    for (const auto& d : z_minus.directions()) span.insert(d);
    if (span.target_reached()) return ExtRational::neg_inf();

    auto g = gamma_scaled(t);
    std::vector<bool> used(slice1_.size(), false);
    for (std::size_t w = 0; w < slice1_.size(); ++w) {
        if (key(g.param, slice1_[w]) <= g.key) {
            span.insert(boundary_columns_[w]);
            used[w] = true;
        }
    }
    // Already homologous inside C^t_{gamma(t)}: every r qualifies.
    if (span.target_reached()) return ExtRational::neg_inf();

    ScaledParam ps = scale(s);
    auto order = sorted_by_key(slice1_.size(), [&](std::size_t w) { return key(ps, slice1_[w]); });
    for (std::size_t i = 0; i < order.size();) {
        std::int64_t level = order[i].first;
        for (; i < order.size() && order[i].first == level; ++i) {
            if (!used[order[i].second]) span.insert(boundary_columns_[order[i].second]);
        }
        if (span.target_reached()) return ExtRational(Rational(BigInt(level), BigInt(2 * ps.den)));
    }
    throw std::logic_error("cycle sets are not homologous in the full complex");
}

ExtRational UpsilonEngine::gamma2(const Rational& t, const Rational& s) const {
    require_open(t, "t");
    require_closed(s, "s");
    // Off the critical set the cycle sets on both sides coincide.
    if (!is_critical(t)) return ExtRational::neg_inf();
    Rational delta = delta_at(t);
    auto z_minus = cycle_space(t - delta);
    auto z_plus = cycle_space(t + delta);
    return gamma2_with(z_plus, z_minus, t, s);
}

ExtRational UpsilonEngine::upsilon2(const Rational& t, const Rational& s) const {
    ExtRational g2 = gamma2(t, s);
    if (g2.is_neg_inf()) return ExtRational::pos_inf();
    return ExtRational(Rational(-2) * (g2.value() - gamma(t)));
}

std::vector<JumpReport> UpsilonEngine::jump_values(const Rational& max_t) const {
    std::vector<JumpReport> out;
    auto end = std::upper_bound(critical_.begin(), critical_.end(), max_t);
    if (end == critical_.begin()) return out;

    // Cycle sets are constant on the open intervals between critical parameters.
    auto interval_space = [&](std::size_t i) {
        Rational lo = i == 0 ? kZero : critical_[i - 1];
        Rational hi = i < critical_.size() ? critical_[i] : kTwo;
        return cycle_space((lo + hi) / kTwo);
    };
    f2::F2AffineSpace left = interval_space(0);
    for (auto it = critical_.begin(); it != end; ++it) {
        auto i = static_cast<std::size_t>(it - critical_.begin());
        f2::F2AffineSpace right = interval_space(i + 1);
        JumpReport report{*it, !f2::affine_intersects(right, left), ExtRational::pos_inf()};
        if (report.is_jump) {
            ExtRational g2 = gamma2_with(right, left, *it, *it);
            if (!g2.is_neg_inf()) report.upsilon2 = ExtRational(Rational(-2) * (g2.value() - gamma(*it)));
        }
        out.push_back(std::move(report));
        left = std::move(right);
    }
    return out;
}

Rational gamma_at(const BifilteredComplex& c, const Rational& t) { return UpsilonEngine(c).gamma(t); }
PLFunction upsilon_pl(const BifilteredComplex& c) { return UpsilonEngine(c).upsilon(); }
PivotPair pivot_points(const BifilteredComplex& c, const Rational& t) { return UpsilonEngine(c).pivot_points(t); }
f2::F2AffineSpace cycle_space(const BifilteredComplex& c, const Rational& t_side) {
    return UpsilonEngine(c).cycle_space(t_side);
}
ExtRational gamma2(const BifilteredComplex& c, const Rational& t, const Rational& s) {
    return UpsilonEngine(c).gamma2(t, s);
}
ExtRational upsilon2(const BifilteredComplex& c, const Rational& t, const Rational& s) {
    return UpsilonEngine(c).upsilon2(t, s);
}
std::vector<JumpReport> jump_values(const BifilteredComplex& c) { return UpsilonEngine(c).jump_values(); }

bool check_subadditivity(const BifilteredComplex& a, const BifilteredComplex& b, const Rational& t) {
    ExtRational sum = UpsilonEngine(tensor(a, b)).upsilon2(t, t);
    ExtRational ua = UpsilonEngine(a).upsilon2(t, t);
    ExtRational ub = UpsilonEngine(b).upsilon2(t, t);
    return sum >= std::min(ua, ub);
}

}  // namespace knotups
