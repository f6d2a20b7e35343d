#include "knotups/plfunction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knotups {

namespace {

const Rational kZero{0};
const Rational kTwo{2};

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
    // (b - a) x (c - a) == 0
    return (b.t - a.t) * (c.value - a.value) == (c.t - a.t) * (b.value - a.value);
}

std::vector<Breakpoint> prune_collinear(std::vector<Breakpoint> pts) {
    std::vector<Breakpoint> out;
    out.reserve(pts.size());
    for (auto& p : pts) {
        while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p)) {
            out.pop_back();
        }
        out.push_back(std::move(p));
    }
    return out;
}

// t at which two non-parallel lines meet.
Rational crossing(const Line& a, const Line& b) {
    return (b.intercept - a.intercept) / (a.slope - b.slope);
}

}  // namespace

PLFunction::PLFunction() : points_{{kZero, kZero}, {kTwo, kZero}} {}

PLFunction PLFunction::constant(const Rational& value) {
    return PLFunction({{kZero, value}, {kTwo, value}});
}

PLFunction PLFunction::from_samples(std::vector<Breakpoint> samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("PL function needs samples at t=0 and t=2");
    }
    for (const auto& s : samples) {
        if (s.t < kZero || s.t > kTwo) {
            throw std::invalid_argument("sample t=" + s.t.str() + " outside [0,2]");
        }
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i - 1].t < samples[i].t)) {
            throw std::invalid_argument("samples must have strictly increasing t");
        }
    }
    if (samples.front().t != kZero || samples.back().t != kTwo) {
        throw std::invalid_argument("samples must cover t=0 and t=2");
    }
    return PLFunction(prune_collinear(std::move(samples)));
}

PLFunction PLFunction::lower_envelope(std::span<const Line> lines) {
    if (lines.empty()) {
        throw std::invalid_argument("lower envelope of an empty set of lines");
    }
    // For a pointwise minimum the active slope decreases as t grows.
    std::vector<Line> sorted(lines.begin(), lines.end());
    std::sort(sorted.begin(), sorted.end(), [](const Line& a, const Line& b) {
        if (a.slope != b.slope) return a.slope > b.slope;
        return a.intercept < b.intercept;
    });

    std::vector<Line> hull;
    for (auto& line : sorted) {
        if (!hull.empty() && hull.back().slope == line.slope) continue;
        while (hull.size() >= 2 &&
               crossing(hull[hull.size() - 2], line) <= crossing(hull[hull.size() - 2], hull.back())) {
            hull.pop_back();
        }
        hull.push_back(std::move(line));
    }

    std::vector<Rational> ts{kZero};
    for (std::size_t i = 1; i < hull.size(); ++i) {
        Rational x = crossing(hull[i - 1], hull[i]);
        if (x > ts.back() && x < kTwo) ts.push_back(std::move(x));
    }
    ts.push_back(kTwo);

    std::vector<Breakpoint> samples;
    samples.reserve(ts.size());
    for (auto& t : ts) {
        Rational best = hull.front().at(t);
        for (std::size_t i = 1; i < hull.size(); ++i) {
            best = std::min(best, hull[i].at(t));
        }
        samples.push_back({std::move(t), std::move(best)});
    }
    return from_samples(std::move(samples));
}

Rational PLFunction::operator()(const Rational& t) const {
    if (t < kZero || t > kTwo) {
        throw std::out_of_range("t=" + t.str() + " outside [0,2]");
    }
    auto hi = std::lower_bound(points_.begin(), points_.end(), t,
                               [](const Breakpoint& b, const Rational& x) { return b.t < x; });
    if (hi->t == t) return hi->value;
    auto lo = std::prev(hi);
    return lo->value + (hi->value - lo->value) * (t - lo->t) / (hi->t - lo->t);
}

PLFunction PLFunction::operator-() const {
    std::vector<Breakpoint> pts = points_;
    for (auto& p : pts) p.value = -p.value;
    return PLFunction(std::move(pts));
}

PLFunction PLFunction::scaled(const BigInt& factor) const {
    if (factor == 0) return PLFunction();
    Rational k(factor, BigInt(1));
    std::vector<Breakpoint> pts = points_;
    for (auto& p : pts) p.value *= k;
    return PLFunction(std::move(pts));
}

PLFunction operator+(const PLFunction& f, const PLFunction& g) {
    std::vector<Rational> ts;
    ts.reserve(f.points_.size() + g.points_.size());
    for (const auto& p : f.points_) ts.push_back(p.t);
    for (const auto& p : g.points_) ts.push_back(p.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::vector<Breakpoint> samples;
    samples.reserve(ts.size());
    for (auto& t : ts) {
        Rational v = f(t) + g(t);
        samples.push_back({std::move(t), std::move(v)});
    }
    return PLFunction(prune_collinear(std::move(samples)));
}

std::string PLFunction::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PLFunction& f) {
    os << '[';
    bool first = true;
    for (const auto& p : f.breakpoints()) {
        if (!first) os << ", ";
        first = false;
        os << '(' << p.t << ", " << p.value << ')';
    }
    return os << ']';
}

}  // namespace knotups
