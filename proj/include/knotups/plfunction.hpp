#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "knotups/rational.hpp"

namespace knotups {

struct Breakpoint {
    Rational t;
    Rational value;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// A line value(t) = slope * t + intercept.
struct Line {
    Rational slope;
    Rational intercept;

    Rational at(const Rational& t) const { return slope * t + intercept; }
};

// Continuous piecewise-linear function on [0, 2] with rational breakpoints.
//
// Always held in canonical form: first breakpoint at 0, last at 2, strictly
// increasing t, and no interior breakpoint collinear with its neighbours.
// Structural equality is therefore function equality.
class PLFunction {
public:
    // The zero function.
    PLFunction();

    // Samples must be sorted by strictly increasing t, start at 0 and end at 2.
    static PLFunction from_samples(std::vector<Breakpoint> samples);
    static PLFunction constant(const Rational& value);
    // Pointwise minimum of the lines restricted to [0, 2]; the list must be nonempty.
    static PLFunction lower_envelope(std::span<const Line> lines);

    const std::vector<Breakpoint>& breakpoints() const { return points_; }

    // Throws std::out_of_range for t outside [0, 2].
    Rational operator()(const Rational& t) const;

    PLFunction operator-() const;
    PLFunction scaled(const BigInt& factor) const;
    friend PLFunction operator+(const PLFunction& f, const PLFunction& g);
    friend PLFunction operator-(const PLFunction& f, const PLFunction& g) { return f + (-g); }

    bool is_zero() const { return points_.size() == 2 && points_[0].value == 0 && points_[1].value == 0; }

    friend bool operator==(const PLFunction&, const PLFunction&) = default;

    std::string str() const;

private:
    explicit PLFunction(std::vector<Breakpoint> canonical) : points_(std::move(canonical)) {}

    std::vector<Breakpoint> points_;
};

std::ostream& operator<<(std::ostream& os, const PLFunction& f);

}  // namespace knotups
