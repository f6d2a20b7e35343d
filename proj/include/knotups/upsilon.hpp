#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "knotups/complex.hpp"
#include "knotups/f2.hpp"
#include "knotups/plfunction.hpp"
#include "knotups/rational.hpp"

namespace knotups {

class InvalidComplex : public std::invalid_argument {
public:
    explicit InvalidComplex(const std::vector<std::string>& violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

struct PivotPair {
    LatticePoint negative;
    LatticePoint positive;
    Rational delta;
};

struct JumpReport {
    Rational t;
    bool is_jump = false;
    ExtRational upsilon2;  // at s = t; +inf when not a jump
};

// Upsilon and secondary Upsilon of a knot complex.
//
// Everything is computed on the grading -1, 0 and 1 slices. The filtration
// functional at parameter t is
//
//     f_t(alg, alex) = (t/2) alex + (1 - t/2) alg,
//
// and the sublevel set f_t <= s spans the subcomplex C^t_s. gamma(t) is the
// least s at which C^t_s holds a grading-0 cycle that is not a boundary in
// the whole complex. Since H_0 is one-dimensional there is a functional
// `homology_class_` on grading-0 chains which vanishes on boundaries and is 1
// on the generator, so "nontrivial cycle in C^t_s" is the F2 system
// {d z = 0, class(z) = 1} restricted to coordinates in the sublevel set.
//
// Between consecutive critical parameters (values of t where two distinct
// grading-0 lattice levels tie under f_t) the order of the grading-0 levels
// is fixed, so gamma is linear there and the cycle sets used by the secondary
// invariant are constant.
class UpsilonEngine {
public:
    // Throws InvalidComplex when validate() reports violations.
    explicit UpsilonEngine(const BifilteredComplex& complex);

    const BifilteredComplex& complex() const { return complex_; }

    // Sorted critical parameters in the open interval (0, 2).
    const std::vector<Rational>& critical_parameters() const { return critical_; }
    bool is_critical(const Rational& t) const;

    Rational gamma(const Rational& t) const;
    PLFunction upsilon() const;

    PivotPair pivot_points(const Rational& t) const;
    // Grading-0 cycles in C^{t'}_{gamma(t')} that represent the generator of H_0.
    f2::F2AffineSpace cycle_space(const Rational& t_side) const;

    ExtRational gamma2(const Rational& t, const Rational& s) const;
    ExtRational upsilon2(const Rational& t, const Rational& s) const;

    // One report per critical parameter in (0, max_t]; every other t is a no-jump value.
    std::vector<JumpReport> jump_values(const Rational& max_t = Rational(2)) const;

    // Dimension of the grading-0 slice.
    std::size_t slice_dim() const { return slice0_.size(); }

private:
    struct ScaledParam {
        std::int64_t num;  // t = num / den
        std::int64_t den;
    };

    ScaledParam scale(const Rational& t) const;
    // 2 * den * f_t(level), an integer.
    static std::int64_t key(const ScaledParam& t, const LatticePoint& level);

    struct GammaResult {
        std::int64_t key;  // gamma scaled by 2 * den
        ScaledParam param;
    };
    GammaResult gamma_scaled(const Rational& t) const;
    Rational delta_at(const Rational& t) const;
    std::vector<std::size_t> sublevel0(const ScaledParam& t, std::int64_t threshold) const;
    ExtRational gamma2_with(const f2::F2AffineSpace& z_plus, const f2::F2AffineSpace& z_minus,
                            const Rational& t, const Rational& s) const;

    BifilteredComplex complex_;
    std::vector<LatticePoint> slice0_;            // lattice levels of grading-0 basis
    std::vector<LatticePoint> slice1_;            // lattice levels of grading-1 basis
    std::vector<f2::BitVector> cycle_columns_;    // per grading-0 element: (d z, class(z))
    std::vector<f2::BitVector> boundary_columns_; // per grading-1 element: d w in grading 0
    f2::BitVector homology_class_;
    std::size_t dim_below_ = 0;                   // dimension of the grading -1 slice
    std::vector<Rational> critical_;
};

// Free-function forms.
Rational gamma_at(const BifilteredComplex& c, const Rational& t);
PLFunction upsilon_pl(const BifilteredComplex& c);
PivotPair pivot_points(const BifilteredComplex& c, const Rational& t);
f2::F2AffineSpace cycle_space(const BifilteredComplex& c, const Rational& t_side);
ExtRational gamma2(const BifilteredComplex& c, const Rational& t, const Rational& s);
ExtRational upsilon2(const BifilteredComplex& c, const Rational& t, const Rational& s);
std::vector<JumpReport> jump_values(const BifilteredComplex& c);

// Upsilon^2_{a (x) b}(t) >= min(Upsilon^2_a(t), Upsilon^2_b(t)).
bool check_subadditivity(const BifilteredComplex& a, const BifilteredComplex& b, const Rational& t);

}  // namespace knotups
