#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "knotups/f2.hpp"
#include "knotups/staircase.hpp"

namespace knotups {

struct Generator {
    std::string label;
    std::int64_t maslov = 0;
    std::int64_t alg = 0;
    std::int64_t alex = 0;

    LatticePoint level() const { return {alg, alex}; }
};

// One term U^exponent * target in the boundary of source.
struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    std::int64_t exponent = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// Finitely generated free F2[U, U^-1] complex with a Maslov grading and an
// (algebraic, Alexander) bifiltration. U lowers Maslov by 2 and both
// filtrations by 1.
class BifilteredComplex {
public:
    BifilteredComplex() = default;
    // Arrows are canonicalized: sorted, and repeated terms cancel in pairs.
    BifilteredComplex(std::vector<Generator> generators, std::vector<Arrow> arrows);

    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t size() const { return generators_.size(); }

private:
    std::vector<Generator> generators_;
    std::vector<Arrow> arrows_;
};

// One basis element U^u_power * generator of a fixed-grading slice.
struct SliceElement {
    std::size_t generator = 0;
    std::int64_t u_power = 0;
    LatticePoint level;
};

// The finite F2 vector space of grading-m chains. boundary_out maps this
// slice to grading m-1 (columns indexed by this basis), boundary_in maps
// grading m+1 into this slice.
struct GradingSlice {
    std::int64_t grading = 0;
    std::vector<SliceElement> basis;
    f2::F2Matrix boundary_in;
    f2::F2Matrix boundary_out;

    std::size_t dim() const { return basis.size(); }
};

BifilteredComplex unknot_complex();
BifilteredComplex from_staircase(const Staircase& sc);
BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b);
BifilteredComplex dual(const BifilteredComplex& a);
BifilteredComplex shift_filtration(const BifilteredComplex& c, std::int64_t d_alg, std::int64_t d_alex);

// Human-readable descriptions of every violated axiom; empty when valid.
std::vector<std::string> validate(const BifilteredComplex& c);

// Requires a grading-compatible complex; throws std::invalid_argument otherwise.
GradingSlice grading_slice(const BifilteredComplex& c, std::int64_t m);

// Sum of (-1)^maslov over generators.
std::int64_t euler_characteristic(const BifilteredComplex& c);

}  // namespace knotups
