#include "knotups/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace knotups {

namespace {

bool same_parity(std::int64_t a, std::int64_t b) { return ((a - b) & 1) == 0; }

// Basis of slice m and the index of each generator in it (npos when absent).
struct SliceBasis {
    std::vector<SliceElement> basis;
    std::vector<std::size_t> index_of;
};

SliceBasis slice_basis(const BifilteredComplex& c, std::int64_t m) {
    SliceBasis out;
    out.index_of.assign(c.size(), f2::BitVector::npos);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& g = c.generators()[i];
        if (!same_parity(g.maslov, m)) continue;
        std::int64_t n = (g.maslov - m) / 2;
        out.index_of[i] = out.basis.size();
        out.basis.push_back({i, n, {g.alg - n, g.alex - n}});
    }
    return out;
}

// Matrix of the boundary from slice `from` (columns) to slice `to` (rows).
f2::F2Matrix boundary_matrix(const BifilteredComplex& c, const SliceBasis& from, const SliceBasis& to) {
    f2::F2Matrix d(to.basis.size(), from.basis.size());
    for (const auto& a : c.arrows()) {
        std::size_t col = from.index_of[a.source];
        if (col == f2::BitVector::npos) continue;
        std::size_t row = to.index_of[a.target];
        if (row == f2::BitVector::npos ||
            from.basis[col].u_power + a.exponent != to.basis[row].u_power) {
            throw std::invalid_argument("boundary does not respect the Maslov grading");
        }
        d.flip(row, col);
    }
    return d;
}

}  // namespace

BifilteredComplex::BifilteredComplex(std::vector<Generator> generators, std::vector<Arrow> arrows)
    : generators_(std::move(generators)) {
    for (const auto& a : arrows) {
        if (a.source >= generators_.size() || a.target >= generators_.size()) {
            throw std::invalid_argument("arrow refers to a missing generator");
        }
    }
    std::sort(arrows.begin(), arrows.end());
    // Coefficients live in F2: equal terms cancel in pairs.
    for (std::size_t i = 0; i < arrows.size();) {
        std::size_t j = i;
        while (j < arrows.size() && arrows[j] == arrows[i]) ++j;
        if ((j - i) % 2 == 1) arrows_.push_back(arrows[i]);
        i = j;
    }
}

BifilteredComplex unknot_complex() {
    return BifilteredComplex({{"x", 0, 0, 0}}, {});
}

BifilteredComplex from_staircase(const Staircase& sc) {
    std::vector<Generator> gens;
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < sc.whites.size(); ++i) {
        gens.push_back({"w" + std::to_string(i), 0, sc.whites[i].alg, sc.whites[i].alex});
    }
    for (std::size_t i = 0; i < sc.blacks.size(); ++i) {
        std::size_t b = gens.size();
        gens.push_back({"b" + std::to_string(i), 1, sc.blacks[i].alg, sc.blacks[i].alex});
        arrows.push_back({b, i, 0});
        arrows.push_back({b, i + 1, 0});
    }
    return BifilteredComplex(std::move(gens), std::move(arrows));
}

BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b) {
    const std::size_t nb = b.size();
    std::vector<Generator> gens;
    gens.reserve(a.size() * nb);
    for (const auto& x : a.generators()) {
        for (const auto& y : b.generators()) {
            gens.push_back({"(" + x.label + "|" + y.label + ")", x.maslov + y.maslov, x.alg + y.alg,
                            x.alex + y.alex});
        }
    }
    // d(x (x) y) = dx (x) y + x (x) dy
    std::vector<Arrow> arrows;
    arrows.reserve(a.arrows().size() * nb + b.arrows().size() * a.size());
    for (const auto& ar : a.arrows()) {
        for (std::size_t j = 0; j < nb; ++j) {
            arrows.push_back({ar.source * nb + j, ar.target * nb + j, ar.exponent});
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (const auto& ar : b.arrows()) {
            arrows.push_back({i * nb + ar.source, i * nb + ar.target, ar.exponent});
        }
    }
    return BifilteredComplex(std::move(gens), std::move(arrows));
}

BifilteredComplex dual(const BifilteredComplex& a) {
    std::vector<Generator> gens;
    gens.reserve(a.size());
    for (const auto& g : a.generators()) {
        std::string label = g.label;
        if (label.size() > 1 && label.back() == '*') {
            label.pop_back();
        } else {
            label.push_back('*');
        }
        gens.push_back({std::move(label), -g.maslov, -g.alg, -g.alex});
    }
    // d x = U^n y  dualizes to  d y* = U^n x*.
    std::vector<Arrow> arrows;
    arrows.reserve(a.arrows().size());
    for (const auto& ar : a.arrows()) arrows.push_back({ar.target, ar.source, ar.exponent});
    return BifilteredComplex(std::move(gens), std::move(arrows));
}

BifilteredComplex shift_filtration(const BifilteredComplex& c, std::int64_t d_alg, std::int64_t d_alex) {
    std::vector<Generator> gens = c.generators();
    for (auto& g : gens) {
        g.alg += d_alg;
        g.alex += d_alex;
    }
    return BifilteredComplex(std::move(gens), c.arrows());
}

std::vector<std::string> validate(const BifilteredComplex& c) {
    std::vector<std::string> problems;
    const auto& gens = c.generators();
    bool graded = true;

    for (const auto& a : c.arrows()) {
        const auto& src = gens[a.source];
        const auto& dst = gens[a.target];
        std::string term = src.label + " -> U^" + std::to_string(a.exponent) + " " + dst.label;
        if (dst.maslov - 2 * a.exponent != src.maslov - 1) {
            problems.push_back("grading: " + term + " does not lower Maslov grading by 1");
            graded = false;
        }
        if (dst.alg - a.exponent > src.alg || dst.alex - a.exponent > src.alex) {
            problems.push_back("filtration: " + term + " raises a filtration level");
        }
    }

    // d^2 over F2[U, U^-1]: collect U^(e1+e2) * target for every path of length two.
    std::vector<std::vector<const Arrow*>> out_arrows(gens.size());
    for (const auto& a : c.arrows()) out_arrows[a.source].push_back(&a);
    for (std::size_t s = 0; s < gens.size(); ++s) {
        std::map<std::pair<std::size_t, std::int64_t>, int> terms;
        for (const auto* first : out_arrows[s]) {
            for (const auto* second : out_arrows[first->target]) {
                terms[{second->target, first->exponent + second->exponent}] ^= 1;
            }
        }
        for (const auto& [key, bit] : terms) {
            if (bit != 0) {
                problems.push_back("d^2: d(d " + gens[s].label + ") contains U^" + std::to_string(key.second) +
                                   " " + gens[key.first].label);
                break;
            }
        }
    }

    if (!graded) return problems;

    // H_* must be F2[U, U^-1] with 1 in grading 0. Slices m and m+2 are
    // isomorphic through U, so gradings 0 and 1 decide it.
    std::vector<SliceBasis> slices;
    for (std::int64_t m = -1; m <= 2; ++m) slices.push_back(slice_basis(c, m));
    std::vector<std::size_t> ranks;  // rank of d: slice m -> slice m-1, for m = 0, 1, 2
    for (std::size_t k = 1; k < slices.size(); ++k) {
        ranks.push_back(f2::rank(boundary_matrix(c, slices[k], slices[k - 1])));
    }
    auto homology = [&](std::size_t m) {
        return slices[m + 1].basis.size() - ranks[m] - ranks[m + 1];
    };
    if (homology(0) != 1) {
        problems.push_back("homology: H_0 has dimension " + std::to_string(homology(0)) + ", expected 1");
    }
    if (homology(1) != 0) {
        problems.push_back("homology: H_1 has dimension " + std::to_string(homology(1)) + ", expected 0");
    }
    return problems;
}

GradingSlice grading_slice(const BifilteredComplex& c, std::int64_t m) {
    SliceBasis below = slice_basis(c, m - 1);
    SliceBasis here = slice_basis(c, m);
    SliceBasis above = slice_basis(c, m + 1);
    GradingSlice out;
    out.grading = m;
    out.boundary_out = boundary_matrix(c, here, below);
    out.boundary_in = boundary_matrix(c, above, here);
    out.basis = std::move(here.basis);
    return out;
}

std::int64_t euler_characteristic(const BifilteredComplex& c) {
    std::int64_t chi = 0;
    for (const auto& g : c.generators()) chi += (g.maslov & 1) == 0 ? 1 : -1;
    return chi;
}

}  // namespace knotups
