#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace knotups::f2 {

// Dense vector over the two-element field, packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
    BitVector(std::initializer_list<int> bits);

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value = true) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& rhs);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;
    // Index of the highest set bit, or npos when zero.
    std::size_t highest() const;
    // Parity of the bitwise AND.
    bool dot(const BitVector& rhs) const;

    std::string str() const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    F2Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static F2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector column(std::size_t c) const;

    F2Matrix transpose() const;
    BitVector operator*(const BitVector& x) const;
    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
    bool is_zero() const;

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

std::size_t rank(const F2Matrix& m);

// Some x with a * x == b, or nullopt when the system is inconsistent.
// Throws std::invalid_argument when b.size() != a.rows().
std::optional<BitVector> solve(const F2Matrix& a, const BitVector& b);

// Basis of {x : a * x == 0}.
std::vector<BitVector> nullspace(const F2Matrix& a);

// The affine subspace base + span(directions), with directions independent.
class F2AffineSpace {
public:
    // Row-reduces the directions, dropping dependent ones.
    F2AffineSpace(BitVector base, const std::vector<BitVector>& directions);

    std::size_t ambient_dim() const { return base_.size(); }
    const BitVector& base() const { return base_; }
    const std::vector<BitVector>& directions() const { return directions_; }

    bool contains(const BitVector& v) const;

private:
    BitVector base_;
    std::vector<BitVector> directions_;
};

// True iff the two affine subspaces share a point. Throws on dimension mismatch.
bool affine_intersects(const F2AffineSpace& u, const F2AffineSpace& v);

// Span of vectors inserted one at a time, kept in echelon form keyed by
// highest set bit. Optionally tracks whether a fixed target lies in the span
// as vectors arrive.
class IncrementalSpan {
public:
    explicit IncrementalSpan(std::size_t dim) : dim_(dim), by_pivot_(dim) {}

    // Returns true when v enlarged the span.
    bool insert(BitVector v);
    bool contains(BitVector v) const;
    std::size_t rank() const { return rank_; }

    void set_target(BitVector target);
    bool target_reached() const { return residual_.none(); }

private:
    BitVector reduce(BitVector v) const;

    std::size_t dim_;
    std::size_t rank_ = 0;
    std::vector<std::optional<BitVector>> by_pivot_;
    BitVector residual_;
    bool has_target_ = false;
};

}  // namespace knotups::f2
