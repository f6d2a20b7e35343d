#include "knotups/f2.hpp"

#include <bit>
#include <stdexcept>

namespace knotups::f2 {

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
    if (rhs.size_ != size_) {
        throw std::invalid_argument("BitVector size mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= rhs.words_[w];
    return *this;
}

bool BitVector::any() const {
    for (auto w : words_) {
        if (w != 0) return true;
    }
    return false;
}

std::size_t BitVector::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::highest() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w] != 0) {
            return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
        }
    }
    return npos;
}

bool BitVector::dot(const BitVector& rhs) const {
    if (rhs.size_ != size_) {
        throw std::invalid_argument("BitVector size mismatch");
    }
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & rhs.words_[w];
    return std::popcount(acc) & 1;
}

std::string BitVector::str() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

F2Matrix::F2Matrix(std::initializer_list<std::initializer_list<int>> rows) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        rows_.emplace_back(r);
    }
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitVector F2Matrix::column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (get(r, c)) v.set(r);
    }
    return v;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r);
        }
    }
    return t;
}

BitVector F2Matrix::operator*(const BitVector& x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("matrix-vector dimension mismatch");
    }
    BitVector y(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (rows_[r].dot(x)) y.set(r);
    }
    return y;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    F2Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.get(r, k)) out.rows_[r] ^= b.rows_[k];
        }
    }
    return out;
}

bool F2Matrix::is_zero() const {
    for (const auto& r : rows_) {
        if (r.any()) return false;
    }
    return true;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each leading row.
std::vector<std::size_t> rref(std::vector<BitVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t found = next;
        while (found < rows.size() && !rows[found].get(c)) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const F2Matrix& m) {
    IncrementalSpan span(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) span.insert(m.row(r));
    return span.rank();
}

std::optional<BitVector> solve(const F2Matrix& a, const BitVector& b) {
    if (b.size() != a.rows()) {
        throw std::invalid_argument("solve: right-hand side has wrong length");
    }
    const std::size_t n = a.cols();
    std::vector<BitVector> aug;
    aug.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVector row(n + 1);
        for (std::size_t c = 0; c < n; ++c) {
            if (a.get(r, c)) row.set(c);
        }
        if (b.get(r)) row.set(n);
        aug.push_back(std::move(row));
    }
    auto pivots = rref(aug, n + 1);
    BitVector x(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n) return std::nullopt;
        if (aug[i].get(n)) x.set(pivots[i]);
    }
    return x;
}

std::vector<BitVector> nullspace(const F2Matrix& a) {
    const std::size_t n = a.cols();
    std::vector<BitVector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
    auto pivots = rref(rows, n);

    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(n);
        v.set(free);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (rows[i].get(free)) v.set(pivots[i]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

F2AffineSpace::F2AffineSpace(BitVector base, const std::vector<BitVector>& directions)
    : base_(std::move(base)) {
    IncrementalSpan span(base_.size());
    for (const auto& d : directions) {
        if (d.size() != base_.size()) {
            throw std::invalid_argument("affine space direction has wrong dimension");
        }
        if (span.insert(d)) directions_.push_back(d);
    }
}

bool F2AffineSpace::contains(const BitVector& v) const {
    IncrementalSpan span(base_.size());
    for (const auto& d : directions_) span.insert(d);
    return span.contains(v ^ base_);
}

bool affine_intersects(const F2AffineSpace& u, const F2AffineSpace& v) {
    if (u.ambient_dim() != v.ambient_dim()) {
        throw std::invalid_argument("affine_intersects: dimension mismatch");
    }
    IncrementalSpan span(u.ambient_dim());
    for (const auto& d : u.directions()) span.insert(d);
    for (const auto& d : v.directions()) span.insert(d);
    return span.contains(u.base() ^ v.base());
}

BitVector IncrementalSpan::reduce(BitVector v) const {
    for (std::size_t h = v.highest(); h != BitVector::npos; h = v.highest()) {
        if (!by_pivot_[h]) break;
        v ^= *by_pivot_[h];
    }
    return v;
}

bool IncrementalSpan::insert(BitVector v) {
    if (v.size() != dim_) {
        throw std::invalid_argument("IncrementalSpan: dimension mismatch");
    }
    v = reduce(std::move(v));
    std::size_t h = v.highest();
    if (h == BitVector::npos) return false;
    ++rank_;
    if (has_target_ && residual_.get(h)) {
        residual_ ^= v;
        by_pivot_[h] = std::move(v);
        residual_ = reduce(std::move(residual_));
    } else {
        by_pivot_[h] = std::move(v);
    }
    return true;
}

bool IncrementalSpan::contains(BitVector v) const {
    if (v.size() != dim_) {
        throw std::invalid_argument("IncrementalSpan: dimension mismatch");
    }
    return reduce(std::move(v)).none();
}

void IncrementalSpan::set_target(BitVector target) {
    if (target.size() != dim_) {
        throw std::invalid_argument("IncrementalSpan: dimension mismatch");
    }
    residual_ = reduce(std::move(target));
    has_target_ = true;
}

}  // namespace knotups::f2
