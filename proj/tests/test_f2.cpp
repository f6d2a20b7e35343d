#include "doctest.h"

#include <random>

#include "knotups/f2.hpp"
#include "oracles.hpp"

using namespace knotups::f2;

namespace {

F2Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % 3 == 0);
    }
    return m;
}

BitVector random_vector(std::mt19937& rng, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() % 2);
    return v;
}

BitVector unit(std::size_t n, std::size_t i) {
    BitVector v(n);
    v.set(i);
    return v;
}

}  // namespace

TEST_SUITE("f2") {

TEST_CASE("bit vectors") {
    BitVector v(130);
    CHECK(v.none());
    CHECK(v.highest() == BitVector::npos);
    v.set(3);
    v.set(129);
    CHECK(v.count() == 2);
    CHECK(v.highest() == 129);
    v.flip(129);
    CHECK(v.highest() == 3);
    BitVector w{1, 0, 1};
    BitVector x{1, 1, 0};
    CHECK((w ^ x) == BitVector{0, 1, 1});
    CHECK(w.dot(x) == true);
    CHECK(w.dot(BitVector{1, 0, 1}) == false);
    CHECK(w.str() == "101");
    CHECK_THROWS_AS(w ^= BitVector(4), std::invalid_argument);
}

TEST_CASE("rank examples") {
    CHECK(rank(F2Matrix::identity(3)) == 3);
    CHECK(rank(F2Matrix(4, 5)) == 0);
    CHECK(rank(F2Matrix{{1, 1}, {1, 1}}) == 1);
    CHECK(rank(F2Matrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 2);
    CHECK(rank(F2Matrix()) == 0);
}

TEST_CASE("rank agrees with span enumeration") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        F2Matrix m = random_matrix(rng, rows, cols);
        CHECK(rank(m) == oracle::rank_by_span(m));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("solve examples") {
    BitVector v{1, 0, 1};
    auto x = solve(F2Matrix::identity(3), v);
    REQUIRE(x);
    CHECK(*x == v);
    CHECK_FALSE(solve(F2Matrix(3, 3), v));
    CHECK(solve(F2Matrix(3, 3), BitVector(3)));
    auto y = solve(F2Matrix{{1, 1}}, BitVector{1});
    REQUIRE(y);
    CHECK((*y == BitVector{1, 0} || *y == BitVector{0, 1}));
    CHECK_THROWS_AS(solve(F2Matrix::identity(3), BitVector(2)), std::invalid_argument);
}

TEST_CASE("solve and nullspace on random systems") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 10;
        F2Matrix a = random_matrix(rng, rows, cols);
        BitVector b = random_vector(rng, rows);
        auto x = solve(a, b);
        // Consistency iff appending b keeps the rank.
        F2Matrix aug(rows, cols + 1);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) aug.set(r, c, a.get(r, c));
            aug.set(r, cols, b.get(r));
        }
        CHECK(x.has_value() == (oracle::rank_by_span(aug.transpose()) == oracle::rank_by_span(a.transpose())));
        if (x) CHECK(a * *x == b);

        auto ns = nullspace(a);
        CHECK(ns.size() + rank(a) == cols);
        for (const auto& v : ns) CHECK((a * v).none());
    }
}

TEST_CASE("matrix products") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        F2Matrix a = random_matrix(rng, 4, 6), b = random_matrix(rng, 6, 3);
        BitVector v = random_vector(rng, 3);
        CHECK((a * b) * v == a * (b * v));
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        CHECK(a * F2Matrix::identity(6) == a);
    }
    CHECK_THROWS_AS(F2Matrix::identity(2) * F2Matrix::identity(3), std::invalid_argument);
    CHECK_THROWS_AS(F2Matrix::identity(2) * BitVector(3), std::invalid_argument);
    CHECK_THROWS_AS((F2Matrix{{1, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("affine intersection") {
    F2AffineSpace line1(unit(3, 0), {unit(3, 2)});
    F2AffineSpace line2(unit(3, 1), {unit(3, 2)});
    CHECK(affine_intersects(line1, line1));
    CHECK_FALSE(affine_intersects(line1, line2));
    CHECK_FALSE(affine_intersects(line2, line1));
    F2AffineSpace plane(unit(3, 1), {unit(3, 0), unit(3, 1) ^ unit(3, 2)});
    CHECK(affine_intersects(line1, plane));
    CHECK(line1.contains(unit(3, 0) ^ unit(3, 2)));
    CHECK_FALSE(line1.contains(unit(3, 1)));
    // Dependent directions are dropped.
    F2AffineSpace redundant(BitVector(3), {unit(3, 0), unit(3, 0), BitVector(3)});
    CHECK(redundant.directions().size() == 1);
    CHECK_THROWS_AS(affine_intersects(line1, F2AffineSpace(BitVector(4), {})), std::invalid_argument);
}

TEST_CASE("affine intersection is symmetric and matches enumeration") {
    std::mt19937 rng(13);
    const std::size_t n = 6;
    for (int trial = 0; trial < 150; ++trial) {
        auto make = [&]() {
            std::vector<BitVector> dirs;
            std::size_t k = rng() % 3;
            for (std::size_t i = 0; i < k; ++i) dirs.push_back(random_vector(rng, n));
            return F2AffineSpace(random_vector(rng, n), dirs);
        };
        F2AffineSpace u = make(), v = make();
        bool brute = false;
        for (std::uint32_t m = 0; m < (1U << n) && !brute; ++m) {
            BitVector x(n);
            for (std::size_t i = 0; i < n; ++i) x.set(i, m >> i & 1U);
            brute = u.contains(x) && v.contains(x);
        }
        CHECK(affine_intersects(u, v) == brute);
        CHECK(affine_intersects(v, u) == brute);
    }
}

TEST_CASE("incremental span tracks a target") {
    IncrementalSpan span(4);
    span.set_target(BitVector{1, 1, 1, 0});
    CHECK_FALSE(span.target_reached());
    CHECK(span.insert(BitVector{1, 0, 0, 0}));
    CHECK_FALSE(span.insert(BitVector{1, 0, 0, 0}));
    CHECK_FALSE(span.target_reached());
    CHECK(span.insert(BitVector{0, 1, 1, 0}));
    CHECK(span.target_reached());
    CHECK(span.rank() == 2);
    CHECK(span.contains(BitVector{1, 1, 1, 0}));
    CHECK_FALSE(span.contains(BitVector{0, 0, 0, 1}));
    CHECK_THROWS_AS(span.insert(BitVector(3)), std::invalid_argument);

    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        IncrementalSpan s(8);
        F2Matrix cols(0, 0);
        std::vector<BitVector> inserted;
        BitVector target = random_vector(rng, 8);
        s.set_target(target);
        for (int k = 0; k < 6; ++k) {
            inserted.push_back(random_vector(rng, 8));
            s.insert(inserted.back());
            F2Matrix a(8, inserted.size());
            for (std::size_t c = 0; c < inserted.size(); ++c) {
                for (std::size_t r = 0; r < 8; ++r) a.set(r, c, inserted[c].get(r));
            }
            CHECK(s.target_reached() == solve(a, target).has_value());
            CHECK(s.rank() == rank(a));
        }
    }
}

}  // TEST_SUITE
