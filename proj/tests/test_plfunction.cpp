#include "doctest.h"

#include <random>

#include "knotups/plfunction.hpp"
#include "knotups/staircase.hpp"

using namespace knotups;

namespace {

Rational q(std::int64_t a, std::int64_t b) { return Rational(BigInt(a), BigInt(b)); }

PLFunction t34() { return PLFunction::from_samples({{0, 0}, {q(2, 3), -2}, {q(4, 3), -2}, {2, 0}}); }

}  // namespace

TEST_SUITE("plfun") {

TEST_CASE("rational normal form") {
    CHECK(q(4, -6).num() == -2);
    CHECK(q(4, -6).den() == 3);
    CHECK(q(0, 5) == Rational(0));
    CHECK(q(0, -5).den() == 1);
    CHECK(Rational::parse("-8/12") == q(-2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("3/-4") == q(-3, 4));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::exception);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic and order") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(1, 2) - q(1, 3) == q(1, 6));
    CHECK(q(2, 3) * q(9, 4) == q(3, 2));
    CHECK(q(2, 3) / q(4, 9) == q(3, 2));
    CHECK(q(-1, 2) < q(-1, 3));
    CHECK(q(7, 3).str() == "7/3");
    CHECK(Rational(-4).str() == "-4");
    CHECK(q(-12, 4).to_int64() == -3);
    CHECK_THROWS_AS(q(1, 2).to_int64(), std::range_error);
    // No overflow on large intermediates.
    Rational big(BigInt(1) << 100, BigInt(3));
    CHECK(big * Rational(3) / (big * Rational(3)) == Rational(1));
}

TEST_CASE("extended rationals") {
    auto inf = ExtRational::pos_inf();
    auto ninf = ExtRational::neg_inf();
    CHECK(ninf < ExtRational(-1000000));
    CHECK(ExtRational(1000000) < inf);
    CHECK(ninf < inf);
    CHECK(inf == inf);
    CHECK((inf + ExtRational(5)).is_pos_inf());
    CHECK((ninf + ExtRational(5)).is_neg_inf());
    CHECK((-inf).is_neg_inf());
    CHECK_THROWS_AS(inf + ninf, std::domain_error);
    CHECK_THROWS_AS((void)inf.value(), std::logic_error);
    CHECK((Rational(-2) * inf).is_neg_inf());
    CHECK_THROWS_AS(Rational(0) * inf, std::domain_error);
    CHECK(inf.str() == "inf");
    CHECK(ninf.str() == "-inf");
    CHECK(ExtRational(q(-20, 7)).str() == "-20/7");
}

TEST_CASE("from_samples prunes collinear points") {
    auto zero = PLFunction::from_samples({{0, 0}, {1, 0}, {2, 0}});
    CHECK(zero.breakpoints() == std::vector<Breakpoint>{{0, 0}, {2, 0}});
    CHECK(zero.is_zero());
    auto line = PLFunction::from_samples({{0, 0}, {1, -1}, {2, -2}});
    CHECK(line.breakpoints() == std::vector<Breakpoint>{{0, 0}, {2, -2}});
    CHECK(t34().breakpoints().size() == 4);
}

TEST_CASE("from_samples rejects bad input") {
    CHECK_THROWS_AS(PLFunction::from_samples({{0, 0}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PLFunction::from_samples({{1, 0}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PLFunction::from_samples({{0, 0}, {1, 0}, {1, 1}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PLFunction::from_samples({{0, 0}, {q(3, 2), 0}, {1, 0}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PLFunction::from_samples({{0, 0}, {2, 0}, {3, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PLFunction::from_samples({}), std::invalid_argument);
}

TEST_CASE("evaluation") {
    CHECK(t34()(1) == Rational(-2));
    CHECK(t34()(q(1, 3)) == Rational(-1));
    CHECK(t34()(q(5, 3)) == Rational(-1));
    CHECK(t34()(0) == Rational(0));
    CHECK(t34()(2) == Rational(0));
    CHECK_THROWS_AS(t34()(q(-1, 5)), std::out_of_range);
    CHECK_THROWS_AS(t34()(q(11, 5)), std::out_of_range);
}

TEST_CASE("add, negate, scale") {
    PLFunction f = t34();
    CHECK(f + PLFunction() == f);
    CHECK((f + (-f)).is_zero());
    CHECK((f - f).is_zero());
    CHECK(f.scaled(0).is_zero());
    CHECK(f.scaled(2) == f + f);
    CHECK(f.scaled(-1) == -f);
    CHECK(f + f == upsilon_staircase(3, 7));
    CHECK(PLFunction::constant(q(1, 2))(q(3, 7)) == q(1, 2));
}

TEST_CASE("lower envelope") {
    std::vector<Line> one{{q(1, 2), 3}};
    auto f = PLFunction::lower_envelope(one);
    CHECK(f.breakpoints() == std::vector<Breakpoint>{{0, 3}, {2, 4}});

    std::vector<Line> cross{{1, 0}, {-1, 2}};
    auto g = PLFunction::lower_envelope(cross);
    CHECK(g.breakpoints() == std::vector<Breakpoint>{{0, 0}, {1, 1}, {2, 0}});

    // Whites of T(3,4): (alg, alex) in {(0,3),(1,1),(3,0)}; f_t = alg + t (alex - alg) / 2.
    std::vector<Line> whites;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {3, 0}}) {
        whites.push_back({q(b - a, 2), a});
    }
    CHECK(PLFunction::lower_envelope(whites).scaled(-2) == t34());

    // Duplicate and dominated lines.
    std::vector<Line> dup{{1, 0}, {1, 0}, {1, 5}, {-1, 2}, {0, 10}};
    CHECK(PLFunction::lower_envelope(dup) == g);

    CHECK_THROWS_AS(PLFunction::lower_envelope(std::span<const Line>{}), std::invalid_argument);
}

TEST_CASE("pointwise properties on random functions") {
    std::mt19937 rng(7);
    auto random_fn = [&rng]() {
        std::vector<Breakpoint> pts{{0, Rational(static_cast<std::int64_t>(rng() % 11) - 5)}};
        for (int k = 1; k < 6; ++k) {
            if (rng() % 2) pts.push_back({q(k, 3), Rational(static_cast<std::int64_t>(rng() % 11) - 5)});
        }
        pts.push_back({2, Rational(static_cast<std::int64_t>(rng() % 11) - 5)});
        return PLFunction::from_samples(pts);
    };
    for (int trial = 0; trial < 50; ++trial) {
        PLFunction f = random_fn(), g = random_fn(), h = random_fn();
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(PLFunction::from_samples(f.breakpoints()) == f);
        for (int k = 0; k <= 12; ++k) {
            Rational t = q(k, 6);
            CHECK((f + g)(t) == f(t) + g(t));
            CHECK((-f)(t) == -f(t));
        }
        // Canonical form: no interior point is collinear with its neighbours.
        const auto& b = f.breakpoints();
        for (std::size_t i = 1; i + 1 < b.size(); ++i) {
            CHECK((b[i].value - b[i - 1].value) * (b[i + 1].t - b[i].t) !=
                  (b[i + 1].value - b[i].value) * (b[i].t - b[i - 1].t));
        }
    }
}

TEST_CASE("envelope is concave and below every line") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Line> lines;
        std::size_t n = 1 + rng() % 7;
        for (std::size_t i = 0; i < n; ++i) {
            lines.push_back({q(static_cast<std::int64_t>(rng() % 13) - 6, 1 + rng() % 3),
                             Rational(static_cast<std::int64_t>(rng() % 9) - 4)});
        }
        PLFunction env = PLFunction::lower_envelope(lines);
        const auto& b = env.breakpoints();
        for (std::size_t i = 1; i + 1 < b.size(); ++i) {
            Rational left = (b[i].value - b[i - 1].value) / (b[i].t - b[i - 1].t);
            Rational right = (b[i + 1].value - b[i].value) / (b[i + 1].t - b[i].t);
            CHECK(right < left);
        }
        for (int k = 0; k <= 24; ++k) {
            Rational t = q(k, 12);
            Rational best = lines[0].at(t);
            for (const auto& l : lines) best = std::min(best, l.at(t));
            CHECK(env(t) == best);
        }
    }
}

}  // TEST_SUITE
