#include "doctest.h"

#include "knotups/certificate.hpp"
#include "knotups/upsilon.hpp"

using namespace knotups;

namespace {

Rational q(std::int64_t a, std::int64_t b) { return Rational(BigInt(a), BigInt(b)); }

ExtRational direct(const std::string& text, const Rational& s) {
    return UpsilonEngine(realize(*parse_expr(text))).upsilon2(s, s);
}

const ExtRational inf = ExtRational::pos_inf();

}  // namespace

TEST_SUITE("certificate") {

TEST_CASE("sum lemma") {
    ExtRational m(q(-12, 5));
    std::vector<SummandBounds> others{{inf, inf, inf, inf}, {ExtRational(-1), ExtRational(-2), {}, {}}};
    CHECK(certify_sum(m, others) == m);
    others.push_back({m, inf, m, inf});
    CHECK_FALSE(certify_sum(m, others));
    CHECK_FALSE(certify_sum(inf, {}));
    CHECK(certify_sum(m, {}) == m);
}

TEST_CASE("multiples lemma") {
    SummandBounds k{ExtRational(-3), inf, ExtRational(-3), inf};
    auto twice = bounds_for_multiple(k, 2);
    CHECK(twice.exact == ExtRational(-3));
    CHECK(twice.mirror_exact == inf);
    auto none = bounds_for_multiple(k, 0);
    CHECK(none.exact == inf);
    CHECK(none.mirror_exact == inf);
    auto same = bounds_for_multiple(k, 1);
    CHECK(same.exact == k.exact);
    // Equal values give no conclusion.
    SummandBounds tie{ExtRational(-1), ExtRational(-1), ExtRational(-1), ExtRational(-1)};
    CHECK_FALSE(bounds_for_multiple(tie, 3).exact);
    CHECK(bounds_for_multiple(tie, 3).lower == ExtRational(-1));
}

TEST_CASE("certificates agree with direct tensor computations") {
    struct Case {
        const char* expr;
        Rational s;
    };
    for (const auto& c : std::vector<Case>{{"T(5,6) # T(2,5) # -T(5,7)", q(4, 5)},
                                           {"T(2,5) # T(5,6)", q(4, 5)},
                                           {"T(3,5) # T(5,6)", q(4, 5)},
                                           {"2*T(5,6)", q(4, 5)},
                                           {"T(3,4) # T(2,5)", q(2, 3)},
                                           {"U # -T(2,3)", 1}}) {
        Certificate cert = certify_upsilon2(*parse_expr(c.expr), c.s);
        REQUIRE_MESSAGE(cert.value, c.expr);
        CHECK_MESSAGE(*cert.value == direct(c.expr, c.s), c.expr);
        CHECK_FALSE(cert.steps.empty());
    }
    Certificate k5 = certify_upsilon2(*parse_expr("T(5,6) # T(2,5) # -T(5,7)"), q(4, 5));
    CHECK(*k5.value == ExtRational(q(-12, 5)));
}

TEST_CASE("certificates stay silent when no lemma applies") {
    Certificate cert = certify_upsilon2(*parse_expr("T(3,4) # -T(3,4)"), q(2, 3));
    CHECK_FALSE(cert.value);
    CHECK(cert.steps.back() == "no lemma applies");
}

TEST_CASE("nested sums are rejected") {
    auto nested = make_sum({make_sum({make_torus(2, 3), make_torus(2, 5)}), make_torus(3, 4)});
    CHECK_THROWS_AS(certify_upsilon2(*nested, 1), std::invalid_argument);
}

}  // TEST_SUITE
