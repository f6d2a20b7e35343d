#include "doctest.h"

#include <random>

#include "knotups/knot_expr.hpp"
#include "knotups/upsilon.hpp"
#include "oracles.hpp"

using namespace knotups;

TEST_SUITE("cli") {

TEST_CASE("parse examples") {
    CHECK(*parse_expr("T(3,4)") == *make_torus(3, 4));
    auto k5 = parse_expr("T(5,6) # T(2,5) # -T(5,7)");
    CHECK(*k5 == *make_sum({make_torus(5, 6), make_torus(2, 5), make_mirror(make_torus(5, 7))}));
    auto e = parse_expr("2*T(2,3) # U");
    CHECK(*e == *make_sum({make_multiple(2, make_torus(2, 3)), make_unknot()}));
    CHECK(*parse_expr("  T ( 2 , 3 )#U ") == *make_sum({make_torus(2, 3), make_unknot()}));
    CHECK(*parse_expr("-2*T(2,3)") == *make_multiple(2, make_mirror(make_torus(2, 3))));
    CHECK(*make_multiple(-3, make_torus(2, 5)) == *make_multiple(3, make_mirror(make_torus(2, 5))));
    CHECK(*make_mirror(make_mirror(make_torus(2, 3))) == *make_torus(2, 3));
    CHECK(*make_sum({}) == *make_unknot());
}

TEST_CASE("parse reorders swapped torus parameters with a warning") {
    std::vector<std::string> warnings;
    auto e = parse_expr("T(4,3)", &warnings);
    CHECK(*e == *make_torus(3, 4));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("T(3,4)") != std::string::npos);
    CHECK_NOTHROW(parse_expr("T(4,3)"));
}

TEST_CASE("parse errors carry positions") {
    auto position_of = [](const std::string& text) -> std::size_t {
        try {
            parse_expr(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("T(3,4) #") == 8);
    CHECK(position_of("T(3 4)") == 4);
    CHECK(position_of("X") == 0);
    CHECK(position_of("T(3,4) T(2,3)") == 7);
    CHECK(position_of("T(2,4)") == 0);
    CHECK(position_of("U # T(6,9)") == 4);
    CHECK(position_of("2 T(2,3)") == 2);
    CHECK(position_of("T(2,99999999999999999999)") != std::string::npos);
    CHECK(position_of("T(0,1)") == 0);
}

TEST_CASE("printing") {
    CHECK(to_string(*parse_expr("T(5,6)#T(2,5)#-T(5,7)")) == "T(5,6) # T(2,5) # -T(5,7)");
    CHECK(to_string(*parse_expr("-3*T(2,3)")) == "-3*T(2,3)");
    CHECK(to_string(*parse_expr("U")) == "U");
}

TEST_CASE("parse of print is the identity") {
    std::mt19937 rng(2024);
    const std::vector<std::pair<int, int>> pairs{{2, 3}, {3, 4}, {2, 5}, {5, 6}, {4, 7}, {1, 4}};
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<KnotExprPtr> terms;
        std::size_t n = 1 + rng() % 4;
        for (std::size_t i = 0; i < n; ++i) {
            KnotExprPtr base;
            if (rng() % 5 == 0) {
                base = make_unknot();
            } else {
                auto [p, r] = pairs[rng() % pairs.size()];
                base = make_torus(p, r);
            }
            switch (rng() % 4) {
                case 0: terms.push_back(base); break;
                case 1: terms.push_back(make_mirror(base)); break;
                case 2: terms.push_back(make_multiple(static_cast<std::int64_t>(rng() % 4), base)); break;
                default: terms.push_back(make_multiple(-1 - static_cast<std::int64_t>(rng() % 3), base)); break;
            }
        }
        auto e = make_sum(terms);
        std::string text = to_string(*e);
        CHECK_MESSAGE(*parse_expr(text) == *e, text);
    }
}

TEST_CASE("realize sizes") {
    CHECK(realize(*parse_expr("U")).size() == 1);
    CHECK(realize(*parse_expr("T(2,5)#T(5,6)")).size() == 45);
    auto k5 = parse_expr("T(5,6) # T(2,5) # -T(5,7)");
    std::size_t expected5 = oracle::staircase_size(5, 6) * oracle::staircase_size(2, 5) * oracle::staircase_size(5, 7);
    CHECK(expected5 == 765);
    CHECK(realized_size(*k5) == expected5);
    CHECK(realize(*k5).size() == expected5);
    auto k7 = parse_expr("T(7,8) # T(2,7) # -T(7,9)");
    CHECK(realized_size(*k7) == oracle::staircase_size(7, 8) * oracle::staircase_size(2, 7) * oracle::staircase_size(7, 9));
    CHECK(realized_size(*k7) == 2821);
    CHECK(realize(*parse_expr("0*T(3,4)")).size() == 1);
    CHECK(realize(*parse_expr("3*T(2,3)")).size() == 27);
    CHECK(realize(*parse_expr("T(1,5)")).size() == 1);
}

TEST_CASE("realized complexes are valid") {
    for (const char* text : {"T(3,4) # -T(2,3)", "2*T(2,3)", "-2*T(3,4)", "U # U", "T(4,3)"}) {
        CHECK_MESSAGE(validate(realize(*parse_expr(text))).empty(), text);
    }
}

TEST_CASE("size guard") {
    auto big = parse_expr("T(7,8) # T(7,8) # T(7,8) # T(7,8)");
    CHECK_THROWS_AS(realize(*big), std::length_error);
    CHECK_THROWS_AS(realize(*parse_expr("T(5,6) # T(5,6)"), 50), std::length_error);
    CHECK_NOTHROW(realize(*parse_expr("T(5,6) # T(5,6)"), 100000));
    CHECK(realized_size(*parse_expr("1000*T(7,8)")) == std::numeric_limits<std::size_t>::max());
}

}  // TEST_SUITE
