#include <doctest.h>

#include <algorithm>

#include "alcove/core.hpp"

using namespace alcove;

TEST_SUITE("core") {
    TEST_CASE("points print and parse in mathematical units") {
        CHECK(parse_point("3/2,1/2") == Point{3, 1});
        CHECK(parse_point("2,-1") == Point{4, -2});
        CHECK(format_point({3, 1}) == "3/2,1/2");
        CHECK(format_point({4, -2}) == "2,-1");
        CHECK(format_half(7) == "7/2");
        CHECK_THROWS_AS(parse_point("1/3"), ArgumentError);
    }

    TEST_CASE("region membership") {
        CHECK(in_region({Family::AlcoveA, 2, 6}, parse_point("2,1")));
        CHECK(in_region({Family::AlcoveD, 2, 6}, parse_point("2,-1")));
        CHECK_FALSE(in_region({Family::AlcoveC, 2, 6}, parse_point("3,1")));
        CHECK(in_region({Family::AlcoveC, 2, 6}, parse_point("5/2,1/2")));
        CHECK_FALSE(in_region({Family::AlcoveC, 2, 6}, parse_point("5/2,1")));  // mixed parity
        CHECK(in_region({Family::AlcoveB, 2, 6}, parse_point("4,1")));         // x1 may exceed m in type B
        CHECK_FALSE(in_region({Family::AlcoveB, 2, 6}, parse_point("4,2")));   // x1 + x2 = 2m
        CHECK_FALSE(in_region({Family::AlcoveD, 2, 4}, parse_point("3,-1")));  // x1 - x2 = 2m for n = 2
        CHECK(in_region({Family::CircleM, 3, 8}, parse_point("0,3,1")));
        CHECK_FALSE(in_region({Family::CircleM, 2, 8}, parse_point("1,5")));   // same residue mod 4
    }

    TEST_CASE("step sets") {
        CHECK(step_vectors(StepKind::Standard, 3).size() == 6);
        CHECK(step_vectors(StepKind::PositiveStandard, 3).size() == 3);
        CHECK(step_vectors(StepKind::Diagonal, 3).size() == 8);
    }

    TEST_CASE("neighbours") {
        auto nb = neighbors({Family::AlcoveA, 2, 6}, StepKind::Standard, parse_point("2,1"));
        std::sort(nb.begin(), nb.end());
        CHECK(nb == std::vector<Point>{parse_point("2,0"), parse_point("3,1")});

        // (5/2,1/2) in C with m = 3: of (3,1), (3,0), (2,1), (2,0) only (2,1) stays inside
        auto nc = neighbors({Family::AlcoveC, 2, 6}, StepKind::Diagonal, parse_point("5/2,1/2"));
        CHECK(nc == std::vector<Point>{parse_point("2,1")});
        CHECK_THROWS_AS(neighbors({Family::AlcoveB, 2, 6}, StepKind::PositiveStandard, parse_point("2,1")),
                        UnsupportedError);
    }

    TEST_CASE("parity feasibility") {
        const RegionSpec a{Family::AlcoveA, 2, 6};
        CHECK_FALSE(parity_feasible({a, StepKind::Standard, parse_point("2,1"), parse_point("2,1"), 1, {}}));
        CHECK(parity_feasible({a, StepKind::Standard, parse_point("2,1"), parse_point("2,1"), 2, {}}));
        CHECK_FALSE(parity_feasible({a, StepKind::Diagonal, parse_point("2,1"), parse_point("2,1"), 3, {}}));
        CHECK(parity_feasible({a, StepKind::PositiveStandard, parse_point("2,1"), parse_point("3,2"), 2, {}}));
        CHECK_FALSE(parity_feasible({a, StepKind::PositiveStandard, parse_point("2,1"), parse_point("3,2"), 3, {}}));
        // m and n both odd: no restriction on k for circle walks
        const RegionSpec c{Family::CircleM, 3, 6};
        for (int k = 20; k < 26; ++k)
            CHECK(parity_feasible({c, StepKind::Standard, parse_point("2,1,0"), parse_point("2,1,0"), k, {}}));
    }

    TEST_CASE("circle shift") {
        CHECK(circle_shift({6, 4, 2}) == 0);
        CHECK(circle_shift({2, 6, 4}) == 1);
        CHECK(circle_shift({4, 2, 6}) == 2);
        CHECK_FALSE(circle_shift({2, 4, 6}).has_value());
    }

    TEST_CASE("point enumeration") {
        // C with n = 1, m = 4: 1, 2, 3 and the half-integers 1/2 .. 7/2
        CHECK(enumerate_points({Family::AlcoveC, 1, 8}, 0).size() == 3);
        CHECK(enumerate_points({Family::AlcoveC, 1, 8}, 1).size() == 4);
        // C with n = 2, m = 4: pairs 3 >= x1 > x2 >= 1
        CHECK(enumerate_points({Family::AlcoveC, 2, 8}, 0).size() == 3);
        CHECK_THROWS_AS(validate_region({Family::AlcoveA, 0, 4}), ArgumentError);
    }
}
