#include <doctest.h>

#include "alcove/oracle.hpp"

using namespace alcove;

namespace {

WalkProblem walk(Family f, int n, int m2, StepKind s, const char* from, const char* to, int k) {
    WalkProblem p{{f, n, m2}, s, parse_point(from), std::nullopt, k, {}};
    if (to) p.end = parse_point(to);
    return p;
}

}  // namespace

TEST_SUITE("oracle") {
    TEST_CASE("small counts") {
        CHECK(count_dp(walk(Family::AlcoveA, 2, 6, StepKind::Standard, "2,1", "2,1", 2)) == 2);
        CHECK(count_dp(walk(Family::AlcoveA, 2, 6, StepKind::PositiveStandard, "2,1", "3,2", 2)) == 1);
        CHECK(count_dp(walk(Family::AlcoveC, 1, 8, StepKind::Standard, "1", "1", 4)) == 2);
        CHECK(count_dp(walk(Family::AlcoveC, 2, 8, StepKind::Diagonal, "2,1", "2,1", 2)) == 3);
        CHECK(count_dp(walk(Family::AlcoveA, 2, 6, StepKind::Standard, "2,1", "2,1", 0)) == 1);
        CHECK(count_dp(walk(Family::AlcoveA, 2, 6, StepKind::Standard, "2,1", "2,1", 1)) == 0);
    }

    TEST_CASE("free distribution") {
        const auto dist = count_dp_free(walk(Family::AlcoveA, 2, 6, StepKind::Standard, "2,1", nullptr, 1));
        CHECK(total(dist) == 2);
        CHECK(dist.size() == 2);
        CHECK(dist.count(parse_point("3,1")) == 1);
    }

    TEST_CASE("one particle on a segment is a binomial-type count") {
        // C with n = 1, m = 2: only x = 1, so every step leaves
        CHECK(count_dp(walk(Family::AlcoveC, 1, 4, StepKind::Standard, "1", "1", 2)) == 0);
        // unrestricted ballot numbers for a long segment: 1 -> 1 in 2j steps is Catalan(j)
        const long catalan[] = {1, 1, 2, 5, 14, 42};
        for (int j = 0; j < 6; ++j)
            CHECK(count_dp(walk(Family::AlcoveC, 1, 40, StepKind::Standard, "1", "1", 2 * j)) == catalan[j]);
    }

    TEST_CASE("layers agree with single runs") {
        const RegionSpec r{Family::AlcoveB, 2, 7};
        const auto layers = dp_layers(r, StepKind::Diagonal, parse_point("3/2,1/2"), 6);
        REQUIRE(layers.size() == 7);
        for (int k = 0; k <= 6; ++k)
            CHECK(total(layers[k]) ==
                  total(count_dp_free({r, StepKind::Diagonal, parse_point("3/2,1/2"), std::nullopt, k, {}})));
    }

    TEST_CASE("frontier cap") {
        DpOptions tiny;
        tiny.frontier_cap = 2;
        CHECK_THROWS_AS(count_dp(walk(Family::AlcoveC, 2, 40, StepKind::Standard, "2,1", "2,1", 8), tiny),
                        ResourceError);
    }

    TEST_CASE("trajectories") {
        const RegionSpec r{Family::AlcoveA, 2, 6};
        const std::vector<Point> w{parse_point("2,1"), parse_point("3,1"), parse_point("3,2")};
        const auto t = trajectories_view(r, StepKind::Standard, w);
        REQUIRE(t.size() == 2);
        CHECK(t[0] == std::vector<int>{4, 6, 6});
        CHECK(t[1] == std::vector<int>{2, 2, 4});
        CHECK_THROWS_AS(trajectories_view(r, StepKind::Standard, {parse_point("2,1"), parse_point("3,2")}),
                        ArgumentError);
    }

    TEST_CASE("standard total is 2^k times the positive total") {
        for (int k = 0; k <= 8; ++k) CHECK(gleich_check({Family::AlcoveA, 3, 10}, parse_point("2,1,0"), k));
    }

    TEST_CASE("parity predicate is necessary") {
        const RegionSpec r{Family::AlcoveD, 2, 8};
        const Point s = parse_point("2,-1");
        for (const auto& e : enumerate_points(r, 0))
            for (int k = 0; k <= 5; ++k) {
                const WalkProblem p{r, StepKind::Standard, s, e, k, {}};
                if (!parity_feasible(p)) CHECK(count_dp(p) == 0);
            }
    }
}
