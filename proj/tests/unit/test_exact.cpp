#include <doctest.h>

#include "alcove/exact.hpp"

using namespace alcove;

namespace {

void agree_with_dp(const RegionSpec& r, StepKind s, const char* from, int kmax) {
    const Point start = parse_point(from);
    const auto layers = dp_layers(r, s, start, kmax);
    for (int k = 0; k <= kmax; ++k) {
        for (const auto& [end, count] : layers[k]) {
            CAPTURE(k);
            CAPTURE(format_point(end));
            CHECK(count_exact({r, s, start, end, k, circle_shift(end)}) == count);
        }
    }
}

}  // namespace

TEST_SUITE("exact") {
    TEST_CASE("spectral formulas reproduce the DP") {
        agree_with_dp({Family::AlcoveA, 2, 8}, StepKind::Standard, "2,1", 8);
        agree_with_dp({Family::AlcoveA, 3, 8}, StepKind::Diagonal, "2,1,0", 6);
        agree_with_dp({Family::AlcoveC, 2, 10}, StepKind::Standard, "3,1", 8);
        agree_with_dp({Family::AlcoveC, 2, 9}, StepKind::Diagonal, "3/2,1/2", 8);
        agree_with_dp({Family::AlcoveB, 2, 9}, StepKind::Diagonal, "3/2,1/2", 8);
        agree_with_dp({Family::AlcoveD, 3, 12}, StepKind::Diagonal, "5/2,3/2,1/2", 6);
        agree_with_dp({Family::CircleM, 2, 10}, StepKind::Standard, "1,0", 8);
    }

    TEST_CASE("positive steps in A") {
        // only one monotone path (2,1) -> (3,2) avoids (2,2)
        CHECK(count_A_positive(parse_point("2,1"), parse_point("3,2"), 6) == 1);
        CHECK(count_exact({{Family::AlcoveA, 2, 6}, StepKind::Standard, parse_point("2,1"), parse_point("2,1"), 2, {}}) == 2);
    }

    TEST_CASE("small diagonal counts in C") {
        const RegionSpec r{Family::AlcoveC, 2, 8};
        const long expected[] = {1, 0, 3, 0, 14, 0, 84, 0, 552, 0, 3728};
        for (int k = 0; k <= 10; ++k)
            CHECK(count_exact({r, StepKind::Diagonal, parse_point("2,1"), parse_point("2,1"), k, {}}) == expected[k]);
    }

    TEST_CASE("free totals") {
        const RegionSpec r{Family::AlcoveC, 2, 10};
        const auto layers = dp_layers(r, StepKind::Standard, parse_point("3,1"), 7);
        for (int k = 0; k <= 7; ++k)
            CHECK(count_exact_free(r, StepKind::Standard, parse_point("3,1"), k) == total(layers[k]));
    }

    TEST_CASE("engine reuse") {
        SpectralEngine eng({Family::AlcoveB, 2, 9}, StepKind::Diagonal);
        const auto many = eng.counts(parse_point("3/2,1/2"), parse_point("3/2,1/2"), 10);
        for (int k = 0; k <= 10; ++k) CHECK(many[k] == eng.count(parse_point("3/2,1/2"), parse_point("3/2,1/2"), k));
        CHECK(eng.last_digits() >= 64);
    }

    TEST_CASE("support table") {
        std::string why;
        CHECK(spectral_supported({Family::AlcoveC, 2, 8}, StepKind::Standard));
        CHECK(spectral_supported({Family::AlcoveB, 2, 8}, StepKind::Standard));
        CHECK_FALSE(spectral_supported({Family::AlcoveB, 2, 8}, StepKind::PositiveStandard, &why));
        CHECK_FALSE(why.empty());
        CHECK_THROWS_AS(count_exact({{Family::AlcoveB, 2, 8}, StepKind::PositiveStandard, parse_point("2,1"), parse_point("2,1"), 2, {}}),
                        UnsupportedError);
    }
}
