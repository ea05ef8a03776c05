#include <doctest.h>

#include <cmath>

#include "alcove/asym.hpp"
#include "alcove/exact.hpp"

using namespace alcove;

TEST_SUITE("asym") {
    TEST_CASE("growth rates") {
        CHECK(static_cast<double>(growth_rate({Family::AlcoveA, 1, 4}, StepKind::Diagonal)) == doctest::Approx(2.0));
        // 2 (cos(pi/4) + cos(3 pi/4)) summed as absolute values: 2 sqrt 2
        CHECK(static_cast<double>(growth_rate({Family::AlcoveA, 2, 8}, StepKind::Standard)) ==
              doctest::Approx(2 * std::sqrt(2.0)));
    }

    TEST_CASE("estimates approach exact counts") {
        const WalkProblem base{{Family::AlcoveC, 2, 10}, StepKind::Standard, parse_point("3,1"), parse_point("3,1"), 0, {}};
        double prev = 1e300;
        for (int k : {40, 160, 640}) {
            WalkProblem p = base;
            p.k = k;
            const auto est = asym_fixed(p);
            const Real64 exact(count_exact(p).str());
            const double err = static_cast<double>(abs(est.value / exact - 1));
            CHECK(err < prev);
            prev = err;
        }
        CHECK(prev < 0.01);
    }

    TEST_CASE("labels and parity") {
        const RegionSpec r{Family::AlcoveB, 2, 5};
        const auto e = asym_free(r, StepKind::Diagonal, parse_point("3/2,1/2"), 100);
        CHECK(e.case_label.rfind("B/diagonal/free", 0) == 0);
        const WalkProblem odd{{Family::AlcoveC, 2, 10}, StepKind::Standard, parse_point("3,1"), parse_point("3,1"), 41, {}};
        CHECK(asym_fixed(odd).case_label == "parity-zero");
        CHECK(asym_fixed(odd).value == 0);
    }

    TEST_CASE("singular closed form is rejected") {
        CHECK_THROWS_AS(asym_free({Family::AlcoveD, 2, 4}, StepKind::Standard, parse_point("2,0"), 50),
                        UnsupportedError);
    }
}
