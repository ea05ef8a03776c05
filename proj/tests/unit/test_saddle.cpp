#include <doctest.h>

#include "alcove/saddle.hpp"

using namespace alcove;

TEST_SUITE("saddle") {
    TEST_CASE("one factor") {
        const auto s = solve_saddle(5, {0});
        REQUIRE(s.thetas.size() == 1);
        CHECK(static_cast<double>(s.thetas[0]) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(static_cast<double>(s.C) == doctest::Approx(2.0));
        REQUIRE(s.maximizers.size() == 1);
        CHECK(static_cast<double>(s.c0_values[0]) == doctest::Approx(0.25));
        CHECK(s.epsilon_signs[0] == 1);
    }

    TEST_CASE("root structure") {
        // {1, m-1} is symmetric under theta -> -theta, so 0 is a root
        const auto s = solve_saddle(6, {1, 5});
        bool has_zero = false;
        for (const auto& t : s.thetas)
            if (abs(t) < Real64("1e-30") || abs(t - 6) < Real64("1e-30")) has_zero = true;
        CHECK(has_zero);
        CHECK(solve_saddle(7, {0, 1, 2}).thetas.size() == 3);
    }

    TEST_CASE("exact coefficients") {
        // (1 + z)^6 (1 - z)^6 = (1 - z^2)^6: z^6 coefficient is -20
        CHECK(static_cast<double>(exact_coeff({4, {0, 2}, 0, 6}).re) == -20);
        // n = 1: binomial(k, k/2 + d)
        CHECK(static_cast<double>(exact_coeff({3, {0}, 2, 10}).re) == 210);
        CHECK(static_cast<double>(exact_coeff({3, {0}, 0, 0}).re) == 1);
        CHECK(static_cast<double>(exact_coeff({3, {0}, 40, 10}).re) == 0);
        CHECK_THROWS_AS(exact_coeff({3, {0}, 1, 10}), ArgumentError);
        CHECK_THROWS_AS(exact_coeff({3, {0}, 0, kSaddleMaxK + 2}), ResourceError);
    }

    TEST_CASE("estimate converges") {
        const SaddleProblem p{7, {0, 1, 2}, 0, 200};
        const auto est = approx_coeff(p);
        REQUIRE_FALSE(est.subexponential);
        const auto ex = exact_coeff(p);
        CHECK(static_cast<double>(cabs(est.value - ex) / cabs(ex)) < 0.02);
    }

    TEST_CASE("one root per pole interval") {
        for (int m = 1; m <= 12; ++m)
            for (int mask = 1; mask < (1 << m); ++mask) {
                std::vector<int> rs;
                for (int r = 0; r < m; ++r)
                    if (mask & (1 << r)) rs.push_back(r);
                if (rs.size() > 5) continue;
                CAPTURE(m);
                CAPTURE(mask);
                CHECK(solve_saddle(m, rs).thetas.size() == rs.size());
            }
    }

    TEST_CASE("central binomial asymptotics") {
        for (int d2 : {0, 2}) {
            const auto est = approx_coeff({5, {0}, d2, 100});
            const Real64 expect = rpow(Real64(2), 100) * sqrt(2 / (pi_value<Real64>() * 100));
            CHECK(static_cast<double>(abs(est.value.re / expect - 1)) < 1e-40);
        }
        const SaddleProblem p{5, {0, 1}, 0, 400};
        const auto ex = exact_coeff(p);
        CHECK(static_cast<double>(cabs(approx_coeff(p).value - ex) / cabs(ex)) < 0.1);
    }

    TEST_CASE("consecutive residues") {
        const int m = 9, n = 3;
        const auto s = solve_saddle(m, {2, 3, 4});
        Real64 c = rpow(Real64(2), n);
        for (int j = 1; j <= n; ++j) c *= cos(pi_value<Real64>() * (j - Real64(n + 1) / 2) / m);
        CHECK(static_cast<double>(abs(s.C / c - 1)) < 1e-40);
    }

    TEST_CASE("invalid input") {
        CHECK_THROWS_AS(solve_saddle(4, {}), ArgumentError);
        CHECK_THROWS_AS(solve_saddle(4, {2, 1}), ArgumentError);
        CHECK_THROWS_AS(solve_saddle(4, {4}), ArgumentError);
        CHECK_THROWS_AS(approx_coeff({4, {0}, 0, 0}), ArgumentError);
    }
}
