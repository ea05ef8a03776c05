#include <doctest.h>

#include <cmath>

#include "alcove/chars.hpp"

using namespace alcove;

TEST_SUITE("chars") {
    TEST_CASE("laurent arithmetic") {
        const LaurentPoly q = LaurentPoly::monomial(2);
        const LaurentPoly p = q + LaurentPoly(1);
        CHECK((p * p).coeff(2) == 2);
        CHECK((p * p).divided_by(p) == p);
        CHECK((p - p).is_zero());
        CHECK(LaurentPoly::symmetric_pair(3, -1).coeff(-3) == -1);
        CHECK(p.pow(3).size() == 4);
        CHECK_THROWS_AS(p.divided_by(q + LaurentPoly(2)), InternalError);
    }

    TEST_CASE("small characters") {
        CHECK(character(CharacterKind::Schur, Partition{}, {{1, 2}, {1, 4}}) == LaurentPoly(1));
        CHECK(character(CharacterKind::Schur, Partition::from_integers({1}), {{1, 2}, {1, 6}}) ==
              LaurentPoly::monomial(2) + LaurentPoly::monomial(6));
        CHECK(character(CharacterKind::Symplectic, Partition::from_integers({1}), {{1, 2}}) ==
              LaurentPoly::symmetric_pair(2, 1));
        // coinciding variables go through the separation path
        CHECK(character(CharacterKind::Schur, Partition::from_integers({1}), {{1, 2}, {1, 2}}) ==
              LaurentPoly::monomial(2, 2));
    }

    TEST_CASE("numeric and exact characters agree") {
        const std::vector<Complex<Real64>> xs{Complex<Real64>(Real64("0.7"), Real64("0.2")),
                                              Complex<Real64>(Real64("1.3"), Real64("-0.4"))};
        const auto v = character_value(CharacterKind::OddOrthogonal, Partition::from_integers({2, 1}), xs);
        CHECK(cabs(v) > 0);
        const auto e = character(CharacterKind::OddOrthogonal, Partition::from_integers({2, 1}), {{1, 2}, {1, -4}});
        const Complex<Real64> qh(Real64("1.1"));
        const auto direct = character_value(CharacterKind::OddOrthogonal, Partition::from_integers({2, 1}),
                                            std::vector<Complex<Real64>>{qh * qh, Complex<Real64>(1 / (qh.re * qh.re * qh.re * qh.re))});
        CHECK(static_cast<double>(cabs(e.evaluate(qh) - direct)) < 1e-40);
    }

    TEST_CASE("determinant evaluations") {
        const std::vector<Complex<Real50>> one{Complex<Real50>(Real50("0.6"), Real50("0.3"))};
        CHECK(det_identity_check(DetIdentity::Sympl, one).match);
        const std::vector<Complex<Real50>> three{Complex<Real50>(Real50("0.5"), Real50("0.8")),
                                                 Complex<Real50>(Real50("-0.9"), Real50("0.1")),
                                                 Complex<Real50>(Real50("0.3"), Real50("-1.2"))};
        for (auto d : {DetIdentity::Ortho1, DetIdentity::Ortho2, DetIdentity::Ortho3, DetIdentity::Sympl})
            CHECK(det_identity_check(d, three).match);
    }

    TEST_CASE("specialisations") {
        CHECK(specialized_eval(SpecialLemma::C1_so1, {3, 2, 0, 0}).match);
        const auto zero = specialized_eval(SpecialLemma::C2_so2, {4, 3, 0, 0});
        CHECK(zero.match);
        CHECK(static_cast<double>(cabs(zero.character_side)) < 1e-25);
        CHECK(specialized_eval(SpecialLemma::C2_so2, {5, 2, 0, 0}).match);
        CHECK(specialized_eval(SpecialLemma::C5_SchurA, {0, 2, 4, 2}).match);
        CHECK(specialized_eval(SpecialLemma::C7_spin, {0, 2, 4, 0}).match);
        CHECK(specialized_eval(SpecialLemma::C8_spin_signed, {0, 2, 4, 0}).match);
    }

    TEST_CASE("q-hypergeometric sums") {
        QHypParams p;
        p.N = 0;
        CHECK(qhyp_sum_check(QHypIdentity::HypLemma, p).match);
        p.N = 3;
        p.q_rat = Rational(1, 3);
        p.b_rat = 2;
        const auto r = qhyp_sum_check(QHypIdentity::HypLemma, p);
        CHECK(r.match);
        CHECK(r.exact);
        QHypParams j;
        j.q = 0.25;
        j.A = std::pow(0.25, 6);
        j.B = std::pow(0.25, -4);
        CHECK(qhyp_sum_check(QHypIdentity::Jackson2, j).match);
    }

    TEST_CASE("branching") {
        CHECK(branching_sum_check(Branching::SpToSchur, {1, 2, 1, 0}).match);
        CHECK(branching_sum_check(Branching::SchurToSoOdd, {2, 0, 1, 0}).match);
        CHECK(branching_sum_check(Branching::SoEvenInterval, {2, 1, 1, 1}).match);
    }

    TEST_CASE("suite is deterministic") {
        IdentitySuiteOptions o;
        o.n_max = 1;
        o.m_max = 3;
        o.c_max = 1;
        o.det_n_max = 1;
        o.det_points = 2;
        o.hyp_samples = 1;
        const auto a = identity_suite(o);
        const auto b = identity_suite(o);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].detail == b[i].detail);
    }
}
