#include <random>
#include <string>

#include "alcove/chars.hpp"

namespace alcove {

namespace {

std::string params_nm(int n, int m) { return "n=" + std::to_string(n) + " m=" + std::to_string(m); }

std::string params_nc(int n, int c2) { return "n=" + std::to_string(n) + " c=" + format_half(c2); }

void add_special(std::vector<IdentityRecord>& out, SpecialLemma lemma, const SpecialParams& p, std::string params) {
    const SpecialResult r = specialized_eval(lemma, p);
    std::string detail = r.branch.empty() ? std::string() : r.branch + " ";
    detail += "lhs=" + to_decimal(r.character_side.re, 20) + " rhs=" + to_decimal(r.closed_form.re, 20);
    out.push_back({to_string(lemma), std::move(params), r.match, std::move(detail)});
}

Rational random_rational(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, 9);
    return Rational(num(rng), den(rng));
}

}  // namespace

std::vector<IdentityRecord> identity_suite(const IdentitySuiteOptions& o) {
    std::vector<IdentityRecord> out;
    std::mt19937_64 rng(o.seed);

    // determinant evaluations at random complex points
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    for (DetIdentity which : {DetIdentity::Ortho1, DetIdentity::Ortho2, DetIdentity::Ortho3, DetIdentity::Sympl}) {
        for (int n = 1; n <= o.det_n_max; ++n) {
            for (int i = 0; i < o.det_points; ++i) {
                std::vector<Complex<Real50>> xs;
                for (int h = 0; h < n; ++h) xs.emplace_back(Real50(coord(rng)), Real50(coord(rng)));
                IdentityRecord rec{to_string(which), "n=" + std::to_string(n) + " point=" + std::to_string(i), false, {}};
                try {
                    const DetCheck c = det_identity_check(which, xs);
                    rec.match = c.match;
                    rec.detail = "relative_error=" + std::to_string(c.relative_error);
                } catch (const ArgumentError& e) {
                    // a degenerate random point; draw again
                    --i;
                    continue;
                }
                out.push_back(std::move(rec));
            }
        }
    }

    for (int n = 1; n <= o.n_max; ++n) {
        for (int m = n; m <= o.m_max; ++m) {
            add_special(out, SpecialLemma::C1_so1, {m, n, 0, 0}, params_nm(n, m));
            add_special(out, SpecialLemma::C2_so2, {m, n, 0, 0}, params_nm(n, m));
            if (m >= n + 1) add_special(out, SpecialLemma::C3_SchurRect, {m, n, 0, 0}, params_nm(n, m));
        }
        for (int c = 1; c <= o.c_max; ++c) {
            for (int p = 0; p <= n; ++p)
                add_special(out, SpecialLemma::C5_SchurA, {0, n, 2 * c, p}, params_nc(n, 2 * c) + " p=" + std::to_string(p));
            add_special(out, SpecialLemma::C6_SchurB, {0, n, 2 * c, 0}, params_nc(n, 2 * c));
        }
        for (int c2 = 0; c2 <= 2 * o.c_max; ++c2) {
            add_special(out, SpecialLemma::C7_spin, {0, n, c2, 0}, params_nc(n, c2));
            add_special(out, SpecialLemma::C8_spin_signed, {0, n, c2, 0}, params_nc(n, c2));
        }
    }

    // terminating summation, exact over random rationals
    for (int N = 0; N <= 6; ++N) {
        for (int s = 0; s < o.hyp_samples; ++s) {
            QHypParams p;
            p.N = N;
            p.q_rat = random_rational(rng, -8, 8);
            p.b_rat = random_rational(rng, -20, 20);
            if (p.q_rat == 0 || p.b_rat == 0 || abs(p.q_rat) == 1) {
                --s;
                continue;
            }
            try {
                const QHypResult r = qhyp_sum_check(QHypIdentity::HypLemma, p);
                out.push_back({"hyp_lemma", "N=" + std::to_string(N) + " q=" + p.q_rat.str() + " b=" + p.b_rat.str(),
                               r.match, "lhs=" + r.lhs + " rhs=" + r.rhs});
            } catch (const ArgumentError&) {
                --s;  // a vanishing denominator; draw again
            }
        }
    }

    // nonterminating summation at three points with |q| <= 1/3
    const QHypParams jpoints[] = {
        {0, {}, {}, 0.25, 0.3, 2.0, 200},
        {0, {}, {}, -1.0 / 3, 0.5, -3.0, 200},
        {0, {}, {}, 1.0 / 3, 0.07, 1.5, 200},
    };
    for (const QHypParams& p : jpoints) {
        const QHypResult r = qhyp_sum_check(QHypIdentity::Jackson2, p);
        out.push_back({"jackson2", "q=" + std::to_string(p.q) + " A=" + std::to_string(p.A) + " B=" + std::to_string(p.B),
                       r.match, "relative_error=" + std::to_string(r.relative_error)});
    }

    for (int n = 1; n <= o.n_max; ++n) {
        for (int b = 0; b <= o.c_max; ++b) {
            const BranchingResult r = branching_sum_check(Branching::SchurToSoOdd, {n, 2 * b, 1, 0});
            out.push_back({to_string(Branching::SchurToSoOdd), "n=" + std::to_string(n) + " p=" + std::to_string(b), r.match,
                           "terms=" + std::to_string(r.terms)});
            for (int rr = 0; rr <= n; ++rr) {
                const BranchingResult t = branching_sum_check(Branching::SpToSchur, {n, 2 * b, rr, 0});
                out.push_back({to_string(Branching::SpToSchur),
                               "n=" + std::to_string(n) + " c=" + std::to_string(b) + " r=" + std::to_string(rr), t.match,
                               "terms=" + std::to_string(t.terms)});
            }
        }
        for (int a2 = 0; a2 <= 2 * o.c_max; ++a2) {
            for (int b2 = a2 % 2; b2 <= a2; b2 += 2) {
                const BranchingResult r = branching_sum_check(Branching::SoEvenInterval, {n, a2, 1, b2});
                out.push_back({to_string(Branching::SoEvenInterval), "n=" + std::to_string(n) + " a=" + format_half(a2) +
                                                                         " b=" + format_half(b2),
                               r.match, "terms=" + std::to_string(r.terms)});
            }
        }
    }
    return out;
}

}  // namespace alcove
