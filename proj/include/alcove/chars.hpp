#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "alcove/core.hpp"
#include "alcove/numeric.hpp"

namespace alcove {

using Rational = boost::multiprecision::mpq_rational;

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Laurent polynomial in q^(1/2) with rational coefficients.  Exponents are
// stored doubled, so the key 3 stands for q^(3/2).  Zero coefficients are
// never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const Rational& c);

    static LaurentPoly monomial(int exp2, const Rational& coeff = 1);
    // q^(e/2) + sign * q^(-e/2)
    static LaurentPoly symmetric_pair(int exp2, int sign);

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int min_exp2() const;
    int max_exp2() const;
    Rational coeff(int exp2) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& s);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    LaurentPoly pow(unsigned e) const;

    // Exact quotient.  Throws InternalError if d does not divide *this.
    LaurentPoly divided_by(const LaurentPoly& d) const;

    // Value at the point whose square root is q_half.
    template <class R>
    Complex<R> evaluate(const Complex<R>& q_half) const {
        Complex<R> acc(R(0));
        for (const auto& [e, c] : terms_) {
            const R cr = R(c.str());
            acc += cpow(q_half, e) * cr;
        }
        return acc;
    }

    std::string to_string() const;

private:
    void add_term(int exp2, const Rational& c);
    std::map<int, Rational> terms_;
};

// sign * q^(exp2/2)
struct QMonomial {
    int sign = 1;
    int exp2 = 0;
};

// Non-increasing parts, doubled.  Even orthogonal shapes may end in a
// negative part with |last| <= second to last.
struct Partition {
    std::vector<int> parts2;

    static Partition from_integers(const std::vector<int>& parts);
    // n copies of value2 / 2
    static Partition rectangle(int n, int value2);
    std::size_t size() const { return parts2.size(); }
};

enum class CharacterKind { Schur, Symplectic, OddOrthogonal, EvenOrthogonal, EvenOrthogonalHalf };

std::string to_string(CharacterKind k);

// Bialternant character with every variable a q-monomial, as an exact
// Laurent polynomial in q^(1/2).  Shorter partitions are padded with zeros
// up to the number of variables.  When the denominator vanishes at the
// given monomials (reciprocal pairs, repeated values, +-1), the variables
// are first separated by a second indeterminate and the exact quotient is
// specialised afterwards.
LaurentPoly character(CharacterKind kind, const Partition& lambda, const std::vector<QMonomial>& xs);

// Numeric bialternant at complex points.  Half-integral powers use the
// principal square root of each variable.  Throws ArgumentError when the
// denominator is numerically zero.
template <class R>
Complex<R> character_value(CharacterKind kind, const Partition& lambda, const std::vector<Complex<R>>& xs);

// ---- determinant evaluations -----------------------------------------------

enum class DetIdentity { Ortho1, Ortho2, Ortho3, Sympl };

std::string to_string(DetIdentity d);

struct DetCheck {
    bool match = false;
    double relative_error = 0;
    std::string determinant;   // decimal strings at the working precision
    std::string product;
};

using Real50 = Real<50>;

// Compares the determinant with its product evaluation at the given points
// (50 significant digits, relative tolerance 1e-25).
DetCheck det_identity_check(DetIdentity which, const std::vector<Complex<Real50>>& xs);

// ---- specialised characters --------------------------------------------------

enum class SpecialLemma { C1_so1, C2_so2, C3_SchurRect, C5_SchurA, C6_SchurB, C7_spin, C8_spin_signed };

std::string to_string(SpecialLemma l);

struct SpecialParams {
    int m = 0;   // q = exp(pi i / m) for C1-C3
    int n = 1;
    int c2 = 0;  // twice c for C5-C8
    int p = 0;   // C5 only
};

struct SpecialResult {
    Complex<Real64> character_side;
    Complex<Real64> closed_form;
    bool match = false;
    // true when the comparison was an identity of Laurent polynomials
    bool exact = false;
    std::string branch;
};

SpecialResult specialized_eval(SpecialLemma lemma, const SpecialParams& params);

// ---- basic hypergeometric summations -----------------------------------------

enum class QHypIdentity { HypLemma, Jackson2 };

struct QHypParams {
    // HypLemma: exact rationals q, b and integer N.
    int N = 0;
    Rational q_rat{1, 3};
    Rational b_rat{2};
    // Jackson2: reals with |q| < 1; A > 0 so that sqrt(A) is real.
    double q = 0.25;
    double A = 0;
    double B = 0;
    int depth = 200;
};

struct QHypResult {
    bool match = false;
    bool exact = false;
    std::string lhs;
    std::string rhs;
    double relative_error = 0;
};

// Throws PrecisionError if the Jackson2 truncation cannot be certified.
QHypResult qhyp_sum_check(QHypIdentity which, const QHypParams& params);

// ---- branching identities ----------------------------------------------------

enum class Branching { SchurToSoOdd, SpToSchur, SoEvenInterval };

std::string to_string(Branching b);

struct BranchingParams {
    int n = 1;
    int c2 = 0;  // eq SchurToSoOdd: p = c2 / 2 (so c2 = 2p); SpToSchur: 2c; SoEvenInterval: 2a
    int r = 1;   // SpToSchur only
    int b2 = 0;  // SoEvenInterval only: 2b
};

struct BranchingResult {
    bool match = false;
    std::size_t terms = 0;  // number of characters summed on the enumerated side
};

// Compares both sides exactly on Laurent polynomials with the variables
// x_h = q^(w_h) for fixed generic exponents w_h.
BranchingResult branching_sum_check(Branching which, const BranchingParams& params);

// ---- the whole suite ----------------------------------------------------------

struct IdentityRecord {
    std::string identity;  // e.g. "C2_so2", "ortho1", "jackson2"
    std::string params;    // e.g. "n=2 m=5"
    bool match = false;
    std::string detail;    // branch label or error figures
};

struct IdentitySuiteOptions {
    int n_max = 3;        // characters and branching
    int m_max = 8;        // C1-C3
    int c_max = 4;        // C5-C8 (C7/C8 also at every half-integer c <= c_max)
    int det_n_max = 4;
    int det_points = 20;  // random points per (identity, n)
    int hyp_samples = 5;  // random (b, q) per N for the terminating summation
    unsigned seed = 12345;
};

// Runs every determinant, specialisation, summation and branching check
// over the given ranges.  Deterministic for a fixed seed.
std::vector<IdentityRecord> identity_suite(const IdentitySuiteOptions& opts = {});

}  // namespace alcove
