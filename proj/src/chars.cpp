#include "alcove/chars.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace alcove {

// ---- LaurentPoly ---------------------------------------------------------------

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_[0] = Rational(c);
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exp2, const Rational& coeff) {
    LaurentPoly p;
    p.add_term(exp2, coeff);
    return p;
}

LaurentPoly LaurentPoly::symmetric_pair(int exp2, int sign) {
    LaurentPoly p = monomial(exp2);
    p.add_term(-exp2, Rational(sign));
    return p;
}

void LaurentPoly::add_term(int exp2, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(exp2, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int LaurentPoly::min_exp2() const {
    if (terms_.empty()) throw ArgumentError("zero polynomial has no degree");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp2() const {
    if (terms_.empty()) throw ArgumentError("zero polynomial has no degree");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp2) const {
    auto it = terms_.find(exp2);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly acc(1L), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& d) const {
    if (d.is_zero()) throw InternalError("division by the zero Laurent polynomial");
    if (is_zero()) return {};
    const int dlo = d.min_exp2(), dhi = d.max_exp2();
    const int lo = min_exp2(), hi = max_exp2();
    if (hi - lo < dhi - dlo) throw InternalError("inexact Laurent polynomial division");
    // dense remainder indexed from lo
    std::vector<Rational> rem(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, c] : terms_) rem[static_cast<std::size_t>(e - lo)] = c;
    std::vector<std::pair<int, Rational>> dterms(d.terms_.begin(), d.terms_.end());
    const Rational lead = d.terms_.rbegin()->second;
    LaurentPoly q;
    for (int top = hi; top - (dhi - dlo) >= lo; --top) {
        Rational& r = rem[static_cast<std::size_t>(top - lo)];
        if (r == 0) continue;
        const Rational f = r / lead;
        const int shift = top - dhi;
        q.add_term(shift, f);
        for (const auto& [e, c] : dterms) rem[static_cast<std::size_t>(e + shift - lo)] -= f * c;
    }
    for (const auto& r : rem)
        if (r != 0) throw InternalError("inexact Laurent polynomial division");
    return q;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const Rational a = abs(c);
        const bool unit = a == 1 && e != 0;
        if (!unit) os << a.str();
        if (e == 0) continue;
        if (!unit) os << "*";
        os << "q";
        if (e != 2) os << "^" << (e % 2 == 0 ? std::to_string(e / 2) : "(" + std::to_string(e) + "/2)");
    }
    return os.str();
}

// ---- Partition ----------------------------------------------------------------

Partition Partition::from_integers(const std::vector<int>& parts) {
    Partition p;
    for (int v : parts) p.parts2.push_back(2 * v);
    return p;
}

Partition Partition::rectangle(int n, int value2) {
    Partition p;
    p.parts2.assign(static_cast<std::size_t>(n), value2);
    return p;
}

std::string to_string(CharacterKind k) {
    switch (k) {
        case CharacterKind::Schur: return "schur";
        case CharacterKind::Symplectic: return "sp";
        case CharacterKind::OddOrthogonal: return "so_odd";
        case CharacterKind::EvenOrthogonal: return "so_even";
        case CharacterKind::EvenOrthogonalHalf: return "so_even_half";
    }
    return "?";
}

namespace {

// ---- bialternant skeleton shared by the exact and numeric routes ----------------

// The column exponents (doubled) of one determinant and how its entries
// combine x^a with x^-a: 0 means x^a alone, +1 means x^a + x^-a, -1 means
// x^a - x^-a.
struct AltSpec {
    std::vector<int> exps2;
    int pair = 0;
};

struct Bialternant {
    std::vector<AltSpec> numerator;  // summed
    AltSpec denominator;
};

void check_partition(CharacterKind kind, const std::vector<int>& l) {
    const bool half = !l.empty() && (l[0] % 2 != 0);
    for (int v : l)
        if ((v % 2 != 0) != half) throw ArgumentError("partition mixes integer and half-integer parts");
    if (half && kind != CharacterKind::OddOrthogonal && kind != CharacterKind::EvenOrthogonal &&
        kind != CharacterKind::EvenOrthogonalHalf)
        throw ArgumentError("half-integer parts are only defined for orthogonal characters");
    const bool even_o = kind == CharacterKind::EvenOrthogonal || kind == CharacterKind::EvenOrthogonalHalf;
    // the last part of an even orthogonal shape may be negative
    const std::size_t plain = even_o && !l.empty() ? l.size() - 1 : l.size();
    for (std::size_t i = 0; i < plain; ++i) {
        if (l[i] < 0) throw ArgumentError("partition parts must be non-negative");
        if (i + 1 < plain && l[i] < l[i + 1]) throw ArgumentError("partition must be non-increasing");
    }
    if (even_o && l.size() >= 2 && l[l.size() - 2] < std::abs(l.back()))
        throw ArgumentError("even orthogonal shape needs lambda_{n-1} >= |lambda_n|");
}

Bialternant make_bialternant(CharacterKind kind, const Partition& lambda, std::size_t nvars) {
    if (lambda.size() > nvars) throw ArgumentError("partition has more parts than variables");
    std::vector<int> l = lambda.parts2;
    const bool half = !l.empty() && l[0] % 2 != 0;
    l.resize(nvars, 0);
    if (half && lambda.size() < nvars) throw ArgumentError("a half-partition needs one part per variable");
    check_partition(kind, l);
    const int n = static_cast<int>(nvars);
    Bialternant b;
    AltSpec num, den;
    for (int t = 1; t <= n; ++t) {
        int shift2 = 0;
        switch (kind) {
            case CharacterKind::Schur: shift2 = 2 * (n - t); break;
            case CharacterKind::Symplectic: shift2 = 2 * (n - t + 1); break;
            case CharacterKind::OddOrthogonal: shift2 = 2 * (n - t) + 1; break;
            case CharacterKind::EvenOrthogonal:
            case CharacterKind::EvenOrthogonalHalf: shift2 = 2 * (n - t); break;
        }
        num.exps2.push_back(l[static_cast<std::size_t>(t - 1)] + shift2);
        den.exps2.push_back(shift2);
    }
    switch (kind) {
        case CharacterKind::Schur:
            num.pair = den.pair = 0;
            b.numerator = {num};
            break;
        case CharacterKind::Symplectic:
        case CharacterKind::OddOrthogonal:
            num.pair = den.pair = -1;
            b.numerator = {num};
            break;
        case CharacterKind::EvenOrthogonal: {
            num.pair = den.pair = 1;
            AltSpec minus = num;
            minus.pair = -1;
            b.numerator = {num, minus};
            break;
        }
        case CharacterKind::EvenOrthogonalHalf:
            num.pair = den.pair = 1;
            b.numerator = {num};
            break;
    }
    b.denominator = den;
    return b;
}

// x^(a/2) for x = sign q^(e/2), as a monomial in q^(1/2).
LaurentPoly mono_power(const QMonomial& x, int a2) {
    const long long e = static_cast<long long>(x.exp2) * a2;
    if (e % 2 != 0) throw ArgumentError("power q^(1/4) is outside the Laurent ring in q^(1/2)");
    if (x.sign < 0 && a2 % 2 != 0)
        throw ArgumentError("half-integral power of a negative monomial is ambiguous; write -1 as q^m instead");
    Rational c = 1;
    if (x.sign < 0 && (a2 / 2) % 2 != 0) c = -1;
    return LaurentPoly::monomial(static_cast<int>(e / 2), c);
}

LaurentPoly entry(const QMonomial& x, int a2, int pair) {
    LaurentPoly v = mono_power(x, a2);
    if (pair == 0) return v;
    LaurentPoly w = mono_power(x, -a2);
    return pair > 0 ? v + w : v - w;
}

// Leibniz expansion; entries are binomials at most, so this is cheap for
// the sizes used here (up to 7 x 7).
LaurentPoly leibniz(const std::vector<std::vector<LaurentPoly>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return LaurentPoly(1L);
    LaurentPoly out;
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    std::function<void(int, const LaurentPoly&, int)> rec = [&](int row, const LaurentPoly& acc, int sign) {
        if (row == n) {
            if (sign > 0) out += acc;
            else out -= acc;
            return;
        }
        for (int c = n - 1; c >= 0; --c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            // the number of unused columns left of c decides the sign flip
            int left = 0;
            for (int j = 0; j < c; ++j)
                if (!used[static_cast<std::size_t>(j)]) ++left;
            const auto& e = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            if (e.is_zero()) continue;
            used[static_cast<std::size_t>(c)] = 1;
            rec(row + 1, acc * e, (left % 2 == 0) ? sign : -sign);
            used[static_cast<std::size_t>(c)] = 0;
        }
    };
    rec(0, LaurentPoly(1L), 1);
    return out;
}

LaurentPoly alternant(const AltSpec& spec, const std::vector<QMonomial>& xs) {
    const std::size_t n = xs.size();
    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t t = 0; t < n; ++t) a[h][t] = entry(xs[h], spec.exps2[t], spec.pair);
    return leibniz(a);
}

std::pair<LaurentPoly, LaurentPoly> num_den(const Bialternant& b, const std::vector<QMonomial>& xs) {
    LaurentPoly num;
    for (const auto& s : b.numerator) num += alternant(s, xs);
    return {num, alternant(b.denominator, xs)};
}

}  // namespace

LaurentPoly character(CharacterKind kind, const Partition& lambda, const std::vector<QMonomial>& xs) {
    if (xs.empty()) throw ArgumentError("character needs at least one variable");
    for (const auto& x : xs)
        if (x.sign != 1 && x.sign != -1) throw ArgumentError("monomial sign must be +1 or -1");
    const Bialternant b = make_bialternant(kind, lambda, xs.size());
    auto [num, den] = num_den(b, xs);
    if (!den.is_zero()) return num.divided_by(den);

    // Separate the variables: x_h = sign q^(e_h/2) u^(w_h) with w_h = h, then
    // q = v^N and u = v.  For N large the exact quotient in v still encodes
    // every (q, u) monomial, and setting u = 1 amounts to grouping the
    // v-exponents by their nearest multiple of N.
    int lam_max2 = 0;
    for (int v : lambda.parts2) lam_max2 = std::max(lam_max2, std::abs(v));
    const int nv = static_cast<int>(xs.size());
    const int wsum = nv * (nv + 1) / 2;
    const int N = 2 * lam_max2 * wsum + 4 * nv + 2;
    std::vector<QMonomial> ys(xs.size());
    for (int h = 0; h < nv; ++h) ys[static_cast<std::size_t>(h)] = {xs[static_cast<std::size_t>(h)].sign,
                                                                     N * xs[static_cast<std::size_t>(h)].exp2 + 2 * (h + 1)};
    auto [vnum, vden] = num_den(b, ys);
    if (vden.is_zero()) throw InternalError("separated denominator vanished");
    const LaurentPoly vq = vnum.divided_by(vden);
    LaurentPoly out;
    for (const auto& [E, c] : vq.terms()) {
        const long long A = static_cast<long long>(std::floor((2.0 * E + N) / (2.0 * N)));
        const long long rest = E - A * N;
        if (2 * std::llabs(rest) >= N) throw InternalError("u-degree exceeds the separation bound");
        out += LaurentPoly::monomial(static_cast<int>(A), c);
    }
    return out;
}

namespace {

template <class R>
Complex<R> csqrt(const Complex<R>& z) {
    const R r = cabs(z);
    if (r == 0) return Complex<R>(R(0));
    R re = sqrt((r + z.re) / 2);
    R im = sqrt((r - z.re) / 2);
    if (z.im < 0) im = -im;
    return Complex<R>(re, im);
}

template <class R>
Complex<R> num_entry(const Complex<R>& root, int a2, int pair) {
    const Complex<R> v = cpow(root, a2);
    if (pair == 0) return v;
    const Complex<R> w = cpow(root, -a2);
    return pair > 0 ? v + w : v - w;
}

template <class R>
Complex<R> num_alternant(const AltSpec& s, const std::vector<Complex<R>>& roots) {
    const std::size_t n = roots.size();
    std::vector<std::vector<Complex<R>>> a(n, std::vector<Complex<R>>(n));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t t = 0; t < n; ++t) a[h][t] = num_entry(roots[h], s.exps2[t], s.pair);
    return det_complex(std::move(a));
}

}  // namespace

template <class R>
Complex<R> character_value(CharacterKind kind, const Partition& lambda, const std::vector<Complex<R>>& xs) {
    const Bialternant b = make_bialternant(kind, lambda, xs.size());
    std::vector<Complex<R>> roots;
    for (const auto& x : xs) {
        if (cabs(x) == 0) throw ArgumentError("variables must be non-zero");
        roots.push_back(csqrt(x));
    }
    Complex<R> num(R(0));
    for (const auto& s : b.numerator) num += num_alternant(s, roots);
    const Complex<R> den = num_alternant(b.denominator, roots);
    R scale = 1;
    for (const auto& x : xs) scale *= 1 + cabs(x) + 1 / cabs(x);
    const R tiny = pow(R(10), -(static_cast<int>(std::numeric_limits<R>::digits10) / 2));
    if (cabs(den) <= tiny * pow(scale, static_cast<int>(xs.size())))
        throw ArgumentError("denominator vanishes at these points; use the q-monomial route");
    return num / den;
}

template Complex<Real50> character_value(CharacterKind, const Partition&, const std::vector<Complex<Real50>>&);
template Complex<Real64> character_value(CharacterKind, const Partition&, const std::vector<Complex<Real64>>&);

// ---- determinant evaluations ---------------------------------------------------

std::string to_string(DetIdentity d) {
    switch (d) {
        case DetIdentity::Ortho1: return "ortho1";
        case DetIdentity::Ortho2: return "ortho2";
        case DetIdentity::Ortho3: return "ortho3";
        case DetIdentity::Sympl: return "sympl";
    }
    return "?";
}

DetCheck det_identity_check(DetIdentity which, const std::vector<Complex<Real50>>& xs) {
    using R = Real50;
    using C = Complex<R>;
    const std::size_t n = xs.size();
    const R eps = R("1e-20");
    for (std::size_t h = 0; h < n; ++h) {
        if (cabs(xs[h]) < eps) throw ArgumentError("det_identity_check: zero variable");
        for (std::size_t t = h + 1; t < n; ++t) {
            if (cabs(xs[h] - xs[t]) < eps) throw ArgumentError("det_identity_check: repeated variable");
            if (cabs(C(R(1)) - xs[h] * xs[t]) < eps) throw ArgumentError("det_identity_check: reciprocal pair");
        }
    }
    std::vector<C> roots;
    for (const auto& x : xs) roots.push_back(csqrt(x));
    std::vector<std::vector<C>> a(n, std::vector<C>(n));
    C prod(R(1));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t t = h + 1; t < n; ++t) prod *= (xs[h] - xs[t]) * (C(R(1)) - xs[h] * xs[t]);
    const int ni = static_cast<int>(n);
    for (std::size_t h = 0; h < n; ++h) {
        const C& s = roots[h];
        for (std::size_t t = 0; t < n; ++t) {
            const int ti = static_cast<int>(t) + 1;
            switch (which) {
                case DetIdentity::Ortho1: a[h][t] = cpow(s, 2 * ti - 1) + cpow(s, 1 - 2 * ti); break;
                case DetIdentity::Ortho2: a[h][t] = cpow(s, 2 * ti - 1) - cpow(s, 1 - 2 * ti); break;
                case DetIdentity::Ortho3: a[h][t] = cpow(xs[h], ti - 1) + cpow(xs[h], 1 - ti); break;
                case DetIdentity::Sympl: a[h][t] = cpow(xs[h], ti) - cpow(xs[h], -ti); break;
            }
        }
        switch (which) {
            case DetIdentity::Ortho1: prod *= cpow(s, -2 * ni + 1) * (xs[h] + C(R(1))); break;
            case DetIdentity::Ortho2: prod *= cpow(s, -2 * ni + 1) * (xs[h] - C(R(1))); break;
            case DetIdentity::Ortho3: prod *= cpow(xs[h], -ni + 1); break;
            case DetIdentity::Sympl: prod *= cpow(xs[h], -ni) * (xs[h] * xs[h] - C(R(1))); break;
        }
    }
    if (which == DetIdentity::Ortho3 && n > 0) prod *= R(2);
    const C det = det_complex(std::move(a));
    DetCheck out;
    const R scale = cabs(prod);
    if (scale < eps) throw ArgumentError("det_identity_check: degenerate point (product side vanishes)");
    const R rel = cabs(det - prod) / scale;
    out.relative_error = static_cast<double>(rel);
    out.match = rel < R("1e-25");
    out.determinant = to_decimal(det.re, 30) + (det.im < 0 ? " - " : " + ") + to_decimal(abs(det.im), 30) + "i";
    out.product = to_decimal(prod.re, 30) + (prod.im < 0 ? " - " : " + ") + to_decimal(abs(prod.im), 30) + "i";
    return out;
}

// ---- specialised characters ---------------------------------------------------

std::string to_string(SpecialLemma l) {
    switch (l) {
        case SpecialLemma::C1_so1: return "C1_so1";
        case SpecialLemma::C2_so2: return "C2_so2";
        case SpecialLemma::C3_SchurRect: return "C3_SchurRect";
        case SpecialLemma::C5_SchurA: return "C5_SchurA";
        case SpecialLemma::C6_SchurB: return "C6_SchurB";
        case SpecialLemma::C7_spin: return "C7_spin";
        case SpecialLemma::C8_spin_signed: return "C8_spin_signed";
    }
    return "?";
}

namespace {

using R64 = Real64;
using C64 = Complex<R64>;

R64 pi64() { return pi_value<R64>(); }
R64 sinpi(const R64& x) { return sin(pi64() * x); }
R64 cospi(const R64& x) { return cos(pi64() * x); }

C64 q_half_at(int m) { return cis<R64>(pi64() / (2 * m)); }

// A generic evaluation point for identities in an indeterminate q.
C64 generic_q_half() { return cis<R64>(R64("0.41")) * R64("0.93"); }

bool close(const C64& a, const C64& b, const R64& tol) {
    const R64 scale = std::max(cabs(b), R64(1));
    return cabs(a - b) <= tol * scale;
}

long long binom2(long long n) { return n * (n - 1) / 2; }

// Product/quotient of symmetric binomials q^(e/2) + s q^(-e/2) kept as two
// factor lists so that it can be formed exactly.
struct Fraction {
    LaurentPoly num = LaurentPoly(1L);
    LaurentPoly den = LaurentPoly(1L);
    void mul(int e2, int sign) { num *= LaurentPoly::symmetric_pair(e2, sign); }
    void div(int e2, int sign) { den *= LaurentPoly::symmetric_pair(e2, sign); }
    LaurentPoly exact() const { return num.divided_by(den); }
};

std::vector<QMonomial> stair(int n, int step2, int shift2) {
    // q^{(n-1)s}, q^{(n-2)s}, ..., in doubled exponents, plus a shift
    std::vector<QMonomial> xs;
    for (int h = 1; h <= n; ++h) xs.push_back({1, (n - h) * step2 + shift2});
    return xs;
}

SpecialResult so_odd_lemma(bool negated, const SpecialParams& pr) {
    const int n = pr.n, m = pr.m;
    if (n < 1 || m < n) throw ArgumentError("C1/C2 need positive integers m >= n");
    // q^{n-1}, q^{n-3}, ..., q^{-n+1}.  A minus sign becomes q^{+-m}, chosen
    // so that reciprocal variables keep reciprocal square roots.
    std::vector<QMonomial> xs;
    for (int h = 1; h <= n; ++h) {
        const int e = n + 1 - 2 * h;
        xs.push_back({1, 2 * e + (negated ? (e < 0 ? -2 * m : 2 * m) : 0)});
    }
    const LaurentPoly ch = character(CharacterKind::OddOrthogonal, Partition::rectangle(n, m - n), xs);
    SpecialResult r;
    r.character_side = ch.evaluate(q_half_at(m));
    R64 den = rpow(R64(2), binom2(n));
    for (int h = 1; h <= n; ++h)
        for (int t = h + 1; t <= n; ++t) den *= sinpi(R64(t - h) / m);
    R64 val;
    if (!negated) {
        if (n % 2 == 0) {
            val = rpow(R64(m), n / 2);
            for (int h = 1; h <= n / 2; ++h) val /= tan(pi64() * (2 * h - 1) / (2 * m));
            r.branch = "n-even";
        } else {
            val = rpow(R64(m), (n + 1) / 2);
            for (int h = 1; h <= (n - 1) / 2; ++h) val /= tan(pi64() * h / m);
            r.branch = "n-odd";
        }
        val /= den;
    } else if (n % 2 == 0) {
        val = rpow(R64(m), n / 2);
        for (int h = 1; h <= n / 2; ++h) val *= tan(pi64() * (2 * h - 1) / (2 * m));
        val /= den;
        r.branch = "n-even";
    } else if (m % 2 == 1) {
        val = rpow(R64(m), (n - 1) / 2) * (((m - n) / 2) % 2 == 0 ? 1 : -1);
        for (int h = 1; h <= (n - 1) / 2; ++h) val *= tan(pi64() * h / m);
        val /= den;
        r.branch = "n-odd-m-odd";
    } else {
        val = 0;
        r.branch = "n-odd-m-even-zero";
    }
    r.closed_form = C64(val);
    r.match = close(r.character_side, r.closed_form, R64("1e-30"));
    return r;
}

SpecialResult schur_rect_lemma(const SpecialParams& pr) {
    const int n = pr.n, m = pr.m;
    if (n < 1 || m < n + 1) throw ArgumentError("C3 needs m >= n + 1");
    std::vector<QMonomial> xs;
    for (int h = n; h >= 1; --h) xs.push_back({1, 2 * h});
    xs.push_back({-1, 0});
    for (int h = 1; h <= n; ++h) xs.push_back({1, -2 * h});
    Partition lam = Partition::rectangle(n, 2 * (m - n - 1));
    const LaurentPoly ch = character(CharacterKind::Schur, lam, xs);
    SpecialResult r;
    r.character_side = ch.evaluate(q_half_at(m));
    R64 den = 1;
    for (int h = 1; h <= n + 1; ++h)
        for (int t = 1; t <= n; ++t) den *= abs(sinpi(R64(2 * t - 2 * h + 1) / (2 * m)));
    R64 val = 1 / rpow(R64(2), static_cast<long long>(n) * n);
    if (m % 2 == 0) {
        const int top = n % 2 == 0 ? n / 2 : (n + 1) / 2;
        for (int h = 1; h <= top; ++h) {
            const R64 t = tan(pi64() * (2 * h - 1) / (2 * m));
            val *= t * t;
        }
        val /= den;
        r.branch = n % 2 == 0 ? "m-even-n-even" : "m-even-n-odd";
    } else if (n % 2 == 0) {
        for (int h = 1; h <= n / 2; ++h) {
            const R64 s = sinpi(R64(2 * h - 1) / (2 * m));
            const R64 c = cospi(R64(h) / m);
            val *= s * s / (c * c);
        }
        val /= den;
        r.branch = "m-odd-n-even";
    } else {
        val = 0;
        r.branch = "m-odd-n-odd-zero";
    }
    r.closed_form = C64(val);
    r.match = close(r.character_side, r.closed_form, R64("1e-30"));
    return r;
}

// q^{2n-1}, q^{2n-3}, ..., q, middle, q^{-1}, ..., q^{-2n+1}
std::vector<QMonomial> odd_ladder(int n, QMonomial middle) {
    std::vector<QMonomial> xs;
    for (int h = n; h >= 1; --h) xs.push_back({1, 2 * (2 * h - 1)});
    xs.push_back(middle);
    for (int h = 1; h <= n; ++h) xs.push_back({1, -2 * (2 * h - 1)});
    return xs;
}

SpecialResult finish_exact(const LaurentPoly& lhs, const LaurentPoly& rhs_num, const LaurentPoly& rhs_den,
                           std::string branch) {
    SpecialResult r;
    r.exact = true;
    r.match = lhs * rhs_den == rhs_num;
    const C64 z = generic_q_half();
    r.character_side = lhs.evaluate(z);
    r.closed_form = rhs_num.evaluate(z) / rhs_den.evaluate(z);
    r.branch = std::move(branch);
    return r;
}

SpecialResult schur_a_lemma(const SpecialParams& pr) {
    const int n = pr.n, p = pr.p;
    if (pr.c2 % 2 != 0 || pr.c2 < 2) throw ArgumentError("C5 needs a positive integer c");
    if (n < 1 || p < 0 || p > n) throw ArgumentError("C5 needs 0 <= p <= n");
    const int c = pr.c2 / 2;
    Partition lam;
    for (int i = 0; i < n - p; ++i) lam.parts2.push_back(2 * c);
    for (int i = 0; i < p; ++i) lam.parts2.push_back(2 * (c - 1));
    const LaurentPoly lhs = character(CharacterKind::Schur, lam, odd_ladder(n, {1, 0}));
    Fraction f;
    for (int h = 1; h <= 2 * n; ++h) {
        f.mul(c + h, -1);
        f.div(h, -1);
    }
    for (int h = 1; h <= n; ++h)
        for (int t = 1; t <= n; ++t) {
            f.mul(2 * (c + n + t - h), -1);
            f.div(2 * (n + t - h), -1);
        }
    for (int h = 1; h <= n; ++h) {
        f.mul(2 * h, -1);
        f.mul(2 * h, -1);
        f.div(2 * (c + p + h), -1);
    }
    for (int h = 1; h <= p; ++h) f.div(2 * h, -1);
    for (int h = 1; h <= n - p; ++h) f.div(2 * h, -1);
    f.mul(c, -1);
    f.mul(c + 2 * p, 1);
    f.div(2 * (c + p), -1);
    return finish_exact(lhs, f.num, f.den, "p=" + std::to_string(p));
}

SpecialResult schur_b_lemma(const SpecialParams& pr) {
    const int n = pr.n;
    if (pr.c2 % 2 != 0 || pr.c2 < 2) throw ArgumentError("C6 needs a positive integer c");
    if (n < 1) throw ArgumentError("C6 needs n >= 1");
    const int c = pr.c2 / 2;
    const LaurentPoly lhs = character(CharacterKind::Schur, Partition::rectangle(n, 2 * c), odd_ladder(n, {-1, 0}));
    Fraction f;
    for (int h = 1; h <= 2 * n; ++h) {
        f.mul(c + h, (c + h) % 2 == 0 ? -1 : 1);
        f.div(h, h % 2 == 0 ? -1 : 1);
    }
    for (int h = 1; h <= n - 1; ++h)
        for (int t = 1; t <= n; ++t) {
            f.mul(2 * (c + n + t - h), -1);
            f.div(2 * (n + t - h), -1);
        }
    return finish_exact(lhs, f.num, f.den, "");
}

LaurentPoly spin_sum(int n, int c2, bool signed_sum) {
    // so_even_{(c^{n-1}, p)}(q^{n-1}, ..., q, 1) summed over p = -c..c
    const std::vector<QMonomial> xs = stair(n, 2, 0);
    LaurentPoly total;
    for (int p2 = -c2; p2 <= c2; p2 += 2) {
        Partition lam = Partition::rectangle(n - 1, c2);
        lam.parts2.push_back(p2);
        if (n == 1) lam.parts2 = {p2};
        LaurentPoly ch = character(CharacterKind::EvenOrthogonal, lam, xs);
        if (signed_sum && ((c2 - p2) / 2) % 2 != 0) ch = -ch;
        total += ch;
    }
    return total;
}

// prod_{h<t} (q^{(2c+t+h-1)/2} - ...) / (q^{(t+h-2)/2} - ...)
void spin_common(Fraction& f, int n, int c2) {
    for (int h = 1; h <= n; ++h)
        for (int t = h + 1; t <= n; ++t) {
            f.mul(c2 + t + h - 1, -1);
            f.div(t + h - 2, -1);
        }
}

SpecialResult spin_lemma(const SpecialParams& pr) {
    const int n = pr.n, c2 = pr.c2;
    if (n < 1 || c2 < 0) throw ArgumentError("C7 needs n >= 1 and c >= 0");
    const LaurentPoly lhs = spin_sum(n, c2, false);
    Fraction f;
    spin_common(f, n, c2);
    for (int h = 1; h <= n; ++h) f.mul(c2 + 2 * h - 1, -1);
    for (int h = 1; h <= n - 1; ++h) f.div(h, -1);
    // sum_k (-1)^{k-1}(2c+2k-1) / D_k over the common denominator prod_k D_k
    std::vector<LaurentPoly> dk;
    for (int k = 1; k <= n; ++k) {
        LaurentPoly d(1L);
        for (int h = 1; h <= n; ++h) d *= LaurentPoly::symmetric_pair(c2 + k + h - 1, -1);
        for (int h = 1; h <= k - 1; ++h) d *= LaurentPoly::symmetric_pair(h, -1);
        for (int h = 1; h <= n - k; ++h) d *= LaurentPoly::symmetric_pair(h, -1);
        dk.push_back(d);
    }
    LaurentPoly sum_num, all(1L);
    for (const auto& d : dk) all *= d;
    for (int k = 1; k <= n; ++k) {
        LaurentPoly term(Rational((k % 2 == 1 ? 1 : -1) * (c2 + 2 * k - 1)));
        for (int j = 1; j <= n; ++j)
            if (j != k) term *= dk[static_cast<std::size_t>(j - 1)];
        sum_num += term;
    }
    return finish_exact(lhs, f.num * sum_num, f.den * all, "");
}

SpecialResult spin_signed_lemma(const SpecialParams& pr) {
    const int n = pr.n, c2 = pr.c2;
    if (n < 1 || c2 < 0) throw ArgumentError("C8 needs n >= 1 and c >= 0");
    const LaurentPoly lhs = spin_sum(n, c2, true);
    Fraction f;
    spin_common(f, n, c2);
    for (int h = 1; h <= n - 1; ++h) f.div(h, 1);
    return finish_exact(lhs, f.num, f.den, "");
}

}  // namespace

SpecialResult specialized_eval(SpecialLemma lemma, const SpecialParams& params) {
    switch (lemma) {
        case SpecialLemma::C1_so1: return so_odd_lemma(false, params);
        case SpecialLemma::C2_so2: return so_odd_lemma(true, params);
        case SpecialLemma::C3_SchurRect: return schur_rect_lemma(params);
        case SpecialLemma::C5_SchurA: return schur_a_lemma(params);
        case SpecialLemma::C6_SchurB: return schur_b_lemma(params);
        case SpecialLemma::C7_spin: return spin_lemma(params);
        case SpecialLemma::C8_spin_signed: return spin_signed_lemma(params);
    }
    throw ArgumentError("unknown lemma");
}

// ---- basic hypergeometric summations ---------------------------------------------

namespace {

Rational rpow_q(const Rational& q, int e) {
    Rational out = 1;
    const Rational base = e >= 0 ? q : Rational(1) / q;
    for (int i = 0; i < std::abs(e); ++i) out *= base;
    return out;
}

// (a; q)_k
template <class T>
T qpoch(const T& a, const T& q, int k) {
    T out = 1, qi = 1;
    for (int j = 0; j < k; ++j) {
        out *= 1 - a * qi;
        qi *= q;
    }
    return out;
}

QHypResult hyp_lemma(const QHypParams& p) {
    const int N = p.N;
    if (N < 0) throw ArgumentError("HypLemma needs N >= 0");
    const Rational q = p.q_rat, b = p.b_rat;
    if (q == 0 || b == 0) throw ArgumentError("HypLemma needs non-zero q and b");
    const Rational Q = q * q;
    const Rational lower = rpow_q(q, 4 - 2 * N) / b;
    const Rational z = rpow_q(q, 3) / b;
    Rational lhs = 0;
    for (int k = 0; k <= N; ++k) {
        const Rational den = qpoch(lower, Q, k) * qpoch(Q, Q, k);
        if (den == 0) throw ArgumentError("HypLemma: b makes a lower parameter vanish");
        lhs += qpoch(rpow_q(q, -2 * N), Q, k) * qpoch(b, Q, k) / den * rpow_q(z, k);
    }
    const Rational rden = rpow_q(q, N) * qpoch(Rational(b / Q), Q, N) * qpoch(q, q, N);
    if (rden == 0) throw ArgumentError("HypLemma: right-hand side has a vanishing denominator");
    const Rational rhs = qpoch(Rational(b / q), q, N) * qpoch(Q, Q, N) / rden;
    QHypResult r;
    r.exact = true;
    r.match = lhs == rhs;
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    return r;
}

QHypResult jackson2(const QHypParams& p) {
    using R = Real50;
    const R q = R(p.q), A = R(p.A), B = R(p.B);
    if (!(abs(q) < 1)) throw ArgumentError("Jackson2 needs |q| < 1");
    if (!(A > 0)) throw ArgumentError("Jackson2 needs A > 0 for a real square root");
    if (B == 0) throw ArgumentError("Jackson2 needs B != 0");
    const R sA = sqrt(A), Q = q * q, z = -q / B;
    const R aq = abs(q), aQ = aq * aq;
    const int depth = p.depth;

    // series, stopping early when (B; q^2)_k terminates it
    R sum = 0, term = 1;
    bool terminated = false;
    int k = 0;
    R Qk = 1;  // q^{2k}
    for (; k < depth; ++k) {
        sum += term;
        const R num = (1 - A * Qk) * (1 + sA * Q * Qk) * (1 - B * Qk);
        const R den = (1 - Q * Qk) * (1 + sA * Qk) * (1 - A * Q / B * Qk);
        if (den == 0) throw ArgumentError("Jackson2: vanishing lower parameter");
        if (num == 0) {
            terminated = true;
            break;
        }
        term *= num / den * z;
        Qk *= Q;
    }
    R tail = 0;
    if (!terminated) {
        // beyond depth the term ratio is bounded by rho
        const R aQk = pow(aQ, depth);
        const R rho = abs(z) * (1 + A * aQk) * (1 + sA * aQ * aQk) * (1 + abs(B) * aQk) /
                      ((1 - aQ * aQk) * (1 - sA * aQk) * (1 - abs(A / B) * aQ * aQk));
        if (!(rho < 1)) throw PrecisionError("Jackson2: series tail cannot be bounded at this depth");
        tail = abs(term) / (1 - rho);
    }

    // infinite products truncated after `depth` factors
    R prod_bound = 0;
    auto inf = [&](const R& a) {
        prod_bound += 2 * abs(a) * pow(aQ, depth) / (1 - aQ);
        return qpoch(a, Q, depth);
    };
    const R rhs = inf(-q) * inf(-sA * q / B) * inf(A * Q) * inf(sA * Q / B) /
                  (inf(-sA * q) * inf(-q / B) * inf(sA * Q) * inf(A * Q / B));
    const R rel_bound = exp(prod_bound) - 1 + tail / abs(rhs);
    if (!(rel_bound < R("1e-30"))) throw PrecisionError("Jackson2: truncation error bound too large");
    QHypResult r;
    r.relative_error = static_cast<double>(abs(sum - rhs) / abs(rhs));
    r.match = r.relative_error < 1e-20;
    r.lhs = to_decimal(sum, 30);
    r.rhs = to_decimal(rhs, 30);
    return r;
}

}  // namespace

QHypResult qhyp_sum_check(QHypIdentity which, const QHypParams& params) {
    return which == QHypIdentity::HypLemma ? hyp_lemma(params) : jackson2(params);
}

// ---- branching identities ----------------------------------------------------------

std::string to_string(Branching b) {
    switch (b) {
        case Branching::SchurToSoOdd: return "schur_to_so_odd";
        case Branching::SpToSchur: return "sp_to_schur";
        case Branching::SoEvenInterval: return "so_even_interval";
    }
    return "?";
}

namespace {

// Generic exponents: distinct, positive, no sum of two equals another's
// negative.  Doubled, so 2 means q^1.
const int kGeneric[] = {2, 6, 14, 30};

std::vector<QMonomial> generic_vars(int n) {
    if (n > 4) throw ArgumentError("branching checks support n <= 4");
    std::vector<QMonomial> xs;
    for (int h = 0; h < n; ++h) xs.push_back({1, kGeneric[h]});
    return xs;
}

// All non-increasing sequences of length len with parts (doubled) in
// [lo2, hi2] stepping by 2.
void for_each_partition(int len, int hi2, int lo2, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int top) {
        if (static_cast<int>(cur.size()) == len) {
            f(cur);
            return;
        }
        for (int v = top; v >= lo2; v -= 2) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(hi2);
}

}  // namespace

BranchingResult branching_sum_check(Branching which, const BranchingParams& p) {
    BranchingResult out;
    const int n = p.n;
    if (n < 1) throw ArgumentError("branching checks need n >= 1");
    const auto xs = generic_vars(n);
    switch (which) {
        case Branching::SchurToSoOdd: {
            // sum_{p >= l_1 >= ... >= l_n >= 0} s_l(x) = (x_1...x_n)^{p/2} so_odd_{((p/2)^n)}(x)
            if (p.c2 % 2 != 0 || p.c2 < 0) throw ArgumentError("SchurToSoOdd needs an integer bound p >= 0");
            const int bound = p.c2 / 2;
            LaurentPoly lhs;
            for_each_partition(n, 2 * bound, 0, [&](const std::vector<int>& l) {
                lhs += character(CharacterKind::Schur, Partition{l}, xs);
                ++out.terms;
            });
            int sum_exp2 = 0;
            for (const auto& x : xs) sum_exp2 += x.exp2;
            // (prod x)^{p/2}: doubled exponent sum_exp2 * p / 2
            const LaurentPoly pref = LaurentPoly::monomial(sum_exp2 * bound / 2);
            const LaurentPoly rhs = pref * character(CharacterKind::OddOrthogonal, Partition::rectangle(n, bound), xs);
            out.match = lhs == rhs;
            break;
        }
        case Branching::SpToSchur: {
            // s_{(c^r)}(x_1, 1/x_1, ..., x_n, 1/x_n, 1) = sum_{c >= nu_1 >= ... >= nu_r >= 0} sp_nu(x)
            if (p.c2 % 2 != 0 || p.c2 < 0) throw ArgumentError("SpToSchur needs an integer c >= 0");
            if (p.r < 0 || p.r > n) throw ArgumentError("SpToSchur needs 0 <= r <= n");
            const int c = p.c2 / 2;
            std::vector<QMonomial> ys;
            for (const auto& x : xs) {
                ys.push_back(x);
                ys.push_back({1, -x.exp2});
            }
            ys.push_back({1, 0});
            const LaurentPoly lhs = character(CharacterKind::Schur, Partition::rectangle(p.r, 2 * c), ys);
            LaurentPoly rhs;
            for_each_partition(p.r, 2 * c, 0, [&](const std::vector<int>& nu) {
                rhs += character(CharacterKind::Symplectic, Partition{nu}, xs);
                ++out.terms;
            });
            out.match = lhs == rhs;
            break;
        }
        case Branching::SoEvenInterval: {
            // so_{(a^n)} * sum_{p=-b}^{b} so_{(b^{n-1},p)} = sum_{a+b >= nu_1 >= ... >= nu_n >= a-b} so_nu
            const int a2 = p.c2, b2 = p.b2;
            if (a2 < b2 || b2 < 0) throw ArgumentError("SoEvenInterval needs a >= b >= 0");
            const LaurentPoly left = character(CharacterKind::EvenOrthogonal, Partition::rectangle(n, a2), xs);
            LaurentPoly spin;
            for (int q2 = -b2; q2 <= b2; q2 += 2) {
                Partition lam = Partition::rectangle(n - 1, b2);
                lam.parts2.push_back(q2);
                spin += character(CharacterKind::EvenOrthogonal, lam, xs);
            }
            LaurentPoly rhs;
            for_each_partition(n, a2 + b2, a2 - b2, [&](const std::vector<int>& nu) {
                rhs += character(CharacterKind::EvenOrthogonal, Partition{nu}, xs);
                ++out.terms;
            });
            out.match = left * spin == rhs;
            break;
        }
    }
    return out;
}

}  // namespace alcove
