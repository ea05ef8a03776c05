#include "alcove/saddle.hpp"

#include <algorithm>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace alcove {

namespace {

using Int = mp::mpz_int;

Real64 tan_sum(int m, const std::vector<int>& rs, const Real64& theta) {
    Real64 s = 0;
    for (int r : rs) s += tan(pi_value<Real64>() * (theta + r) / m);
    return s;
}

Real64 reduce_mod(Real64 x, int m) {
    x = fmod(x, Real64(m));
    if (x < 0) x += m;
    // a root at 0 found from the left of m
    if (m - x < Real64("1e-50") * m) x = 0;
    return x;
}

// Polynomial with integer coefficients, index = exponent.
using IntPoly = std::vector<Int>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Monic exact division; the remainder must be zero.
IntPoly divide_exact(IntPoly a, const IntPoly& d) {
    trim(a);
    IntPoly q(a.size() >= d.size() ? a.size() - d.size() + 1 : 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        const Int c = a[i + d.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) a[i + j] -= c * d[j];
    }
    trim(a);
    if (!a.empty()) throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

IntPoly cyclotomic(int m) {
    IntPoly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide_exact(p, cyclotomic(d));
    return p;
}

// Remainder of a modulo the monic polynomial d.
void reduce_mod_poly(IntPoly& a, const IntPoly& d) {
    trim(a);
    const std::size_t dn = d.size() - 1;
    for (std::size_t i = a.size(); i-- > dn;) {
        const Int c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) a[i - dn + j] -= c * d[j];
    }
    trim(a);
}

std::vector<Int> binomial_row(int k) {
    std::vector<Int> row(k + 1);
    row[0] = 1;
    for (int i = 1; i <= k; ++i) row[i] = row[i - 1] * (k - i + 1) / i;
    return row;
}

template <unsigned D>
bool try_evaluate(const IntPoly& a, int m, Complex<Real64>& out) {
    using R = Real<D>;
    const auto& w = roots_of_unity<R>(m);
    Complex<R> acc(R(0));
    R bound = 0;
    for (std::size_t e = 0; e < a.size(); ++e) {
        if (a[e] == 0) continue;
        const R c(a[e].str());
        acc += w[e] * c;
        bound += abs(c);
    }
    // Each root of unity carries a relative error of a few ulps.
    bound *= pow(R(10), -static_cast<int>(D) + 4);
    const R mod = cabs(acc);
    if (bound > mod * R("1e-12")) return false;
    // components inside the rounding bound are zero
    out = Complex<Real64>(abs(acc.re) <= bound ? Real64(0) : Real64(acc.re),
                          abs(acc.im) <= bound ? Real64(0) : Real64(acc.im));
    return true;
}

}  // namespace

void validate_saddle_rs(int m, const std::vector<int>& rs) {
    if (m < 1) throw ArgumentError("saddle: m must be a positive integer");
    if (rs.empty()) throw ArgumentError("saddle: rs must be non-empty");
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i] < 0 || rs[i] >= m) throw ArgumentError("saddle: every r must lie in [0, m)");
        if (i > 0 && rs[i] <= rs[i - 1]) throw ArgumentError("saddle: rs must be strictly increasing");
    }
}

SaddleSolution solve_saddle(int m, const std::vector<int>& rs) {
    validate_saddle_rs(m, rs);
    const int n = static_cast<int>(rs.size());

    // Poles at m/2 - r_j (mod m), in doubled units to sort exactly.
    std::vector<int> poles2;
    for (int r : rs) poles2.push_back(mod_int(m - 2LL * r, 2LL * m));
    std::sort(poles2.begin(), poles2.end());

    const Real64 nudge = Real64("1e-9") * m;
    SaddleSolution sol;
    for (int i = 0; i < n; ++i) {
        const Real64 left = Real64(poles2[i]) / 2;
        const Real64 right = i + 1 < n ? Real64(poles2[i + 1]) / 2 : Real64(poles2[0]) / 2 + m;
        Real64 lo = left + nudge;
        Real64 hi = right - nudge;
        if (!(tan_sum(m, rs, lo) < 0 && tan_sum(m, rs, hi) > 0))
            throw PrecisionError("saddle: no sign change between poles " + std::to_string(poles2[i]) + "/2 and the next");
        for (int it = 0; it < 200 && hi - lo > 0; ++it) {
            const Real64 mid = (lo + hi) / 2;
            if (tan_sum(m, rs, mid) < 0)
                lo = mid;
            else
                hi = mid;
        }
        sol.thetas.push_back(reduce_mod((lo + hi) / 2, m));
    }
    std::sort(sol.thetas.begin(), sol.thetas.end());

    std::vector<Real64> values;
    for (const Real64& t : sol.thetas) {
        Real64 p = 1;
        for (int r : rs) p *= 2 * abs(cos(pi_value<Real64>() * (t + r) / m));
        values.push_back(p);
    }
    sol.C = *std::max_element(values.begin(), values.end());
    const Real64 tol = sol.C * Real64("1e-40");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (sol.C - values[i] > tol) continue;
        const Real64& t = sol.thetas[i];
        Real64 c0 = 0;
        int sign = 1;
        for (int r : rs) {
            const Real64 c = cos(pi_value<Real64>() * (t + r) / m);
            c0 += 1 / (4 * c * c);
            if (c < 0) sign = -sign;
        }
        sol.maximizers.push_back(t);
        sol.c0_values.push_back(c0);
        sol.epsilon_signs.push_back(sign);
    }
    return sol;
}

SaddleEstimate approx_coeff(const SaddleProblem& problem) {
    return approx_coeff(problem, solve_saddle(problem.m, problem.rs));
}

SaddleEstimate approx_coeff(const SaddleProblem& problem, const SaddleSolution& sol) {
    validate_saddle_rs(problem.m, problem.rs);
    const int n = problem.n();
    const int k = problem.k;
    if (k < 1) throw ArgumentError("saddle: approx_coeff needs k >= 1");
    if ((problem.d2 + static_cast<long long>(n) * k) % 2 != 0)
        throw ArgumentError("saddle: d + n k / 2 must be an integer");

    long long rsum = 0;
    for (int r : problem.rs) rsum += r;
    const Real64 d = Real64(problem.d2) / 2;
    const Real64 two_pi_over_m = 2 * pi_value<Real64>() / problem.m;

    Complex<Real64> sum(Real64(0));
    Real64 scale = 0;
    for (std::size_t l = 0; l < sol.maximizers.size(); ++l) {
        const Real64 phase = Real64(k) / 2 * rsum - d * sol.maximizers[l];
        Complex<Real64> term = cis<Real64>(two_pi_over_m * phase);
        const Real64 weight = 1 / sqrt(sol.c0_values[l]);
        term *= (sol.epsilon_signs[l] < 0 && k % 2 == 1) ? Real64(-weight) : weight;
        sum += term;
        scale += weight;
    }

    SaddleEstimate est;
    if (cabs(sum) <= scale * Real64("1e-30")) {
        est.subexponential = true;
        est.value = Complex<Real64>(Real64(0));
        return est;
    }
    est.value = sum * (rpow(sol.C, k) / sqrt(2 * pi_value<Real64>() * k));
    return est;
}

Complex<Real64> exact_coeff(const SaddleProblem& problem, unsigned* digits_used) {
    validate_saddle_rs(problem.m, problem.rs);
    const int n = problem.n();
    const int k = problem.k;
    const int m = problem.m;
    if (k < 0) throw ArgumentError("saddle: k must be non-negative");
    if (k > kSaddleMaxK) throw ResourceError("saddle: k exceeds the exact-coefficient cap " + std::to_string(kSaddleMaxK));
    const long long twice = problem.d2 + static_cast<long long>(n) * k;
    if (twice % 2 != 0) throw ArgumentError("saddle: d + n k / 2 must be an integer");
    const long long D = twice / 2;
    if (digits_used) *digits_used = 0;
    if (D < 0 || D > static_cast<long long>(n) * k) return Complex<Real64>(Real64(0));

    // coeffs[deg][e]: coefficient of z^deg w^e in the partial product.
    const auto binom = binomial_row(k);
    std::vector<std::vector<Int>> coeffs(1, std::vector<Int>(m, 0));
    coeffs[0][0] = 1;
    for (int j = 0; j < n; ++j) {
        const int r = problem.rs[j];
        const long long top = std::min<long long>(D, static_cast<long long>(coeffs.size() - 1) + k);
        const bool last = j + 1 == n;
        std::vector<std::vector<Int>> next(top + 1, std::vector<Int>(m, 0));
        for (long long deg = 0; deg < static_cast<long long>(coeffs.size()); ++deg) {
            for (int t = 0; t <= k && deg + t <= top; ++t) {
                if (last && deg + t != D) continue;
                const int shift = mod_int(static_cast<long long>(r) * t, m);
                auto& dst = next[deg + t];
                for (int e = 0; e < m; ++e) {
                    if (coeffs[deg][e] == 0) continue;
                    dst[(e + shift) % m] += coeffs[deg][e] * binom[t];
                }
            }
        }
        coeffs = std::move(next);
    }

    IntPoly a = coeffs[D];
    reduce_mod_poly(a, cyclotomic(m));
    if (a.empty()) return Complex<Real64>(Real64(0));

    Complex<Real64> out;
    auto attempt = [&](auto digits_tag) {
        constexpr unsigned Dg = decltype(digits_tag)::value;
        if (!try_evaluate<Dg>(a, m, out)) return false;
        if (digits_used) *digits_used = Dg;
        return true;
    };
    if (attempt(std::integral_constant<unsigned, 64>{}) || attempt(std::integral_constant<unsigned, 128>{}) ||
        attempt(std::integral_constant<unsigned, 256>{}) || attempt(std::integral_constant<unsigned, 512>{}) ||
        attempt(std::integral_constant<unsigned, 1024>{}) || attempt(std::integral_constant<unsigned, 2048>{}) ||
        attempt(std::integral_constant<unsigned, 4096>{}) || attempt(std::integral_constant<unsigned, 8192>{}))
        return out;
    throw PrecisionError("saddle: exact coefficient not certified at 8192 digits");
}

}  // namespace alcove
