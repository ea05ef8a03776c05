#include "alcove/asym.hpp"

#include <cstdlib>
#include <vector>

namespace alcove {

namespace {

using R = Real64;

const R& pi() { return pi_value<R>(); }

// sin(pi x / den) and friends, with x and den real.
R sn(const R& x, const R& den) { return sin(pi() * x / den); }
R cs(const R& x, const R& den) { return cos(pi() * x / den); }

R two_pow(long long e) { return rpow(R(2), e); }

long long binom2(long long n) { return n * (n - 1) / 2; }

int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

struct Geometry {
    int n = 0;
    int m2 = 0;
    R m;
    int fl_m = 0;     // floor(m)
    int cl_m = 0;     // ceil(m)
    int cl_m1 = 0;    // ceil(m - 1)
    bool m_int = true;

    explicit Geometry(const RegionSpec& reg) : n(reg.n), m2(reg.m2), m(R(reg.m2) / 2) {
        m_int = reg.m2 % 2 == 0;
        fl_m = reg.m2 / 2;
        cl_m = (reg.m2 + 1) / 2;
        cl_m1 = cl_m - 1;
    }
};

R coord(const Point& p, int h) { return R(p[h - 1]) / 2; }  // 1-based

long long int_sum(const Point& p) { return abs_sum(p) / 2; }

// prod_{h<t} sin(pi (x_h - x_t) / den)
R vdm_sin(const Point& x, const R& den, bool absolute = false) {
    R out = 1;
    const int n = static_cast<int>(x.size());
    for (int h = 1; h <= n; ++h)
        for (int t = h + 1; t <= n; ++t) {
            R v = sn(coord(x, h) - coord(x, t), den);
            out *= absolute ? abs(v) : v;
        }
    return out;
}

// prod_{h<t} sin(pi (x_h + x_t) / den), optionally including h = t.
R plus_sin(const Point& x, const R& den, bool diagonal_too) {
    R out = 1;
    const int n = static_cast<int>(x.size());
    for (int h = 1; h <= n; ++h)
        for (int t = diagonal_too ? h : h + 1; t <= n; ++t) out *= sn(coord(x, h) + coord(x, t), den);
    return out;
}

R single_sin(const Point& x, const R& den) {
    R out = 1;
    for (int h = 1; h <= static_cast<int>(x.size()); ++h) out *= sn(coord(x, h), den);
    return out;
}

void require_in_region(const RegionSpec& reg, const Point& p, const char* what) {
    if (static_cast<int>(p.size()) != reg.n) throw ArgumentError(std::string(what) + " has the wrong dimension");
    if (!in_region(reg, p)) throw ArgumentError(std::string(what) + " " + format_point(p) + " is not in the region");
}

void require_integer_points(const Point& p, const char* what) {
    for (int v : p)
        if (v % 2 != 0) throw UnsupportedError(std::string(what) + " must have integer coordinates for standard steps");
}

void require_circle_start(const Geometry& g, const Point& eta) {
    for (int i = 0; i + 1 < g.n; ++i)
        if (!(eta[i] > eta[i + 1])) throw ArgumentError("circle start must satisfy m > eta_1 > ... > eta_n >= 0");
    for (int v : eta)
        if (v < 0 || v >= g.m2) throw ArgumentError("circle coordinates must lie in [0, m)");
}

void require_bd(const Geometry& g) {
    if (g.n < 2) throw UnsupportedError("B- and D-type alcoves need n >= 2");
}

AsymEstimate parity_zero(const R& growth) {
    AsymEstimate e;
    e.value = 0;
    e.growth_rate = growth;
    e.case_label = "parity-zero";
    return e;
}

AsymEstimate make(const R& constant, const R& growth, int k, const std::string& label, bool inv_sqrt_k = false) {
    // A vanishing sine in a denominator (small m) leaves 0/0 or inf.
    if (!isfinite(constant))
        throw UnsupportedError(label + ": the closed form is singular at this m (a sine factor in a denominator vanishes)");
    AsymEstimate e;
    e.growth_rate = growth;
    e.value = constant * rpow(growth, k);
    e.algebraic_factor = inv_sqrt_k ? AlgebraicFactor::InvSqrtK : AlgebraicFactor::Constant;
    e.case_label = label;
    return e;
}

// ---- growth rates ---------------------------------------------------------

R growth_A_positive(const Geometry& g) { return sn(g.n, g.m) / sn(1, g.m); }

R growth_A_standard(const Geometry& g) { return 2 * growth_A_positive(g); }

// 2^n prod_j cos(pi (j - (n+1)/2) / m), shared by the A-type and circle
// diagonal walks.
R growth_A_diagonal(const Geometry& g) {
    R p = two_pow(g.n);
    for (int j = 1; j <= g.n; ++j) p *= cs(R(j) - R(g.n + 1) / 2, g.m);
    return p;
}

R growth_C_standard(const Geometry& g) {
    return 2 * sn(g.n, 2 * g.m) * cs(g.n + 1, 2 * g.m) / sn(1, 2 * g.m);
}

R growth_C_diagonal(const Geometry& g) {
    R p = two_pow(g.n);
    for (int j = 1; j <= g.n; ++j) p *= cs(j, 2 * g.m);
    return p;
}

R growth_B_standard(const Geometry& g) { return sn(g.n, g.m) / sn(1, 2 * g.m); }

R growth_B_diagonal(const Geometry& g) {
    R p = two_pow(g.n);
    for (int j = 1; j <= g.n; ++j) p *= cs(2 * j - 1, 4 * g.m);
    return p;
}

R growth_D_standard(const Geometry& g) {
    return 2 * sn(g.n, 2 * g.m) * cs(g.n - 1, 2 * g.m) / sn(1, 2 * g.m);
}

R growth_D_diagonal(const Geometry& g) {
    R p = two_pow(g.n);
    for (int j = 0; j < g.n; ++j) p *= cs(j, 2 * g.m);
    return p;
}

// ---- pieces of the free-endpoint constants ---------------------------------

// prod_{h=0}^{n} prod_{t=1}^{n} sin(pi (t - h + M) / 2m) / sin(pi (t - h + n) / 2m)
R c_interval_product(const Geometry& g, const R& M) {
    R p = 1;
    for (int h = 0; h <= g.n; ++h)
        for (int t = 1; t <= g.n; ++t) p *= sn(R(t - h) + M, 2 * g.m) / sn(t - h + g.n, 2 * g.m);
    return p;
}

// prod_{h<t} sin(pi (t-h) / 2m) * prod_{h<=t} sin(pi (t+h) / 2m)
R c_staircase(const Geometry& g) {
    R p = 1;
    for (int h = 1; h <= g.n; ++h)
        for (int t = h; t <= g.n; ++t) {
            if (t > h) p *= sn(t - h, 2 * g.m);
            p *= sn(t + h, 2 * g.m);
        }
    return p;
}

// For B:  prod_{h=1}^{2n} sin(pi (M-n+h) / 4m) / sin(pi h / 4m)
//       * prod_{h=1}^{n-1} prod_{t=1}^{n} sin(pi (M+t-h) / 2m) / sin(pi (n+t-h) / 2m)
R b_product(const Geometry& g, const R& M) {
    R p = 1;
    for (int h = 1; h <= 2 * g.n; ++h) p *= sn(M - g.n + h, 4 * g.m) / sn(h, 4 * g.m);
    for (int h = 1; h <= g.n - 1; ++h)
        for (int t = 1; t <= g.n; ++t) p *= sn(M + t - h, 2 * g.m) / sn(g.n + t - h, 2 * g.m);
    return p;
}

R b_rectangle(const Geometry& g, const R& M, int hmax) {
    R p = 1;
    for (int h = 1; h <= hmax; ++h)
        for (int t = 1; t <= g.n; ++t) p *= sn(M + t - h, 2 * g.m) / sn(g.n + t - h, 2 * g.m);
    return p;
}

// The odd-k B diagonal product with a full n x n rectangle and the extra
// sine/cosine quotients.
R b_odd_product(const Geometry& g, const R& M) {
    R p = 1;
    for (int h = 1; h <= 2 * g.n; ++h) p *= sn(M - g.n + h, 4 * g.m) / sn(h, 4 * g.m);
    p *= b_rectangle(g, M, g.n);
    for (int h = 1; h <= g.n; ++h) {
        p *= sn(h, 2 * g.m) / sn(M - g.n + 2 * h, 4 * g.m);
        p *= cs(2 * h - 1, 4 * g.m) / cs(M - g.n + 2 * h - 1, 4 * g.m);
    }
    return p;
}

// prod_{h<t} sin(pi (eta_h - eta_t)/2m) sin(pi (eta_h + eta_t)/2m) times the
// staircase with offsets (t - h) and (t + h + shift).
R bd_eta_part(const Geometry& g, const Point& eta, int plus_shift) {
    R p = vdm_sin(eta, 2 * g.m) * plus_sin(eta, 2 * g.m, false);
    for (int h = 1; h <= g.n; ++h)
        for (int t = h + 1; t <= g.n; ++t) p *= sn(t - h, 2 * g.m) * sn(t + h + plus_shift, 2 * g.m);
    return p;
}

// One block of the D-type free constants:
//   prod_h sin(pi (B+2h+a)/2m) / prod_{h<n} sin(pi h/2m)
//   * prod_{h<t} sin(pi (B+h+t+b1)/2m) sin(pi (B+t+h+b2)/2m) / sin^2(pi (t+h-2)/2m)
//   * sum_k (-1)^{n-k} (B+2k+c) / [prod_h sin(pi (B+k+h+d)/2m) prod_{h<k} sin(pi h/2m) prod_{h<=n-k} sin(pi h/2m)]
// with B = M - n.
R d_block(const Geometry& g, const R& M, const R& a, const R& b1, const R& b2, const R& c, const R& d) {
    const int n = g.n;
    const R den = 2 * g.m;
    const R B = M - n;
    R p = 1;
    for (int h = 1; h <= n; ++h) p *= sn(B + 2 * h + a, den);
    for (int h = 1; h <= n - 1; ++h) p /= sn(h, den);
    for (int h = 1; h <= n; ++h)
        for (int t = h + 1; t <= n; ++t) {
            const R s2 = sn(t + h - 2, den);
            p *= sn(B + h + t + b1, den) * sn(B + t + h + b2, den) / (s2 * s2);
        }
    R sum = 0;
    for (int k = 1; k <= n; ++k) {
        R q = 1;
        for (int h = 1; h <= n; ++h) q *= sn(B + k + h + d, den);
        for (int h = 1; h <= k - 1; ++h) q *= sn(h, den);
        for (int h = 1; h <= n - k; ++h) q *= sn(h, den);
        sum += R(sign_pow(n - k)) * (B + 2 * k + c) / q;
    }
    return p * sum;
}

// Sums of prod_{h<t} sin(pi (l_h - l_t)/2m) sin(pi (l_h + l_t)/2m) over
// c >= l_1 > ... > l_n >= 0 (and > 0), for c = m and m - 1, plain and with
// the sign (-1)^{|l|}.  Returns signed / plain.  The closed form for the
// signed part does not reproduce the exact counts, so it is summed directly.
R d_signed_ratio(const Geometry& g) {
    const int n = g.n;
    const int m = g.fl_m;
    const R den = 2 * g.m;
    std::vector<int> lam(n);
    R plain = 0, sgn = 0;
    auto visit = [&](auto&& self, int idx, int hi) -> void {
        if (idx == n) {
            R p = 1;
            int sum = 0;
            for (int h = 0; h < n; ++h) {
                sum += lam[h];
                for (int t = h + 1; t < n; ++t) p *= sn(lam[h] - lam[t], den) * sn(lam[h] + lam[t], den);
            }
            // number of the four sums that contain lam
            p *= (lam[0] <= m - 1 ? 2 : 1) * (lam[n - 1] > 0 ? 2 : 1);
            plain += p;
            sgn += sum % 2 == 0 ? p : R(-p);
            return;
        }
        for (int v = hi; v >= n - 1 - idx; --v) {
            lam[idx] = v;
            self(self, idx + 1, v - 1);
        }
    };
    visit(visit, 0, m);
    return sgn / plain;
}

// The four blocks are the lambda-sums over m >= lambda_1 > ... >= 0 and
// m - 1 >= lambda_1 > ... >= 0, with and without lambda_n = 0.  The second
// and fourth blocks are the first and third ones at M - 1, so their summand
// numerators are (B + 2k - 1) and (B + 2k - 2); the offsets -2 and -3 that a
// literal reading suggests disagree with the exact endpoint sums already at
// n = 3.
R d_four_blocks(const Geometry& g, const R& M) {
    return d_block(g, M, 0, -1, 0, 0, 0) + d_block(g, M, -1, -2, -1, -1, -1) + d_block(g, M, -1, 0, -1, -1, -1) +
           d_block(g, M, -2, -1, -2, -2, -2);
}

R d_two_blocks(const Geometry& g, const R& M) {
    return d_block(g, M, 0, -1, 0, 0, 0) + d_block(g, M, -1, 0, -1, -1, -1);
}

// ---- per-family estimates ---------------------------------------------------

AsymEstimate fixed_A(const Geometry& g, StepKind steps, const WalkProblem& pr) {
    const Point& eta = pr.start;
    const Point& lam = *pr.end;
    const int n = g.n;
    const R vd = vdm_sin(eta, g.m) * vdm_sin(lam, g.m);
    if (steps == StepKind::PositiveStandard) {
        if (!g.m_int) throw UnsupportedError("positive-step asymptotics need integral m");
        require_integer_points(eta, "start");
        require_integer_points(lam, "end");
        const R growth = growth_A_positive(g);
        if (!parity_feasible(pr)) return parity_zero(growth);
        const R c = two_pow(static_cast<long long>(n) * n - n) / rpow(g.m, n - 1) * vd;
        return make(c, growth, pr.k, "A/positive/fixed");
    }
    if (steps == StepKind::Standard) {
        if (!g.m_int) throw UnsupportedError("A-type standard-step asymptotics need integral m");
        require_integer_points(eta, "start");
        require_integer_points(lam, "end");
        const R growth = growth_A_standard(g);
        if (!parity_feasible(pr) || pr.k == 0) return parity_zero(growth);
        const R c = two_pow(static_cast<long long>(n) * n - n) / rpow(g.m, n - 1) * sqrt(2 / (pi() * pr.k)) * vd;
        return make(c, growth, pr.k, "A/standard/fixed", true);
    }
    const R growth = growth_A_diagonal(g);
    if (!parity_feasible(pr) || pr.k == 0) return parity_zero(growth);
    R c0 = 0;
    for (int j = 1; j <= n; ++j) {
        const R v = 2 * cs(R(j) - R(n + 1) / 2, g.m);
        c0 += 1 / (v * v);
    }
    const R c = two_pow(static_cast<long long>(n) * n - n) / rpow(g.m, n - 1) / sqrt(2 * pi() * c0 * pr.k) * vd;
    return make(c, growth, pr.k, "A/diagonal/fixed", true);
}

// Shared by the positive-step A-type and the standard-step circle walks;
// only the growth rate differs.
AsymEstimate free_cyclic(const Geometry& g, const Point& eta, int k, const R& growth, const std::string& prefix) {
    const int n = g.n;
    const int mi = g.fl_m;
    const R vd = vdm_sin(eta, g.m);
    const R pre = two_pow(binom2(n));
    if (n % 2 == 0) {
        R cot = 1, tan_ = 1;
        for (int h = 1; h <= n / 2; ++h) {
            const R a = pi() * (2 * h - 1) / (2 * g.m);
            cot *= cos(a) / sin(a);
            tan_ *= sin(a) / cos(a);
        }
        const R c = pre / rpow(g.m, n / 2) * vd;
        if (mi % 2 == 0) {
            const int sg = sign_pow(int_sum(eta) + k + n / 2);
            return make(c * (cot + R(sg) * tan_), growth, k, prefix + "/n-even-m-even");
        }
        return make(c * cot, growth, k, prefix + "/n-even-m-odd");
    }
    R cot = 1;
    for (int h = 1; h <= (n - 1) / 2; ++h) {
        const R a = pi() * h / g.m;
        cot *= cos(a) / sin(a);
    }
    return make(pre / rpow(g.m, (n - 1) / 2) * vd * cot, growth, k, prefix + "/n-odd");
}

AsymEstimate free_A(const Geometry& g, StepKind steps, const Point& eta, int k) {
    if (steps == StepKind::Diagonal)
        throw UnsupportedError("no free-endpoint estimate is available for A-type diagonal walks");
    if (!g.m_int) throw UnsupportedError("A-type free-endpoint asymptotics need integral m");
    require_integer_points(eta, "start");
    AsymEstimate e = free_cyclic(g, eta, k, growth_A_positive(g), "A/positive/free");
    if (steps == StepKind::PositiveStandard) return e;
    // Every standard-step walk corresponds to 2^k positive-step walks.
    e.value *= two_pow(k);
    e.growth_rate *= 2;
    e.case_label.replace(0, std::string("A/positive").size(), "A/standard");
    return e;
}

AsymEstimate fixed_circle(const Geometry& g, StepKind steps, const WalkProblem& pr) {
    if (!g.m_int) throw UnsupportedError("circle asymptotics need integral m");
    const Point& eta = pr.start;
    const Point& lam = *pr.end;
    require_circle_start(g, eta);
    if (!circle_shift(lam)) throw ArgumentError("end point is not a cyclic rotation of a decreasing vector");
    const int n = g.n;
    const R vd = vdm_sin(eta, g.m) * vdm_sin(lam, g.m, true);
    const R base = R(n) * rpow(g.m, n);
    if (steps == StepKind::Standard) {
        require_integer_points(eta, "start");
        require_integer_points(lam, "end");
        const R growth = growth_A_standard(g);
        if (!parity_feasible(pr)) return parity_zero(growth);
        const bool both_odd = n % 2 == 1 && g.fl_m % 2 == 1;
        const long long e = static_cast<long long>(n) * n - n + (both_odd ? 0 : 1);
        return make(two_pow(e) / base * vd, growth, pr.k,
                    both_odd ? "circle/standard/fixed/n-odd-m-odd" : "circle/standard/fixed/n-or-m-even");
    }
    if (steps != StepKind::Diagonal) throw UnsupportedError("positive steps are only defined for the A-type alcove");
    const R growth = growth_A_diagonal(g);
    if (!parity_feasible(pr)) return parity_zero(growth);
    return make(two_pow(static_cast<long long>(n) * n - n) / base * vd, growth, pr.k, "circle/diagonal/fixed");
}

AsymEstimate free_circle(const Geometry& g, StepKind steps, const Point& eta, int k) {
    if (!g.m_int) throw UnsupportedError("circle asymptotics need integral m");
    require_circle_start(g, eta);
    if (steps == StepKind::Standard) {
        require_integer_points(eta, "start");
        return free_cyclic(g, eta, k, growth_A_standard(g), "circle/standard/free");
    }
    if (steps != StepKind::Diagonal) throw UnsupportedError("positive steps are only defined for the A-type alcove");
    const int n = g.n;
    const R growth = growth_A_diagonal(g);
    const R vd = vdm_sin(eta, g.m);
    const R pre = two_pow(binom2(n));
    if (n % 2 == 0) {
        R cot = 1;
        for (int h = 1; h <= n / 2; ++h) {
            const R a = pi() * (2 * h - 1) / (2 * g.m);
            cot *= cos(a) / sin(a);
        }
        return make(pre / rpow(g.m, n / 2) * vd * cot, growth, k, "circle/diagonal/free/n-even");
    }
    R cot = 1;
    for (int h = 1; h <= (n - 1) / 2; ++h) {
        const R a = pi() * h / g.m;
        cot *= cos(a) / sin(a);
    }
    return make(pre / rpow(g.m, (n - 1) / 2) * vd * cot, growth, k, "circle/diagonal/free/n-odd");
}

AsymEstimate fixed_C(const Geometry& g, StepKind steps, const WalkProblem& pr) {
    const Point& eta = pr.start;
    const Point& lam = *pr.end;
    const int n = g.n;
    const R den = 2 * g.m;
    const R prod = vdm_sin(eta, den) * vdm_sin(lam, den) * plus_sin(eta, den, true) * plus_sin(lam, den, true);
    if (steps == StepKind::Standard) {
        if (!g.m_int) throw UnsupportedError("C-type standard-step asymptotics need integral m");
        require_integer_points(eta, "start");
        require_integer_points(lam, "end");
        const R growth = growth_C_standard(g);
        if (!parity_feasible(pr)) return parity_zero(growth);
        const R c = two_pow(2LL * n * n - n + 1) / rpow(g.m, n) * prod;
        return make(c, growth, pr.k, "C/standard/fixed");
    }
    const R growth = growth_C_diagonal(g);
    if (!parity_feasible(pr)) return parity_zero(growth);
    const R c = rpow(R(4), static_cast<long long>(n) * n) / rpow(2 * g.m, n) * prod;
    return make(c, growth, pr.k, "C/diagonal/fixed");
}

AsymEstimate free_C(const Geometry& g, StepKind steps, const Point& eta, int k) {
    const int n = g.n;
    const R den = 2 * g.m;
    const R eta_part = vdm_sin(eta, den) * plus_sin(eta, den, true) * c_staircase(g);
    if (steps == StepKind::Standard) {
        if (!g.m_int) throw UnsupportedError("C-type standard-step asymptotics need integral m");
        require_integer_points(eta, "start");
        const int mi = g.fl_m;
        const R growth = growth_C_standard(g);
        const R pre = two_pow(2LL * n * n - n) / rpow(g.m, n) * eta_part;
        const R P = c_interval_product(g, R(mi - 1));
        R denom = 1;
        for (int h = 1; h <= n + 1; ++h)
            for (int t = 1; t <= n; ++t) denom *= abs(sn(2 * t - 2 * h + 1, den));
        const R scale = two_pow(-static_cast<long long>(n) * n) / denom;
        const long long es = int_sum(eta) + k;
        if (mi % 2 == 0 && n % 2 == 0) {
            R t2 = 1;
            for (int h = 1; h <= n / 2; ++h) {
                const R tn = tan(pi() * (2 * h - 1) / den);
                t2 *= tn * tn;
            }
            const R alt = R(sign_pow(es + n / 2)) * scale * t2;
            return make(pre * (P + alt), growth, k, "C/standard/free/m-even-n-even");
        }
        if (mi % 2 == 0) {
            R t2 = 1;
            for (int h = 1; h <= (n + 1) / 2; ++h) {
                const R tn = tan(pi() * (2 * h - 1) / den);
                t2 *= tn * tn;
            }
            const R alt = R(sign_pow(es + (n + 1) / 2)) * scale * t2;
            return make(pre * (P + alt), growth, k, "C/standard/free/m-even-n-odd");
        }
        if (n % 2 == 0) {
            R q = 1;
            for (int h = 1; h <= n / 2; ++h) {
                const R s = sn(2 * h - 1, den);
                const R c = cs(h, g.m);
                q *= s * s / (c * c);
            }
            const R alt = R(sign_pow(es + n / 2)) * scale * q;
            return make(pre * (P + alt), growth, k, "C/standard/free/m-odd-n-even");
        }
        return make(pre * P, growth, k, "C/standard/free/m-odd-n-odd");
    }
    const R growth = growth_C_diagonal(g);
    const R pre = rpow(R(4), static_cast<long long>(n) * n) / rpow(2 * g.m, n) * eta_part;
    const bool odd = ((k + eta[0]) % 2 + 2) % 2 == 1;
    if (odd) {
        R extra = 1;
        for (int h = 1; h <= n; ++h) extra *= sn(h + g.fl_m - n, den) / sn(2 * h + g.fl_m - n, den);
        return make(pre * c_interval_product(g, R(g.fl_m)) * extra, growth, k, "C/diagonal/free/k-odd");
    }
    return make(pre * c_interval_product(g, R(g.cl_m1)), growth, k, "C/diagonal/free/k-even");
}

AsymEstimate fixed_B(const Geometry& g, StepKind steps, const WalkProblem& pr) {
    require_bd(g);
    const Point& eta = pr.start;
    const Point& lam = *pr.end;
    const int n = g.n;
    const R den = 2 * g.m;
    const R prod = vdm_sin(eta, den) * vdm_sin(lam, den) * plus_sin(eta, den, false) * plus_sin(lam, den, false) *
                   single_sin(eta, den) * single_sin(lam, den);
    const R pre = rpow(R(4), static_cast<long long>(n) * n) / rpow(2 * g.m, n);
    if (steps == StepKind::Standard) {
        require_integer_points(eta, "start");
        require_integer_points(lam, "end");
        const R growth = growth_B_standard(g);
        if (!parity_feasible(pr)) return parity_zero(growth);
        return make(pre * prod, growth, pr.k, "B/standard/fixed");
    }
    const R growth = growth_B_diagonal(g);
    if (!parity_feasible(pr)) return parity_zero(growth);
    return make(pre / 2 * prod, growth, pr.k, "B/diagonal/fixed");
}

AsymEstimate free_B(const Geometry& g, StepKind steps, const Point& eta, int k) {
    require_bd(g);
    const int n = g.n;
    const R den = 2 * g.m;
    const R four = 4 * g.m;
    const R pre = rpow(R(4), static_cast<long long>(n) * n) / rpow(2 * g.m, n);
    R single_h = 1, single_odd = 1;
    for (int h = 1; h <= n; ++h) {
        single_h *= sn(h, den);
        single_odd *= sn(2 * h - 1, four);
    }
    const R E1 = bd_eta_part(g, eta, 0) * single_sin(eta, den) * single_h;
    if (steps == StepKind::Standard) {
        require_integer_points(eta, "start");
        const R growth = growth_B_standard(g);
        if (!g.m_int) return make(pre * E1 * b_product(g, R(g.fl_m)), growth, k, "B/standard/free/m-half");
        const R m = g.m;
        const R base = b_product(g, m) + b_product(g, m - 1);
        const long long es = int_sum(eta) + k;
        R q1 = 1, q2 = 1;
        std::string label;
        int s1, s2;
        if ((g.fl_m - n) % 2 == 0) {
            for (int h = 1; h <= n; ++h) {
                const R d = cs(2 * h - 1, four) * sn(h, den);
                q1 *= cs(m - n + 2 * h - 1, four) * sn(m - n + 2 * h, four) / d;
                q2 *= sn(m - n + 2 * h - 2, four) * cs(m - n + 2 * h - 1, four) / d;
            }
            s1 = sign_pow(es + binom2(n + 1));
            s2 = sign_pow(es + binom2(n));
            label = "B/standard/free/m-parity-of-n";
        } else {
            for (int h = 1; h <= n; ++h) {
                const R d = cs(2 * h - 1, four) * sn(h, den);
                q1 *= sn(m - n + 2 * h - 1, four) * cs(m - n + 2 * h, four) / d;
                q2 *= cs(m - n + 2 * h - 2, four) * sn(m - n + 2 * h - 1, four) / d;
            }
            s1 = sign_pow(es + binom2(n));
            s2 = sign_pow(es + binom2(n + 1));
            label = "B/standard/free/m-parity-differs";
        }
        const R total = base + R(s1) * q1 * b_rectangle(g, m, n - 1) + R(s2) * q2 * b_rectangle(g, m - 1, n - 1);
        return make(pre / 2 * E1 * total, growth, k, label);
    }
    const R growth = growth_B_diagonal(g);
    const bool odd = ((k + eta[0]) % 2 + 2) % 2 == 1;
    if (!odd) {
        if (g.m_int)
            return make(pre / 2 * E1 * (b_product(g, g.m) + b_product(g, g.m - 1)), growth, k,
                        "B/diagonal/free/m-int-k-even");
        return make(pre * E1 * b_product(g, R(g.fl_m)), growth, k, "B/diagonal/free/m-half-k-even");
    }
    const R E2 = bd_eta_part(g, eta, -1) * single_sin(eta, den) * single_odd;
    if (g.m_int) return make(pre * E2 * b_odd_product(g, g.m), growth, k, "B/diagonal/free/m-int-k-odd");
    return make(pre / 2 * E2 * (b_odd_product(g, R(g.cl_m)) + b_odd_product(g, R(g.fl_m))), growth, k,
                "B/diagonal/free/m-half-k-odd");
}

AsymEstimate fixed_D(const Geometry& g, StepKind steps, const WalkProblem& pr) {
    require_bd(g);
    const Point& eta = pr.start;
    const Point& lam = *pr.end;
    const int n = g.n;
    const R den = 2 * g.m;
    const R prod = vdm_sin(eta, den) * vdm_sin(lam, den) * plus_sin(eta, den, false) * plus_sin(lam, den, false);
    const R pre = rpow(R(4), static_cast<long long>(n) * n) / rpow(8 * g.m, n);
    if (steps == StepKind::Standard) {
        if (!g.m_int) throw UnsupportedError("D-type fixed-endpoint standard-step asymptotics need integral m");
        require_integer_points(eta, "start");
        require_integer_points(lam, "end");
        const R growth = growth_D_standard(g);
        if (!parity_feasible(pr)) return parity_zero(growth);
        return make(pre * prod, growth, pr.k, "D/standard/fixed");
    }
    const R growth = growth_D_diagonal(g);
    if (!parity_feasible(pr)) return parity_zero(growth);
    return make(pre / 2 * prod, growth, pr.k, "D/diagonal/fixed");
}

AsymEstimate free_D(const Geometry& g, StepKind steps, const Point& eta, int k) {
    require_bd(g);
    const int n = g.n;
    const R F = bd_eta_part(g, eta, -2);
    const R eightmn = rpow(8 * g.m, n);
    const long long nn = static_cast<long long>(n) * n;
    if (steps == StepKind::Standard) {
        require_integer_points(eta, "start");
        const R growth = growth_D_standard(g);
        if (!g.m_int) {
            const R pre = rpow(R(4), nn - n + 1) / eightmn;
            return make(pre * F * d_two_blocks(g, R(g.fl_m)), growth, k, "D/standard/free/m-half");
        }
        const R m = g.m;
        const R pre = rpow(R(4), nn) / (two_pow(n) * eightmn);
        const int sg = sign_pow(static_cast<long long>(g.fl_m) * n + k + int_sum(eta));
        const R total = d_four_blocks(g, m) / two_pow(n - 1) * (1 + R(sg) * d_signed_ratio(g));
        return make(pre * F * total, growth, k, "D/standard/free/m-int");
    }
    const R growth = growth_D_diagonal(g);
    const bool odd = ((k + eta[0]) % 2 + 2) % 2 == 1;
    const R m = g.m;
    if (!odd) {
        if (g.m_int)
            return make(2 * rpow(R(4), nn - n) / eightmn * F * d_four_blocks(g, m), growth, k,
                        "D/diagonal/free/m-int-k-even");
        return make(rpow(R(4), nn - n + 1) / eightmn * F * d_two_blocks(g, R(g.fl_m)), growth, k,
                    "D/diagonal/free/m-half-k-even");
    }
    if (g.m_int)
        return make(2 * rpow(R(4), nn - n + 1) / eightmn * F * d_block(g, m, -1, -1, -1, -1, -1), growth, k,
                    "D/diagonal/free/m-int-k-odd");
    const R h1 = R(1) / 2, h3 = R(3) / 2;
    const R total = d_block(g, m, -h1, -h1, -h1, -h1, -h1) + d_block(g, m, -h3, -h3, -h3, -h3, -h3);
    return make(rpow(R(4), nn - n + 1) / eightmn * F * total, growth, k, "D/diagonal/free/m-half-k-odd");
}

}  // namespace

std::string to_string(AlgebraicFactor f) { return f == AlgebraicFactor::Constant ? "constant" : "k^(-1/2)"; }

Real64 growth_rate(const RegionSpec& region, StepKind steps) {
    validate_region(region);
    const Geometry g(region);
    if (steps == StepKind::PositiveStandard) {
        if (region.family != Family::AlcoveA)
            throw UnsupportedError("positive steps are only defined for the A-type alcove");
        return growth_A_positive(g);
    }
    const bool diag = steps == StepKind::Diagonal;
    switch (region.family) {
        case Family::AlcoveA:
        case Family::CircleM: return diag ? growth_A_diagonal(g) : growth_A_standard(g);
        case Family::AlcoveC: return diag ? growth_C_diagonal(g) : growth_C_standard(g);
        case Family::AlcoveB: require_bd(g); return diag ? growth_B_diagonal(g) : growth_B_standard(g);
        case Family::AlcoveD: require_bd(g); return diag ? growth_D_diagonal(g) : growth_D_standard(g);
    }
    throw UnsupportedError("unknown family");
}

AsymEstimate asym_fixed(const WalkProblem& pr) {
    validate_region(pr.region);
    if (!pr.end) throw ArgumentError("fixed-endpoint estimates need an end point");
    if (pr.k < 0) throw ArgumentError("k must be non-negative");
    if (pr.steps == StepKind::PositiveStandard && pr.region.family != Family::AlcoveA)
        throw UnsupportedError("positive steps are only defined for the A-type alcove");
    const Geometry g(pr.region);
    if (pr.region.family != Family::CircleM) {
        require_in_region(pr.region, pr.start, "start");
        require_in_region(pr.region, *pr.end, "end");
    }
    switch (pr.region.family) {
        case Family::AlcoveA: return fixed_A(g, pr.steps, pr);
        case Family::CircleM: return fixed_circle(g, pr.steps, pr);
        case Family::AlcoveC: return fixed_C(g, pr.steps, pr);
        case Family::AlcoveB: return fixed_B(g, pr.steps, pr);
        case Family::AlcoveD: return fixed_D(g, pr.steps, pr);
    }
    throw UnsupportedError("unknown family");
}

AsymEstimate asym_free(const RegionSpec& region, StepKind steps, const Point& start, int k) {
    validate_region(region);
    if (k < 0) throw ArgumentError("k must be non-negative");
    if (steps == StepKind::PositiveStandard && region.family != Family::AlcoveA)
        throw UnsupportedError("positive steps are only defined for the A-type alcove");
    const Geometry g(region);
    if (region.family != Family::CircleM) require_in_region(region, start, "start");
    switch (region.family) {
        case Family::AlcoveA: return free_A(g, steps, start, k);
        case Family::CircleM: return free_circle(g, steps, start, k);
        case Family::AlcoveC: return free_C(g, steps, start, k);
        case Family::AlcoveB: return free_B(g, steps, start, k);
        case Family::AlcoveD: return free_D(g, steps, start, k);
    }
    throw UnsupportedError("unknown family");
}

}  // namespace alcove
