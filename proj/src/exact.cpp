#include "alcove/exact.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <tuple>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace alcove {

using Rational = mp::mpq_rational;

// ---------------------------------------------------------------------------
// Exact rational routes

namespace {

Rational det_rational(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

BigCount factorial(long long n) {
    BigCount f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

BigCount binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigCount b = 1;
    for (long long i = 1; i <= r; ++i) {
        b *= n - r + i;
        b /= i;
    }
    return b;
}

// Calls fn(ks) for every integer vector with |ks_h| <= bound and sum zero.
void for_each_zero_sum(int n, long long bound, const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> ks(n, 0);
    std::function<void(int, long long)> rec = [&](int i, long long partial) {
        if (i == n - 1) {
            ks[i] = -partial;
            if (std::llabs(ks[i]) <= bound) fn(ks);
            return;
        }
        for (long long v = -bound; v <= bound; ++v) {
            ks[i] = v;
            rec(i + 1, partial + v);
        }
    };
    rec(0, 0);
}

BigCount to_count(const Rational& q, const char* what) {
    if (denominator(q) != 1) throw PrecisionError(std::string(what) + ": non-integral value " + q.str());
    BigCount z = numerator(q);
    if (z < 0) throw PrecisionError(std::string(what) + ": negative value " + z.str());
    return z;
}

void require_points(const RegionSpec& region, const Point& eta, const Point& lam) {
    validate_region(region);
    if (!in_region(region, eta)) throw ArgumentError("start point " + format_point(eta) + " is not in the region");
    if (!in_region(region, lam)) throw ArgumentError("end point " + format_point(lam) + " is not in the region");
}

}  // namespace

BigCount count_A_positive(const Point& eta, const Point& lam, int m2) {
    if (m2 % 2 != 0) throw UnsupportedError("positive-step formula needs integral m");
    require_points({Family::AlcoveA, static_cast<int>(eta.size()), m2}, eta, lam);
    for (int v : eta)
        if (v % 2 != 0) throw ArgumentError("positive steps need integer points");
    const int n = static_cast<int>(eta.size());
    const long long m = m2 / 2;
    const long long d = (abs_sum(lam) - abs_sum(eta)) / 2;
    if (d < 0) return 0;
    long long spread = 0;
    for (int t = 0; t < n; ++t)
        for (int h = 0; h < n; ++h) spread = std::max(spread, std::llabs((lam[t] - eta[h]) / 2));
    const long long bound = (d + spread) / m + 1;

    std::vector<Rational> inv_fact(d + 1);
    {
        BigCount f = 1;
        for (long long a = 0; a <= d; ++a) {
            if (a > 0) f *= a;
            inv_fact[a] = Rational(BigCount(1), f);
        }
    }
    Rational sum = 0;
    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n));
    for_each_zero_sum(n, bound, [&](const std::vector<long long>& ks) {
        for (int h = 0; h < n; ++h) {
            bool any = false;
            for (int t = 0; t < n; ++t) {
                // Arguments above d can only pair with a negative one in any
                // surviving permutation, so they are zeroed as well.
                long long a = (lam[t] - eta[h]) / 2 + m * ks[h];
                mat[h][t] = (a < 0 || a > d) ? Rational(0) : inv_fact[a];
                any = any || mat[h][t] != 0;
            }
            if (!any) return;
        }
        sum += det_rational(mat);
    });
    return to_count(sum * Rational(factorial(d)), "positive-step formula");
}

BigCount count_A_diagonal(const Point& eta, const Point& lam, int m2, int k) {
    if (m2 % 2 != 0) throw UnsupportedError("the A-type diagonal formula holds only for integral m");
    require_points({Family::AlcoveA, static_cast<int>(eta.size()), m2}, eta, lam);
    if (k < 0) throw ArgumentError("k must be non-negative");
    const int n = static_cast<int>(eta.size());
    WalkProblem pr{{Family::AlcoveA, n, m2}, StepKind::Diagonal, eta, lam, k, {}};
    if (!parity_feasible(pr)) return 0;
    const long long m = m2 / 2;
    long long spread = 0;
    for (int t = 0; t < n; ++t)
        for (int h = 0; h < n; ++h) spread = std::max(spread, std::llabs(lam[t] - eta[h]));
    // |m k_h| <= k/2 + max|lam_t - eta_h|, in doubled units.
    const long long bound = (k + spread) / (2 * m) + 1;

    std::vector<BigCount> binom_row(k + 1);
    for (int a = 0; a <= k; ++a) binom_row[a] = binomial(k, a);

    Rational sum = 0;
    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n));
    for_each_zero_sum(n, bound, [&](const std::vector<long long>& ks) {
        for (int h = 0; h < n; ++h) {
            bool any = false;
            for (int t = 0; t < n; ++t) {
                long long a = (k + lam[t] - eta[h]) / 2 + m * ks[h];
                mat[h][t] = (a < 0 || a > k) ? Rational(0) : Rational(binom_row[a]);
                any = any || mat[h][t] != 0;
            }
            if (!any) return;
        }
        sum += det_rational(mat);
    });
    return to_count(sum, "diagonal formula");
}

// ---------------------------------------------------------------------------
// Spectral route

namespace {

enum class Trig { Sin, Cos, Exp };
enum class EigenKind { SumTwoCos, ProdTwoCos, AbsW };

// One determinant of the printed formula, expanded by multilinearity into a
// sum over n-element subsets S of the r-range:
//   coeff * sum_S det(g(r_j, eta_h)) det(f(r_j, lam_t)) * b_S^k.
template <class R>
struct Block {
    Complex<R> coeff;
    int N = 1;                       // angles are multiples of 2 pi / N
    std::vector<long long> amult;    // point angle index = amult[r] * x2
    std::vector<long long> emult;    // eigenvalue angle index per r
    Trig trig = Trig::Sin;
    EigenKind eig_kind = EigenKind::SumTwoCos;
    std::vector<std::vector<int>> subsets;
    std::vector<Complex<R>> eig;
    std::vector<R> eig_abs;
    std::vector<Complex<R>> phase;   // W/|W| for the A-type formula
    std::map<Point, std::vector<Complex<R>>> gcache, fcache;
};

std::vector<std::vector<int>> all_subsets(int range, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int r = from; r < range; ++r) {
            cur.push_back(r);
            rec(r + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

template <class R>
void finish_block(Block<R>& b, int n) {
    const auto& roots = roots_of_unity<R>(b.N);
    const int range = static_cast<int>(b.amult.size());
    b.subsets = all_subsets(range, n);
    for (const auto& S : b.subsets) {
        Complex<R> e;
        if (b.eig_kind == EigenKind::SumTwoCos) {
            R s = 0;
            for (int r : S) s += 2 * roots[mod_int(b.emult[r], b.N)].re;
            e = Complex<R>(s);
        } else if (b.eig_kind == EigenKind::ProdTwoCos) {
            R p = 1;
            for (int r : S) p *= 2 * roots[mod_int(b.emult[r], b.N)].re;
            e = Complex<R>(p);
        } else {
            Complex<R> w;
            for (int r : S) w += roots[mod_int(b.emult[r], b.N)];
            R a = cabs(w);
            e = Complex<R>(a);
            b.phase.push_back(a == 0 ? Complex<R>(0) : w * (R(1) / a));
        }
        b.eig_abs.push_back(cabs(e));
        b.eig.push_back(std::move(e));
    }
}

template <class R>
Complex<R> point_factor(const Block<R>& b, int r, int x2, int sign) {
    const auto& roots = roots_of_unity<R>(b.N);
    // sin and cos factors are real and need no conjugation on the lam side
    if (b.trig != Trig::Exp) sign = 1;
    const Complex<R>& z = roots[mod_int(sign * b.amult[r] * x2, b.N)];
    switch (b.trig) {
        case Trig::Sin: return Complex<R>(z.im);
        case Trig::Cos: return Complex<R>(z.re);
        case Trig::Exp: return z;
    }
    return z;
}

template <class R>
const std::vector<Complex<R>>& side_dets(Block<R>& b, const Point& x, int sign) {
    auto& cache = sign > 0 ? b.gcache : b.fcache;
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
    const int n = static_cast<int>(x.size());
    const int range = static_cast<int>(b.amult.size());
    // factor[r][h]
    std::vector<std::vector<Complex<R>>> factor(range, std::vector<Complex<R>>(n));
    for (int r = 0; r < range; ++r)
        for (int h = 0; h < n; ++h) factor[r][h] = point_factor(b, r, x[h], sign);
    std::vector<Complex<R>> out;
    out.reserve(b.subsets.size());
    std::vector<std::vector<Complex<R>>> mat(n, std::vector<Complex<R>>(n));
    for (const auto& S : b.subsets) {
        for (int h = 0; h < n; ++h)
            for (int j = 0; j < n; ++j) mat[h][j] = factor[S[j]][h];
        out.push_back(det_complex(mat));
    }
    return cache.emplace(x, std::move(out)).first->second;
}

// Builds the blocks of the printed formula for (region, steps).  For the
// circle the blocks depend on the arrival class s, hence the argument.
template <class R>
std::vector<Block<R>> make_blocks(const RegionSpec& reg, StepKind steps, int s) {
    const int n = reg.n;
    const int m2 = reg.m2;
    const R m = R(m2) / 2;
    const R inv_mn = 1 / rpow(m, n);
    std::vector<Block<R>> out;
    const bool diag = steps == StepKind::Diagonal;

    if (reg.family == Family::AlcoveC || reg.family == Family::AlcoveB || reg.family == Family::AlcoveD) {
        std::vector<std::pair<Trig, bool>> parts;  // (trig, shifted)
        R share = 1;
        if (reg.family == Family::AlcoveC) {
            parts = {{Trig::Sin, false}};
        } else if (reg.family == Family::AlcoveB) {
            parts = {{Trig::Sin, false}, {Trig::Sin, true}};
            share = R(1) / 2;
        } else {
            parts = {{Trig::Sin, false}, {Trig::Sin, true}, {Trig::Cos, false}, {Trig::Cos, true}};
            share = R(1) / 4;
        }
        for (auto [trig, shifted] : parts) {
            Block<R> b;
            b.N = 4 * m2;
            b.trig = trig;
            // standard: r < 2m; diagonal: r < 4m
            const int range = diag ? 2 * m2 : m2;
            for (int r = 0; r < range; ++r) {
                // sin(pi r x / m) -> index 2 r x2; shifted sin(pi (2r+1) x / 2m) -> (2r+1) x2
                b.amult.push_back(shifted ? 2 * r + 1 : 2 * r);
                if (diag)
                    b.emult.push_back(shifted ? 2 * r + 1 : 2 * r);  // cos(pi r / 2m), cos(pi (2r+1) / 4m)
                else
                    b.emult.push_back(shifted ? 2 * (2 * r + 1) : 4 * r);  // cos(pi r / m), cos(pi (2r+1) / 2m)
            }
            b.eig_kind = diag ? EigenKind::ProdTwoCos : EigenKind::SumTwoCos;
            R c = share * inv_mn;
            if (diag) c /= rpow(R(2), n);  // (2^{k-1})^n = 2^{-n} (2^n)^k
            b.coeff = Complex<R>(c);
            finish_block(b, n);
            out.push_back(std::move(b));
        }
        return out;
    }

    if (reg.family == Family::CircleM) {
        const int N = m2 * n;
        const auto& roots = roots_of_unity<R>(N);
        const int range = diag ? m2 : m2 / 2;  // r < 2m or r < m
        for (int u = 0; u < n; ++u) {
            Block<R> b;
            b.N = N;
            b.trig = Trig::Exp;
            for (int r = 0; r < range; ++r) {
                const long long ur = u + static_cast<long long>(n) * r;
                b.amult.push_back(ur);  // e^{2 pi i (u+nr) x / mn} -> index (u+nr) x2
                b.emult.push_back(diag ? ur : 2 * ur);
            }
            b.eig_kind = diag ? EigenKind::ProdTwoCos : EigenKind::SumTwoCos;
            Complex<R> c = roots[mod_int(-static_cast<long long>(u) * s * m2, N)];
            R scale = inv_mn / n;
            if (diag) scale /= rpow(R(2), n);
            b.coeff = c * scale;
            finish_block(b, n);
            out.push_back(std::move(b));
        }
        return out;
    }

    // A-type, standard steps: omega = e^{2 pi i / m}, omega^{r x} -> index r x2 / 2
    // in a table of size m; the half is absorbed by using N = m2 and index r x2.
    Block<R> b;
    b.N = m2;
    b.trig = Trig::Exp;
    for (int r = 0; r < m2 / 2; ++r) {
        b.amult.push_back(r);
        b.emult.push_back(2 * r);
    }
    b.eig_kind = EigenKind::AbsW;
    b.coeff = Complex<R>(inv_mn);
    finish_block(b, n);
    out.push_back(std::move(b));
    return out;
}

template <class R>
struct Merged {
    Complex<R> eigenvalue;
    Complex<R> weight;
    R abs_weight;  // sum of |w| over the merged terms, for the error bound
};

template <class R>
struct Prepared {
    Point eta, lam;
    int s = -1;
    std::vector<Merged<R>> terms;
};

template <class R>
struct Model {
    RegionSpec region;
    StepKind steps;
    std::map<int, std::vector<Block<R>>> by_shift;  // s -> blocks
    Prepared<R> last;  // terms of the most recent (eta, lam, s)

    std::vector<Block<R>>& blocks(int s) {
        auto it = by_shift.find(s);
        if (it == by_shift.end()) it = by_shift.emplace(s, make_blocks<R>(region, steps, s)).first;
        return it->second;
    }
};

template <class R>
struct Evaluation {
    Complex<R> value;
    R bound;
};

template <class R>
std::vector<SpectralTerm<R>> collect_terms(Model<R>& model, const Point& eta, const Point& lam, int s, unsigned digits) {
    const long long d = (abs_sum(lam) - abs_sum(eta)) / 2;
    const R drop = pow(R(10), -static_cast<int>(digits) / 2);
    std::vector<SpectralTerm<R>> terms;
    for (auto& b : model.blocks(s)) {
        const auto& G = side_dets(b, eta, +1);
        const auto& F = side_dets(b, lam, -1);
        for (std::size_t i = 0; i < b.subsets.size(); ++i) {
            Complex<R> w = b.coeff * G[i] * F[i];
            if (b.eig_kind == EigenKind::AbsW) {
                if (b.eig_abs[i] == 0) {
                    if (d != 0) continue;  // W^a conj(W)^b with a or b positive
                } else {
                    w *= cpow(b.phase[i], d);
                }
            }
            if (cabs(w) < drop) continue;
            terms.push_back({b.eig[i], std::move(w)});
        }
    }
    return terms;
}

// Terms sharing an eigenvalue are combined, so that each power b^k is
// computed once.  Every eigenvalue produced by make_blocks is real.
template <class R>
const std::vector<Merged<R>>& merged_terms(Model<R>& model, const Point& eta, const Point& lam, int s,
                                           unsigned digits) {
    Prepared<R>& p = model.last;
    if (p.s == s && p.eta == eta && p.lam == lam) return p.terms;
    auto raw = collect_terms(model, eta, lam, s, digits);
    std::sort(raw.begin(), raw.end(), [](const SpectralTerm<R>& a, const SpectralTerm<R>& b) {
        return a.eigenvalue.re < b.eigenvalue.re;
    });
    const R same = pow(R(10), -static_cast<int>(digits) / 2);
    std::vector<Merged<R>> out;
    for (auto& t : raw) {
        if (!out.empty() && abs(out.back().eigenvalue.re - t.eigenvalue.re) < same &&
            abs(out.back().eigenvalue.im - t.eigenvalue.im) < same) {
            out.back().weight += t.weight;
            out.back().abs_weight += cabs(t.weight);
        } else {
            R a = cabs(t.weight);
            out.push_back({t.eigenvalue, t.weight, a});
        }
    }
    p.eta = eta;
    p.lam = lam;
    p.s = s;
    p.terms = std::move(out);
    return p.terms;
}

template <class R>
Evaluation<R> evaluate_terms(const std::vector<Merged<R>>& terms, int k, bool a_std, long long d) {
    Evaluation<R> ev{Complex<R>(0), R(0)};
    for (const auto& t : terms) {
        if (t.eigenvalue.im == 0) {
            const R p = rpow(t.eigenvalue.re, k);
            ev.value += t.weight * p;
            ev.bound += t.abs_weight * abs(p);
        } else {
            Complex<R> p = cpow(t.eigenvalue, k);
            ev.value += t.weight * p;
            ev.bound += t.abs_weight * cabs(p);
        }
    }
    if (a_std) {
        if ((k + d) % 2 != 0 || std::llabs(d) > k) return {Complex<R>(0), R(0)};
        const BigCount bc = binomial(k, (k + d) / 2);
        const R factor(bc.str());
        ev.value *= factor;
        ev.bound *= factor;
    }
    return ev;
}

// Values for every k = 0..kmax in one pass over the terms.
template <class R>
std::vector<Evaluation<R>> evaluate_range(const std::vector<Merged<R>>& terms, int kmax, bool a_std, long long d) {
    std::vector<Evaluation<R>> out(kmax + 1, Evaluation<R>{Complex<R>(0), R(0)});
    for (const auto& t : terms) {
        if (t.eigenvalue.im == 0) {
            R p = 1;
            for (int k = 0; k <= kmax; ++k) {
                out[k].value += t.weight * p;
                out[k].bound += t.abs_weight * abs(p);
                p *= t.eigenvalue.re;
            }
        } else {
            Complex<R> p(R(1));
            for (int k = 0; k <= kmax; ++k) {
                out[k].value += t.weight * p;
                out[k].bound += t.abs_weight * cabs(p);
                p *= t.eigenvalue;
            }
        }
    }
    if (a_std) {
        for (int k = 0; k <= kmax; ++k) {
            if ((k + d) % 2 != 0 || std::llabs(d) > k) {
                out[k] = {Complex<R>(0), R(0)};
                continue;
            }
            const R factor(binomial(k, (k + d) / 2).str());
            out[k].value *= factor;
            out[k].bound *= factor;
        }
    }
    return out;
}

template <class R>
std::optional<BigCount> certify(const Evaluation<R>& ev, unsigned digits, double tol) {
    const R guard = pow(R(10), static_cast<int>(digits) - 12);
    if (ev.bound > guard) return std::nullopt;
    const R t(tol);
    if (abs(ev.value.im) >= t) return std::nullopt;
    const R rounded = round(ev.value.re);
    if (abs(ev.value.re - rounded) >= t) return std::nullopt;
    std::string s = rounded.str(0, std::ios_base::fixed);
    const auto dot = s.find('.');
    if (dot != std::string::npos) s.erase(dot);
    if (s == "-0") s = "0";
    BigCount z(s);
    if (z < 0) throw PrecisionError("spectral formula produced the negative value " + s);
    return z;
}

int circle_class(const RegionSpec& region, const Point& lam, const std::optional<int>& given) {
    if (region.family != Family::CircleM) return 0;
    const auto s = circle_shift(lam);
    if (!s) throw ArgumentError("end point " + format_point(lam) + " is not a cyclic rotation of a decreasing vector");
    if (given && *given != *s)
        throw ArgumentError("circle_shift_s=" + std::to_string(*given) + " does not match the end point (s=" +
                            std::to_string(*s) + ")");
    return *s;
}

}  // namespace

bool spectral_supported(const RegionSpec& reg, StepKind steps, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (steps == StepKind::PositiveStandard) return fail("positive steps use the rational formula, not the spectral one");
    switch (reg.family) {
        case Family::AlcoveA:
            if (steps == StepKind::Diagonal) return fail("A-type diagonal steps use the binomial formula");
            if (!reg.m_integral()) return fail("A-type standard-step formula needs integral m");
            return true;
        case Family::CircleM:
            if (!reg.m_integral()) return fail("circle formulas are counts only for integral m");
            return true;
        case Family::AlcoveC:
            if (steps == StepKind::Standard && !reg.m_integral()) return fail("C-type standard-step formula needs integral m");
            return true;
        case Family::AlcoveB:
        case Family::AlcoveD:
            if (reg.n < 2) return fail("B- and D-type alcoves need n >= 2");
            return true;
    }
    return fail("unknown family");
}

struct SpectralEngine::Impl {
    RegionSpec region;
    StepKind steps;
    PrecisionPolicy policy;
    unsigned last = 0;
    std::unique_ptr<Model<Real<64>>> m64;
    std::unique_ptr<Model<Real<128>>> m128;
    std::unique_ptr<Model<Real<256>>> m256;
    std::unique_ptr<Model<Real<512>>> m512;
    std::unique_ptr<Model<Real<1024>>> m1024;

    template <class R>
    Model<R>& model(std::unique_ptr<Model<R>>& slot) {
        if (!slot) slot.reset(new Model<R>{region, steps, {}, {}});
        return *slot;
    }

    template <unsigned D>
    std::optional<BigCount> attempt(std::unique_ptr<Model<Real<D>>>& slot, const Point& eta, const Point& lam, int s,
                                    int k) {
        auto& mdl = model(slot);
        const auto& terms = merged_terms(mdl, eta, lam, s, D);
        const long long d = (abs_sum(lam) - abs_sum(eta)) / 2;
        const bool a_std = region.family == Family::AlcoveA;
        return certify(evaluate_terms(terms, k, a_std, d), D, policy.int_tolerance);
    }

    template <unsigned D>
    void attempt_range(std::unique_ptr<Model<Real<D>>>& slot, const Point& eta, const Point& lam, int s,
                       std::vector<std::optional<BigCount>>& out) {
        auto& mdl = model(slot);
        const auto& terms = merged_terms(mdl, eta, lam, s, D);
        const long long d = (abs_sum(lam) - abs_sum(eta)) / 2;
        const bool a_std = region.family == Family::AlcoveA;
        const auto evs = evaluate_range(terms, static_cast<int>(out.size()) - 1, a_std, d);
        for (std::size_t k = 0; k < out.size(); ++k)
            if (!out[k]) out[k] = certify(evs[k], D, policy.int_tolerance);
    }

    std::vector<BigCount> counts(const Point& eta, const Point& lam, int s, int kmax) {
        std::vector<std::optional<BigCount>> res(kmax + 1);
        if (region.family == Family::AlcoveA) res[0] = BigCount(eta == lam ? 1 : 0);
        auto done = [&] {
            for (const auto& r : res)
                if (!r) return false;
            return true;
        };
        for (unsigned D : kPrecisionLevels) {
            if (done()) break;
            if (D < policy.start_digits && D != 1024) continue;
            if (D > policy.max_digits) break;
            switch (D) {
                case 64: attempt_range<64>(m64, eta, lam, s, res); break;
                case 128: attempt_range<128>(m128, eta, lam, s, res); break;
                case 256: attempt_range<256>(m256, eta, lam, s, res); break;
                case 512: attempt_range<512>(m512, eta, lam, s, res); break;
                default: attempt_range<1024>(m1024, eta, lam, s, res); break;
            }
            last = D;
        }
        if (!done())
            throw PrecisionError("spectral count not certified within " + std::to_string(policy.max_digits) + " digits");
        std::vector<BigCount> out;
        for (auto& r : res) out.push_back(std::move(*r));
        return out;
    }

    BigCount count(const Point& eta, const Point& lam, int s, int k) {
        if (region.family == Family::AlcoveA && k == 0) return eta == lam ? 1 : 0;
        for (unsigned D : kPrecisionLevels) {
            if (D < policy.start_digits && D != 1024) continue;
            if (D > policy.max_digits) break;
            std::optional<BigCount> r;
            switch (D) {
                case 64: r = attempt<64>(m64, eta, lam, s, k); break;
                case 128: r = attempt<128>(m128, eta, lam, s, k); break;
                case 256: r = attempt<256>(m256, eta, lam, s, k); break;
                case 512: r = attempt<512>(m512, eta, lam, s, k); break;
                default: r = attempt<1024>(m1024, eta, lam, s, k); break;
            }
            if (r) {
                last = D;
                return *r;
            }
        }
        throw PrecisionError("spectral count not certified within " + std::to_string(policy.max_digits) + " digits");
    }
};

SpectralEngine::SpectralEngine(const RegionSpec& region, StepKind steps, PrecisionPolicy policy)
    : impl_(std::make_unique<Impl>()) {
    validate_region(region);
    std::string why;
    if (!spectral_supported(region, steps, &why)) throw UnsupportedError(why);
    impl_->region = region;
    impl_->steps = steps;
    impl_->policy = policy;
}
SpectralEngine::~SpectralEngine() = default;
SpectralEngine::SpectralEngine(SpectralEngine&&) noexcept = default;
SpectralEngine& SpectralEngine::operator=(SpectralEngine&&) noexcept = default;

BigCount SpectralEngine::count(const Point& eta, const Point& lam, int k) {
    require_points(impl_->region, eta, lam);
    if (k < 0) throw ArgumentError("k must be non-negative");
    const int s = circle_class(impl_->region, lam, std::nullopt);
    return impl_->count(eta, lam, s, k);
}

std::vector<BigCount> SpectralEngine::counts(const Point& eta, const Point& lam, int kmax) {
    require_points(impl_->region, eta, lam);
    if (kmax < 0) throw ArgumentError("kmax must be non-negative");
    const int s = circle_class(impl_->region, lam, std::nullopt);
    return impl_->counts(eta, lam, s, kmax);
}

unsigned SpectralEngine::last_digits() const { return impl_->last; }

namespace {
void check_problem(const WalkProblem& pr) {
    if (!pr.end) throw ArgumentError("exact counts need an end point");
    if (pr.k < 0) throw ArgumentError("k must be non-negative");
    if (pr.steps != StepKind::Diagonal)
        for (const Point* p : {&pr.start, &*pr.end})
            for (int v : *p)
                if (v % 2 != 0) throw ArgumentError("standard steps need integer points");
    if (pr.region.family == Family::CircleM) {
        for (int i = 0; i + 1 < pr.region.n; ++i)
            if (!(pr.start[i] > pr.start[i + 1]))
                throw ArgumentError("circle start point must satisfy m > eta_1 > ... > eta_n >= 0");
        for (const Point* p : {&pr.start, &*pr.end})
            for (int v : *p)
                if (v < 0 || v >= pr.region.m2) throw ArgumentError("circle coordinates must lie in [0, m)");
    }
}
}  // namespace

BigCount count_spectral(const WalkProblem& pr, const PrecisionPolicy& policy) {
    check_problem(pr);
    SpectralEngine engine(pr.region, pr.steps, policy);
    require_points(pr.region, pr.start, *pr.end);
    const int s = circle_class(pr.region, *pr.end, pr.circle_shift_s);
    (void)s;
    return engine.count(pr.start, *pr.end, pr.k);
}

BigCount count_exact(const WalkProblem& pr, const PrecisionPolicy& policy) {
    if (!pr.end) throw ArgumentError("exact counts need an end point");
    if (pr.region.family == Family::AlcoveA && pr.steps == StepKind::PositiveStandard) {
        if (!parity_feasible(pr)) {
            require_points(pr.region, pr.start, *pr.end);
            return 0;
        }
        return count_A_positive(pr.start, *pr.end, pr.region.m2);
    }
    if (pr.region.family == Family::AlcoveA && pr.steps == StepKind::Diagonal)
        return count_A_diagonal(pr.start, *pr.end, pr.region.m2, pr.k);
    return count_spectral(pr, policy);
}

namespace {
// Translates of the A-type representatives (x_n = 0 or 1/2) whose
// coordinate sum differs from |start| by at most the reach of k steps.
std::vector<Point> a_type_endpoints(const RegionSpec& reg, StepKind steps, const Point& start, int k) {
    const int n = reg.n;
    const int parity = steps == StepKind::Diagonal ? mod_int(start[0] + k, 2) : 0;
    const long long s0 = abs_sum(start);
    // doubled reach of the coordinate sum
    const long long reach = steps == StepKind::Diagonal ? static_cast<long long>(n) * k : 2LL * k;
    std::vector<Point> out;
    for (const Point& rep : enumerate_points(reg, parity)) {
        if (rep[n - 1] > 1) continue;  // one representative per translation class
        const long long base = abs_sum(rep);
        // shift by c (doubled 2c per coordinate) changes the sum by 2 c n
        const long long lo = (s0 - reach - base) / (2LL * n) - 1;
        const long long hi = (s0 + reach - base) / (2LL * n) + 1;
        for (long long c = lo; c <= hi; ++c) {
            const long long sum = base + 2 * c * n;
            if (std::llabs(sum - s0) > reach) continue;
            if (steps == StepKind::PositiveStandard && sum - s0 != 2LL * k) continue;
            Point p = rep;
            for (int& v : p) v += static_cast<int>(2 * c);
            out.push_back(std::move(p));
        }
    }
    return out;
}
}  // namespace

BigCount count_exact_free(const RegionSpec& reg, StepKind steps, const Point& start, int k,
                          const PrecisionPolicy& policy) {
    validate_region(reg);
    if (k < 0) throw ArgumentError("k must be non-negative");
    if (!in_region(reg, start)) throw ArgumentError("start point " + format_point(start) + " is not in the region");
    std::vector<Point> ends;
    if (reg.family == Family::AlcoveA) {
        ends = a_type_endpoints(reg, steps, start, k);
    } else {
        if (steps != StepKind::Diagonal) {
            ends = enumerate_points(reg, 0);
        } else if (reg.family == Family::CircleM && reg.m2 % 2 != 0) {
            ends = enumerate_points(reg, 0);
            for (Point& p : enumerate_points(reg, 1)) ends.push_back(std::move(p));
        } else {
            ends = enumerate_points(reg, mod_int(start[0] + k, 2));
        }
    }
    BigCount total = 0;
    const bool spectral = spectral_supported(reg, steps);
    std::unique_ptr<SpectralEngine> engine;
    if (spectral) engine = std::make_unique<SpectralEngine>(reg, steps, policy);
    for (const Point& lam : ends) {
        WalkProblem pr{reg, steps, start, lam, k, std::nullopt};
        if (!parity_feasible(pr)) continue;
        total += spectral ? engine->count(start, lam, k) : count_exact(pr, policy);
    }
    return total;
}

std::vector<SpectralTerm<Real64>> spectral_terms(const WalkProblem& pr) {
    check_problem(pr);
    std::string why;
    if (!spectral_supported(pr.region, pr.steps, &why)) throw UnsupportedError(why);
    require_points(pr.region, pr.start, *pr.end);
    const int s = circle_class(pr.region, *pr.end, pr.circle_shift_s);
    Model<Real64> model{pr.region, pr.steps, {}, {}};
    std::vector<SpectralTerm<Real64>> out;
    for (const auto& t : merged_terms(model, pr.start, *pr.end, s, 64)) out.push_back({t.eigenvalue, t.weight});
    return out;
}

namespace {
template <unsigned D>
std::pair<std::string, std::string> raw_value(const WalkProblem& pr) {
    using R = Real<D>;
    Model<R> model{pr.region, pr.steps, {}, {}};
    const int s = circle_class(pr.region, *pr.end, pr.circle_shift_s);
    const auto& terms = merged_terms(model, pr.start, *pr.end, s, D);
    const long long d = (abs_sum(*pr.end) - abs_sum(pr.start)) / 2;
    const auto ev = evaluate_terms(terms, pr.k, pr.region.family == Family::AlcoveA, d);
    return {ev.value.re.str(30), ev.value.im.str(30)};
}
}  // namespace

std::pair<std::string, std::string> formula_value(const WalkProblem& pr, unsigned digits) {
    check_problem(pr);
    if (pr.steps == StepKind::PositiveStandard || (pr.region.family == Family::AlcoveA && pr.steps == StepKind::Diagonal))
        throw UnsupportedError("formula_value covers the spectral formulas only");
    if ((pr.region.family == Family::AlcoveB || pr.region.family == Family::AlcoveD) && pr.region.n < 2)
        throw UnsupportedError("B- and D-type alcoves need n >= 2");
    if (digits <= 64) return raw_value<64>(pr);
    if (digits <= 128) return raw_value<128>(pr);
    return raw_value<256>(pr);
}

}  // namespace alcove
