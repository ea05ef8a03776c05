#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace alcove {

namespace mp = boost::multiprecision;

// Fixed-precision MPFR reals; the precision is part of the type so that
// nothing depends on MPFR's process-wide default precision.
template <unsigned Digits>
using Real = mp::number<mp::mpfr_float_backend<Digits>, mp::et_off>;

using Real64 = Real<64>;

// Precision levels used by the escalation ladder.
inline constexpr unsigned kPrecisionLevels[] = {64, 128, 256, 512, 1024};

template <class R>
struct Complex {
    R re{0};
    R im{0};

    Complex() = default;
    Complex(R r) : re(std::move(r)), im(0) {}
    Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        R r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const R& s) {
        re *= s;
        im *= s;
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        R d = o.re * o.re + o.im * o.im;
        R r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator*(Complex a, const R& s) { return a *= s; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
};

template <class R>
Complex<R> conj(const Complex<R>& z) {
    return Complex<R>(z.re, -z.im);
}

template <class R>
R norm2(const Complex<R>& z) {
    return z.re * z.re + z.im * z.im;
}

template <class R>
R cabs(const Complex<R>& z) {
    return sqrt(norm2(z));
}

template <class R>
Complex<R> cis(const R& theta) {
    return Complex<R>(cos(theta), sin(theta));
}

template <class R>
Complex<R> cpow(Complex<R> base, long long e) {
    if (e < 0) {
        base = Complex<R>(R(1)) / base;
        e = -e;
    }
    Complex<R> acc(R(1));
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

template <class R>
R rpow(R base, long long e) {
    if (e < 0) {
        base = R(1) / base;
        e = -e;
    }
    R acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

template <class R>
const R& pi_value() {
    static const R value = boost::math::constants::pi<R>();
    return value;
}

// Gaussian elimination with partial pivoting; a is consumed.
template <class T, class AbsFn>
T det_inplace(std::vector<std::vector<T>>& a, AbsFn absval) {
    const std::size_t n = a.size();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        auto best = absval(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            auto v = absval(a[r][c]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0) return T(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (absval(a[r][c]) == 0) continue;
            T f = a[r][c] / a[c][c];
            for (std::size_t j = c + 1; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

template <class R>
R det_real(std::vector<std::vector<R>> a) {
    return det_inplace(a, [](const R& x) { return abs(x); });
}

template <class R>
Complex<R> det_complex(std::vector<std::vector<Complex<R>>> a) {
    return det_inplace(a, [](const Complex<R>& z) { return norm2(z); });
}

// e^{2 pi i j / N} for j = 0..N-1, cached per (precision, N).  The cache is
// guarded by a mutex; entries are never removed so references stay valid.
template <class R>
const std::vector<Complex<R>>& roots_of_unity(int N) {
    static std::mutex mu;
    static std::map<int, std::vector<Complex<R>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    std::vector<Complex<R>> v(N);
    const R two_pi_over_n = 2 * pi_value<R>() / N;
    for (int j = 0; j < N; ++j) v[j] = cis<R>(two_pi_over_n * j);
    // Exact values at the quarter turns keep cancellations clean.
    for (int j = 0; j < N; ++j) {
        if ((4LL * j) % N != 0) continue;
        const int q = static_cast<int>((4LL * j) / N);
        v[j] = q == 0 ? Complex<R>(1, 0) : q == 1 ? Complex<R>(0, 1) : q == 2 ? Complex<R>(-1, 0) : Complex<R>(0, -1);
    }
    return cache.emplace(N, std::move(v)).first->second;
}

inline int mod_int(long long a, long long m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

template <class R>
std::string to_decimal(const R& x, int digits) {
    return x.str(digits, std::ios_base::scientific);
}

}  // namespace alcove
