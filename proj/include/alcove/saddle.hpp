#pragma once

#include <vector>

#include "alcove/core.hpp"
#include "alcove/numeric.hpp"

namespace alcove {

// Largest k accepted by exact_coeff; the coefficient arrays grow like n*k.
inline constexpr int kSaddleMaxK = 4096;

// Coefficient of z^(d + n k / 2) in prod_j (1 + w^(r_j) z)^k, w = e^(2 pi i / m).
struct SaddleProblem {
    int m = 1;
    std::vector<int> rs;  // strictly increasing, in [0, m)
    int d2 = 0;           // twice d
    int k = 0;

    int n() const { return static_cast<int>(rs.size()); }
};

struct SaddleSolution {
    std::vector<Real64> thetas;       // one root of sum tan(pi (t + r_j) / m) per pole interval, in [0, m)
    Real64 C;                         // max over theta of prod 2 |cos(pi (theta + r_j) / m)|
    std::vector<Real64> maximizers;   // thetas attaining C
    std::vector<Real64> c0_values;    // sum (2 cos(pi (theta + r_j) / m))^-2 at each maximizer
    std::vector<int> epsilon_signs;   // sign of prod cos at each maximizer
};

struct SaddleEstimate {
    Complex<Real64> value;
    // The maximizer sum cancels; only "smaller than C^k" is known.
    bool subexponential = false;
};

// Throws ArgumentError for invalid m or rs.
void validate_saddle_rs(int m, const std::vector<int>& rs);

// Throws PrecisionError if a bisection interval shows no sign change.
SaddleSolution solve_saddle(int m, const std::vector<int>& rs);

// Saddle point estimate C^k / sqrt(2 pi k) * sum_l eps_l^k w^(k/2 sum r - d theta_l) / sqrt(c0_l).
// The value is complex in general; it is real when the maximizers pair up.
SaddleEstimate approx_coeff(const SaddleProblem& problem);
SaddleEstimate approx_coeff(const SaddleProblem& problem, const SaddleSolution& solution);

// Exact coefficient.  The product is expanded over Z[w], reduced modulo the
// m-th cyclotomic polynomial and then evaluated with increasing precision
// until the rounding bound is below 1e-12 relative.  Coefficients of degree
// outside [0, n k] are 0.  Throws ResourceError for k > kSaddleMaxK and
// PrecisionError if 8192 digits do not suffice.
Complex<Real64> exact_coeff(const SaddleProblem& problem, unsigned* digits_used = nullptr);

}  // namespace alcove
