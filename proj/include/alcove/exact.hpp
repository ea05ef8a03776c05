#pragma once

#include <memory>
#include <string>
#include <vector>

#include "alcove/core.hpp"
#include "alcove/numeric.hpp"
#include "alcove/oracle.hpp"

namespace alcove {

struct PrecisionPolicy {
    unsigned start_digits = 64;
    unsigned max_digits = 1024;
    double int_tolerance = 1e-9;
};

// One term w * b^k of a count.  For the A-type standard-step formula the
// sum is additionally multiplied by binom(k, (k + |lam| - |eta|)/2).
template <class R>
struct SpectralTerm {
    Complex<R> eigenvalue;
    Complex<R> weight;
};

// Positive steps in the A-type alcove: exact rational evaluation.  The walk
// length is |lam| - |eta|.
BigCount count_A_positive(const Point& eta, const Point& lam, int m2);

// Diagonal steps in the A-type alcove: exact integer evaluation.
BigCount count_A_diagonal(const Point& eta, const Point& lam, int m2, int k);

// Is (family, steps, m) one of the nine spectral combinations whose
// formula holds?  Explains why not through `why` when false.
bool spectral_supported(const RegionSpec& region, StepKind steps, std::string* why = nullptr);

// Certified integer value of the spectral formula for problem.
BigCount count_spectral(const WalkProblem& problem, const PrecisionPolicy& policy = {});

// Dispatches to count_A_positive, count_A_diagonal or count_spectral.
BigCount count_exact(const WalkProblem& problem, const PrecisionPolicy& policy = {});

// Sum of count_exact over every end point a k-step walk from start can
// reach.  The candidate end points are enumerated from the region, so no
// walk is simulated.
BigCount count_exact_free(const RegionSpec& region, StepKind steps, const Point& start, int k,
                          const PrecisionPolicy& policy = {});

// The expanded term list at a fixed working precision (64 digits).
std::vector<SpectralTerm<Real64>> spectral_terms(const WalkProblem& problem);

// The formula as printed, evaluated at `digits` precision without any
// validity check on m and without rounding.  Used to document the
// half-integral circle case, where the printed formula is not a count.
std::pair<std::string, std::string> formula_value(const WalkProblem& problem, unsigned digits = 64);

// Reusable evaluator for one (region, steps): the spectrum and the per-point
// factors are computed once and shared by every (eta, lam, k) query.  Not
// safe for concurrent use of one instance.
class SpectralEngine {
public:
    SpectralEngine(const RegionSpec& region, StepKind steps, PrecisionPolicy policy = {});
    ~SpectralEngine();
    SpectralEngine(SpectralEngine&&) noexcept;
    SpectralEngine& operator=(SpectralEngine&&) noexcept;

    BigCount count(const Point& eta, const Point& lam, int k);
    // Counts for k = 0..kmax, each certified separately.
    std::vector<BigCount> counts(const Point& eta, const Point& lam, int kmax);
    // Digits actually used by the last certified evaluation.
    unsigned last_digits() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace alcove
