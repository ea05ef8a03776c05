#pragma once

#include <string>

#include "alcove/core.hpp"
#include "alcove/numeric.hpp"

namespace alcove {

enum class AlgebraicFactor { Constant, InvSqrtK };
enum class EndpointMode { Fixed, Free };

struct AsymEstimate {
    Real64 value{0};
    Real64 growth_rate{0};
    AlgebraicFactor algebraic_factor = AlgebraicFactor::Constant;
    // Names the walk family and branch, e.g. "C/standard/free/m-even-n-odd";
    // "parity-zero" when k violates the congruence the estimate needs.
    std::string case_label;
};

// Base of the exponential growth of the walk counts for (region, steps).
Real64 growth_rate(const RegionSpec& region, StepKind steps);

// Leading-order estimate of the number of k-step walks start -> end.
AsymEstimate asym_fixed(const WalkProblem& problem);

// Leading-order estimate of the number of all k-step walks from start.
// A-type standard steps are covered through the identity
// (standard total) = 2^k (positive total).
AsymEstimate asym_free(const RegionSpec& region, StepKind steps, const Point& start, int k);

std::string to_string(AlgebraicFactor f);

}  // namespace alcove
