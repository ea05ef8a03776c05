#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "alcove/core.hpp"

namespace alcove {

using BigCount = boost::multiprecision::mpz_int;

// Ordered so that reports and tests are deterministic.
using EndpointDistribution = std::map<Point, BigCount>;

struct DpOptions {
    std::size_t frontier_cap = 10'000'000;
};

// Exact number of k-step walks start -> end that never leave the region.
BigCount count_dp(const WalkProblem& problem, const DpOptions& opts = {});

// Endpoint histogram of all k-step walks from problem.start.
EndpointDistribution count_dp_free(const WalkProblem& problem, const DpOptions& opts = {});

// Histograms after 0, 1, ..., kmax steps; one DP sweep serves every k.
std::vector<EndpointDistribution> dp_layers(const RegionSpec& region, StepKind steps, const Point& start,
                                            int kmax, const DpOptions& opts = {});

BigCount total(const EndpointDistribution& dist);

// Splits a walk into one position sequence per particle (doubled units).
// Throws ArgumentError if consecutive points are not one legal step apart,
// if a point leaves the region, or if two particles ever collide.
std::vector<std::vector<int>> trajectories_view(const RegionSpec& region, StepKind steps,
                                                const std::vector<Point>& walk);

// Positive-step total times 2^k against the standard-step total, both exact.
bool gleich_check(const RegionSpec& region, const Point& start, int k);

}  // namespace alcove
