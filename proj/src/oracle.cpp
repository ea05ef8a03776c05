#include "alcove/oracle.hpp"

#include <cstdlib>
#include <unordered_map>

namespace alcove {

namespace {

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : p) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

using Frontier = std::unordered_map<Point, BigCount, PointHash>;

void require_start(const RegionSpec& region, StepKind steps, const Point& start) {
    validate_region(region);
    if (steps == StepKind::PositiveStandard && region.family != Family::AlcoveA)
        throw UnsupportedError("positive standard steps are only defined for the A-type alcove");
    if (!in_region(region, start)) throw ArgumentError("start point " + format_point(start) + " is not in the region");
}

EndpointDistribution to_sorted(const Frontier& f) {
    return EndpointDistribution(f.begin(), f.end());
}

}  // namespace

std::vector<EndpointDistribution> dp_layers(const RegionSpec& region, StepKind steps, const Point& start, int kmax,
                                            const DpOptions& opts) {
    require_start(region, steps, start);
    if (kmax < 0) throw ArgumentError("k must be non-negative");
    const auto moves = step_vectors(steps, region.n);
    std::vector<EndpointDistribution> layers;
    Frontier cur;
    cur.emplace(canonical(region, start), BigCount(1));
    layers.push_back(to_sorted(cur));
    Point q(region.n);
    for (int step = 0; step < kmax; ++step) {
        Frontier next;
        next.reserve(cur.size() * 2);
        for (const auto& [p, c] : cur) {
            for (const Point& v : moves) {
                for (int i = 0; i < region.n; ++i) q[i] = p[i] + v[i];
                Point r = canonical(region, q);
                if (!in_region(region, r)) continue;
                next[std::move(r)] += c;
            }
            if (next.size() > opts.frontier_cap)
                throw ResourceError("DP frontier exceeded " + std::to_string(opts.frontier_cap) + " states");
        }
        cur = std::move(next);
        layers.push_back(to_sorted(cur));
    }
    return layers;
}

EndpointDistribution count_dp_free(const WalkProblem& pr, const DpOptions& opts) {
    if (pr.end) throw ArgumentError("free-endpoint count requires the end point to be absent");
    return dp_layers(pr.region, pr.steps, pr.start, pr.k, opts).back();
}

BigCount count_dp(const WalkProblem& pr, const DpOptions& opts) {
    if (!pr.end) throw ArgumentError("count_dp needs an end point");
    require_start(pr.region, pr.steps, pr.start);
    if (!in_region(pr.region, *pr.end)) throw ArgumentError("end point " + format_point(*pr.end) + " is not in the region");
    if (pr.k < 0) throw ArgumentError("k must be non-negative");
    if (!parity_feasible(pr)) return 0;
    const auto layer = dp_layers(pr.region, pr.steps, pr.start, pr.k, opts).back();
    const auto it = layer.find(canonical(pr.region, *pr.end));
    return it == layer.end() ? BigCount(0) : it->second;
}

BigCount total(const EndpointDistribution& dist) {
    BigCount s = 0;
    for (const auto& kv : dist) s += kv.second;
    return s;
}

std::vector<std::vector<int>> trajectories_view(const RegionSpec& region, StepKind steps,
                                                const std::vector<Point>& walk) {
    if (walk.empty()) throw ArgumentError("empty walk");
    const int n = region.n;
    const auto moves = step_vectors(steps, n);
    std::vector<std::vector<int>> traj(n);
    for (std::size_t t = 0; t < walk.size(); ++t) {
        const Point& p = walk[t];
        if (!in_region(region, p)) throw ArgumentError("walk leaves the region at time " + std::to_string(t));
        if (t > 0) {
            Point d(n);
            for (int i = 0; i < n; ++i) d[i] = p[i] - walk[t - 1][i];
            bool legal = false;
            for (const Point& v : moves) {
                bool same = true;
                for (int i = 0; i < n && same; ++i) {
                    int di = d[i];
                    if (region.family == Family::CircleM) {
                        // residues may wrap around the circle
                        di = ((di - v[i]) % region.m2 + region.m2) % region.m2;
                        same = di == 0;
                    } else {
                        same = di == v[i];
                    }
                }
                legal = legal || same;
            }
            if (!legal) throw ArgumentError("illegal step at time " + std::to_string(t));
        }
        for (int i = 0; i < n; ++i) traj[i].push_back(p[i]);

        // Non-collision of the particle picture.
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int a = p[i], b = p[j];
                bool clash = region.family == Family::CircleM ? ((a - b) % region.m2 == 0) : a == b;
                if (clash) throw ArgumentError("particles collide at time " + std::to_string(t));
            }
        if (region.family == Family::AlcoveA && n > 1 && !(p[n - 1] + region.m2 > p[0]))
            throw ArgumentError("shifted bottom particle meets the top one at time " + std::to_string(t));
    }
    return traj;
}

bool gleich_check(const RegionSpec& region, const Point& start, int k) {
    if (region.family != Family::AlcoveA || !region.m_integral())
        throw ArgumentError("the positive/standard comparison needs an A-type alcove with integral m");
    const BigCount pos = total(dp_layers(region, StepKind::PositiveStandard, start, k).back());
    const BigCount std_total = total(dp_layers(region, StepKind::Standard, start, k).back());
    return pos * (BigCount(1) << k) == std_total;
}

}  // namespace alcove
