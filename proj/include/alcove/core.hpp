#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

// Every coordinate, every m and every step is stored doubled so that
// half-integers stay exact: the mathematical point (5/2, 1/2) is {5, 1}.

enum class Family { AlcoveA, AlcoveB, AlcoveC, AlcoveD, CircleM };
enum class StepKind { PositiveStandard, Standard, Diagonal };

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedError : std::logic_error {
    using std::logic_error::logic_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegionSpec {
    Family family = Family::AlcoveA;
    int n = 1;
    int m2 = 2;  // twice m

    bool m_integral() const { return m2 % 2 == 0; }
    bool operator==(const RegionSpec&) const = default;
};

using Point = std::vector<int>;  // doubled coordinates

struct StepSet {
    StepKind kind = StepKind::Standard;
};

struct WalkProblem {
    RegionSpec region;
    StepKind steps = StepKind::Standard;
    Point start;
    std::optional<Point> end;
    int k = 0;
    std::optional<int> circle_shift_s;
};

std::string to_string(Family f);
std::string to_string(StepKind s);
Family family_from_string(const std::string& s);
StepKind steps_from_string(const std::string& s);

// Throws ArgumentError when m2 or n are out of range.
void validate_region(const RegionSpec& region);

// True when all doubled entries share one parity (all integer or all
// half-integer coordinates).
bool uniform_parity(const Point& p);

bool in_region(const RegionSpec& region, const Point& p);

// CircleM points are kept with every coordinate in [0, m); other families
// are returned unchanged.
Point canonical(const RegionSpec& region, Point p);

std::vector<Point> step_vectors(StepKind kind, int n);

std::vector<Point> neighbors(const RegionSpec& region, StepKind steps, const Point& p);

// The cyclic class s of a circle configuration, i.e. the s for which
// lam_{s+1} > ... > lam_n > lam_1 > ... > lam_s.  Empty if no s fits.
std::optional<int> circle_shift(const Point& lam);

bool parity_feasible(const WalkProblem& problem);

// All lattice points of the region with the requested doubled parity, in
// lexicographic order.  Circle points are the representatives in [0, m).
// AlcoveA is translation invariant along (1,...,1), so for it only points
// with 0 <= x_n and x_1 < m are produced.
std::vector<Point> enumerate_points(const RegionSpec& region, int parity);

// Human-readable "3/2,1/2" style rendering and parsing of doubled points.
std::string format_point(const Point& p);
Point parse_point(const std::string& text);
std::string format_half(int doubled);

inline long long abs_sum(const Point& p) {
    long long s = 0;
    for (int v : p) s += v;
    return s;
}

}  // namespace alcove
