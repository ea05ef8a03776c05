#include "alcove/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace alcove {

std::string to_string(Family f) {
    switch (f) {
        case Family::AlcoveA: return "A";
        case Family::AlcoveB: return "B";
        case Family::AlcoveC: return "C";
        case Family::AlcoveD: return "D";
        case Family::CircleM: return "circle";
    }
    return "?";
}

std::string to_string(StepKind s) {
    switch (s) {
        case StepKind::PositiveStandard: return "positive";
        case StepKind::Standard: return "standard";
        case StepKind::Diagonal: return "diagonal";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "A" || s == "a") return Family::AlcoveA;
    if (s == "B" || s == "b") return Family::AlcoveB;
    if (s == "C" || s == "c") return Family::AlcoveC;
    if (s == "D" || s == "d") return Family::AlcoveD;
    if (s == "circle" || s == "O" || s == "M") return Family::CircleM;
    throw ArgumentError("unknown family '" + s + "'");
}

StepKind steps_from_string(const std::string& s) {
    if (s == "positive" || s == "pos") return StepKind::PositiveStandard;
    if (s == "standard" || s == "std") return StepKind::Standard;
    if (s == "diagonal" || s == "diag") return StepKind::Diagonal;
    throw ArgumentError("unknown step set '" + s + "'");
}

void validate_region(const RegionSpec& region) {
    if (region.n < 1) throw ArgumentError("n must be positive");
    if (region.m2 < 2) throw ArgumentError("m must be at least 1");
}

bool uniform_parity(const Point& p) {
    for (int v : p)
        if (((v - p.front()) & 1) != 0) return false;
    return true;
}

static bool strictly_decreasing(const Point& p, std::size_t upto) {
    for (std::size_t i = 0; i + 1 < upto; ++i)
        if (!(p[i] > p[i + 1])) return false;
    return true;
}

static int mod_pos(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

bool in_region(const RegionSpec& region, const Point& p) {
    if (static_cast<int>(p.size()) != region.n)
        throw ArgumentError("point has " + std::to_string(p.size()) + " coordinates, region has n=" +
                            std::to_string(region.n));
    const int n = region.n;
    const int m2 = region.m2;
    if (region.family == Family::CircleM) {
        std::vector<int> r(p.size());
        for (int i = 0; i < n; ++i) r[i] = mod_pos(p[i], m2);
        std::sort(r.begin(), r.end());
        return std::adjacent_find(r.begin(), r.end()) == r.end();
    }
    if (!uniform_parity(p)) return false;
    switch (region.family) {
        case Family::AlcoveA:
            return strictly_decreasing(p, n) && p[n - 1] > p[0] - m2;
        case Family::AlcoveC:
            return strictly_decreasing(p, n) && m2 > p[0] && p[n - 1] > 0;
        case Family::AlcoveB:
            // x1 + x2 < 2m, doubled on both sides.
            return strictly_decreasing(p, n) && p[n - 1] > 0 && (n < 2 || p[0] + p[1] < 2 * m2);
        case Family::AlcoveD: {
            if (n < 2) return true;
            if (!strictly_decreasing(p, n - 1) || !(p[n - 2] > std::abs(p[n - 1]))) return false;
            if (!(p[0] + p[1] < 2 * m2)) return false;
            // For n = 2 the D-type affine group has two highest roots, and the
            // bounded alcove also needs x1 - x2 < 2m.
            return n != 2 || p[0] - p[1] < 2 * m2;
        }
        default:
            return false;
    }
}

Point canonical(const RegionSpec& region, Point p) {
    if (region.family == Family::CircleM)
        for (int& v : p) v = mod_pos(v, region.m2);
    return p;
}

std::vector<Point> step_vectors(StepKind kind, int n) {
    std::vector<Point> out;
    if (kind == StepKind::Diagonal) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Point v(n);
            for (int j = 0; j < n; ++j) v[j] = (mask >> j) & 1u ? -1 : 1;
            out.push_back(std::move(v));
        }
        return out;
    }
    for (int j = 0; j < n; ++j) {
        Point v(n, 0);
        v[j] = 2;
        out.push_back(v);
        if (kind == StepKind::Standard) {
            v[j] = -2;
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Point> neighbors(const RegionSpec& region, StepKind steps, const Point& p) {
    if (steps == StepKind::PositiveStandard && region.family != Family::AlcoveA)
        throw UnsupportedError("positive standard steps are only defined for the A-type alcove");
    std::vector<Point> out;
    for (const Point& v : step_vectors(steps, region.n)) {
        Point q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] + v[i];
        q = canonical(region, std::move(q));
        if (in_region(region, q)) out.push_back(std::move(q));
    }
    return out;
}

std::optional<int> circle_shift(const Point& lam) {
    const int n = static_cast<int>(lam.size());
    for (int s = 0; s < n; ++s) {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i) ok = lam[(s + i) % n] > lam[(s + i + 1) % n];
        if (ok) return s;
    }
    return std::nullopt;
}

bool parity_feasible(const WalkProblem& pr) {
    if (!pr.end) return true;
    const Point& eta = pr.start;
    const Point& lam = *pr.end;
    const int n = pr.region.n;
    const int m2 = pr.region.m2;
    const bool circle = pr.region.family == Family::CircleM;

    if (pr.steps == StepKind::Diagonal) {
        // Each step flips the doubled parity of every coordinate.  On a
        // circle of half-integral length the residue loses that parity.
        if (circle && m2 % 2 != 0) return true;
        for (int j = 0; j < n; ++j)
            if (mod_pos(lam[j] - eta[j] - pr.k, 2) != 0) return false;
        return true;
    }

    // Standard and positive steps keep coordinates integral.
    for (int j = 0; j < n; ++j)
        if (mod_pos(eta[j], 2) != 0 || mod_pos(lam[j], 2) != 0) return false;
    const long long diff = (abs_sum(lam) - abs_sum(eta)) / 2;

    if (pr.steps == StepKind::PositiveStandard) return diff == pr.k;

    if (!circle) return ((pr.k + diff) % 2 + 2) % 2 == 0;

    const auto s = circle_shift(lam);
    if (!s) return false;
    const long long m = m2 / 2;
    if ((n * m) % 2 != 0) return true;
    return (((pr.k - diff - *s * m) % 2) + 2) % 2 == 0;
}

std::vector<Point> enumerate_points(const RegionSpec& region, int parity) {
    const int n = region.n;
    const int m2 = region.m2;
    // half-open [lo, hi) in doubled units; B and D points reach x_1 < 2m
    int lo = 0, hi = m2;
    if (region.family == Family::AlcoveC) lo = 1;
    if (region.family == Family::AlcoveB) hi = 2 * m2;
    if (region.family == Family::AlcoveD) lo = -2 * m2, hi = 2 * m2;
    std::vector<int> values;
    for (int v = lo; v < hi; ++v)
        if (mod_pos(v, 2) == parity) values.push_back(v);

    std::vector<Point> out;
    Point cur(n);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == n) {
            if (!in_region(region, cur)) return;
            if (region.family == Family::CircleM && !circle_shift(cur)) return;
            out.push_back(cur);
            return;
        }
        for (int v : values) {
            cur[depth] = v;
            rec(depth + 1);
        }
    };
    rec(0);
    return out;
}

std::string format_half(int d) {
    if (d % 2 == 0) return std::to_string(d / 2);
    return std::to_string(d) + "/2";
}

std::string format_point(const Point& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += format_half(p[i]);
    }
    return s;
}

Point parse_point(const std::string& text) {
    Point p;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) throw ArgumentError("empty coordinate in '" + text + "'");
        const auto slash = tok.find('/');
        try {
            if (slash == std::string::npos) {
                p.push_back(2 * std::stoi(tok));
            } else {
                if (tok.substr(slash + 1) != "2") throw ArgumentError("only halves are allowed: " + tok);
                int num = std::stoi(tok.substr(0, slash));
                if (num % 2 == 0) throw ArgumentError("half-integer numerator must be odd: " + tok);
                p.push_back(num);
            }
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const ArgumentError*>(&e)) throw;
            throw ArgumentError("bad coordinate '" + tok + "'");
        }
    }
    if (p.empty()) throw ArgumentError("empty point");
    return p;
}

}  // namespace alcove
