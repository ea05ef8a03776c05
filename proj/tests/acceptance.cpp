// Acceptance run: one PASS/FAIL line per criterion.  The exit status is 0
// when every criterion passes or fails only for a documented conflict with
// the source formulas (printed as "FAIL [documented]").

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alcove/asym.hpp"
#include "alcove/chars.hpp"
#include "alcove/exact.hpp"
#include "alcove/oracle.hpp"
#include "alcove/saddle.hpp"

using namespace alcove;

namespace {

struct Outcome {
    bool pass = true;
    bool documented = false;  // the failure is a recorded conflict in the source formulas
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// (family, steps) pairs with an exact formula, in theorem order.
struct Covered {
    Family family;
    StepKind steps;
};
const Covered kCovered[] = {
    {Family::AlcoveA, StepKind::PositiveStandard}, {Family::AlcoveA, StepKind::Standard},
    {Family::AlcoveA, StepKind::Diagonal},         {Family::CircleM, StepKind::Standard},
    {Family::CircleM, StepKind::Diagonal},         {Family::AlcoveC, StepKind::Standard},
    {Family::AlcoveC, StepKind::Diagonal},         {Family::AlcoveB, StepKind::Standard},
    {Family::AlcoveB, StepKind::Diagonal},         {Family::AlcoveD, StepKind::Standard},
    {Family::AlcoveD, StepKind::Diagonal},
};

std::string name(const Covered& c) { return to_string(c.family) + "/" + to_string(c.steps); }

// Does the exact formula apply at this (n, m)?
bool formula_applies(const Covered& c, int n, int m2) {
    const RegionSpec reg{c.family, n, m2};
    if (c.family == Family::AlcoveA && c.steps != StepKind::Standard) return m2 % 2 == 0;
    return spectral_supported(reg, c.steps);
}

std::vector<Point> points_below_m(const RegionSpec& reg, int parity) {
    std::vector<Point> out;
    for (Point& p : enumerate_points(reg, parity)) {
        bool ok = true;
        for (int v : p) ok = ok && v < reg.m2;
        if (ok) out.push_back(std::move(p));
    }
    return out;
}

// ---- 1 ------------------------------------------------------------------------

Outcome criterion1() {
    Outcome o;
    long long compared = 0, mismatches = 0;
    int configs = 0;
    std::ostringstream bad;
    for (const Covered& c : kCovered) {
        for (int n = 1; n <= 3; ++n) {
            for (int m2 = 2; m2 <= 2 * (n + 3); ++m2) {
                if (!formula_applies(c, n, m2)) continue;
                const RegionSpec reg{c.family, n, m2};
                ++configs;
                const bool spectral = spectral_supported(reg, c.steps);
                std::unique_ptr<SpectralEngine> engine;
                if (spectral) engine = std::make_unique<SpectralEngine>(reg, c.steps);
                const std::vector<int> parities = c.steps == StepKind::Diagonal ? std::vector<int>{0, 1} : std::vector<int>{0};
                for (int ps : parities) {
                    for (const Point& eta : points_below_m(reg, ps)) {
                        if (c.family == Family::CircleM && circle_shift(eta) != 0) continue;
                        const auto layers = dp_layers(reg, c.steps, eta, 10);
                        for (int pe : parities) {
                            for (const Point& lam : points_below_m(reg, pe)) {
                                std::vector<BigCount> ex;
                                if (spectral) ex = engine->counts(eta, lam, 10);
                                for (int k = 0; k <= 10; ++k) {
                                    const auto it = layers[k].find(lam);
                                    const BigCount dp = it == layers[k].end() ? BigCount(0) : it->second;
                                    BigCount e;
                                    if (spectral)
                                        e = ex[k];
                                    else
                                        e = count_exact(WalkProblem{reg, c.steps, eta, lam, k, std::nullopt});
                                    ++compared;
                                    if (e != dp) {
                                        if (++mismatches <= 3)
                                            bad << " " << name(c) << " n=" << n << " m=" << format_half(m2) << " "
                                                << format_point(eta) << "->" << format_point(lam) << " k=" << k;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    o.pass = mismatches == 0;
    o.detail = std::to_string(compared) + " counts over " + std::to_string(configs) + " (family, steps, n, m), " +
               std::to_string(mismatches) + " mismatches" + bad.str();
    return o;
}

// ---- 2 ------------------------------------------------------------------------

Outcome criterion2() {
    Outcome o;
    int checks = 0, failures = 0;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 5; ++m) {
            const RegionSpec reg{Family::AlcoveA, n, 2 * m};
            for (const Point& start : enumerate_points(reg, 0))
                for (int k = 0; k <= 10; ++k) {
                    ++checks;
                    if (!gleich_check(reg, start, k)) ++failures;
                }
        }
    o.pass = failures == 0 && checks > 0;
    o.detail = std::to_string(checks) + " (n, m, start, k) checks, " + std::to_string(failures) + " failures";
    return o;
}

// ---- 3 and 4 --------------------------------------------------------------------

Real64 ratio_error(const BigCount& exact, const AsymEstimate& est) {
    return abs(Real64(exact.str()) / est.value - 1);
}

// An error that is zero to working precision counts as decreasing.
bool decreases(const Real64& small_k, const Real64& large_k) {
    const Real64 floor("1e-40");
    return large_k < small_k || (large_k < floor && small_k < floor);
}

Point minimal_point(const RegionSpec& reg, int parity) {
    std::vector<Point> pts = enumerate_points(reg, parity);
    if (reg.family == Family::CircleM) std::erase_if(pts, [](const Point& p) { return circle_shift(p) != 0; });
    if (pts.empty()) return {};
    Point best = pts.front();
    for (const Point& p : pts) {
        long long a = 0, b = 0;
        for (int v : p) a += std::abs(v);
        for (int v : best) b += std::abs(v);
        if (a < b || (a == b && p < best)) best = p;
    }
    return best;
}

Outcome criterion3() {
    Outcome o;
    std::ostringstream os;
    for (const Covered& c : kCovered) {
        const int n = 2;
        bool done = false;
        for (int m2 = 2; m2 <= 16 && !done; ++m2) {
            if (!formula_applies(c, n, m2)) continue;
            const RegionSpec reg{c.family, n, m2};
            const Point eta = minimal_point(reg, 0);
            if (eta.empty()) continue;
            auto problem = [&](int k) {
                WalkProblem pr{reg, c.steps, eta, eta, k, std::nullopt};
                if (c.steps == StepKind::PositiveStandard) {
                    Point lam = eta;
                    for (int& v : lam) v += 2 * (k / n);
                    pr.end = lam;
                }
                return pr;
            };
            AsymEstimate e100, e400;
            try {
                e100 = asym_fixed(problem(100));
                e400 = asym_fixed(problem(400));
            } catch (const UnsupportedError&) {
                continue;
            } catch (const ArgumentError&) {
                continue;  // the formula does not cover this m
            }
            if (e100.growth_rate < Real64("1e-20") || e100.value == 0) continue;
            const BigCount x100 = count_exact(problem(100));
            if (x100 == 0) continue;
            const BigCount x400 = count_exact(problem(400));
            const Real64 r100 = ratio_error(x100, e100), r400 = ratio_error(x400, e400);
            const bool ok = r400 < Real64("0.05") && decreases(r100, r400);
            os << " " << name(c) << "(m=" << format_half(m2) << ") " << static_cast<double>(r100) << "->"
               << static_cast<double>(r400) << (ok ? "" : "!");
            if (!ok) o.pass = false;
            done = true;
        }
        if (!done) {
            o.pass = false;
            os << " " << name(c) << " no instance";
        }
    }
    o.detail = "|ratio-1| at k=100 -> 400:" + os.str();
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::ostringstream os;
    int branches = 0;
    std::set<std::string> all_seen;
    for (const Covered& c : kCovered) {
        if (c.family == Family::AlcoveA && c.steps == StepKind::Diagonal) continue;  // no free-endpoint estimate
        std::set<std::string> seen;
        for (int n = 2; n <= 3; ++n) {
            for (int m2 = 2; m2 <= 2 * (n + 4); ++m2) {
                if (!formula_applies(c, n, m2)) continue;
                const RegionSpec reg{c.family, n, m2};
                const std::vector<int> parities = c.steps == StepKind::Diagonal ? std::vector<int>{0, 1} : std::vector<int>{0};
                for (int ps : parities) {
                    const Point eta = minimal_point(reg, ps);
                    if (eta.empty()) continue;
                    for (const auto& [k1, k2] : {std::pair{100, 400}, std::pair{99, 399}}) {
                        AsymEstimate e1, e2;
                        try {
                            e1 = asym_free(reg, c.steps, eta, k1);
                            e2 = asym_free(reg, c.steps, eta, k2);
                        } catch (const UnsupportedError&) {
                            continue;
                        } catch (const ArgumentError&) {
                            continue;
                        }
                        if (e1.case_label == "parity-zero" || e1.case_label != e2.case_label) continue;
                        if (seen.count(e1.case_label)) continue;
                        if (e1.growth_rate < Real64("1e-20") || e1.value == 0) continue;
                        const BigCount x1 = count_exact_free(reg, c.steps, eta, k1);
                        if (x1 == 0) continue;
                        const BigCount x2 = count_exact_free(reg, c.steps, eta, k2);
                        seen.insert(e1.case_label);
                        all_seen.insert(e1.case_label);
                        ++branches;
                        const Real64 r1 = ratio_error(x1, e1), r2 = ratio_error(x2, e2);
                        const bool ok = r2 < Real64("0.05") && decreases(r1, r2);
                        if (!ok) {
                            o.pass = false;
                            os << " " << e1.case_label << "(n=" << n << " m=" << format_half(m2) << " start "
                               << format_point(eta) << ") " << static_cast<double>(r1) << "->" << static_cast<double>(r2);
                        }
                    }
                }
            }
        }
    }
    // every branch label the estimates can produce
    const std::vector<std::string> expected = {
        "A/positive/free/n-even-m-even", "A/positive/free/n-even-m-odd", "A/positive/free/n-odd",
        "A/standard/free/n-even-m-even", "A/standard/free/n-even-m-odd", "A/standard/free/n-odd",
        "circle/standard/free/n-even-m-even", "circle/standard/free/n-even-m-odd", "circle/standard/free/n-odd",
        "circle/diagonal/free/n-even", "circle/diagonal/free/n-odd",
        "C/standard/free/m-even-n-even", "C/standard/free/m-even-n-odd", "C/standard/free/m-odd-n-even",
        "C/standard/free/m-odd-n-odd", "C/diagonal/free/k-odd", "C/diagonal/free/k-even",
        "B/standard/free/m-half", "B/standard/free/m-parity-of-n", "B/standard/free/m-parity-differs",
        "B/diagonal/free/m-int-k-even", "B/diagonal/free/m-half-k-even", "B/diagonal/free/m-int-k-odd",
        "B/diagonal/free/m-half-k-odd", "D/standard/free/m-half", "D/standard/free/m-int",
        "D/diagonal/free/m-int-k-even", "D/diagonal/free/m-half-k-even", "D/diagonal/free/m-int-k-odd",
        "D/diagonal/free/m-half-k-odd"};
    for (const std::string& label : expected) {
        if (all_seen.count(label)) continue;
        o.pass = false;
        os << " missing " << label;
    }
    o.detail = std::to_string(branches) + " branch instances" + os.str();
    return o;
}

// ---- 5 ------------------------------------------------------------------------

Outcome criterion5() {
    Outcome o;
    int checks = 0;
    Real64 worst = 0;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 5; ++m) {
            const RegionSpec a{Family::AlcoveA, n, 2 * m}, circ{Family::CircleM, n, 2 * m};
            for (const Point& start : enumerate_points(a, 0)) {
                if (start[0] >= 2 * m || start[n - 1] < 0 || circle_shift(start) != 0) continue;
                for (int k : {100, 101, 400}) {
                    const AsymEstimate pos = asym_free(a, StepKind::PositiveStandard, start, k);
                    const AsymEstimate cir = asym_free(circ, StepKind::Standard, start, k);
                    const Real64 lhs = pos.value * rpow(Real64(2), k);
                    const Real64 scale = std::max(Real64(abs(lhs)), Real64(abs(cir.value)));
                    const Real64 diff = scale == 0 ? Real64(0) : abs(lhs - cir.value) / scale;
                    worst = std::max(worst, diff);
                    ++checks;
                }
            }
        }
    o.pass = checks > 0 && worst < Real64("1e-50");
    o.detail = std::to_string(checks) + " (n, m, start, k) comparisons, largest relative difference " +
               to_decimal(worst, 3);
    return o;
}

// ---- 6 and 7 --------------------------------------------------------------------

bool is_determinant(const std::string& id) { return id == "ortho1" || id == "ortho2" || id == "ortho3" || id == "sympl"; }

const std::vector<IdentityRecord>& suite() {
    static const std::vector<IdentityRecord> records = identity_suite();
    return records;
}

Outcome criterion6() {
    Outcome o;
    int checks = 0, failures = 0;
    for (const IdentityRecord& r : suite()) {
        if (!is_determinant(r.identity)) continue;
        ++checks;
        if (!r.match) ++failures;
    }
    o.pass = checks == 4 * 4 * 20 && failures == 0;
    o.detail = std::to_string(checks) + " determinant checks, " + std::to_string(failures) + " failures";
    return o;
}

Outcome criterion7() {
    Outcome o;
    int checks = 0, failures = 0, conflicts = 0;
    std::ostringstream bad;
    std::map<std::string, int> per_identity;
    for (const IdentityRecord& r : suite()) {
        if (is_determinant(r.identity)) continue;
        ++checks;
        ++per_identity[r.identity];
        if (r.match) continue;
        ++failures;
        // signed spin sum at half-integral c: the printed closed form is not 0
        const bool half_c = r.params.find('/') != std::string::npos;
        if (r.identity == "C8_spin_signed" && half_c)
            ++conflicts;
        else if (failures - conflicts <= 3)
            bad << " " << r.identity << " " << r.params;
    }
    o.pass = failures == 0;
    o.documented = failures > 0 && failures == conflicts;
    std::ostringstream os;
    os << checks << " checks";
    for (const auto& [id, cnt] : per_identity) os << " " << id << ":" << cnt;
    os << "; " << failures << " failures";
    if (conflicts > 0) os << " (" << conflicts << " are the signed spin sum at half-integral c, which is identically 0)";
    o.detail = os.str() + bad.str();
    return o;
}

// ---- 8 ------------------------------------------------------------------------

Outcome criterion8() {
    Outcome o;
    std::ostringstream os;
    int subsets = 0, wrong_counts = 0;
    for (int m = 1; m <= 9; ++m)
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> rs;
            for (int r = 0; r < m; ++r)
                if ((mask >> r) & 1u) rs.push_back(r);
            if (rs.size() > 4) continue;
            ++subsets;
            if (solve_saddle(m, rs).thetas.size() != rs.size()) ++wrong_counts;
        }
    os << subsets << " subsets, " << wrong_counts << " with a wrong root count;";
    if (wrong_counts) o.pass = false;

    const SaddleProblem reps[] = {
        {5, {0, 1}, 0, 0}, {7, {0, 1, 2}, 0, 0}, {9, {0, 2, 5, 7}, 0, 0}, {6, {1, 2}, 2, 0}, {8, {0, 3, 5}, 2, 0},
    };
    for (SaddleProblem p : reps) {
        Real64 err[2];
        int i = 0;
        bool sub = false;
        for (int k : {100, 400}) {
            p.k = k;
            const SaddleEstimate a = approx_coeff(p);
            sub = sub || a.subexponential;
            err[i++] = sub ? Real64(1) : abs(cabs(a.value) / cabs(exact_coeff(p)) - 1);
        }
        const bool ok = !sub && err[1] < Real64("0.10") && err[1] < err[0];
        if (!ok) o.pass = false;
        os << " m=" << p.m << " n=" << p.n() << ": " << static_cast<double>(err[0]) << "->" << static_cast<double>(err[1])
           << (ok ? "" : "!");
    }

    // n = 1: the estimate is 2^k sqrt(2/(pi k)) and approximates binom(k, k/2)
    const int k = 1000;
    const SaddleProblem one{3, {0}, 0, k};
    const Real64 formula = rpow(Real64(2), k) * sqrt(2 / (pi_value<Real64>() * k));
    const SaddleEstimate a = approx_coeff(one);
    const Complex<Real64> ex = exact_coeff(one);
    mp::mpz_int binom = 1;
    for (int i = 1; i <= k / 2; ++i) binom = binom * (k / 2 + i) / i;
    const Real64 rel_formula = abs(a.value.re - formula) / formula;
    const Real64 rel_binom = abs(formula / Real64(binom.str()) - 1);
    const bool exact_is_binom = abs(ex.re - Real64(binom.str())) < Real64(1) && ex.im == 0;
    const bool ok1 = rel_formula < Real64("1e-40") && rel_binom < Real64("0.01") && exact_is_binom;
    if (!ok1) o.pass = false;
    os << "; n=1 k=1000: estimate/binom - 1 = " << static_cast<double>(formula / Real64(binom.str()) - 1);
    o.detail = os.str();
    return o;
}

// ---- 9 ------------------------------------------------------------------------

Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(2024);
    int instances = 0, nonzero = 0, attempts = 0;
    std::ostringstream bad;
    while (instances < 1000 && attempts < 200000) {
        ++attempts;
        const Covered& c = kCovered[rng() % std::size(kCovered)];
        const int n = 1 + static_cast<int>(rng() % 3);
        const int m2 = 2 + static_cast<int>(rng() % (2 * (n + 3) - 1));
        if (!formula_applies(c, n, m2)) continue;
        const RegionSpec reg{c.family, n, m2};
        const int ps = c.steps == StepKind::Diagonal ? static_cast<int>(rng() % 2) : 0;
        const int pe = c.steps == StepKind::Diagonal ? static_cast<int>(rng() % 2) : 0;
        const auto starts = points_below_m(reg, ps);
        const auto ends = points_below_m(reg, pe);
        if (starts.empty() || ends.empty()) continue;
        const Point& eta = starts[rng() % starts.size()];
        const Point& lam = ends[rng() % ends.size()];
        if (c.family == Family::CircleM && circle_shift(eta) != 0) continue;
        const int k = static_cast<int>(rng() % 11);
        const WalkProblem pr{reg, c.steps, eta, lam, k, std::nullopt};
        if (parity_feasible(pr)) continue;
        ++instances;
        const BigCount dp = count_dp(pr);
        const BigCount ex = count_exact(pr);
        if (dp != 0 || ex != 0) {
            if (++nonzero <= 3)
                bad << " " << name(c) << " n=" << n << " m=" << format_half(m2) << " " << format_point(eta) << "->"
                    << format_point(lam) << " k=" << k;
        }
    }
    o.pass = instances == 1000 && nonzero == 0;
    o.detail = std::to_string(instances) + " infeasible instances, " + std::to_string(nonzero) + " with a non-zero count" +
               bad.str();
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    struct Entry {
        int id;
        const char* title;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> entries = {
        {1, "exact formulas equal the DP oracle", 600, criterion1},
        {2, "positive/standard total identity", 60, criterion2},
        {3, "fixed-endpoint asymptotics", 300, criterion3},
        {4, "free-endpoint asymptotics", 900, criterion4},
        {5, "positive-step and circle free estimates coincide", 60, criterion5},
        {6, "determinant evaluations", 600, criterion6},
        {7, "character specialisations, summations and branching rules", 600, criterion7},
        {8, "saddle point approximation", 600, criterion8},
        {9, "parity-infeasible instances count zero", 600, criterion9},
    };
    int unexpected = 0;
    // optional arguments select criteria by number
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
    for (const Entry& e : entries) {
        if (!selected.empty() && !selected.count(e.id)) continue;
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        const double secs = seconds_since(t0);
        if (secs > e.budget_s) {
            o.pass = false;
            o.documented = false;
            o.detail += " (over the runtime budget)";
        }
        const char* verdict = o.pass ? "PASS" : (o.documented ? "FAIL [documented]" : "FAIL");
        if (!o.pass && !o.documented) ++unexpected;
        std::cout << "criterion " << e.id << ": " << verdict << " - " << e.title << " [" << secs << " s] " << o.detail
                  << std::endl;
    }
    return unexpected == 0 ? 0 : 1;
}
