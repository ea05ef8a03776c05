#include "alcove/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "alcove/asym.hpp"
#include "alcove/chars.hpp"
#include "alcove/exact.hpp"
#include "alcove/oracle.hpp"
#include "alcove/saddle.hpp"

namespace alcove::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOutputDigits = 30;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Report {
    Json config = Json::object();
    Json rows = Json::array();
    bool all_ok = true;
    std::optional<Real64> max_ratio_error;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string dec(const Real64& x) { return to_decimal(x, kOutputDigits); }

void note_ratio(Report& rep, const Real64& ratio) {
    const Real64 err = abs(ratio - 1);
    if (!rep.max_ratio_error || err > *rep.max_ratio_error) rep.max_ratio_error = err;
}

Json base_config(const RunConfig& c) {
    Json j;
    j["family"] = to_string(c.family);
    j["steps"] = to_string(c.steps);
    j["n"] = c.n;
    j["m"] = format_half(c.m2);
    j["start"] = format_point(c.start);
    j["end"] = c.end ? Json(format_point(*c.end)) : Json(nullptr);
    j["k"] = c.ks;
    j["precision"] = c.precision;
    j["output_digits"] = kOutputDigits;
    return j;
}

void require_walk_args(const RunConfig& c) {
    if (c.start.empty()) throw UsageError("--start is required");
    if (static_cast<int>(c.start.size()) != c.n) throw UsageError("--start must have n coordinates");
    if (c.end && static_cast<int>(c.end->size()) != c.n) throw UsageError("--end must have n coordinates");
    if (c.ks.empty()) throw UsageError("--k or --k-range is required");
    validate_region(RegionSpec{c.family, c.n, c.m2});
}

PrecisionPolicy policy_of(const RunConfig& c) {
    PrecisionPolicy p;
    p.start_digits = c.precision;
    return p;
}

Report run_count(const RunConfig& c) {
    require_walk_args(c);
    const RegionSpec reg{c.family, c.n, c.m2};
    if (!in_region(reg, c.start)) throw ArgumentError("start point is not in the region");
    const bool direct = c.family == Family::AlcoveA && c.steps != StepKind::Standard;
    std::string why;
    if (!direct && !spectral_supported(reg, c.steps, &why)) throw UnsupportedError(why);
    Report rep;
    rep.config = base_config(c);
    rep.config["command"] = "count";

    const int kmax = *std::max_element(c.ks.begin(), c.ks.end());
    std::optional<std::vector<EndpointDistribution>> layers;
    double dp_ms = 0;
    {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            layers = dp_layers(reg, c.steps, c.start, kmax);
        } catch (const ResourceError&) {
            layers.reset();  // beyond the DP budget: exact side only
        }
        dp_ms = ms_since(t0);
    }
    for (int k : c.ks) {
        Json row;
        row["k"] = k;
        std::optional<BigCount> dp;
        if (layers) {
            const auto& layer = (*layers)[static_cast<std::size_t>(k)];
            if (c.end) {
                const auto it = layer.find(canonical(reg, *c.end));
                dp = it == layer.end() ? BigCount(0) : it->second;
            } else {
                dp = total(layer);
            }
        }
        const auto t0 = std::chrono::steady_clock::now();
        BigCount ex;
        if (c.end)
            ex = count_exact(WalkProblem{reg, c.steps, c.start, *c.end, k, std::nullopt}, policy_of(c));
        else
            ex = count_exact_free(reg, c.steps, c.start, k, policy_of(c));
        const double ex_ms = ms_since(t0);
        row["dp_count"] = dp ? Json(dp->str()) : Json(nullptr);
        row["exact_count"] = ex.str();
        if (dp) {
            row["agreement"] = *dp == ex;
            if (*dp != ex) rep.all_ok = false;
        } else {
            row["agreement"] = nullptr;
        }
        row["dp_ms"] = layers ? Json(dp_ms) : Json(nullptr);
        row["exact_ms"] = ex_ms;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Json converge_row(const RunConfig& c, int k) {
    const RegionSpec reg{c.family, c.n, c.m2};
    AsymEstimate est;
    BigCount ex;
    if (c.end) {
        const WalkProblem pr{reg, c.steps, c.start, *c.end, k, std::nullopt};
        est = asym_fixed(pr);
        ex = count_exact(pr, policy_of(c));
    } else {
        est = asym_free(reg, c.steps, c.start, k);
        ex = count_exact_free(reg, c.steps, c.start, k, policy_of(c));
    }
    Json row;
    row["k"] = k;
    row["k_parity"] = k % 2 == 0 ? "even" : "odd";
    row["exact"] = ex.str();
    row["estimate"] = dec(est.value);
    if (est.case_label == "parity-zero" || est.value == 0)
        row["ratio"] = nullptr;
    else
        row["ratio"] = dec(Real64(ex.str()) / est.value);
    row["case_label"] = est.case_label;
    return row;
}

Report run_converge(const RunConfig& c) {
    require_walk_args(c);
    Report rep;
    rep.config = base_config(c);
    rep.config["command"] = "converge";
    // rows are independent; evaluate a batch at a time and keep k order
    const std::size_t batch = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t i = 0; i < c.ks.size(); i += batch) {
        std::vector<std::future<Json>> fut;
        for (std::size_t j = i; j < std::min(c.ks.size(), i + batch); ++j)
            fut.push_back(std::async(std::launch::async, converge_row, std::cref(c), c.ks[j]));
        for (auto& f : fut) {
            Json row = f.get();
            if (!row["ratio"].is_null()) note_ratio(rep, Real64(row["ratio"].get<std::string>()));
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

Report run_identities(const RunConfig& c) {
    IdentitySuiteOptions opts;
    opts.n_max = c.n_max;
    Report rep;
    rep.config["command"] = "identities";
    rep.config["n_max"] = opts.n_max;
    rep.config["m_max"] = opts.m_max;
    rep.config["c_max"] = opts.c_max;
    rep.config["det_n_max"] = opts.det_n_max;
    rep.config["det_points"] = opts.det_points;
    rep.config["seed"] = opts.seed;
    for (const IdentityRecord& r : identity_suite(opts)) {
        Json row;
        row["identity"] = r.identity;
        row["params"] = r.params;
        row["match"] = r.match;
        row["detail"] = r.detail;
        if (!r.match) rep.all_ok = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Report run_saddle(const RunConfig& c) {
    if (c.m2 % 2 != 0) throw UsageError("saddle needs an integer --m");
    if (c.ks.empty()) throw UsageError("--k or --k-range is required");
    const int m = c.m2 / 2;
    const SaddleSolution sol = solve_saddle(m, c.rs);
    Report rep;
    rep.config["command"] = "saddle";
    rep.config["m"] = m;
    rep.config["rs"] = c.rs;
    rep.config["d"] = format_half(c.d2);
    rep.config["k"] = c.ks;
    rep.config["output_digits"] = kOutputDigits;
    Json thetas = Json::array(), maxs = Json::array(), c0s = Json::array();
    for (const auto& t : sol.thetas) thetas.push_back(dec(t));
    for (const auto& t : sol.maximizers) maxs.push_back(dec(t));
    for (const auto& t : sol.c0_values) c0s.push_back(dec(t));
    rep.config["thetas"] = thetas;
    rep.config["C"] = dec(sol.C);
    rep.config["maximizers"] = maxs;
    rep.config["c0"] = c0s;
    rep.config["epsilon"] = sol.epsilon_signs;

    for (int k : c.ks) {
        const SaddleProblem pr{m, c.rs, c.d2, k};
        unsigned digits = 0;
        const Complex<Real64> ex = exact_coeff(pr, &digits);
        const SaddleEstimate ap = approx_coeff(pr, sol);
        Json row;
        row["k"] = k;
        row["exact_re"] = dec(ex.re);
        row["exact_im"] = dec(ex.im);
        row["approx_re"] = dec(ap.value.re);
        row["approx_im"] = dec(ap.value.im);
        row["subexponential"] = ap.subexponential;
        const Real64 ex_abs = cabs(ex);
        if (!ap.subexponential && ex_abs != 0) {
            const Real64 ratio = cabs(ap.value) / ex_abs;
            row["ratio"] = dec(ratio);
            note_ratio(rep, ratio);
        } else {
            row["ratio"] = nullptr;
        }
        row["exact_digits"] = digits;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string csv_cell(const Json& v) {
    std::string s;
    if (v.is_null())
        return "";
    else if (v.is_string())
        s = v.get<std::string>();
    else
        s = v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string render(const Report& rep, Format fmt) {
    if (fmt == Format::Json) {
        Json doc;
        doc["config"] = rep.config;
        doc["rows"] = rep.rows;
        doc["summary"]["all_ok"] = rep.all_ok;
        doc["summary"]["max_ratio_error"] = rep.max_ratio_error ? Json(dec(*rep.max_ratio_error)) : Json(nullptr);
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    if (rep.rows.empty()) return "";
    bool first = true;
    for (const auto& [key, _] : rep.rows[0].items()) {
        os << (first ? "" : ",") << key;
        first = false;
    }
    os << "\n";
    for (const Json& row : rep.rows) {
        first = true;
        for (const auto& [key, val] : row.items()) {
            os << (first ? "" : ",") << csv_cell(val);
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::string error_record(const std::string& type, const std::string& message) {
    Json j;
    j["error"]["type"] = type;
    j["error"]["message"] = message;
    return j.dump() + "\n";
}

int parse_int_value(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

int parse_half_value(const std::string& s) {
    Point p;
    try {
        p = parse_point(s);
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }
    if (p.size() != 1) throw UsageError("expected a single value, got '" + s + "'");
    return p[0];
}

}  // namespace

std::vector<int> parse_k_list(const std::string& text) {
    std::vector<int> ks;
    if (text.find(':') != std::string::npos) {
        std::vector<int> parts;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ':')) parts.push_back(parse_int_value(tok));
        if (parts.size() < 2 || parts.size() > 3) throw UsageError("k range must be lo:hi or lo:hi:step");
        const int step = parts.size() == 3 ? parts[2] : 1;
        if (step <= 0) throw UsageError("k range step must be positive");
        for (int k = parts[0]; k <= parts[1]; k += step) ks.push_back(k);
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) ks.push_back(parse_int_value(tok));
    }
    if (ks.empty()) throw UsageError("empty k list");
    for (int k : ks)
        if (k < 0) throw UsageError("k must be non-negative");
    return ks;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (quoted) {
            if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cell += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            row.push_back(std::move(cell));
            cell.clear();
        } else if (ch == '\n') {
            row.push_back(std::move(cell));
            cell.clear();
            out.push_back(std::move(row));
            row.clear();
        } else {
            cell += ch;
        }
    }
    if (!cell.empty() || !row.empty()) {
        row.push_back(std::move(cell));
        out.push_back(std::move(row));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts walks in alcoves and checks the supporting identities", "alcove-walks"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string family = "A", steps = "standard", m = "1", start, end, k_single, k_range, rs, d = "0", format = "json";

    auto add_walk_flags = [&](CLI::App* sub) {
        sub->add_option("--family", family, "A, B, C, D or circle")->required();
        sub->add_option("--steps", steps, "positive, standard or diagonal");
        sub->add_option("--n", cfg.n, "number of walkers")->required();
        sub->add_option("--m", m, "alcove size, integer or half-integer such as 7/2")->required();
        sub->add_option("--start", start, "start point, e.g. 3/2,1/2")->required();
        sub->add_option("--end", end, "end point; all end points are summed when omitted");
        sub->add_option("--precision", cfg.precision, "starting digits of the precision ladder");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--k", k_single, "number of steps (or a comma list)");
        sub->add_option("--k-range", k_range, "lo:hi or lo:hi:step");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out_path, "output file instead of stdout");
    };

    CLI::App* count = app.add_subcommand("count", "exact counts next to the DP oracle");
    add_walk_flags(count);
    add_common(count);
    CLI::App* converge = app.add_subcommand("converge", "exact counts against the asymptotic estimates");
    add_walk_flags(converge);
    add_common(converge);
    CLI::App* identities = app.add_subcommand("identities", "run the character identity suite");
    identities->add_option("--n", cfg.n_max, "largest rank for the character checks");
    identities->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    identities->add_option("--out", cfg.out_path, "output file instead of stdout");
    CLI::App* saddle = app.add_subcommand("saddle", "saddle point estimates against exact coefficients");
    saddle->add_option("--m", m, "modulus of the root of unity")->required();
    saddle->add_option("--rs", rs, "exponents r_j, e.g. 0,1")->required();
    saddle->add_option("--d", d, "offset d, integer or half-integer");
    add_common(saddle);

    std::vector<std::string> argv_store{"alcove-walks"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed())
            cfg.command = Command::Count;
        else if (converge->parsed())
            cfg.command = Command::Converge;
        else if (identities->parsed())
            cfg.command = Command::Identities;
        else
            cfg.command = Command::Saddle;
        cfg.format = format == "csv" ? Format::Csv : Format::Json;
        if (cfg.command == Command::Count || cfg.command == Command::Converge) {
            try {
                cfg.family = family_from_string(family);
                cfg.steps = steps_from_string(steps);
                cfg.start = parse_point(start);
                if (!end.empty()) cfg.end = parse_point(end);
            } catch (const ArgumentError& e) {
                throw UsageError(e.what());
            }
        }
        if (cfg.command != Command::Identities) {
            cfg.m2 = parse_half_value(m);
            if (!k_single.empty() && !k_range.empty()) throw UsageError("give either --k or --k-range");
            if (!k_single.empty()) cfg.ks = parse_k_list(k_single);
            if (!k_range.empty()) cfg.ks = parse_k_list(k_range);
        }
        if (cfg.command == Command::Saddle) {
            std::stringstream ss(rs);
            std::string tok;
            while (std::getline(ss, tok, ',')) cfg.rs.push_back(parse_int_value(tok));
            cfg.d2 = parse_half_value(d);
        }
        if (std::find(std::begin(kPrecisionLevels), std::end(kPrecisionLevels), cfg.precision) ==
            std::end(kPrecisionLevels))
            throw UsageError("--precision must be one of 64, 128, 256, 512, 1024");

        Report rep;
        switch (cfg.command) {
            case Command::Count: rep = run_count(cfg); break;
            case Command::Converge: rep = run_converge(cfg); break;
            case Command::Identities: rep = run_identities(cfg); break;
            case Command::Saddle: rep = run_saddle(cfg); break;
        }
        const std::string text = render(rep, cfg.format);
        if (cfg.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.out_path);
            if (!f) throw ResourceError("cannot write " + cfg.out_path);
            f << text;
        }
        return rep.all_ok ? kExitOk : kExitVerification;
    } catch (const UsageError& e) {
        out << error_record("usage", e.what());
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ArgumentError& e) {
        out << error_record("argument", e.what());
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedError& e) {
        out << error_record("unsupported", e.what());
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        out << error_record("resource", e.what());
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const PrecisionError& e) {
        out << error_record("precision", e.what());
        err << "error: " << e.what() << "\n";
        return kExitResource;
    }
}

}  // namespace alcove::cli
