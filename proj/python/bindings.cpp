#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "alcove/asym.hpp"
#include "alcove/chars.hpp"
#include "alcove/cli.hpp"
#include "alcove/exact.hpp"
#include "alcove/oracle.hpp"
#include "alcove/saddle.hpp"

namespace py = pybind11;
using namespace alcove;

namespace {

// Points cross the boundary in the "3/2,1/2" text form used by the CLI.
WalkProblem make_problem(const std::string& family, const std::string& steps, int n, int m2,
                         const std::string& start, const std::optional<std::string>& end, int k) {
    WalkProblem p;
    p.region = {family_from_string(family), n, m2};
    p.steps = steps_from_string(steps);
    p.start = parse_point(start);
    if (end) {
        p.end = parse_point(*end);
        p.circle_shift_s = circle_shift(*p.end);
    }
    p.k = k;
    return p;
}

py::int_ to_py(const BigCount& c) {
    return py::int_(py::module_::import("builtins").attr("int")(c.str()));
}

double to_double(const Real64& x) { return static_cast<double>(x); }

}  // namespace

PYBIND11_MODULE(_alcove, m) {
    m.doc() = "Walk counts in alcoves and on the circle";

    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
    py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);

    m.def(
        "count_dp",
        [](const std::string& family, const std::string& steps, int n, int m2, const std::string& start,
           std::optional<std::string> end, int k) {
            const auto p = make_problem(family, steps, n, m2, start, end, k);
            return to_py(p.end ? count_dp(p) : total(count_dp_free(p)));
        },
        py::arg("family"), py::arg("steps"), py::arg("n"), py::arg("m2"), py::arg("start"),
        py::arg("end") = py::none(), py::arg("k"));

    m.def(
        "count_exact",
        [](const std::string& family, const std::string& steps, int n, int m2, const std::string& start,
           std::optional<std::string> end, int k) {
            const auto p = make_problem(family, steps, n, m2, start, end, k);
            return to_py(p.end ? count_exact(p) : count_exact_free(p.region, p.steps, p.start, k));
        },
        py::arg("family"), py::arg("steps"), py::arg("n"), py::arg("m2"), py::arg("start"),
        py::arg("end") = py::none(), py::arg("k"));

    m.def(
        "asymptotic",
        [](const std::string& family, const std::string& steps, int n, int m2, const std::string& start,
           std::optional<std::string> end, int k) {
            const auto p = make_problem(family, steps, n, m2, start, end, k);
            const auto e = p.end ? asym_fixed(p) : asym_free(p.region, p.steps, p.start, k);
            py::dict d;
            d["value"] = to_double(e.value);
            d["growth_rate"] = to_double(e.growth_rate);
            d["algebraic_factor"] = to_string(e.algebraic_factor);
            d["case_label"] = e.case_label;
            return d;
        },
        py::arg("family"), py::arg("steps"), py::arg("n"), py::arg("m2"), py::arg("start"),
        py::arg("end") = py::none(), py::arg("k"));

    m.def(
        "solve_saddle",
        [](int mm, const std::vector<int>& rs) {
            const auto s = solve_saddle(mm, rs);
            py::dict d;
            std::vector<double> thetas, maxs, c0;
            for (const auto& t : s.thetas) thetas.push_back(to_double(t));
            for (const auto& t : s.maximizers) maxs.push_back(to_double(t));
            for (const auto& c : s.c0_values) c0.push_back(to_double(c));
            d["thetas"] = thetas;
            d["C"] = to_double(s.C);
            d["maximizers"] = maxs;
            d["c0"] = c0;
            d["epsilon"] = s.epsilon_signs;
            return d;
        },
        py::arg("m"), py::arg("rs"));

    m.def(
        "exact_coeff",
        [](int mm, const std::vector<int>& rs, int d2, int k) {
            const auto c = exact_coeff({mm, rs, d2, k});
            return std::complex<double>(to_double(c.re), to_double(c.im));
        },
        py::arg("m"), py::arg("rs"), py::arg("d2"), py::arg("k"));

    m.def(
        "approx_coeff",
        [](int mm, const std::vector<int>& rs, int d2, int k) -> py::object {
            const auto e = approx_coeff({mm, rs, d2, k});
            if (e.subexponential) return py::none();
            return py::cast(std::complex<double>(to_double(e.value.re), to_double(e.value.im)));
        },
        py::arg("m"), py::arg("rs"), py::arg("d2"), py::arg("k"));

    m.def(
        "identity_suite",
        [](int n_max) {
            IdentitySuiteOptions o;
            o.n_max = n_max;
            py::list out;
            for (const auto& r : identity_suite(o)) {
                py::dict d;
                d["identity"] = r.identity;
                d["params"] = r.params;
                d["match"] = r.match;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("n_max") = 3);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
