#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pwlvo/io.hpp"
#include "pwlvo/oracle.hpp"
#include "pwlvo/pwl.hpp"
#include "pwlvo/solver.hpp"

namespace py = pybind11;
using namespace pwlvo;
using pwlvo::io::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const json& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

json py_to_json(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) {
        try {
            return json::parse(obj.cast<std::string>());
        } catch (const json::exception& e) {
            throw parse_error(std::string("invalid JSON: ") + e.what());
        }
    }
    // round-trip any mapping/sequence through the json module
    const py::object dumps = py::module_::import("json").attr("dumps");
    return json::parse(dumps(obj).cast<std::string>());
}

io::ProblemFile problem_arg(const py::object& obj) { return io::problem_from(py_to_json(obj)); }

WeakMethod method_arg(const std::string& name) {
    if (name == "paper") return WeakMethod::Paper;
    if (name == "generic") return WeakMethod::Generic;
    if (name == "both") return WeakMethod::Both;
    throw std::invalid_argument("method must be one of paper|generic|both");
}

RatVec point_arg(const std::vector<std::string>& coords) {
    RatVec x;
    for (const std::string& c : coords) x.push_back(parse_rat(c));
    return x;
}

py::object py_check(const py::object& problem) {
    const io::ProblemFile file = problem_arg(problem);
    json out;
    const CoverCheck cover = validate_cover(file.problem.f);
    out["cover"] = cover.ok;
    if (!cover.ok) {
        out["gap_witness"] = io::vec_json(cover.gap_witness);
        return json_to_py(out);
    }
    const ConsistencyCheck consistency = validate_consistency(file.problem.f);
    out["consistent"] = consistency.ok;
    if (!consistency.ok) {
        out["mismatch_witness"] = io::vec_json(consistency.witness);
        return json_to_py(out);
    }
    try {
        out["k_function"] =
            is_k_function(file.problem.f, file.problem.feasible, file.problem.cone).yes;
    } catch (const empty_feasible_error&) {
        out["k_function"] = true;  // vacuously, the feasible set is empty
    }
    return json_to_py(out);
}

py::object py_solve(const py::object& problem, const std::string& method) {
    const io::ProblemFile file = problem_arg(problem);
    return json_to_py(io::report_json(solve(file.problem, method_arg(method))));
}

py::object py_verify(const py::object& problem, const py::object& box, const py::object& steps) {
    const io::ProblemFile file = problem_arg(problem);
    GridSpec grid;
    if (!box.is_none()) {
        json g;
        g["box"] = py_to_json(box);
        g["steps"] = steps.is_none() ? json::array() : py_to_json(steps);
        grid = io::grid_from(g, "grid");
    } else if (file.grid.has_value()) {
        grid = *file.grid;
    } else {
        throw std::invalid_argument("no grid given and the problem file has none");
    }
    const SolveReport report = solve(file.problem);
    const CrosscheckResult res = grid_crosscheck(file.problem, report, grid);
    return json_to_py(io::crosscheck_json(res));
}

py::object py_load(const std::string& path) {
    const io::ProblemFile file = io::load_problem_file(path);
    return json_to_py(io::problem_json(file.problem));
}

bool py_region_contains(const py::object& region, const std::vector<std::string>& point) {
    return region_contains(io::region_from(py_to_json(region), "region"), point_arg(point));
}

bool py_decompositions_equal(const py::object& a, const py::object& b) {
    return decomposition_equal(io::region_from(py_to_json(a), "a"),
                               io::region_from(py_to_json(b), "b"));
}

bool py_is_efficient(const py::object& problem, const std::vector<std::string>& point) {
    return is_efficient(point_arg(point), problem_arg(problem).problem);
}

bool py_is_weakly_efficient(const py::object& problem, const std::vector<std::string>& point) {
    return is_weakly_efficient(point_arg(point), problem_arg(problem).problem);
}

}  // namespace

PYBIND11_MODULE(pwlvo, m) {
    m.doc() = "Exact solver for piecewise linear vector optimization problems over "
              "polyhedral sets: efficient and weakly efficient solution decompositions, "
              "validity checks, and a brute-force verification oracle.";

    m.def("load_problem", &py_load, py::arg("path"),
          "Load and validate a problem file; returns the parsed problem as a dict.");
    m.def("check", &py_check, py::arg("problem"),
          "Validate cover/consistency and report the K-function verdict.");
    m.def("solve", &py_solve, py::arg("problem"), py::arg("method") = "paper",
          "Solve and return the report (solution decompositions, certificates, stats).");
    m.def("verify", &py_verify, py::arg("problem"), py::arg("box") = py::none(),
          py::arg("steps") = py::none(),
          "Cross-check the solver against the pointwise oracle on a rational grid.");
    m.def("region_contains", &py_region_contains, py::arg("region"), py::arg("point"),
          "Exact membership of a rational point in a region.");
    m.def("decompositions_equal", &py_decompositions_equal, py::arg("a"), py::arg("b"),
          "Exact set equality of two semi-closed decompositions.");
    m.def("is_efficient", &py_is_efficient, py::arg("problem"), py::arg("point"),
          "Oracle: is the feasible point an efficient solution?");
    m.def("is_weakly_efficient", &py_is_weakly_efficient, py::arg("problem"), py::arg("point"),
          "Oracle: is the feasible point a weakly efficient solution?");

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<cone_error>(m, "ConeError");
    py::register_exception<not_feasible_error>(m, "NotFeasibleError");

    m.attr("__version__") = "0.1.0";
}
