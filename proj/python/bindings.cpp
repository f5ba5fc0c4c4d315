#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "simplexwidth/closed_form.hpp"
#include "simplexwidth/directions.hpp"
#include "simplexwidth/energy.hpp"
#include "simplexwidth/error.hpp"
#include "simplexwidth/geometry.hpp"
#include "simplexwidth/optimizer.hpp"
#include "simplexwidth/table.hpp"
#include "simplexwidth/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace simplexwidth;

namespace {

using Coords = std::vector<double>;

py::object to_fraction(const ExactScalar& x) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::module_::import("builtins").attr("int")(x.numerator());
    py::object den = py::module_::import("builtins").attr("int")(x.denominator());
    return fraction(num, den);
}

PointSet to_points(const std::vector<Coords>& pts) {
    std::vector<Vector> v;
    v.reserve(pts.size());
    for (const Coords& p : pts) v.emplace_back(p);
    return PointSet(std::move(v));
}

std::vector<Coords> from_points(const PointSet& p) {
    std::vector<Coords> out;
    for (const Vector& v : p.points()) out.push_back(v.values());
    return out;
}

SimplexKind kind_of(const std::string& s) { return parse_simplex_kind(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and numerical widths of regular simplices";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result(
        [&]() { return py::exception<Error>(m, "SimplexWidthError", PyExc_ValueError); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string message = std::string(to_string(e.kind())) + ": " + e.what();
            py::set_error(error_type.get_stored(), message.c_str());
        }
    });

    // geometry
    m.def("standard_simplex_vertices", [](int n) { return from_points(standard_simplex_vertices(n)); }, "n"_a);
    m.def("regular_simplex_vertices", [](int n) { return from_points(regular_simplex_vertices(n)); }, "n"_a);
    m.def(
        "projection_width",
        [](const Coords& u, const std::vector<Coords>& points, bool sum_zero) {
            return projection_width(Direction(Vector(u), sum_zero), to_points(points));
        },
        "u"_a, "points"_a, "sum_zero"_a = false);
    m.def("distance", [](const Coords& a, const Coords& b) { return distance(Vector(a), Vector(b)); }, "a"_a, "b"_a);

    // closed forms
    m.def("width_squared", [](int n, const std::string& kind) { return to_fraction(width_squared(n, kind_of(kind))); },
          "n"_a, "kind"_a = "regular");
    m.def("center", [](int n) { return center(n).values(); }, "n"_a);
    m.def("circumdistance_squared", [](int n) { return to_fraction(circumdistance_squared(n)); }, "n"_a);
    m.def("indistance_squared", [](int n) { return to_fraction(indistance_squared(n)); }, "n"_a);
    m.def("inradius_squared", [](int n) { return to_fraction(inradius_squared(n)); }, "n"_a);
    m.def("circumradius_squared", [](int n) { return to_fraction(circumradius_squared(n)); }, "n"_a);
    m.def("width_for_t", [](int n, int t) { return to_fraction(width_for_t(n, t)); }, "n"_a, "t"_a);
    m.def(
        "alpha_beta",
        [](int n, int t) {
            const AlphaBeta ab = alpha_beta(n, t);
            return py::make_tuple(ab.alpha, ab.beta);
        },
        "n"_a, "t"_a);

    // energy
    py::class_<EnergyReport>(m, "EnergyReport")
        .def_readonly("mean", &EnergyReport::mean)
        .def_property_readonly("centered", [](const EnergyReport& r) { return r.centered.values(); })
        .def_readonly("energy", &EnergyReport::energy);
    m.def("center_vector", [](const Coords& v) { return center_vector(Vector(v)); }, "v"_a);
    m.def(
        "energy_push",
        [](const Coords& v, std::size_t i, double new_value) {
            EnergyPush r = energy_push(Vector(v), i, new_value);
            return py::make_tuple(r.before, r.after, r.increased);
        },
        "v"_a, "i"_a, "new_value"_a);
    m.def(
        "clamp_to_extremes",
        [](const Coords& z, double alpha, double beta) { return clamp_to_extremes(Vector(z), alpha, beta).values(); },
        "z"_a, "alpha"_a, "beta"_a);

    // directions
    m.def(
        "make_two_value_direction",
        [](int n, int t, std::vector<std::size_t> low_set) {
            return make_two_value_direction(n, t, std::move(low_set)).direction.vec().values();
        },
        "n"_a, "t"_a, "low_set"_a);
    m.def(
        "enumerate_optimal_directions",
        [](int n) {
            std::vector<Coords> out;
            for (const Direction& u : enumerate_optimal_directions(n)) out.push_back(u.vec().values());
            return out;
        },
        "n"_a);
    m.def(
        "is_optimal_direction",
        [](int n, const Coords& u) { return is_optimal_direction(n, Direction(Vector(u), true)); }, "n"_a, "u"_a);

    // optimizer
    py::class_<WidthResult>(m, "WidthResult")
        .def_readonly("width", &WidthResult::width)
        .def_property_readonly("direction", [](const WidthResult& r) { return r.direction.vec().values(); })
        .def_readonly("iterations", &WidthResult::iterations)
        .def_readonly("restarts_used", &WidthResult::restarts_used)
        .def_readonly("converged", &WidthResult::converged)
        .def_property_readonly("method", [](const WidthResult& r) { return std::string(to_string(r.method)); })
        .def_property_readonly("exact_width_squared", [](const WidthResult& r) -> py::object {
            if (!r.exact_width_squared) return py::none();
            return to_fraction(*r.exact_width_squared);
        });
    m.def(
        "minimize_width",
        [](const std::vector<Coords>& points, int restarts, int max_iters, double step_init, double tol,
           std::uint64_t seed, bool constrain_sum_zero) {
            OptimizerConfig cfg{restarts, max_iters, step_init, tol, seed, constrain_sum_zero};
            return minimize_width(to_points(points), cfg);
        },
        "points"_a, "restarts"_a = 64, "max_iters"_a = 10'000, "step_init"_a = 1.0, "tol"_a = 1e-10, "seed"_a = 0,
        "constrain_sum_zero"_a = false);
    m.def(
        "grid_width_oracle",
        [](const std::vector<Coords>& points, int resolution, bool constrain_sum_zero) {
            return grid_width_oracle(to_points(points), resolution, constrain_sum_zero);
        },
        "points"_a, "resolution"_a, "constrain_sum_zero"_a = false);
    m.def("two_value_enumeration_width", &two_value_enumeration_width, "n"_a);

    // reporting
    m.def("format_decimal", &format_decimal, "value"_a);
    m.def(
        "table_csv",
        [](int max_n, bool include_numeric, std::uint64_t seed) {
            std::string s = csv_header(include_numeric) + "\n";
            for (const TableRow& row : build_table(max_n, include_numeric, seed)) s += to_csv(row, include_numeric) + "\n";
            return s;
        },
        "max_n"_a, "include_numeric"_a = false, "seed"_a = 0);
    m.def(
        "verify",
        [](int max_n, std::uint64_t seed) {
            std::vector<py::tuple> out;
            for (const CheckResult& c : run_verification(max_n, seed)) out.push_back(py::make_tuple(c.name, c.passed, c.detail));
            return out;
        },
        "max_n"_a, "seed"_a = 0);
}
