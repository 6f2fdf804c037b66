#include "ptc/families.hpp"
#include "ptc/heights.hpp"
#include "ptc/json_io.hpp"
#include "ptc/repro.hpp"
#include "ptc/torsion.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ptc;

namespace {

/* Results cross the boundary as JSON text; the Python side decodes. */
std::string dumps(json const& j)
{
    return j.dump();
}

FamilyInstance instance(std::string const& family, std::string const& kind, std::string const& value)
{
    FamilyId f = parse_family(family);
    ParamKind k = parse_param_kind(kind);
    if (k == ParamKind::triple)
        throw std::invalid_argument("use construct_triple for triples");
    return construct(f, k, parse_rational(value));
}

Curve curve_of(std::vector<std::string> const& c)
{
    if (c.size() != 3)
        throw std::invalid_argument("curve needs [a2, a4, a6]");
    return Curve(parse_rational(c[0]), parse_rational(c[1]), parse_rational(c[2]));
}

std::vector<CurvePoint> points_of(Curve const& E, std::vector<std::pair<std::string, std::string>> const& pts)
{
    std::vector<CurvePoint> out;
    for (auto const& [x, y] : pts)
        out.push_back(E.point(parse_rational(x), parse_rational(y)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_ptcurves, m)
{
    m.doc() = "Elliptic curve families from Pythagorean triples";

    py::register_exception<degenerate_parameter>(m, "DegenerateParameter", PyExc_ValueError);
    py::register_exception<non_primitive_triple>(m, "NonPrimitiveTriple", PyExc_ValueError);

    m.def("enumerate_ppts", [](long limit) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (auto const& T : enumerate_ppts(limit))
            out.emplace_back(T.a.get_str(), T.b.get_str(), T.c.get_str());
        return out;
    });

    m.def("construct",
          [](std::string const& family, std::string const& kind, std::string const& value) {
              return dumps(to_json(instance(family, kind, value)));
          },
          py::arg("family"), py::arg("kind"), py::arg("value"));

    m.def("construct_triple",
          [](std::string const& family, long a, long b, long c) {
              return dumps(to_json(construct(parse_family(family), PythTriple{a, b, c})));
          },
          py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("certify",
          [](std::string const& family, long a, long b, long c) {
              return dumps(to_json(certify_positive_rank(parse_family(family), PythTriple{a, b, c})));
          },
          py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("point_order",
          [](std::vector<std::string> const& curve, std::string const& x, std::string const& y) {
              Curve E = curve_of(curve);
              return dumps(to_json(point_order(E, E.point(parse_rational(x), parse_rational(y)))));
          },
          py::arg("curve"), py::arg("x"), py::arg("y"));

    m.def("canonical_height",
          [](std::vector<std::string> const& curve, std::string const& x, std::string const& y, int digits) {
              Curve E = curve_of(curve);
              return canonical_height(E, E.point(parse_rational(x), parse_rational(y)), digits).value.to_string();
          },
          py::arg("curve"), py::arg("x"), py::arg("y"), py::arg("digits") = 50);

    m.def("regulator",
          [](std::vector<std::string> const& curve, std::vector<std::pair<std::string, std::string>> const& pts,
             int digits, std::string const& epsilon) {
              Curve E = curve_of(curve);
              py::gil_scoped_release nogil;
              return dumps(to_json(regulator(E, points_of(E, pts), digits, Real::from_string(epsilon, digits))));
          },
          py::arg("curve"), py::arg("points"), py::arg("digits") = 50,
          py::arg("epsilon") = std::string(default_epsilon));

    m.def("reproduce",
          [](int digits) {
              py::gil_scoped_release nogil;
              return dumps(to_json(reproduce_paper_determinants(digits)));
          },
          py::arg("digits") = 50);
}
