#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torhom/degree.hpp"
#include "torhom/errors.hpp"
#include "torhom/jumps.hpp"
#include "torhom/maps.hpp"
#include "torhom/report.hpp"

namespace py = pybind11;
using namespace torhom;

namespace {

py::array_t<double> samples_array(const TorusMap& f, int n) {
  py::array_t<double> out({n, n, 3});
  auto a = out.mutable_unchecked<3>();
  const Grid g(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec3 v = f(g.vertex(i, j));
      a(j, i, 0) = v.x;
      a(j, i, 1) = v.y;
      a(j, i, 2) = v.z;
    }
  }
  return out;
}

std::vector<Vec3> from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
  if (arr.ndim() != 3 || arr.shape(0) != arr.shape(1) || arr.shape(2) != 3) {
    throw py::value_error("samples must have shape (n, n, 3)");
  }
  auto a = arr.unchecked<3>();
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(arr.shape(0) * arr.shape(1)));
  for (py::ssize_t j = 0; j < arr.shape(0); ++j) {
    for (py::ssize_t i = 0; i < arr.shape(1); ++i) out.push_back({a(j, i, 0), a(j, i, 1), a(j, i, 2)});
  }
  return out;
}

py::tuple as_tuple(const DegreeTriple& t) { return py::make_tuple(t.d0, t.d, t.d1); }
py::tuple as_tuple(const DegreePair& p) { return py::make_tuple(p.dC, p.d); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equivariant torus maps: invariants, constructions and jump curves";

  py::register_exception<Error>(m, "TorhomError", PyExc_RuntimeError);

  py::class_<TorusMap>(m, "TorusMap")
      .def("__call__", [](const TorusMap& f, double x, double y) {
        const Vec3 v = f(x, y);
        return py::make_tuple(v.x, v.y, v.z);
      })
      .def_property_readonly("kind", [](const TorusMap& f) { return involution_name(f.kind); })
      .def_readonly("name", &TorusMap::name)
      .def("samples", &samples_array, py::arg("n"), "Values on the n x n grid, indexed [y, x, component]");

  m.def("realizable_triple", [](int d0, int d, int d1) { return realizable_triple({d0, d, d1}); });
  m.def("realizable_pair", [](int dC, int d) { return realizable_pair({dC, d}); });
  m.def("realize_triple", [](int d0, int d, int d1) { return realize_triple({d0, d, d1}); });
  m.def("realize_pair", [](int dC, int d) { return realize_pair({dC, d}); });
  m.def("normal_form", &normal_form, py::arg("d0"), py::arg("d1"), py::arg("mirror") = false);
  m.def("physics_map", &physics_map, py::arg("t"), py::arg("m") = 1);
  m.def("weierstrass", [](const std::string& which) {
    const WeierstrassMaps w = weierstrass_maps();
    if (which == "p") return w.p;
    if (which == "p_prime") return w.p_prime;
    if (which == "i_p") return w.i_p;
    if (which == "rotated_p_prime") return w.rotated_p_prime;
    throw py::value_error("unknown Weierstrass map '" + which + "'");
  });

  m.def("degree_triple", [](const TorusMap& f, int grid) { return as_tuple(degree_triple(f, grid).triple); },
        py::arg("f"), py::arg("grid") = kDefaultGrid);
  m.def("degree_pair", [](const TorusMap& f, int grid) { return as_tuple(degree_pair(f, grid).pair); },
        py::arg("f"), py::arg("grid") = kDefaultGrid);
  m.def("total_degree", [](const TorusMap& f, int grid) { return total_degree_simplicial(f, Grid(grid)).degree; },
        py::arg("f"), py::arg("grid") = kDefaultGrid);
  m.def("degree_triple_from_samples", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    const auto v = from_array(a);
    return as_tuple(degree_triple_from_samples(v, static_cast<int>(a.shape(0))).triple);
  });
  m.def("degree_pair_from_samples", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    const auto v = from_array(a);
    return as_tuple(degree_pair_from_samples(v, static_cast<int>(a.shape(0))).pair);
  });

  m.def("jump_count", [](std::vector<int> from, std::vector<int> to) {
    if (from.size() == 3 && to.size() == 3) {
      return jump_count_formula(DegreeTriple{from[0], from[1], from[2]}, DegreeTriple{to[0], to[1], to[2]});
    }
    if (from.size() == 2 && to.size() == 2) return jump_count_formula(DegreePair{from[0], from[1]}, DegreePair{to[0], to[1]});
    throw py::value_error("endpoints must both be triples or both pairs");
  });
  m.def(
      "jump",
      [](std::vector<int> from, std::vector<int> to, int grid, int p, int q) {
        JumpCurve c;
        if (from.size() == 3 && to.size() == 3) {
          const DegreeTriple a{from[0], from[1], from[2]}, b{to[0], to[1], to[2]};
          c = p + q > 2 ? rank_n_jump(a, b, p, q) : general_jump_type1(a, b);
        } else if (from.size() == 2 && to.size() == 2) {
          const DegreePair a{from[0], from[1]}, b{to[0], to[1]};
          c = p + q > 2 ? rank_n_jump(a, b, p, q) : general_jump_type2(a, b);
        } else {
          throw py::value_error("endpoints must both be triples or both pairs");
        }
        py::gil_scoped_release release;
        const std::string text = jump_report(c, detect_singular(c, grid)).dump();
        py::gil_scoped_acquire acquire;
        return py::module_::import("json").attr("loads")(text);
      },
      py::arg("from_"), py::arg("to"), py::arg("grid") = kDefaultGrid, py::arg("p") = 1, py::arg("q") = 1,
      "Builds a jump curve and returns the detection report as a dict");
}
