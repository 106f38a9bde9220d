#include "mcone/cone.hpp"
#include "mcone/document.hpp"
#include "mcone/instances.hpp"
#include "mcone/maps.hpp"
#include "mcone/mc_norm.hpp"
#include "mcone/quantum.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mcone;

namespace {

// Exact values cross the boundary as fractions.Fraction; inputs may be
// Fraction, int or "p/q" strings. Floats are refused.
Rational to_rational(py::handle h) {
  if (py::isinstance<py::float_>(h)) throw py::type_error("floats are not exact; use Fraction or int");
  return parse_rational(py::str(h).cast<std::string>());
}

py::object from_rational(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.str());
}

RVector to_vector(py::handle seq) {
  RVector v;
  for (auto item : py::iter(seq)) v.push_back(to_rational(item));
  return v;
}

py::list from_vector(const RVector& v) {
  py::list out;
  for (const auto& x : v) out.append(from_rational(x));
  return out;
}

std::vector<RVector> to_rows(py::handle seq) {
  std::vector<RVector> rows;
  for (auto item : py::iter(seq)) rows.push_back(to_vector(item));
  return rows;
}

py::list from_matrix(const Matrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(from_vector(m.row(i)));
  return out;
}

py::tuple from_decomposition(const Decomposition& d) {
  return py::make_tuple(from_vector(d.z_plus), from_vector(d.z_minus));
}

McNormSpec to_spec(py::handle kind) {
  if (py::isinstance<py::str>(kind)) {
    const auto name = kind.cast<std::string>();
    if (name == "one") return McNormSpec::one_norm();
    if (name == "max") return McNormSpec::max_norm();
  }
  return McNormSpec::p_norm(to_rational(kind));
}

py::dict from_sample(const DistanceSample& s) {
  py::dict d;
  d["t"] = from_rational(s.t);
  d["first"] = from_rational(s.first);
  d["second"] = from_rational(s.second);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact measure cones: decompositions, orthogonality, mixing distance and maps.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<PolyhedralCone>(m, "PolyhedralCone")
      .def(py::init([](py::handle generators, py::handle charge) {
             return PolyhedralCone(to_rows(generators), to_vector(charge));
           }),
           py::arg("generators"), py::arg("charge"))
      .def_property_readonly("dimension", &PolyhedralCone::dimension)
      .def_property_readonly("generators",
                             [](const PolyhedralCone& c) {
                               py::list out;
                               for (const auto& g : c.generators()) out.append(from_vector(g));
                               return out;
                             })
      .def_property_readonly("charge", [](const PolyhedralCone& c) { return from_vector(c.charge()); })
      .def_property_readonly("is_valid", &PolyhedralCone::is_valid)
      .def_property_readonly("failures", [](const PolyhedralCone& c) { return c.validation().failures; })
      .def("__eq__", [](const PolyhedralCone& a, const PolyhedralCone& b) { return a == b; })
      .def("__repr__", [](const PolyhedralCone& c) {
        return "PolyhedralCone(dimension=" + std::to_string(c.dimension()) +
               ", generators=" + std::to_string(c.num_generators()) + ")";
      });

  m.def("classical_cone", &classical_cone, py::arg("n"));
  m.def("square_base_cone", &square_base_cone);
  m.def("random_cone", &random_cone, py::arg("n"), py::arg("k"), py::arg("seed"));
  m.def("cone_from_base_points", [](py::handle pts) { return cone_from_base_points(to_rows(pts)); });

  m.def("cone_contains", [](const PolyhedralCone& c, py::handle z) { return cone_contains(c, to_vector(z)); });
  m.def("charge_split", [](const PolyhedralCone& c, py::handle z) {
    const auto s = charge_split(c, to_vector(z));
    return py::make_tuple(from_rational(s.e_plus), from_rational(s.e_minus));
  });
  m.def("one_norm", [](const PolyhedralCone& c, py::handle z) { return from_rational(one_norm(c, to_vector(z))); });
  m.def("joint_decomposition_cost", [](const PolyhedralCone& c, py::handle z) {
    return from_rational(joint_decomposition_cost(c, to_vector(z)));
  });
  m.def("minimal_decomposition", [](const PolyhedralCone& c, py::handle z) {
    return from_decomposition(minimal_decomposition(c, to_vector(z)));
  });
  m.def(
      "all_minimal_decompositions",
      [](const PolyhedralCone& c, py::handle z, std::size_t max_count) {
        const auto all = all_minimal_decompositions(c, to_vector(z), max_count);
        py::list decs;
        for (const auto& d : all.decompositions) decs.append(from_decomposition(d));
        py::dict out;
        out["decompositions"] = decs;
        out["non_unique"] = all.non_unique;
        out["one_norm"] = from_rational(all.one_norm);
        return out;
      },
      py::arg("cone"), py::arg("z"), py::arg("max_count") = 16);
  m.def("is_minimal", [](const PolyhedralCone& c, py::handle zp, py::handle zm, py::handle z) {
    return is_minimal(c, {to_vector(zp), to_vector(zm)}, to_vector(z));
  });
  m.def("are_orthogonal", [](const PolyhedralCone& c, py::handle x, py::handle y) {
    return are_orthogonal(c, to_vector(x), to_vector(y));
  });
  m.def("disjointness_witness", [](const PolyhedralCone& c, py::handle x, py::handle y) -> py::object {
    const auto w = disjointness_witness(c, to_vector(x), to_vector(y));
    if (!w) return py::none();
    return from_vector(w->functional);
  });

  m.def(
      "mc_norm",
      [](const PolyhedralCone& c, py::handle z, py::handle kind, py::handle precision) {
        const Rational prec = precision.is_none() ? kDefaultPNormPrecision : to_rational(precision);
        const auto v = mc_norm(c, to_vector(z), to_spec(kind), prec);
        return py::make_tuple(from_rational(v.lo), from_rational(v.hi));
      },
      py::arg("cone"), py::arg("z"), py::arg("kind") = "one", py::arg("precision") = py::none(),
      "Enclosure (lo, hi) of P(e+, e-); kind is 'one', 'max' or a rational p >= 1.");

  m.def("direction_distance",
        [](const PolyhedralCone& c, py::handle x, py::handle y, py::handle alpha, py::handle beta) {
          const DirectionDistance d(c, to_vector(x), to_vector(y));
          return from_rational(d(to_rational(alpha), to_rational(beta)));
        });
  m.def(
      "compare_mixing_distance",
      [](const PolyhedralCone& c, py::handle x, py::handle y, py::handle x2, py::handle y2,
         std::size_t grid) {
        const auto r =
            compare_mixing_distance(c, to_vector(x), to_vector(y), to_vector(x2), to_vector(y2), grid);
        py::dict out;
        out["verdict"] = to_string(r.verdict);
        out["greater_at"] = r.greater_at ? py::object(from_sample(*r.greater_at)) : py::none();
        out["less_at"] = r.less_at ? py::object(from_sample(*r.less_at)) : py::none();
        out["evaluations"] = r.evaluations;
        return out;
      },
      py::arg("cone"), py::arg("x"), py::arg("y"), py::arg("x2"), py::arg("y2"), py::arg("grid") = 64);
  m.def(
      "audit_map",
      [](const PolyhedralCone& c, py::handle matrix, py::handle samples) {
        const auto a = audit_map(c, {Matrix::from_rows(to_rows(matrix))}, to_rows(samples));
        py::dict out;
        out["positive"] = a.positive;
        out["charge_preserving"] = a.charge_preserving;
        out["contraction_on_samples"] = a.contraction.holds;
        out["isometry_on_samples"] = a.isometry.holds;
        out["orthogonality_preserving_on_samples"] = a.orthogonality_preserving.holds;
        out["endomorphism"] = a.endomorphism();
        return out;
      },
      py::arg("cone"), py::arg("matrix"), py::arg("samples") = py::list());
  m.def("construct_transition_map",
        [](const PolyhedralCone& c, py::handle x, py::handle y, py::handle x2, py::handle y2) {
          return from_matrix(
              construct_transition_map(c, to_vector(x), to_vector(y), to_vector(x2), to_vector(y2)).matrix);
        });

  m.def(
      "spectral_decomposition",
      [](const quantum::DMatrix& z, double tol) {
        const quantum::SymmetricMatrixCone cone(static_cast<std::size_t>(z.rows()), tol);
        const auto sd = quantum::spectral_minimal_decomposition(cone, z);
        return py::make_tuple(sd.positive, sd.negative);
      },
      py::arg("z"), py::arg("tol") = 1e-9);
  m.def(
      "quantum_orthogonal",
      [](const quantum::DMatrix& x, const quantum::DMatrix& y, double tol) {
        const quantum::SymmetricMatrixCone cone(static_cast<std::size_t>(x.rows()), tol);
        return quantum::quantum_orthogonal(cone, x, y);
      },
      py::arg("x"), py::arg("y"), py::arg("tol") = 1e-9);

  py::class_<ConeDocument>(m, "ConeDocument")
      .def_property_readonly("dimension", [](const ConeDocument& d) { return d.dimension; })
      .def("cone", &ConeDocument::cone)
      .def_property_readonly("vectors",
                             [](const ConeDocument& d) {
                               py::dict out;
                               for (const auto& [name, v] : d.vectors) out[py::str(name)] = from_vector(v);
                               return out;
                             })
      .def_property_readonly("maps",
                             [](const ConeDocument& d) {
                               py::dict out;
                               for (const auto& [name, mat] : d.maps) out[py::str(name)] = from_matrix(mat);
                               return out;
                             })
      .def("serialize", &serialize);
  m.def("parse_document", [](const std::string& text) { return parse_document(text); });
  m.def("load_document", [](const std::string& path) { return load_document(path); });
}
