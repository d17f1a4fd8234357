#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "algflow/classification.hpp"
#include "algflow/flow.hpp"
#include "algflow/isomorphism.hpp"

namespace py = pybind11;
using namespace algflow;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

CubicTensor tensor_from(const Array& arr) {
  if (arr.ndim() != 3 || arr.shape(0) != arr.shape(1) || arr.shape(1) != arr.shape(2))
    throw py::value_error("expected an array of shape (m, m, m)");
  const auto m = static_cast<int>(arr.shape(0));
  std::vector<double> entries(arr.data(), arr.data() + arr.size());
  return CubicTensor(m, std::move(entries));
}

Array to_array(const CubicTensor& t) {
  const auto m = static_cast<py::ssize_t>(t.dim());
  Array out({m, m, m});
  std::memcpy(out.mutable_data(), t.entries().data(), t.size() * sizeof(double));
  return out;
}

Algebra algebra_from(const Array& arr) { return Algebra(tensor_from(arr)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rotational flows of two-dimensional algebras";

  py::enum_<VerdictKind>(m, "VerdictKind")
      .value("Isomorphic", VerdictKind::Isomorphic)
      .value("NotIsomorphicExact", VerdictKind::NotIsomorphicExact)
      .value("SeparatedByInvariant", VerdictKind::SeparatedByInvariant)
      .value("NotFoundWithinBudget", VerdictKind::NotFoundWithinBudget);

  py::class_<IsoVerdict>(m, "IsoVerdict")
      .def_readonly("kind", &IsoVerdict::kind)
      .def_property_readonly("certificate",
                             [](const IsoVerdict& v) -> std::optional<Matrix> {
                               if (!v.certificate) return std::nullopt;
                               return v.certificate->matrix();
                             })
      .def_readonly("residual", &IsoVerdict::residual)
      .def_readonly("reason", &IsoVerdict::reason)
      .def_readonly("trace", &IsoVerdict::trace)
      .def_property_readonly("is_isomorphic", &IsoVerdict::is_isomorphic)
      .def("__repr__", [](const IsoVerdict& v) { return "IsoVerdict(" + std::string(to_string(v.kind)) + ")"; });

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("restarts", &SearchConfig::restarts)
      .def_readwrite("max_iterations", &SearchConfig::max_iterations)
      .def_readwrite("tol", &SearchConfig::tol)
      .def_readwrite("seed", &SearchConfig::seed)
      .def_readwrite("det_epsilon", &SearchConfig::det_epsilon);

  py::class_<FlowClassLabel>(m, "FlowClassLabel")
      .def_property_readonly("name", [](const FlowClassLabel& l) { return std::string(l.name()); })
      .def_property_readonly("parameter", &FlowClassLabel::parameter)
      .def("same_class", &FlowClassLabel::same_class, py::arg("other"), py::arg("tol") = kDefaultClassifyTol)
      .def("__str__", &FlowClassLabel::to_string)
      .def("__repr__", &FlowClassLabel::to_string)
      .def("__eq__", [](const FlowClassLabel& a, const FlowClassLabel& b) { return a == b; });

  m.def("flow_tensor", [](double d) { return to_array(flow_tensor(d)); }, py::arg("d"));
  m.def("commutativity_defect", &commutativity_defect, py::arg("d"));
  m.def(
      "verify_kce",
      [](double s, double tau, double t) { return verify_kce(FlowFamily::rotation(), s, tau, t); },
      py::arg("s"), py::arg("tau"), py::arg("t"));

  m.def(
      "mul_type_c", [](const Array& a, const Array& b) { return to_array(mul_type_c(tensor_from(a), tensor_from(b))); },
      py::arg("a"), py::arg("b"));
  m.def("to_2x4", [](const Array& a) { return Matrix(to_2x4(algebra_from(a))); }, py::arg("c"));
  m.def(
      "from_2x4", [](const StructMatrix2x4& mat) { return to_array(from_2x4(mat).constants()); }, py::arg("m"));
  m.def(
      "is_commutative", [](const Array& a, double tol) { return is_commutative(algebra_from(a), tol); },
      py::arg("c"), py::arg("tol") = kDefaultPredicateTol);
  m.def(
      "is_associative", [](const Array& a, double tol) { return is_associative(algebra_from(a), tol); },
      py::arg("c"), py::arg("tol") = kDefaultPredicateTol);
  m.def(
      "associativity_residual", [](const Array& a) { return associativity_residual(algebra_from(a)); },
      py::arg("c"));
  m.def(
      "change_of_basis",
      [](const Array& a, const Matrix& p) { return to_array(change_of_basis(algebra_from(a), BasisChange(p)).constants()); },
      py::arg("c"), py::arg("p"));
  m.def(
      "iso_residual",
      [](const Array& a, const Array& b, const Matrix& p) {
        return iso_residual(algebra_from(a), algebra_from(b), BasisChange(p));
      },
      py::arg("a"), py::arg("b"), py::arg("p"));
  m.def(
      "iso_search",
      [](const Array& a, const Array& b, const SearchConfig& cfg) {
        return iso_search(algebra_from(a), algebra_from(b), cfg);
      },
      py::arg("a"), py::arg("b"), py::arg("config") = SearchConfig{});
  m.def("rotation_iso", &rotation_iso, py::arg("t1"), py::arg("t2"), py::arg("tol") = kDefaultLocusTol);
  m.def(
      "invariant_signature",
      [](const Array& a) {
        const auto s = invariant_signature(algebra_from(a));
        py::dict d;
        d["commutative"] = s.commutative;
        d["associative"] = s.associative;
        d["rank_2x4"] = s.rank_2x4;
        return d;
      },
      py::arg("c"));
  m.def("classify_time", &classify_time, py::arg("t"), py::arg("tol") = kDefaultClassifyTol);
  m.def(
      "to_bekbaev",
      [](const FlowClassLabel& label) {
        const auto r = to_bekbaev(label);
        return py::make_tuple(r.form.family(), r.form.params(), r.basis_change.matrix(), r.residual);
      },
      py::arg("label"), "(family, params, basis change, residual) of the canonical reduction");

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
}
