// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "garq/matrix_io.hpp"
#include "garq/oracle.hpp"

namespace py = pybind11;
using namespace garq;

namespace {

using IndexTuple = std::vector<int>;

Mask mask_of(const IndexTuple& indices) { return subset(indices); }

py::tuple key(Mask mask) { return py::cast(indices_of(mask)).cast<py::tuple>(); }

/// {(fermionic indices, grassmann indices): coefficient}
py::dict gar_terms(const GarElement& a) {
  py::dict out;
  for (Mask s : a.fermionic_subsets()) {
    const GrassmannElement lambda = a.coefficient(s);
    for (const auto& [g, c] : lambda.terms()) out[py::make_tuple(key(s), key(g))] = c;
  }
  return out;
}

py::dict grassmann_terms(const GrassmannElement& a) {
  py::dict out;
  for (const auto& [g, c] : a.terms()) out[key(g)] = c;
  return out;
}

/// Scalar part of F^I for each subset I of the variables.
py::dict scalar_table(const GHolFunction& f) {
  py::dict out;
  for (Mask s : f.subsets()) out[key(s)] = f.coefficient(s).scalar_part();
  return out;
}

}  // namespace

PYBIND11_MODULE(_garq, m) {
  m.doc() = "Grassmann and CAR algebra calculus for quasifree fermionic states";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<SizeError>(m, "SizeError", error.ptr());

  py::class_<AlgebraConfig>(m, "AlgebraConfig")
      .def(py::init<int, int>(), py::arg("fermionic_dim"), py::arg("grassmann_dim") = 0)
      .def_property_readonly("fermionic_dim", &AlgebraConfig::fermionic_dim)
      .def_property_readonly("grassmann_dim", &AlgebraConfig::grassmann_dim)
      .def_property_readonly("modes", &AlgebraConfig::modes)
      .def(py::self == py::self)
      .def("__repr__", [](const AlgebraConfig& c) {
        return "AlgebraConfig(" + std::to_string(c.fermionic_dim()) + ", " + std::to_string(c.grassmann_dim()) + ")";
      });

  py::class_<GrassmannElement>(m, "GrassmannElement")
      .def(py::init<AlgebraConfig>())
      .def_static("scalar", &GrassmannElement::scalar)
      .def_static("generator", &GrassmannElement::generator, py::arg("config"), py::arg("j"),
                  py::arg("coeff") = Complex(1.0))
      .def_static(
          "monomial",
          [](AlgebraConfig c, const IndexTuple& idx, Complex coeff) {
            return GrassmannElement::monomial(c, mask_of(idx), coeff);
          },
          py::arg("config"), py::arg("indices"), py::arg("coeff") = Complex(1.0))
      .def_property_readonly("config", &GrassmannElement::config)
      .def("coefficient", [](const GrassmannElement& a, const IndexTuple& idx) { return a.coefficient(mask_of(idx)); })
      .def("terms", &grassmann_terms)
      .def("star", &grassmann_star)
      .def("fock_norm", [](const GrassmannElement& a) { return fock_norm(a); })
      .def("operator_norm", [](const GrassmannElement& a) { return operator_norm(a); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * Complex())
      .def(Complex() * py::self)
      .def(-py::self)
      .def(py::self == py::self);

  py::class_<GarElement>(m, "GarElement")
      .def(py::init<AlgebraConfig>())
      .def_static("identity", &GarElement::identity, py::arg("config"), py::arg("c") = Complex(1.0))
      .def_static("majorana", &GarElement::majorana, py::arg("config"), py::arg("i"), py::arg("c") = Complex(1.0))
      .def_static(
          "b_monomial",
          [](AlgebraConfig c, const IndexTuple& idx, Complex coeff) {
            return GarElement::b_monomial(c, mask_of(idx), coeff);
          },
          py::arg("config"), py::arg("indices"), py::arg("c") = Complex(1.0))
      .def_static("from_grassmann", &GarElement::from_grassmann)
      .def_property_readonly("config", &GarElement::config)
      .def("scalar_part", &GarElement::scalar_part)
      .def("coefficient", [](const GarElement& a, const IndexTuple& idx) { return a.coefficient(mask_of(idx)); })
      .def("terms", &gar_terms)
      .def("is_fermionic", &GarElement::is_fermionic)
      .def("star", &gar_star)
      .def("epsilon_q", [](const GarElement& a) { return epsilon_q(a).element(); })
      .def("to_matrix", [](const GarElement& a) { return represent(a).matrix; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * Complex())
      .def(Complex() * py::self)
      .def(py::self * GrassmannElement(AlgebraConfig(0, 0)))
      .def(-py::self)
      .def(py::self == py::self);

  m.def("g_field", [](AlgebraConfig c, const std::vector<Complex>& f, const std::vector<Complex>& fp) {
    return g_field(c, f, fp);
  });
  m.def("max_distance", py::overload_cast<const GarElement&, const GarElement&>(&max_distance));

  py::class_<TopForm>(m, "TopForm")
      .def(py::init<int, Complex>(), py::arg("modes"), py::arg("value"))
      .def_static("canonical", &TopForm::canonical)
      .def_property_readonly("modes", &TopForm::modes)
      .def_property_readonly("value", &TopForm::value);
  m.def("form_pairing", &form_pairing);

  m.def("pfaffian", &pfaffian);
  m.def("pfaffian_combinatorial", &pfaffian_combinatorial);
  m.def("pfaffian_elimination", &pfaffian_elimination);
  m.def("pfaffian_wrt_form", &pfaffian_wrt_form);
  m.def("gaussian_integral", py::overload_cast<const TopForm&, const ComplexMatrix&>(&gaussian_integral));

  m.def("fourier_coefficients", [](const GarElement& a, const TopForm& v) {
    py::dict out;
    const GHolFunction f = fourier_gar(a, v);
    for (Mask s : f.subsets()) out[key(s)] = f.coefficient(s);
    return out;
  });
  m.def("fourier_round_trip", [](const GarElement& a, const TopForm& v) { return reconstruct(fourier_gar(a, v), v); });

  py::class_<CovarianceMatrix>(m, "CovarianceMatrix")
      .def_property_readonly("matrix", &CovarianceMatrix::matrix)
      .def_property_readonly("dim", &CovarianceMatrix::dim)
      .def_property_readonly("modes", &CovarianceMatrix::modes);
  py::class_<BasisProjection>(m, "BasisProjection")
      .def_property_readonly("matrix", &BasisProjection::matrix)
      .def_property_readonly("covariance", &BasisProjection::covariance)
      .def_property_readonly("dim", &BasisProjection::dim)
      .def_property_readonly("modes", &BasisProjection::modes);

  m.def("validate_covariance", &validate_covariance, py::arg("s"), py::arg("tol") = 1e-10);
  m.def("validate_basis_projection", &validate_basis_projection, py::arg("p"), py::arg("tol") = 1e-10);
  m.def("canonical_covariance", &canonical_covariance, py::arg("modes"), py::arg("c"));
  m.def("canonical_basis_projection", &canonical_basis_projection, py::arg("modes"));
  m.def("random_covariance", [](int modes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_covariance(modes, rng);
  }, py::arg("modes"), py::arg("seed"));
  m.def("random_basis_projection", [](int modes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_basis_projection(modes, rng);
  }, py::arg("modes"), py::arg("seed"));
  m.def("read_matrix_file", &read_matrix_file);

  m.def("moment", [](const CovarianceMatrix& s, const std::vector<int>& idx) { return quasifree_moment(s, idx); });
  m.def("wick_moment", [](const CovarianceMatrix& s, const std::vector<int>& idx) { return wick_moment(s, idx); });
  m.def("char_fn", [](const CovarianceMatrix& s) { return scalar_table(char_fn(s)); });
  m.def("support_projection", [](const BasisProjection& p) { return support_projection(p).element(); });
  m.def("fidelity_sq", &fidelity_sq);
  m.def("density_matrix", [](const CovarianceMatrix& s) { return density_matrix(s).matrix; });
  m.def("expectation", [](const CovarianceMatrix& s, const GarElement& a) {
    return trace_expectation(density_matrix(s), represent(a));
  });
}
