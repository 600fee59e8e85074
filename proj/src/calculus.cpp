// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/calculus.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

namespace garq {

namespace {

Complex pf_recursive(const ComplexMatrix& a, std::vector<int>& rest) {
  if (rest.empty()) return 1.0;
  const int first = rest.front();
  Complex sum = 0.0;
  double sign = 1.0;
  for (std::size_t k = 1; k < rest.size(); ++k, sign = -sign) {
    const int partner = rest[k];
    const Complex entry = a(first, partner);
    if (entry == Complex{}) continue;
    std::vector<int> sub;
    sub.reserve(rest.size() - 2);
    for (std::size_t t = 1; t < rest.size(); ++t) {
      if (t != k) sub.push_back(rest[t]);
    }
    sum += sign * entry * pf_recursive(a, sub);
  }
  return sum;
}

void require_square(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("matrix must be square");
}

}  // namespace

void require_antisymmetric(const ComplexMatrix& a, double tol) {
  require_square(a);
  if (!a.allFinite()) throw ValidationError("matrix entries must be finite");
  if (a.size() == 0) return;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double dev = (a + a.transpose()).cwiseAbs().maxCoeff();
  if (dev > tol * scale) throw ValidationError("matrix is not antisymmetric");
}

Complex pfaffian_combinatorial(const ComplexMatrix& a) {
  require_antisymmetric(a);
  const auto n = a.rows();
  if (n % 2) return 0.0;
  if (n > 16) throw SizeError("combinatorial pfaffian limited to dimension 16");
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return pf_recursive(a, all);
}

Complex pfaffian_elimination(const ComplexMatrix& input) {
  require_antisymmetric(input);
  const Eigen::Index n = input.rows();
  if (n % 2) return 0.0;
  ComplexMatrix a = input;
  Complex pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp;
    a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == Complex{}) return 0.0;
    pf *= a(k, k + 1);
    const Eigen::Index rest = n - k - 2;
    if (rest > 0) {
      const Eigen::VectorXcd tau = a.row(k).tail(rest).transpose() / a(k, k + 1);
      const Eigen::VectorXcd col = a.col(k + 1).tail(rest);
      a.bottomRightCorner(rest, rest) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

Complex pfaffian(const ComplexMatrix& a) {
  return a.rows() <= 12 ? pfaffian_combinatorial(a) : pfaffian_elimination(a);
}

GrassmannElement two_form_of(const ComplexMatrix& a) {
  require_square(a);
  const int dim = static_cast<int>(a.rows());
  const AlgebraConfig wedge(0, dim);
  std::vector<detail::Term> raw;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const Complex c = 0.5 * (a(i, j) - a(j, i));
      if (c != Complex{}) raw.emplace_back((Mask{1} << i) | (Mask{1} << j), c);
    }
  }
  return GrassmannElement::from_terms(wedge, std::move(raw));
}

GHolFunction wedge_function(const VariableSpace& space, const GrassmannElement& a) {
  const AlgebraConfig& base = space.base();
  const int dim = base.fermionic_dim();
  const int m = base.grassmann_dim();
  require_same_config(a.config(), AlgebraConfig(0, dim + m));
  std::vector<detail::Term> raw;
  for (const auto& [mask, c] : a.terms()) {
    const Mask wedge = mask & low_bits(dim);
    const Mask grass = mask >> dim;
    // Lambda_W g_G = (-1)^{|W||G|} g_G Lambda_W
    const bool odd = (std::popcount(wedge) & 1) && (std::popcount(grass) & 1);
    raw.emplace_back((grass << dim) | (wedge << (dim + m)), odd ? -c : c);
  }
  return GHolFunction(space, ValueModule::grassmann,
                      GarElement::from_raw_terms(space.extended(), std::move(raw)));
}

Complex pfaffian_wrt_form(const TopForm& v, const ComplexMatrix& a) {
  require_antisymmetric(a);
  const int dim = static_cast<int>(a.rows());
  if (dim != 2 * v.modes()) throw ValidationError("top form does not match the matrix dimension");
  const int n = v.modes();
  const double rsign = detail::reversal_parity(dim) ? -1.0 : 1.0;
  if (dim > 16) return rsign * pfaffian_elimination(a) / v.value();
  const GrassmannElement form = two_form_of(a);
  GrassmannElement power = GrassmannElement::scalar(form.config(), 1.0);
  for (int k = 1; k <= n; ++k) power = power * form * (1.0 / k);
  return rsign * power.coefficient(low_bits(dim)) / v.value();
}

GHolFunction quadratic_form(const VariableSpace& space, int block, const ComplexMatrix& a) {
  require_square(a);
  const int dim = space.block_size();
  if (a.rows() != dim) throw ValidationError("matrix dimension does not match the phase space");
  GrassmannElement q(space.extended());
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const Complex c = 0.5 * (a(i, j) - a(j, i));
      if (c == Complex{}) continue;
      q += space.variable(block, i + 1, c) * space.variable(block, j + 1);
    }
  }
  return GHolFunction(space, ValueModule::grassmann, GarElement::from_grassmann(q));
}

GHolFunction pairing_function(const VariableSpace& space, int left, int right) {
  GrassmannElement p(space.extended());
  for (int i = 1; i <= space.block_size(); ++i) {
    p += space.variable(left, i) * space.variable(right, i);
  }
  return GHolFunction(space, ValueModule::grassmann, GarElement::from_grassmann(p));
}

Complex gaussian_integral(const TopForm& v, const ComplexMatrix& a) {
  return pfaffian_wrt_form(v, a);
}

GHolFunction gaussian_integral(const TopForm& v, const ComplexMatrix& a,
                               const VariableSpace& space, int source_block) {
  require_antisymmetric(a);
  const Eigen::FullPivLU<ComplexMatrix> lu(a);
  if (a.rows() > 0 && !lu.isInvertible()) {
    throw ValidationError("source term requires invertible covariance");
  }
  const ComplexMatrix inv = a.rows() > 0 ? ComplexMatrix(lu.inverse()) : a;
  const Complex pf = pfaffian_wrt_form(v, a);
  return ghol_exp(quadratic_form(space, source_block, inv)) * pf;
}

GHolFunction gaussian_integral_expanded(const TopForm& v, const ComplexMatrix& a,
                                        const VariableSpace& space, int source_block) {
  require_antisymmetric(a);
  const int scratch = space.blocks();
  const GHolFunction wide_zero = GHolFunction::zero(VariableSpace(space.base(), scratch + 1),
                                                    ValueModule::grassmann);
  const VariableSpace& wide = wide_zero.space();
  const GHolFunction exponent =
      quadratic_form(wide, scratch, a) + pairing_function(wide, source_block, scratch);
  return narrow(integrate(v, ghol_exp(exponent), scratch), space.blocks());
}

}  // namespace garq
