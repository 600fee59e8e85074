// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/quasifree.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace garq {

namespace {

void require_indices(const CovarianceMatrix& s, std::span<const int> indices) {
  Mask seen = 0;
  for (int i : indices) {
    if (i < 1 || i > s.dim()) throw ValidationError("moment index out of range");
    const Mask bit = Mask{1} << (i - 1);
    if (seen & bit) throw ValidationError("repeated index in moment");
    seen |= bit;
  }
}

std::vector<int> decreasing_indices(Mask subset) {
  std::vector<int> idx = indices_of(subset);
  std::reverse(idx.begin(), idx.end());
  return idx;
}

int permutation_parity(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
  }
  return inversions & 1;
}

void enumerate_pairings(const ComplexMatrix& s, std::span<const int> indices,
                        std::vector<int>& order, std::vector<bool>& used, Complex& total) {
  const std::size_t k = indices.size();
  std::size_t first = 0;
  while (first < k && used[first]) ++first;
  if (first == k) {
    Complex term = permutation_parity(order) ? -1.0 : 1.0;
    for (std::size_t p = 0; p < order.size(); p += 2) {
      term *= s(indices[order[p]] - 1, indices[order[p + 1]] - 1);
    }
    total += term;
    return;
  }
  used[first] = true;
  for (std::size_t second = first + 1; second < k; ++second) {
    if (used[second]) continue;
    used[second] = true;
    order.push_back(static_cast<int>(first));
    order.push_back(static_cast<int>(second));
    enumerate_pairings(s, indices, order, used, total);
    order.resize(order.size() - 2);
    used[second] = false;
  }
  used[first] = false;
}

ComplexMatrix block_form(int modes) {
  ComplexMatrix m = ComplexMatrix::Zero(2 * modes, 2 * modes);
  for (int k = 0; k < modes; ++k) {
    m(2 * k, 2 * k + 1) = 1.0;
    m(2 * k + 1, 2 * k) = -1.0;
  }
  return m;
}

}  // namespace

CovarianceMatrix validate_covariance(const ComplexMatrix& s, double tol) {
  if (s.rows() != s.cols() || s.rows() % 2) {
    throw ValidationError("covariance must be square with even dimension");
  }
  if (!s.allFinite()) throw ValidationError("covariance entries must be finite");
  if (s.size() && (s - s.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw ValidationError("not hermitian");
  }
  if (s.size()) {
    const ComplexMatrix h = 0.5 * (s + s.adjoint());
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -tol || eig.eigenvalues().maxCoeff() > 1.0 + tol) {
      throw ValidationError("spectrum outside [0,1]");
    }
    const ComplexMatrix id = ComplexMatrix::Identity(s.rows(), s.cols());
    if ((s + s.conjugate() - id).cwiseAbs().maxCoeff() > tol) {
      throw ValidationError("S + JSJ ≠ 1");
    }
  }
  return CovarianceMatrix(s);
}

BasisProjection validate_basis_projection(const ComplexMatrix& p, double tol) {
  CovarianceMatrix cov = validate_covariance(p, tol);
  if (p.size() && (p * p - p).cwiseAbs().maxCoeff() > tol) {
    throw ValidationError("not a projection");
  }
  return BasisProjection(std::move(cov));
}

Complex quasifree_moment(const CovarianceMatrix& s, std::span<const int> indices) {
  require_indices(s, indices);
  const int k = static_cast<int>(indices.size());
  if (k % 2) return 0.0;
  if (k == 0) return 1.0;
  ComplexMatrix a = ComplexMatrix::Zero(k, k);
  for (int x = 0; x < k; ++x) {
    for (int y = x + 1; y < k; ++y) {
      a(x, y) = s.matrix()(indices[x] - 1, indices[y] - 1);
      a(y, x) = -a(x, y);
    }
  }
  return pfaffian(a);
}

Complex wick_moment(const CovarianceMatrix& s, std::span<const int> indices) {
  require_indices(s, indices);
  if (indices.size() % 2) return 0.0;
  if (indices.size() > 12) throw SizeError("pairing enumeration limited to 12 indices");
  std::vector<int> order;
  std::vector<bool> used(indices.size(), false);
  Complex total = 0.0;
  enumerate_pairings(s.matrix(), indices, order, used, total);
  return total;
}

Complex monomial_moment(const CovarianceMatrix& s, Mask fermionic_subset) {
  if (fermionic_subset & ~low_bits(s.dim())) throw ValidationError("moment index out of range");
  const auto idx = decreasing_indices(fermionic_subset);
  return quasifree_moment(s, idx);
}

RightModuleHom g_extension(const CovarianceMatrix& s, int grassmann_dim) {
  const AlgebraConfig config(s.dim(), grassmann_dim);
  RightModuleHom phi(config);
  for (Mask subset = 0; subset <= low_bits(s.dim()); ++subset) {
    if (std::popcount(subset) % 2) continue;
    const Complex m = monomial_moment(s, subset);
    if (m != Complex{}) phi.set(subset, GrassmannElement::scalar(config, m));
    if (subset == low_bits(s.dim())) break;
  }
  return phi;
}

GHolFunction char_fn(const CovarianceMatrix& s) { return fourier_hom(g_extension(s)); }

GHolFunction char_fn_exponential(const CovarianceMatrix& s) {
  const VariableSpace space(AlgebraConfig(s.dim(), 0), 1);
  return ghol_exp(quadratic_form(space, 0, s.matrix()) * -1.0);
}

FermionElement support_projection(const BasisProjection& p) {
  const int dim = p.dim();
  const AlgebraConfig config(dim, 0);
  std::vector<detail::Term> raw;
  for (Mask subset = 0;; ++subset) {
    if (std::popcount(subset) % 2 == 0) {
      const int k = std::popcount(subset);
      const Complex m = monomial_moment(p.covariance(), subset);
      // The reversal sign in the weight cancels the one relating B^J to the
      // increasing monomial it is stored as.
      if (m != Complex{}) raw.emplace_back(subset, std::ldexp(1.0, k - p.modes()) * m);
    }
    if (subset == low_bits(dim)) break;
  }
  return FermionElement(GarElement::from_raw_terms(config, std::move(raw)));
}

int pf_sign(const TopForm& v, const BasisProjection& p) {
  const ComplexMatrix id = ComplexMatrix::Identity(p.dim(), p.dim());
  const ComplexMatrix r = id - 2.0 * p.matrix();
  const ComplexMatrix anti = 0.5 * (r - r.transpose());
  const Complex value = pfaffian_wrt_form(v, anti);
  if (std::abs(value.imag()) > 1e-8 || std::abs(std::abs(value.real()) - 1.0) > 1e-8) {
    throw Error("sign of a basis projection is not +-1");
  }
  return value.real() > 0 ? 1 : -1;
}

GHolFunction conv_support(const BasisProjection& p, const TopForm& v) {
  const FermionElement e = support_projection(p);
  return fourier_ghol(conv_hom_gar(g_extension(p.covariance()), e.element()), v);
}

GHolFunction conv_support_closed_form(const BasisProjection& p, const TopForm& v) {
  const VariableSpace space(AlgebraConfig(p.dim(), 0), 1);
  return ghol_exp(quadratic_form(space, 0, p.matrix()) * -2.0) *
         static_cast<double>(pf_sign(v, p));
}

double fidelity_sq(const BasisProjection& p, const CovarianceMatrix& s) {
  if (p.dim() != s.dim()) throw ValidationError("covariance dimension mismatch");
  const ComplexMatrix id = ComplexMatrix::Identity(p.dim(), p.dim());
  const ComplexMatrix m = id - p.matrix() - s.matrix();
  if (m.size() == 0) return 1.0;
  return std::sqrt(std::abs(m.fullPivLu().determinant()));
}

Eigen::MatrixXd random_orthogonal(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = normal(rng);
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

CovarianceMatrix covariance_from_weights(std::span<const double> weights,
                                         const Eigen::MatrixXd& orthogonal) {
  const int modes = static_cast<int>(weights.size());
  if (orthogonal.rows() != 2 * modes || orthogonal.cols() != 2 * modes) {
    throw ValidationError("orthogonal matrix dimension mismatch");
  }
  ComplexMatrix sigma = block_form(modes);
  for (int k = 0; k < modes; ++k) {
    if (weights[k] < 0.0 || weights[k] > 1.0) throw ValidationError("mode weight outside [0,1]");
    sigma.block(2 * k, 2 * k, 2, 2) *= weights[k];
  }
  const ComplexMatrix o = orthogonal.cast<Complex>();
  const ComplexMatrix m = o * sigma * o.transpose();
  const ComplexMatrix id = ComplexMatrix::Identity(2 * modes, 2 * modes);
  ComplexMatrix s = 0.5 * (id + Complex(0.0, 1.0) * m);
  // Remove rounding asymmetry so the constraints hold to machine precision.
  s = 0.5 * (s + s.adjoint()).eval();
  return validate_covariance(s, 1e-10);
}

CovarianceMatrix random_covariance(int modes, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(modes);
  for (auto& w : weights) w = unit(rng);
  return covariance_from_weights(weights, random_orthogonal(2 * modes, rng));
}

BasisProjection random_basis_projection(int modes, std::mt19937_64& rng) {
  const std::vector<double> weights(modes, 1.0);
  const CovarianceMatrix p = covariance_from_weights(weights, random_orthogonal(2 * modes, rng));
  return validate_basis_projection(p.matrix(), 1e-10);
}

CovarianceMatrix canonical_covariance(int modes, double c) {
  const std::vector<double> weights(modes, c);
  return covariance_from_weights(weights, Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

BasisProjection canonical_basis_projection(int modes) {
  return validate_basis_projection(canonical_covariance(modes, 1.0).matrix(), 1e-10);
}

}  // namespace garq
