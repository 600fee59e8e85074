// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quasifree.hpp
 * @brief Quasifree states from covariance matrices: moments, G-extension,
 *        characteristic functions, support projections and fidelities.
 *
 * S_ij = omega(B_i B_j) in the real basis. Valid covariances are hermitian,
 * have spectrum in [0, 1] and satisfy S + conj(S) = 1.
 */

#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "garq/calculus.hpp"
#include "garq/harmonic.hpp"

namespace garq {

class CovarianceMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return s_; }
  int dim() const noexcept { return static_cast<int>(s_.rows()); }
  int modes() const noexcept { return dim() / 2; }

 private:
  explicit CovarianceMatrix(ComplexMatrix s) : s_(std::move(s)) {}
  friend CovarianceMatrix validate_covariance(const ComplexMatrix& s, double tol);

  ComplexMatrix s_;
};

/// A covariance that is also a projection; its state is pure.
class BasisProjection {
 public:
  const CovarianceMatrix& covariance() const noexcept { return p_; }
  const ComplexMatrix& matrix() const noexcept { return p_.matrix(); }
  int dim() const noexcept { return p_.dim(); }
  int modes() const noexcept { return p_.modes(); }

 private:
  explicit BasisProjection(CovarianceMatrix p) : p_(std::move(p)) {}
  friend BasisProjection validate_basis_projection(const ComplexMatrix& p, double tol);

  CovarianceMatrix p_;
};

/// Throws ValidationError naming the violated constraint: "not hermitian",
/// "spectrum outside [0,1]" or "S + JSJ ≠ 1".
CovarianceMatrix validate_covariance(const ComplexMatrix& s, double tol = 1e-10);
/// As above plus idempotence ("not a projection").
BasisProjection validate_basis_projection(const ComplexMatrix& p, double tol = 1e-10);

/// omega_S(B_{i1} ... B_{ik}) for distinct 1-based indices, as a Pfaffian.
Complex quasifree_moment(const CovarianceMatrix& s, std::span<const int> indices);
/// The same moment by explicit enumeration of pairings; k <= 12.
Complex wick_moment(const CovarianceMatrix& s, std::span<const int> indices);
/// omega_S(B^I) for the decreasing monomial B^I.
Complex monomial_moment(const CovarianceMatrix& s, Mask fermionic_subset);

/// phi(B^I) = omega_S(B^I) over config (2n, grassmann_dim).
RightModuleHom g_extension(const CovarianceMatrix& s, int grassmann_dim = 0);

/// Fourier transform of the G-extension: sum_I omega_S(B^I) xi_I.
GHolFunction char_fn(const CovarianceMatrix& s);
/// exp(-1/2 <xi*, S xi>) expanded.
GHolFunction char_fn_exponential(const CovarianceMatrix& s);

/// Rank-one projection E_P with omega_P(E_P) = 1, built from the moments:
/// E_P = 2^{-n} sum_J 2^{|J|} (-1)^{|J|(|J|-1)/2} omega_P(B^J) B^J.
FermionElement support_projection(const BasisProjection& p);

/// Pf_{[v,J]}(1 - 2P), checked to be +-1.
int pf_sign(const TopForm& v, const BasisProjection& p);

/// F(omega_P * E_P): fourier_ghol of conv_hom_gar(g_extension(P), E_P).
GHolFunction conv_support(const BasisProjection& p, const TopForm& v);
/// eps_{[v,P]} exp(-<xi*, P xi>) expanded.
GHolFunction conv_support_closed_form(const BasisProjection& p, const TopForm& v);

/// |det(1 - P - S)|^{1/2}.
double fidelity_sq(const BasisProjection& p, const CovarianceMatrix& s);

/// Haar-like random real orthogonal matrix of size dim.
Eigen::MatrixXd random_orthogonal(int dim, std::mt19937_64& rng);
/// S = 1/2 (1 + i M), M = O diag(c_k Sigma) O^T with the given mode weights.
CovarianceMatrix covariance_from_weights(std::span<const double> weights,
                                         const Eigen::MatrixXd& orthogonal);
/// Weights drawn uniformly from [0, 1].
CovarianceMatrix random_covariance(int modes, std::mt19937_64& rng);
BasisProjection random_basis_projection(int modes, std::mt19937_64& rng);
/// The canonical single-block covariance 1/2 (1 + i c M) in every mode.
CovarianceMatrix canonical_covariance(int modes, double c);
BasisProjection canonical_basis_projection(int modes);

}  // namespace garq
