// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Dense Fock-space matrices used to cross-check the symbolic code.
 *
 * Modes 1..n carry the fermionic generators, modes n+1..n+m_env the
 * Grassmann ones (Jordan-Wigner order). With c_k the annihilators,
 *   B_{2k-1} = (c_k + c_k^dag) / sqrt 2,  B_{2k} = i (c_k^dag - c_k) / sqrt 2,
 *   g_j = c_{n+j}^dag.
 * The map is an algebra homomorphism but not a *-map on the Grassmann part.
 */

#pragma once

#include "garq/quasifree.hpp"

namespace garq {

inline constexpr int kMaxOracleModes = 12;

struct DenseOperator {
  ComplexMatrix matrix;
  int modes = 0;

  int dim() const noexcept { return static_cast<int>(matrix.rows()); }
};

/// Dense matrix of `a` on n + m_env modes. Throws SizeError above
/// kMaxOracleModes and ValidationError if `a` uses g_j with j > m_env.
DenseOperator represent(const GarElement& a, int m_env);
DenseOperator represent(const GarElement& a);
/// Grassmann elements on m_env = m modes (no fermionic modes).
DenseOperator represent(const GrassmannElement& a);

/// Largest singular value.
double operator_norm(const DenseOperator& a);
double operator_norm(const GarElement& a);
double operator_norm(const GrassmannElement& a);

/// rho with tr(rho rep(B^I)) = omega_S(B^I), from the pairing-sum moments.
DenseOperator density_matrix(const CovarianceMatrix& s);

/// tr(rho E).
Complex trace_expectation(const DenseOperator& rho, const DenseOperator& e);
/// Sum of |eigenvalues| of the hermitian difference.
double trace_norm_distance(const DenseOperator& a, const DenseOperator& b);

}  // namespace garq
