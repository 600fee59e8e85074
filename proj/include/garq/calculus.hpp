// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file calculus.hpp
 * @brief Pfaffians, the two-form of an antisymmetric matrix, and Gaussian
 *        Berezin integrals.
 *
 * Matrices are given in the real orthonormal basis e_1..e_2n, so
 * A_ij = <J e_i, A e_j> and J-antisymmetry is plain antisymmetry.
 */

#pragma once

#include <Eigen/Dense>

#include "garq/ghol.hpp"

namespace garq {

using ComplexMatrix = Eigen::MatrixXcd;

/// Throws ValidationError unless max|A + A^T| <= tol * max(1, max|A|).
void require_antisymmetric(const ComplexMatrix& a, double tol = 1e-12);

/// Pair-partition recursion; 2n <= 16.
Complex pfaffian_combinatorial(const ComplexMatrix& a);
/// Parlett-Reid reduction to tridiagonal form with pivoting.
Complex pfaffian_elimination(const ComplexMatrix& a);
/// Combinatorial up to 2n = 12, elimination above. Odd dimension gives 0.
Complex pfaffian(const ComplexMatrix& a);

/// a = sum_{i<j} A_ij Lambda_i Lambda_j over the 2n generators of the
/// fermionic wedge (config (0, 2n)); only the antisymmetric part of A counts.
GrassmannElement two_form_of(const ComplexMatrix& a);

/// xi -> sum_I a^I xi_I for a = sum_I a^I Lambda_I (increasing order). `a`
/// lives over AlgebraConfig(0, 2n + m): generators 1..2n span the wedge over
/// the fermionic dimensions, the rest are the Grassmann part of space.base().
/// An algebra homomorphism.
GHolFunction wedge_function(const VariableSpace& space, const GrassmannElement& a);

/// Coefficient of a^n / n! on v, i.e. Pf_{[v,J]}(A).
Complex pfaffian_wrt_form(const TopForm& v, const ComplexMatrix& a);

/// 1/2 sum_ij A_ij x_i x_j over the variables of `block`.
GHolFunction quadratic_form(const VariableSpace& space, int block, const ComplexMatrix& a);
/// sum_i x_i y_i with x from `left` and y from `right`.
GHolFunction pairing_function(const VariableSpace& space, int left, int right);

/// Integral of exp(1/2 <xi*, A xi>) without a source: Pf_{[v,J]}(A).
Complex gaussian_integral(const TopForm& v, const ComplexMatrix& a);
/// Closed form Pf_{[v,J]}(A) exp(1/2 <eta*, A^{-1} eta>) with eta the
/// variables of `source_block`. Throws if A is singular.
GHolFunction gaussian_integral(const TopForm& v, const ComplexMatrix& a,
                               const VariableSpace& space, int source_block = 0);
/// The same integral by expanding exp(1/2 <xi*, A xi> + <eta*, xi>) over a
/// scratch block and integrating it out.
GHolFunction gaussian_integral_expanded(const TopForm& v, const ComplexMatrix& a,
                                        const VariableSpace& space, int source_block = 0);

}  // namespace garq
