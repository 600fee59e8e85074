// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file phase_space.hpp
 * @brief Even phase-space vectors xi = sum_i e_i (x) xi_i, the rigging map,
 *        Grassmann-Bose fields, Weyl operators and translations.
 *
 * Components are odd Grassmann elements. A symbolic vector is an ordinary
 * PhaseVector whose components are the variables of one block of a
 * VariableSpace, so every operation here works on both.
 *
 * Sign conventions: <xi*, eta> denotes sum_i xi_i eta_i, the graded
 * commutator of fields is [Phi(xi), Phi(eta)] = -sum_i xi_i eta_i, and
 * w(xi + eta) = exp(1/2 <xi*, eta>) w(xi) w(eta).
 */

#pragma once

#include <vector>

#include "garq/ghol.hpp"

namespace garq {

class PhaseVector {
 public:
  /// 2n components over `config`, each odd or zero.
  PhaseVector(AlgebraConfig config, std::vector<GrassmannElement> components);

  static PhaseVector zero(AlgebraConfig config);
  /// e_i (x) lambda, 1-based i.
  static PhaseVector single(AlgebraConfig config, int i, const GrassmannElement& lambda);
  /// The variables of `block`, scaled.
  static PhaseVector symbolic(const VariableSpace& space, int block, Complex scale = 1.0);

  const AlgebraConfig& config() const noexcept { return config_; }
  const std::vector<GrassmannElement>& components() const noexcept { return components_; }
  const GrassmannElement& operator[](int i) const { return components_.at(i); }
  int size() const noexcept { return static_cast<int>(components_.size()); }

  PhaseVector& operator+=(const PhaseVector& other);
  PhaseVector& operator*=(Complex s);
  friend PhaseVector operator+(PhaseVector a, const PhaseVector& b) { return a += b; }
  friend PhaseVector operator*(Complex s, PhaseVector a) { return a *= s; }
  friend PhaseVector operator-(PhaseVector a) { return a *= -1.0; }
  friend PhaseVector operator-(PhaseVector a, const PhaseVector& b) { return a += -b; }

 private:
  AlgebraConfig config_;
  std::vector<GrassmannElement> components_;
};

/// sum_i xi_i* eta_i.
GrassmannElement rigging(const PhaseVector& xi, const PhaseVector& eta);
/// <xi*, eta> = sum_i xi_i eta_i.
GrassmannElement symplectic_pairing(const PhaseVector& xi, const PhaseVector& eta);
/// Phase-space adjoint, components -xi_i*; Phi(xi)* = Phi(conjugate(xi)).
PhaseVector conjugate(const PhaseVector& xi);
/// Phi(xi) = sum_i B_i xi_i.
GarElement bose_field(const PhaseVector& xi);
/// Value of the graded commutator [Phi(xi), Phi(eta)] = -sum_i xi_i eta_i.
GrassmannElement ccr_form(const PhaseVector& xi, const PhaseVector& eta);
/// w(xi) = exp(Phi(xi)).
GarElement weyl(const PhaseVector& xi);
/// alpha_xi(A) = w(-xi) A w(xi). A may live over a smaller Grassmann part.
GarElement translate(const PhaseVector& xi, const GarElement& a);

/// Phi of the variables of `block`, as a GAR-valued function.
GHolFunction bose_field(const VariableSpace& space, int block = 0);
/// w(sign * xi) over the variables of `block`.
GHolFunction weyl(const VariableSpace& space, int block = 0, double sign = 1.0);
/// alpha_xi(A) over the variables of `block`; A is over space.base().
GHolFunction translate(const VariableSpace& space, const GarElement& a, int block = 0,
                       double sign = 1.0);

/// F(xi) for a function of block 0 alone; xi lives over space.base().
GarElement evaluate(const GHolFunction& f, const PhaseVector& xi);

/// Lifts a GrassmannElement over the extended config to a function.
GHolFunction as_function(const VariableSpace& space, const GrassmannElement& value);

}  // namespace garq
