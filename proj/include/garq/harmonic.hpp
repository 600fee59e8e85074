// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file harmonic.hpp
 * @brief Fourier transforms and convolutions on anticommutative phase space.
 *
 * Every integral is taken symbolically: the integration variable eta is a
 * second block of variables that `integrate` removes. Results are functions
 * of the single block xi over VariableSpace(base, 1).
 */

#pragma once

#include <map>

#include "garq/phase_space.hpp"

namespace garq {

/// Right-module map phi from the GAR algebra to its Grassmann part, fixed by
/// its values on the monomials B^I: phi(sum_I B^I lambda_I) = sum phi(B^I) lambda_I.
class RightModuleHom {
 public:
  explicit RightModuleHom(AlgebraConfig config) : config_(config) {}

  const AlgebraConfig& config() const noexcept { return config_; }
  /// Sets phi(B^I).
  void set(Mask fermionic_subset, const GrassmannElement& value);
  /// phi(B^I); zero if unset.
  GrassmannElement value(Mask fermionic_subset) const;
  const std::map<Mask, GrassmannElement>& table() const noexcept { return table_; }

  /// Accepts any element with the same fermionic dimension and at least as
  /// many Grassmann generators; values are embedded as needed.
  GrassmannElement operator()(const GarElement& a) const;

 private:
  AlgebraConfig config_;
  std::map<Mask, GrassmannElement> table_;
};

/// xi -> w(-xi) int v(eta) alpha_{eta}(A) exp(<xi*, eta>), before the check
/// that it has no fermionic content. Equivalently alpha_{-eta}(A) against
/// exp(-<xi*, eta>).
GHolFunction fourier_gar_unprojected(const GarElement& a, const TopForm& v);
/// As above, verified Grassmann-valued; throws if a fermionic residual above
/// 1e-9 relative remains.
GHolFunction fourier_gar(const GarElement& a, const TopForm& v);
/// xi -> int v(eta) f(eta) exp(<xi*, eta>).
GHolFunction fourier_ghol(const GHolFunction& f, const TopForm& v);
/// xi -> phi(w(xi)) = sum_I phi(B^I) xi_I.
GHolFunction fourier_hom(const RightModuleHom& phi);

/// (f * f')(xi) = int v(eta) f(eta) f'(xi - eta).
GHolFunction conv_ghol(const GHolFunction& f, const GHolFunction& g, const TopForm& v);
/// A * f = int v(eta) alpha_{-eta}(A) f(eta).
GarElement conv_gar_ghol(const GarElement& a, const GHolFunction& f, const TopForm& v);
/// (phi * A)(xi) = phi(alpha_xi(A)).
GHolFunction conv_hom_gar(const RightModuleHom& phi, const GarElement& a);

/// int v(xi) w(xi) F(xi).
GarElement reconstruct(const GHolFunction& fhat, const TopForm& v);

/// h with divisor * h = numerator, for a divisor whose constant term has a
/// nonzero scalar part. Throws Error("not a divisor") otherwise.
GHolFunction divide(const GHolFunction& numerator, const GHolFunction& divisor);

}  // namespace garq
