// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file gar.hpp
 * @brief The GAR algebra: twisted tensor product of the fermionic part
 *        (Majorana fields B_i = G(e_i), B_i^2 = 1/2) and the Grassmann part.
 *
 * Canonical form A = sum_I B^I lambda_I with B^I = B_{ik} ... B_{i1}
 * (decreasing indices). Storage is flat: one mask per term whose low 2n bits
 * are the fermionic subset and whose high bits are the Grassmann subset, in
 * normal order e_{F} g_{G}. The conversion to B^I costs only the reversal
 * sign of |I| generators.
 */

#pragma once

#include <span>
#include <vector>

#include "garq/grassmann.hpp"

namespace garq {

class GarElement {
 public:
  explicit GarElement(AlgebraConfig config) : config_(config) {}

  static GarElement identity(AlgebraConfig config, Complex c = 1.0);
  /// B_i = G(e_i), 1-based i in 1..2n.
  static GarElement majorana(AlgebraConfig config, int i, Complex c = 1.0);
  /// c * B^I in the decreasing-index convention.
  static GarElement b_monomial(AlgebraConfig config, Mask fermionic_subset, Complex c = 1.0);
  /// B^I lambda.
  static GarElement canonical_term(Mask fermionic_subset, const GrassmannElement& lambda);
  /// 1 * lambda.
  static GarElement from_grassmann(const GrassmannElement& lambda);
  /// Raw normal-ordered terms over the flat mask layout.
  static GarElement from_raw_terms(AlgebraConfig config, std::vector<detail::Term> terms);

  const AlgebraConfig& config() const noexcept { return config_; }
  std::span<const detail::Term> raw_terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Fermionic subsets I with a nonzero lambda_I, increasing.
  std::vector<Mask> fermionic_subsets() const;
  /// lambda_I in A = sum_I B^I lambda_I.
  GrassmannElement coefficient(Mask fermionic_subset) const;
  Complex scalar_part() const { return detail::coefficient(terms_, 0); }

  /// Grading from |I| + deg(lambda_I).
  Parity parity() const noexcept;
  /// True when every lambda_I is a scalar.
  bool is_fermionic() const noexcept;
  /// Largest modulus among terms carrying a fermionic generator.
  double fermionic_residual() const noexcept;
  /// The Grassmann part; throws if any fermionic content is stored.
  GrassmannElement to_grassmann() const;
  double max_abs() const { return detail::max_abs(terms_); }

  GarElement& operator+=(const GarElement& other);
  GarElement& operator-=(const GarElement& other);
  GarElement& operator*=(Complex s);

  friend GarElement operator+(GarElement a, const GarElement& b) { return a += b; }
  friend GarElement operator-(GarElement a, const GarElement& b) { return a -= b; }
  friend GarElement operator*(GarElement a, Complex s) { return a *= s; }
  friend GarElement operator*(Complex s, GarElement a) { return a *= s; }
  friend GarElement operator-(GarElement a) { return a *= -1.0; }
  friend GarElement operator*(const GarElement& a, const GarElement& b);
  /// Right module action A * lambda.
  friend GarElement operator*(const GarElement& a, const GrassmannElement& lambda);
  /// Left action lambda * A.
  friend GarElement operator*(const GrassmannElement& lambda, const GarElement& a);

  bool operator==(const GarElement& other) const = default;

 private:
  GarElement(AlgebraConfig config, detail::Terms terms)
      : config_(config), terms_(std::move(terms)) {}

  AlgebraConfig config_;
  detail::Terms terms_;
};

/// A GAR element whose every coefficient lambda_I is a scalar.
class FermionElement {
 public:
  /// Throws ValidationError if `element` has Grassmann content.
  explicit FermionElement(GarElement element);

  const GarElement& element() const noexcept { return element_; }
  operator const GarElement&() const noexcept { return element_; }
  /// Scalar coefficient of B^I.
  Complex coefficient(Mask fermionic_subset) const;

 private:
  GarElement element_;
};

/// G(f) for f = (fermionic components over QH, Grassmann components over the
/// truncated complement): sum_i f_i B_i + sum_j f'_j g_j.
GarElement g_field(AlgebraConfig config, std::span<const Complex> fermionic,
                   std::span<const Complex> grassmann);

GarElement gar_mul(const GarElement& a, const GarElement& b);
GarElement gar_star(const GarElement& a);
/// Keeps the Grassmann-degree-0 part of every coefficient.
FermionElement epsilon_q(const GarElement& a);
/// [A,B] unless both are odd, then {A,B}. Throws on non-homogeneous input.
GarElement graded_commutator(const GarElement& a, const GarElement& b);

double max_distance(const GarElement& a, const GarElement& b);

/// Re-expresses `a` over a config with the same fermionic dimension and at
/// least as many Grassmann generators.
GarElement embed(const GarElement& a, AlgebraConfig target);

/// exp(x) for x = c + N with N built from terms that each carry a nilpotent
/// generator; the series terminates. Throws otherwise.
GarElement exp_nilpotent(const GarElement& x);

/// Flat mask of B-subset I and Grassmann subset G under `config`.
Mask gar_key(const AlgebraConfig& config, Mask fermionic_subset, Mask grassmann_subset);

}  // namespace garq
