// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file grassmann.hpp
 * @brief The Grassmann part: exact sparse arithmetic over m anticommuting
 *        nilpotent generators g_1..g_m.
 *
 * Generators form a real orthonormal basis, so g_j⋆ = g_j and the star of a
 * monomial is a pure reversal sign. Masks index g_j by bit j-1.
 */

#pragma once

#include <span>

#include "garq/config.hpp"
#include "garq/detail/terms.hpp"

namespace garq {

enum class Parity { even, odd, mixed };

/// Parity of a single monomial/term of the given degree.
constexpr Parity parity_of_degree(int degree) noexcept {
  return (degree % 2) ? Parity::odd : Parity::even;
}

class GrassmannElement {
 public:
  explicit GrassmannElement(AlgebraConfig config) : config_(config) {}

  static GrassmannElement scalar(AlgebraConfig config, Complex value);
  /// g_j, 1-based.
  static GrassmannElement generator(AlgebraConfig config, int j, Complex coeff = 1.0);
  /// coeff * g_{i1} ... g_{ik} for the set bits of `mask` (increasing order).
  static GrassmannElement monomial(AlgebraConfig config, Mask mask, Complex coeff = 1.0);
  /// Takes raw terms; duplicates are merged and zeros dropped.
  static GrassmannElement from_terms(AlgebraConfig config, std::vector<detail::Term> terms);

  const AlgebraConfig& config() const noexcept { return config_; }
  std::span<const detail::Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Complex coefficient(Mask mask) const { return detail::coefficient(terms_, mask); }
  Complex scalar_part() const { return coefficient(0); }
  int max_degree() const noexcept;
  /// Largest coefficient modulus (0 for the zero element).
  double max_abs() const { return detail::max_abs(terms_); }

  /// Part of the given parity (even or odd).
  GrassmannElement homogeneous_part(Parity p) const;

  GrassmannElement& operator+=(const GrassmannElement& other);
  GrassmannElement& operator-=(const GrassmannElement& other);
  GrassmannElement& operator*=(Complex s);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(GrassmannElement a, Complex s) { return a *= s; }
  friend GrassmannElement operator*(Complex s, GrassmannElement a) { return a *= s; }
  friend GrassmannElement operator-(GrassmannElement a) { return a *= -1.0; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);

  /// Exact (bitwise) equality of the stored terms.
  bool operator==(const GrassmannElement& other) const = default;

 private:
  GrassmannElement(AlgebraConfig config, detail::Terms terms)
      : config_(config), terms_(std::move(terms)) {}

  AlgebraConfig config_;
  detail::Terms terms_;
};

GrassmannElement grassmann_mul(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement grassmann_star(const GrassmannElement& a);
/// sqrt of the sum of squared coefficient moduli in the wedge basis.
double fock_norm(const GrassmannElement& a);
/// The zero element counts as even.
Parity parity_of(const GrassmannElement& a);

/// max |a_I - b_I| over all subsets.
double max_distance(const GrassmannElement& a, const GrassmannElement& b);

/// Re-expresses `a` over a config with at least as many generators;
/// generator j keeps its index.
GrassmannElement embed(const GrassmannElement& a, AlgebraConfig target);

}  // namespace garq
