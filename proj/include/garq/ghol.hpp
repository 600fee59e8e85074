// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ghol.hpp
 * @brief G-holomorphic functions and the Berezin integral.
 *
 * Phase-space variables are adjoined to the Grassmann part as extra odd
 * generators. A VariableSpace over a base config reserves `blocks` groups of
 * 2n variables (xi = block 0, eta = block 1, ...) after the m real Grassmann
 * generators, so a function F(xi) = sum_I F^I xi_I is stored as one element
 * of the extended algebra with the coefficients on the left of xi_I.
 * Substitution and integration act directly on that element.
 */

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "garq/gar.hpp"

namespace garq {

class VariableSpace {
 public:
  VariableSpace(AlgebraConfig base, int blocks = 1);

  const AlgebraConfig& base() const noexcept { return base_; }
  const AlgebraConfig& extended() const noexcept { return extended_; }
  int blocks() const noexcept { return blocks_; }
  /// Variables per block (2n).
  int block_size() const noexcept { return base_.fermionic_dim(); }

  /// 1-based Grassmann index of variable i of `block` in the extended config.
  int generator_index(int block, int i) const;
  /// Flat GAR-layout bits of `block`.
  Mask block_bits(int block) const;
  /// Flat GAR-layout bits of every variable.
  Mask variable_bits() const;

  GrassmannElement variable(int block, int i, Complex coeff = 1.0) const;
  GrassmannElement lift(const GrassmannElement& a) const;
  GarElement lift(const GarElement& a) const;
  /// Inverse of lift; throws if `a` still depends on a variable.
  GarElement project(const GarElement& a) const;

  bool operator==(const VariableSpace&) const = default;

 private:
  void check_block(int block) const;

  AlgebraConfig base_;
  int blocks_;
  AlgebraConfig extended_;
};

enum class ValueModule { grassmann, gar };

class GHolFunction {
 public:
  /// `body` lives in space.extended(). A grassmann tag requires no fermionic
  /// content.
  GHolFunction(VariableSpace space, ValueModule module, GarElement body);

  static GHolFunction zero(VariableSpace space, ValueModule module);
  static GHolFunction constant(VariableSpace space, const GarElement& value);
  static GHolFunction constant(VariableSpace space, const GrassmannElement& value);
  /// sum_I F^I xi_I over block 0 from base-config coefficients.
  static GHolFunction from_coefficients(VariableSpace space, ValueModule module,
                                        std::span<const std::pair<Mask, GarElement>> table);

  const VariableSpace& space() const noexcept { return space_; }
  ValueModule module() const noexcept { return module_; }
  const GarElement& body() const noexcept { return body_; }
  bool is_zero() const noexcept { return body_.is_zero(); }

  /// Subsets I of block 0 with a nonzero F^I. Requires only block 0 in use.
  std::vector<Mask> subsets() const;
  /// F^I over the base config. Requires only block 0 in use.
  GarElement coefficient(Mask subset) const;
  GrassmannElement grassmann_coefficient(Mask subset) const;
  /// Block indices whose variables occur.
  std::vector<int> active_blocks() const;

  GHolFunction& operator+=(const GHolFunction& other);
  GHolFunction& operator-=(const GHolFunction& other);
  GHolFunction& operator*=(Complex s);
  friend GHolFunction operator+(GHolFunction a, const GHolFunction& b) { return a += b; }
  friend GHolFunction operator-(GHolFunction a, const GHolFunction& b) { return a -= b; }
  friend GHolFunction operator*(GHolFunction a, Complex s) { return a *= s; }
  friend GHolFunction operator*(Complex s, GHolFunction a) { return a *= s; }

 private:
  VariableSpace space_;
  ValueModule module_;
  GarElement body_;
};

ValueModule combine_modules(ValueModule a, ValueModule b) noexcept;

/// Pointwise product F(xi) G(xi).
GHolFunction ghol_mul(const GHolFunction& f, const GHolFunction& g);
/// Right multiplication by a module element, F(xi) lambda.
GHolFunction ghol_mul(const GHolFunction& f, const GrassmannElement& lambda);

/// Same function over a space with more blocks.
GHolFunction widen(const GHolFunction& f, int blocks);
/// Same function over a space with fewer blocks; the dropped blocks must be
/// unused.
GHolFunction narrow(const GHolFunction& f, int blocks);

/// Simultaneous substitution of the odd elements `values` (extended config)
/// for the variables of `block`.
GHolFunction substitute(const GHolFunction& f, int block, std::span<const GarElement> values);
/// F with block `from` replaced by block `from` + sign * block `by`.
GHolFunction shift(const GHolFunction& f, int from, int by, double sign = 1.0);
/// F with the variables of block `from` renamed to block `to`.
GHolFunction relabel(const GHolFunction& f, int from, int to);

/// exp of a function whose non-constant part is nilpotent.
GHolFunction ghol_exp(const GHolFunction& f);

/// Applies a right-module map coefficientwise: sum_I T(F^I) xi_I.
GHolFunction map_coefficients(const GHolFunction& f, ValueModule module,
                              const std::function<GarElement(const GarElement&)>& map);

/// Highest-degree form v = v_N Lambda^N with Lambda^N in decreasing order.
class TopForm {
 public:
  /// Requires |v_N| = 1 and v_N = (-1)^n conj(v_N).
  TopForm(int modes, Complex v_n);
  /// v_N = 1 for even n and i for odd n.
  static TopForm canonical(int modes);

  int modes() const noexcept { return modes_; }
  Complex value() const noexcept { return v_n_; }

 private:
  int modes_;
  Complex v_n_;
};

/// <v1*, v2> = (-1)^n v1_N v2_N.
Complex form_pairing(const TopForm& v1, const TopForm& v2);

/// Integrates out `block`: v_N times the coefficient of the full block.
GHolFunction integrate(const TopForm& v, const GHolFunction& f, int block = 0);
/// Integral of a single-block function, as a base-config element.
GarElement berezin(const TopForm& v, const GHolFunction& f);

}  // namespace garq
