// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

// Sparse multilinear kernels shared by every algebra element.
//
// A term (mask, c) stands for c * e_{i1} e_{i2} ... e_{ik} with i1 < ... < ik
// the set bits of mask. All generators are odd and pairwise anticommute;
// generators in the Clifford mask square to 1/2, all others square to 0.
// Every sign in the library is derived from the functions in this file.

#pragma once

#include <bit>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "garq/config.hpp"

namespace garq::detail {

using Term = std::pair<Mask, Complex>;
/// Sorted by mask, no exact zeros.
using Terms = std::vector<Term>;

/// Parity of #{(i, j) : i in a, j in b, i > j}: the sign of normal-ordering
/// e_a e_b, ignoring the generators the two sides share.
constexpr bool reorder_parity(Mask a, Mask b) noexcept {
  Mask t = a >> 1;  // bit j of the suffix-xor = parity of bits of a above j
  t ^= t >> 1;
  t ^= t >> 2;
  t ^= t >> 4;
  t ^= t >> 8;
  t ^= t >> 16;
  t ^= t >> 32;
  return (std::popcount(t & b) & 1) != 0;
}

/// Parity of k(k-1)/2, the sign of reversing a product of k generators.
constexpr bool reversal_parity(int k) noexcept { return ((k * (k - 1) / 2) & 1) != 0; }

/// Product of two normal-ordered monomials: {mask, factor}, factor == 0 when
/// a nilpotent generator is repeated.
struct MonomialProduct {
  Mask mask;
  double factor;
};

inline MonomialProduct multiply_monomials(Mask a, Mask b, Mask clifford) noexcept {
  const Mask common = a & b;
  if (common & ~clifford) return {0, 0.0};
  double f = reorder_parity(a, b) ? -1.0 : 1.0;
  const int squares = std::popcount(common);
  if (squares) f = std::ldexp(f, -squares);
  return {a ^ b, f};
}

Terms multiply(std::span<const Term> a, std::span<const Term> b, Mask clifford);
Terms add(std::span<const Term> a, std::span<const Term> b, Complex scale_b = 1.0);
Terms scale(std::span<const Term> a, Complex s);
/// Antilinear reversal: every generator is self-adjoint.
Terms star(std::span<const Term> a);
/// Sorts, merges duplicate masks and drops exact zeros.
Terms normalize(std::vector<Term> raw);
Complex coefficient(std::span<const Term> a, Mask mask);
double max_abs(std::span<const Term> a);

}  // namespace garq::detail
