// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file config.hpp
 * @brief Algebra dimensions, subset masks and the library error types.
 *
 * Every algebra element carries an AlgebraConfig: the number of self-dual
 * fermionic dimensions (2n, the rank of Q) and the number of Grassmann
 * generators kept from the complement. Subsets of generators are bit masks;
 * generator k (1-based) lives in bit k-1.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace garq {

using Complex = std::complex<double>;
using Mask = std::uint64_t;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented constraint (shape, symmetry, spectrum, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Problem too large for a dense or combinatorial routine.
class SizeError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxGenerators = 64;

/// Mask with the lowest `count` bits set (count may be 64).
constexpr Mask low_bits(int count) noexcept {
  return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1;
}

/// Mask of the 1-based indices in `indices`.
Mask subset(std::initializer_list<int> indices);
Mask subset(const std::vector<int>& indices);

/// 1-based indices of a mask, increasing.
std::vector<int> indices_of(Mask mask);

/// "{1,2,5}" style rendering; "{}" for the empty set.
std::string format_subset(Mask mask);

class AlgebraConfig {
 public:
  /// `fermionic_dim` is 2n (even, >= 0); `grassmann_dim` is m.
  AlgebraConfig(int fermionic_dim, int grassmann_dim);

  int fermionic_dim() const noexcept { return fermionic_dim_; }
  int modes() const noexcept { return fermionic_dim_ / 2; }
  int grassmann_dim() const noexcept { return grassmann_dim_; }
  int total_generators() const noexcept { return fermionic_dim_ + grassmann_dim_; }

  Mask fermionic_mask() const noexcept { return low_bits(fermionic_dim_); }
  Mask grassmann_mask() const noexcept { return low_bits(grassmann_dim_); }

  bool operator==(const AlgebraConfig&) const = default;

 private:
  int fermionic_dim_;
  int grassmann_dim_;
};

/// Throws Error("incompatible algebra configuration") unless a == b.
void require_same_config(const AlgebraConfig& a, const AlgebraConfig& b);

}  // namespace garq
