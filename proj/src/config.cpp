// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/config.hpp"

#include <bit>

namespace garq {

namespace {

Mask bit_for(int index) {
  if (index < 1 || index > kMaxGenerators) {
    throw ValidationError("generator index " + std::to_string(index) + " out of range");
  }
  return Mask{1} << (index - 1);
}

}  // namespace

Mask subset(std::initializer_list<int> indices) {
  Mask m = 0;
  for (int i : indices) m |= bit_for(i);
  return m;
}

Mask subset(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) m |= bit_for(i);
  return m;
}

std::vector<int> indices_of(Mask mask) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

std::string format_subset(Mask mask) {
  std::string s = "{";
  bool first = true;
  for (int i : indices_of(mask)) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  s += '}';
  return s;
}

AlgebraConfig::AlgebraConfig(int fermionic_dim, int grassmann_dim)
    : fermionic_dim_(fermionic_dim), grassmann_dim_(grassmann_dim) {
  if (fermionic_dim < 0 || fermionic_dim % 2 != 0) {
    throw ValidationError("fermionic dimension must be even and non-negative");
  }
  if (grassmann_dim < 0) {
    throw ValidationError("grassmann dimension must be non-negative");
  }
  if (fermionic_dim + grassmann_dim > kMaxGenerators) {
    throw SizeError("at most 64 generators are supported");
  }
}

void require_same_config(const AlgebraConfig& a, const AlgebraConfig& b) {
  if (!(a == b)) throw Error("incompatible algebra configuration");
}

}  // namespace garq
