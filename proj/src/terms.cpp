// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/detail/terms.hpp"

#include <algorithm>
#include <unordered_map>

namespace garq::detail {

namespace {

// Dense accumulation pays off once the pair count is comparable to the
// number of reachable masks; capped at 2^18 slots (4 MiB).
constexpr int kDenseBitLimit = 18;

int bit_width_of(std::span<const Term> a, std::span<const Term> b) {
  Mask all = 0;
  for (const auto& t : a) all |= t.first;
  for (const auto& t : b) all |= t.first;
  return std::bit_width(all);
}

Terms collect_dense(const std::vector<Complex>& acc) {
  Terms out;
  for (std::size_t m = 0; m < acc.size(); ++m) {
    if (acc[m] != Complex{}) out.emplace_back(static_cast<Mask>(m), acc[m]);
  }
  return out;
}

}  // namespace

Terms normalize(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  Terms out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.second == Complex{}; });
  return out;
}

Terms multiply(std::span<const Term> a, std::span<const Term> b, Mask clifford) {
  if (a.empty() || b.empty()) return {};
  const int width = bit_width_of(a, b);
  const std::size_t pairs = a.size() * b.size();

  if (width <= kDenseBitLimit && pairs >= (std::size_t{1} << width) / 4) {
    std::vector<Complex> acc(std::size_t{1} << width);
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        const auto p = multiply_monomials(ma, mb, clifford);
        if (p.factor != 0.0) acc[p.mask] += p.factor * (ca * cb);
      }
    }
    return collect_dense(acc);
  }

  std::unordered_map<Mask, Complex> acc;
  acc.reserve(std::min<std::size_t>(pairs, std::size_t{1} << 16));
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      const auto p = multiply_monomials(ma, mb, clifford);
      if (p.factor != 0.0) acc[p.mask] += p.factor * (ca * cb);
    }
  }
  Terms out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != Complex{}) out.emplace_back(m, c);
  }
  std::sort(out.begin(), out.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  return out;
}

Terms add(std::span<const Term> a, std::span<const Term> b, Complex scale_b) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      const Complex c = scale_b * b[j].second;
      if (c != Complex{}) out.emplace_back(b[j].first, c);
      ++j;
    } else {
      const Complex c = a[i].second + scale_b * b[j].second;
      if (c != Complex{}) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

Terms scale(std::span<const Term> a, Complex s) {
  Terms out;
  if (s == Complex{}) return out;
  out.reserve(a.size());
  for (const auto& [m, c] : a) {
    const Complex v = s * c;
    if (v != Complex{}) out.emplace_back(m, v);
  }
  return out;
}

Terms star(std::span<const Term> a) {
  Terms out;
  out.reserve(a.size());
  for (const auto& [m, c] : a) {
    const Complex v = std::conj(c);
    out.emplace_back(m, reversal_parity(std::popcount(m)) ? -v : v);
  }
  return out;
}

Complex coefficient(std::span<const Term> a, Mask mask) {
  auto it = std::lower_bound(a.begin(), a.end(), mask,
                             [](const Term& t, Mask m) { return t.first < m; });
  return (it != a.end() && it->first == mask) ? it->second : Complex{};
}

double max_abs(std::span<const Term> a) {
  double best = 0.0;
  for (const auto& t : a) best = std::max(best, std::abs(t.second));
  return best;
}

}  // namespace garq::detail
