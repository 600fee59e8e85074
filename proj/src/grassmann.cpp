// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/grassmann.hpp"

#include <algorithm>
#include <cmath>

namespace garq {

GrassmannElement GrassmannElement::scalar(AlgebraConfig config, Complex value) {
  return monomial(config, 0, value);
}

GrassmannElement GrassmannElement::generator(AlgebraConfig config, int j, Complex coeff) {
  if (j < 1 || j > config.grassmann_dim()) {
    throw ValidationError("grassmann generator index out of range");
  }
  return monomial(config, Mask{1} << (j - 1), coeff);
}

GrassmannElement GrassmannElement::monomial(AlgebraConfig config, Mask mask, Complex coeff) {
  if (mask & ~config.grassmann_mask()) {
    throw ValidationError("subset uses generators outside the configuration");
  }
  detail::Terms t;
  if (coeff != Complex{}) t.emplace_back(mask, coeff);
  return GrassmannElement(config, std::move(t));
}

GrassmannElement GrassmannElement::from_terms(AlgebraConfig config,
                                              std::vector<detail::Term> terms) {
  for (const auto& t : terms) {
    if (t.first & ~config.grassmann_mask()) {
      throw ValidationError("subset uses generators outside the configuration");
    }
  }
  return GrassmannElement(config, detail::normalize(std::move(terms)));
}

int GrassmannElement::max_degree() const noexcept {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, std::popcount(t.first));
  return d;
}

GrassmannElement GrassmannElement::homogeneous_part(Parity p) const {
  detail::Terms out;
  const int want = (p == Parity::odd) ? 1 : 0;
  for (const auto& t : terms_) {
    if ((std::popcount(t.first) & 1) == want) out.push_back(t);
  }
  return GrassmannElement(config_, std::move(out));
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& other) {
  require_same_config(config_, other.config_);
  terms_ = detail::add(terms_, other.terms_);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& other) {
  require_same_config(config_, other.config_);
  terms_ = detail::add(terms_, other.terms_, -1.0);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(Complex s) {
  terms_ = detail::scale(terms_, s);
  return *this;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  require_same_config(a.config_, b.config_);
  return GrassmannElement(a.config_, detail::multiply(a.terms_, b.terms_, 0));
}

GrassmannElement grassmann_mul(const GrassmannElement& a, const GrassmannElement& b) {
  return a * b;
}

GrassmannElement grassmann_star(const GrassmannElement& a) {
  return GrassmannElement::from_terms(a.config(), detail::star(a.terms()));
}

double fock_norm(const GrassmannElement& a) {
  double s = 0.0;
  for (const auto& t : a.terms()) s += std::norm(t.second);
  return std::sqrt(s);
}

Parity parity_of(const GrassmannElement& a) {
  bool even = false, odd = false;
  for (const auto& t : a.terms()) {
    (std::popcount(t.first) & 1 ? odd : even) = true;
  }
  if (odd && even) return Parity::mixed;
  return odd ? Parity::odd : Parity::even;
}

double max_distance(const GrassmannElement& a, const GrassmannElement& b) {
  return (a - b).max_abs();
}

GrassmannElement embed(const GrassmannElement& a, AlgebraConfig target) {
  if (target.grassmann_dim() < a.config().grassmann_dim() ||
      target.fermionic_dim() != a.config().fermionic_dim()) {
    throw Error("incompatible algebra configuration");
  }
  return GrassmannElement::from_terms(target, {a.terms().begin(), a.terms().end()});
}

}  // namespace garq
