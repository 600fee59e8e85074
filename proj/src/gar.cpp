// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/gar.hpp"

#include <algorithm>

namespace garq {

namespace {

Mask shift_up(Mask m, int s) { return s >= 64 ? 0 : m << s; }
Mask shift_down(Mask m, int s) { return s >= 64 ? 0 : m >> s; }

Complex reversal_sign(Mask fermionic_subset, Complex c) {
  return detail::reversal_parity(std::popcount(fermionic_subset)) ? -c : c;
}

}  // namespace

Mask gar_key(const AlgebraConfig& config, Mask fermionic_subset, Mask grassmann_subset) {
  if ((fermionic_subset & ~config.fermionic_mask()) ||
      (grassmann_subset & ~config.grassmann_mask())) {
    throw ValidationError("subset uses generators outside the configuration");
  }
  return fermionic_subset | shift_up(grassmann_subset, config.fermionic_dim());
}

GarElement GarElement::identity(AlgebraConfig config, Complex c) {
  return b_monomial(config, 0, c);
}

GarElement GarElement::majorana(AlgebraConfig config, int i, Complex c) {
  if (i < 1 || i > config.fermionic_dim()) {
    throw ValidationError("fermionic index out of range");
  }
  return b_monomial(config, Mask{1} << (i - 1), c);
}

GarElement GarElement::b_monomial(AlgebraConfig config, Mask fermionic_subset, Complex c) {
  const Mask key = gar_key(config, fermionic_subset, 0);
  detail::Terms t;
  if (c != Complex{}) t.emplace_back(key, reversal_sign(fermionic_subset, c));
  return GarElement(config, std::move(t));
}

GarElement GarElement::canonical_term(Mask fermionic_subset, const GrassmannElement& lambda) {
  const AlgebraConfig& config = lambda.config();
  std::vector<detail::Term> raw;
  raw.reserve(lambda.size());
  for (const auto& [g, c] : lambda.terms()) {
    raw.emplace_back(gar_key(config, fermionic_subset, g), reversal_sign(fermionic_subset, c));
  }
  return GarElement(config, detail::normalize(std::move(raw)));
}

GarElement GarElement::from_grassmann(const GrassmannElement& lambda) {
  return canonical_term(0, lambda);
}

GarElement GarElement::from_raw_terms(AlgebraConfig config, std::vector<detail::Term> terms) {
  const Mask allowed = gar_key(config, config.fermionic_mask(), config.grassmann_mask());
  for (const auto& t : terms) {
    if (t.first & ~allowed) {
      throw ValidationError("subset uses generators outside the configuration");
    }
  }
  return GarElement(config, detail::normalize(std::move(terms)));
}

std::vector<Mask> GarElement::fermionic_subsets() const {
  std::vector<Mask> out;
  const Mask fm = config_.fermionic_mask();
  for (const auto& t : terms_) out.push_back(t.first & fm);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GrassmannElement GarElement::coefficient(Mask fermionic_subset) const {
  const Mask fm = config_.fermionic_mask();
  std::vector<detail::Term> raw;
  for (const auto& [m, c] : terms_) {
    if ((m & fm) == fermionic_subset) {
      raw.emplace_back(shift_down(m, config_.fermionic_dim()), reversal_sign(fermionic_subset, c));
    }
  }
  return GrassmannElement::from_terms(config_, std::move(raw));
}

Parity GarElement::parity() const noexcept {
  bool even = false, odd = false;
  for (const auto& t : terms_) {
    (std::popcount(t.first) & 1 ? odd : even) = true;
  }
  if (odd && even) return Parity::mixed;
  return odd ? Parity::odd : Parity::even;
}

bool GarElement::is_fermionic() const noexcept {
  const Mask fm = config_.fermionic_mask();
  return std::all_of(terms_.begin(), terms_.end(),
                     [fm](const detail::Term& t) { return (t.first & ~fm) == 0; });
}

double GarElement::fermionic_residual() const noexcept {
  const Mask fm = config_.fermionic_mask();
  double r = 0.0;
  for (const auto& t : terms_) {
    if (t.first & fm) r = std::max(r, std::abs(t.second));
  }
  return r;
}

GrassmannElement GarElement::to_grassmann() const {
  if (fermionic_residual() != 0.0) {
    throw Error("element has fermionic content");
  }
  return coefficient(0);
}

GarElement& GarElement::operator+=(const GarElement& other) {
  require_same_config(config_, other.config_);
  terms_ = detail::add(terms_, other.terms_);
  return *this;
}

GarElement& GarElement::operator-=(const GarElement& other) {
  require_same_config(config_, other.config_);
  terms_ = detail::add(terms_, other.terms_, -1.0);
  return *this;
}

GarElement& GarElement::operator*=(Complex s) {
  terms_ = detail::scale(terms_, s);
  return *this;
}

GarElement operator*(const GarElement& a, const GarElement& b) {
  require_same_config(a.config_, b.config_);
  return GarElement(a.config_,
                    detail::multiply(a.terms_, b.terms_, a.config_.fermionic_mask()));
}

GarElement operator*(const GarElement& a, const GrassmannElement& lambda) {
  return a * GarElement::from_grassmann(lambda);
}

GarElement operator*(const GrassmannElement& lambda, const GarElement& a) {
  return GarElement::from_grassmann(lambda) * a;
}

FermionElement::FermionElement(GarElement element) : element_(std::move(element)) {
  if (!element_.is_fermionic()) {
    throw ValidationError("element has Grassmann content");
  }
}

Complex FermionElement::coefficient(Mask fermionic_subset) const {
  return element_.coefficient(fermionic_subset).scalar_part();
}

GarElement g_field(AlgebraConfig config, std::span<const Complex> fermionic,
                   std::span<const Complex> grassmann) {
  if (static_cast<int>(fermionic.size()) != config.fermionic_dim() ||
      static_cast<int>(grassmann.size()) != config.grassmann_dim()) {
    throw ValidationError("field vector dimension mismatch");
  }
  std::vector<detail::Term> raw;
  for (int i = 0; i < config.fermionic_dim(); ++i) {
    if (fermionic[i] != Complex{}) raw.emplace_back(Mask{1} << i, fermionic[i]);
  }
  for (int j = 0; j < config.grassmann_dim(); ++j) {
    if (grassmann[j] != Complex{}) {
      raw.emplace_back(gar_key(config, 0, Mask{1} << j), grassmann[j]);
    }
  }
  return GarElement::from_raw_terms(config, std::move(raw));
}

GarElement gar_mul(const GarElement& a, const GarElement& b) { return a * b; }

GarElement gar_star(const GarElement& a) {
  return GarElement::from_raw_terms(a.config(), detail::star(a.raw_terms()));
}

FermionElement epsilon_q(const GarElement& a) {
  const Mask fm = a.config().fermionic_mask();
  std::vector<detail::Term> kept;
  for (const auto& t : a.raw_terms()) {
    if ((t.first & ~fm) == 0) kept.push_back(t);
  }
  return FermionElement(GarElement::from_raw_terms(a.config(), std::move(kept)));
}

GarElement graded_commutator(const GarElement& a, const GarElement& b) {
  const Parity pa = a.parity(), pb = b.parity();
  if (pa == Parity::mixed || pb == Parity::mixed) {
    throw ValidationError("graded commutator requires homogeneous operands");
  }
  if (pa == Parity::odd && pb == Parity::odd) return a * b + b * a;
  return a * b - b * a;
}

double max_distance(const GarElement& a, const GarElement& b) { return (a - b).max_abs(); }

GarElement embed(const GarElement& a, AlgebraConfig target) {
  const AlgebraConfig& src = a.config();
  if (target.fermionic_dim() != src.fermionic_dim() ||
      target.grassmann_dim() < src.grassmann_dim()) {
    throw Error("incompatible algebra configuration");
  }
  return GarElement::from_raw_terms(target, {a.raw_terms().begin(), a.raw_terms().end()});
}

GarElement exp_nilpotent(const GarElement& x) {
  const AlgebraConfig& cfg = x.config();
  const Complex c = x.scalar_part();
  const GarElement nil = x - GarElement::identity(cfg, c);
  const Mask nilpotent_bits = ~cfg.fermionic_mask();
  for (const auto& t : nil.raw_terms()) {
    if ((t.first & nilpotent_bits) == 0) {
      throw Error("exponential requires a nilpotent non-scalar part");
    }
  }
  GarElement sum = GarElement::identity(cfg);
  GarElement power = sum;
  for (int k = 1; !nil.is_zero(); ++k) {
    power = power * nil * (1.0 / k);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * std::exp(c);
}

}  // namespace garq
