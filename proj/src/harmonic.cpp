// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/harmonic.hpp"

#include <algorithm>

#include "garq/calculus.hpp"

namespace garq {

namespace {

constexpr int kXi = 0;
constexpr int kEta = 1;

VariableSpace pair_space(const AlgebraConfig& base) { return VariableSpace(base, 2); }

void require_single_block(const GHolFunction& f) {
  if (f.space().blocks() != 1) throw Error("expected a function of one phase-space variable");
}

GHolFunction exp_pairing(const VariableSpace& space) {
  return ghol_exp(pairing_function(space, kXi, kEta));
}

GHolFunction as_grassmann(const GHolFunction& f, double tolerance) {
  const double scale = std::max(1.0, f.body().max_abs());
  if (f.body().fermionic_residual() > tolerance * scale) {
    throw Error("fourier transform left fermionic content");
  }
  const Mask fm = f.space().extended().fermionic_mask();
  std::vector<detail::Term> kept;
  for (const auto& t : f.body().raw_terms()) {
    if ((t.first & fm) == 0) kept.push_back(t);
  }
  return GHolFunction(f.space(), ValueModule::grassmann,
                      GarElement::from_raw_terms(f.space().extended(), std::move(kept)));
}

}  // namespace

void RightModuleHom::set(Mask fermionic_subset, const GrassmannElement& value) {
  require_same_config(value.config(), config_);
  if (fermionic_subset & ~config_.fermionic_mask()) {
    throw ValidationError("subset uses generators outside the configuration");
  }
  if (value.is_zero()) {
    table_.erase(fermionic_subset);
  } else {
    table_.insert_or_assign(fermionic_subset, value);
  }
}

GrassmannElement RightModuleHom::value(Mask fermionic_subset) const {
  auto it = table_.find(fermionic_subset);
  return it == table_.end() ? GrassmannElement(config_) : it->second;
}

GrassmannElement RightModuleHom::operator()(const GarElement& a) const {
  const AlgebraConfig& target = a.config();
  if (target.fermionic_dim() != config_.fermionic_dim() ||
      target.grassmann_dim() < config_.grassmann_dim()) {
    throw Error("incompatible algebra configuration");
  }
  GrassmannElement out(target);
  for (Mask subset : a.fermionic_subsets()) {
    auto it = table_.find(subset);
    if (it == table_.end()) continue;
    out += embed(it->second, target) * a.coefficient(subset);
  }
  return out;
}

GHolFunction fourier_gar_unprojected(const GarElement& a, const TopForm& v) {
  const VariableSpace space = pair_space(a.config());
  const GHolFunction moved = translate(space, a, kEta, 1.0);
  const GHolFunction integrand = ghol_mul(moved, exp_pairing(space));
  const GHolFunction integral = integrate(v, integrand, kEta);
  return narrow(ghol_mul(weyl(space, kXi, -1.0), integral), 1);
}

GHolFunction fourier_gar(const GarElement& a, const TopForm& v) {
  return as_grassmann(fourier_gar_unprojected(a, v), 1e-9);
}

GHolFunction fourier_ghol(const GHolFunction& f, const TopForm& v) {
  require_single_block(f);
  const VariableSpace space = pair_space(f.space().base());
  const GHolFunction moved = relabel(widen(f, 2), kXi, kEta);
  return narrow(integrate(v, ghol_mul(moved, exp_pairing(space)), kEta), 1);
}

GHolFunction fourier_hom(const RightModuleHom& phi) {
  const VariableSpace space(phi.config(), 1);
  std::vector<std::pair<Mask, GarElement>> table;
  for (const auto& [subset, value] : phi.table()) {
    table.emplace_back(subset, GarElement::from_grassmann(value));
  }
  return GHolFunction::from_coefficients(space, ValueModule::grassmann, table);
}

GHolFunction conv_ghol(const GHolFunction& f, const GHolFunction& g, const TopForm& v) {
  require_single_block(f);
  require_single_block(g);
  if (!(f.space() == g.space())) throw Error("incompatible algebra configuration");
  const GHolFunction left = relabel(widen(f, 2), kXi, kEta);
  const GHolFunction right = shift(widen(g, 2), kXi, kEta, -1.0);
  return narrow(integrate(v, ghol_mul(left, right), kEta), 1);
}

GarElement conv_gar_ghol(const GarElement& a, const GHolFunction& f, const TopForm& v) {
  require_single_block(f);
  require_same_config(a.config(), f.space().base());
  const VariableSpace space(a.config(), 1);
  return berezin(v, ghol_mul(translate(space, a, kXi, -1.0), f));
}

GHolFunction conv_hom_gar(const RightModuleHom& phi, const GarElement& a) {
  const VariableSpace space(a.config(), 1);
  const GHolFunction moved = translate(space, a, kXi, 1.0);
  return as_function(space, phi(moved.body()));
}

GarElement reconstruct(const GHolFunction& fhat, const TopForm& v) {
  require_single_block(fhat);
  return berezin(v, ghol_mul(weyl(fhat.space(), kXi, 1.0), fhat));
}

GHolFunction divide(const GHolFunction& numerator, const GHolFunction& divisor) {
  if (!(numerator.space() == divisor.space())) throw Error("incompatible algebra configuration");
  const Complex c = divisor.body().scalar_part();
  if (std::abs(c) == 0.0) throw Error("not a divisor");
  const GarElement& d = divisor.body();
  const GarElement nil = (d - GarElement::identity(d.config(), c)) * (1.0 / c);
  for (const auto& t : nil.raw_terms()) {
    if ((t.first & ~d.config().fermionic_mask()) == 0) throw Error("not a divisor");
  }
  GarElement inverse = GarElement::identity(d.config());
  GarElement power = inverse;
  while (true) {
    power = power * nil * -1.0;
    if (power.is_zero()) break;
    inverse += power;
  }
  inverse *= 1.0 / c;
  return GHolFunction(numerator.space(), combine_modules(numerator.module(), divisor.module()),
                      inverse * numerator.body());
}

}  // namespace garq
