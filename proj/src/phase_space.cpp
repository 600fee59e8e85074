// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/phase_space.hpp"

namespace garq {

namespace {

void require_compatible(const PhaseVector& a, const PhaseVector& b) {
  require_same_config(a.config(), b.config());
}

GarElement embed_into(const GarElement& a, const AlgebraConfig& target) {
  return a.config() == target ? a : embed(a, target);
}

}  // namespace

PhaseVector::PhaseVector(AlgebraConfig config, std::vector<GrassmannElement> components)
    : config_(config), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != config_.fermionic_dim()) {
    throw ValidationError("phase vector dimension mismatch");
  }
  for (const auto& c : components_) {
    require_same_config(c.config(), config_);
    if (!c.is_zero() && parity_of(c) != Parity::odd) {
      throw ValidationError("phase vector components must be odd");
    }
  }
}

PhaseVector PhaseVector::zero(AlgebraConfig config) {
  return PhaseVector(config, std::vector<GrassmannElement>(config.fermionic_dim(),
                                                           GrassmannElement(config)));
}

PhaseVector PhaseVector::single(AlgebraConfig config, int i, const GrassmannElement& lambda) {
  if (i < 1 || i > config.fermionic_dim()) throw ValidationError("phase-space index out of range");
  std::vector<GrassmannElement> comps(config.fermionic_dim(), GrassmannElement(config));
  comps[i - 1] = lambda;
  return PhaseVector(config, std::move(comps));
}

PhaseVector PhaseVector::symbolic(const VariableSpace& space, int block, Complex scale) {
  std::vector<GrassmannElement> comps;
  for (int i = 1; i <= space.block_size(); ++i) comps.push_back(space.variable(block, i, scale));
  return PhaseVector(space.extended(), std::move(comps));
}

PhaseVector& PhaseVector::operator+=(const PhaseVector& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

PhaseVector& PhaseVector::operator*=(Complex s) {
  for (auto& c : components_) c *= s;
  return *this;
}

GrassmannElement rigging(const PhaseVector& xi, const PhaseVector& eta) {
  require_compatible(xi, eta);
  GrassmannElement out(xi.config());
  for (int i = 0; i < xi.size(); ++i) out += grassmann_star(xi[i]) * eta[i];
  return out;
}

GrassmannElement symplectic_pairing(const PhaseVector& xi, const PhaseVector& eta) {
  require_compatible(xi, eta);
  GrassmannElement out(xi.config());
  for (int i = 0; i < xi.size(); ++i) out += xi[i] * eta[i];
  return out;
}

PhaseVector conjugate(const PhaseVector& xi) {
  std::vector<GrassmannElement> comps;
  for (const auto& c : xi.components()) comps.push_back(-grassmann_star(c));
  return PhaseVector(xi.config(), std::move(comps));
}

GarElement bose_field(const PhaseVector& xi) {
  GarElement out(xi.config());
  for (int i = 0; i < xi.size(); ++i) {
    if (xi[i].is_zero()) continue;
    out += GarElement::majorana(xi.config(), i + 1) * xi[i];
  }
  return out;
}

GrassmannElement ccr_form(const PhaseVector& xi, const PhaseVector& eta) {
  return -symplectic_pairing(xi, eta);
}

GarElement weyl(const PhaseVector& xi) { return exp_nilpotent(bose_field(xi)); }

GarElement translate(const PhaseVector& xi, const GarElement& a) {
  const GarElement lifted = embed_into(a, xi.config());
  return weyl(-xi) * lifted * weyl(xi);
}

GHolFunction bose_field(const VariableSpace& space, int block) {
  return GHolFunction(space, ValueModule::gar,
                      bose_field(PhaseVector::symbolic(space, block)));
}

GHolFunction weyl(const VariableSpace& space, int block, double sign) {
  return GHolFunction(space, ValueModule::gar, weyl(PhaseVector::symbolic(space, block, sign)));
}

GHolFunction translate(const VariableSpace& space, const GarElement& a, int block, double sign) {
  const GarElement lifted = space.lift(a);
  const GarElement value = translate(PhaseVector::symbolic(space, block, sign), lifted);
  const ValueModule module =
      value.fermionic_residual() == 0.0 ? ValueModule::grassmann : ValueModule::gar;
  return GHolFunction(space, module, value);
}

GarElement evaluate(const GHolFunction& f, const PhaseVector& xi) {
  const VariableSpace& space = f.space();
  require_same_config(xi.config(), space.base());
  if (xi.size() != space.block_size()) throw ValidationError("phase vector dimension mismatch");
  std::vector<GarElement> values;
  for (int i = 0; i < xi.size(); ++i) {
    values.push_back(space.lift(GarElement::from_grassmann(xi[i])));
  }
  return space.project(substitute(f, 0, values).body());
}

GHolFunction as_function(const VariableSpace& space, const GrassmannElement& value) {
  return GHolFunction(space, ValueModule::grassmann, GarElement::from_grassmann(value));
}

}  // namespace garq
