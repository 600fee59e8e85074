// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/ghol.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace garq {

namespace {

Mask shifted(Mask m, int s) { return (m == 0 || s >= 64) ? 0 : m << s; }

GarElement raw_monomial(const AlgebraConfig& cfg, Mask key) {
  return GarElement::from_raw_terms(cfg, {{key, 1.0}});
}

}  // namespace

VariableSpace::VariableSpace(AlgebraConfig base, int blocks)
    : base_(base),
      blocks_(blocks),
      extended_(base.fermionic_dim(), base.grassmann_dim() + std::max(blocks, 0) * base.fermionic_dim()) {
  if (blocks < 1) throw ValidationError("a variable space needs at least one block");
}

void VariableSpace::check_block(int block) const {
  if (block < 0 || block >= blocks_) throw ValidationError("variable block out of range");
}

int VariableSpace::generator_index(int block, int i) const {
  check_block(block);
  if (i < 1 || i > block_size()) throw ValidationError("phase-space index out of range");
  return base_.grassmann_dim() + block * block_size() + i;
}

Mask VariableSpace::block_bits(int block) const {
  check_block(block);
  const int offset = base_.total_generators() + block * block_size();
  return shifted(low_bits(block_size()), offset);
}

Mask VariableSpace::variable_bits() const {
  return shifted(low_bits(blocks_ * block_size()), base_.total_generators());
}

GrassmannElement VariableSpace::variable(int block, int i, Complex coeff) const {
  return GrassmannElement::generator(extended_, generator_index(block, i), coeff);
}

GrassmannElement VariableSpace::lift(const GrassmannElement& a) const {
  require_same_config(a.config(), base_);
  return embed(a, extended_);
}

GarElement VariableSpace::lift(const GarElement& a) const {
  require_same_config(a.config(), base_);
  return embed(a, extended_);
}

GarElement VariableSpace::project(const GarElement& a) const {
  require_same_config(a.config(), extended_);
  const Mask vars = variable_bits();
  for (const auto& t : a.raw_terms()) {
    if (t.first & vars) throw Error("element still depends on phase-space variables");
  }
  return GarElement::from_raw_terms(base_, {a.raw_terms().begin(), a.raw_terms().end()});
}

GHolFunction::GHolFunction(VariableSpace space, ValueModule module, GarElement body)
    : space_(space), module_(module), body_(std::move(body)) {
  require_same_config(body_.config(), space_.extended());
  if (module_ == ValueModule::grassmann && body_.fermionic_residual() != 0.0) {
    throw ValidationError("grassmann-valued function has fermionic content");
  }
}

GHolFunction GHolFunction::zero(VariableSpace space, ValueModule module) {
  return GHolFunction(space, module, GarElement(space.extended()));
}

GHolFunction GHolFunction::constant(VariableSpace space, const GarElement& value) {
  const ValueModule module =
      value.fermionic_residual() == 0.0 ? ValueModule::grassmann : ValueModule::gar;
  return GHolFunction(space, module, space.lift(value));
}

GHolFunction GHolFunction::constant(VariableSpace space, const GrassmannElement& value) {
  return GHolFunction(space, ValueModule::grassmann,
                      GarElement::from_grassmann(space.lift(value)));
}

GHolFunction GHolFunction::from_coefficients(VariableSpace space, ValueModule module,
                                             std::span<const std::pair<Mask, GarElement>> table) {
  const int offset = space.base().total_generators();
  std::vector<detail::Term> raw;
  for (const auto& [subset, value] : table) {
    require_same_config(value.config(), space.base());
    if (subset & ~low_bits(space.block_size())) {
      throw ValidationError("subset uses variables outside the phase space");
    }
    for (const auto& [key, c] : value.raw_terms()) {
      raw.emplace_back(key | shifted(subset, offset), c);
    }
  }
  return GHolFunction(space, module, GarElement::from_raw_terms(space.extended(), std::move(raw)));
}

std::vector<int> GHolFunction::active_blocks() const {
  std::vector<int> out;
  for (int b = 0; b < space_.blocks(); ++b) {
    const Mask bits = space_.block_bits(b);
    for (const auto& t : body_.raw_terms()) {
      if (t.first & bits) {
        out.push_back(b);
        break;
      }
    }
  }
  return out;
}

std::vector<Mask> GHolFunction::subsets() const {
  const auto active = active_blocks();
  if (!(active.empty() || (active.size() == 1 && active[0] == 0))) {
    throw Error("coefficient table needs a single-variable function");
  }
  const int offset = space_.base().total_generators();
  std::vector<Mask> out;
  for (const auto& t : body_.raw_terms()) out.push_back(offset >= 64 ? 0 : t.first >> offset);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GarElement GHolFunction::coefficient(Mask subset) const {
  const auto active = active_blocks();
  if (!(active.empty() || (active.size() == 1 && active[0] == 0))) {
    throw Error("coefficient table needs a single-variable function");
  }
  const Mask bits = space_.block_bits(0);
  const Mask want = shifted(subset, space_.base().total_generators());
  std::vector<detail::Term> raw;
  for (const auto& [key, c] : body_.raw_terms()) {
    if ((key & bits) == want) raw.emplace_back(key & ~bits, c);
  }
  return GarElement::from_raw_terms(space_.base(), std::move(raw));
}

GrassmannElement GHolFunction::grassmann_coefficient(Mask subset) const {
  return coefficient(subset).to_grassmann();
}

GHolFunction& GHolFunction::operator+=(const GHolFunction& other) {
  if (!(space_ == other.space_)) throw Error("incompatible algebra configuration");
  body_ += other.body_;
  module_ = combine_modules(module_, other.module_);
  return *this;
}

GHolFunction& GHolFunction::operator-=(const GHolFunction& other) {
  if (!(space_ == other.space_)) throw Error("incompatible algebra configuration");
  body_ -= other.body_;
  module_ = combine_modules(module_, other.module_);
  return *this;
}

GHolFunction& GHolFunction::operator*=(Complex s) {
  body_ *= s;
  return *this;
}

ValueModule combine_modules(ValueModule a, ValueModule b) noexcept {
  return (a == ValueModule::gar || b == ValueModule::gar) ? ValueModule::gar
                                                          : ValueModule::grassmann;
}

GHolFunction ghol_mul(const GHolFunction& f, const GHolFunction& g) {
  if (!(f.space() == g.space())) throw Error("incompatible algebra configuration");
  return GHolFunction(f.space(), combine_modules(f.module(), g.module()), f.body() * g.body());
}

GHolFunction ghol_mul(const GHolFunction& f, const GrassmannElement& lambda) {
  return GHolFunction(f.space(), f.module(),
                      f.body() * GarElement::from_grassmann(f.space().lift(lambda)));
}

GHolFunction widen(const GHolFunction& f, int blocks) {
  VariableSpace wide(f.space().base(), blocks);
  if (blocks < f.space().blocks()) throw Error("widen cannot drop blocks");
  return GHolFunction(wide, f.module(), embed(f.body(), wide.extended()));
}

GHolFunction narrow(const GHolFunction& f, int blocks) {
  VariableSpace small(f.space().base(), blocks);
  for (int b : f.active_blocks()) {
    if (b >= blocks) throw Error("narrow would drop a variable in use");
  }
  return GHolFunction(small, f.module(),
                      GarElement::from_raw_terms(small.extended(),
                                                 {f.body().raw_terms().begin(),
                                                  f.body().raw_terms().end()}));
}

GHolFunction substitute(const GHolFunction& f, int block, std::span<const GarElement> values) {
  const VariableSpace& space = f.space();
  const AlgebraConfig& ext = space.extended();
  if (static_cast<int>(values.size()) != space.block_size()) {
    throw ValidationError("phase vector dimension mismatch");
  }
  ValueModule module = f.module();
  for (const auto& v : values) {
    require_same_config(v.config(), ext);
    const Parity p = v.parity();
    if (!v.is_zero() && p != Parity::odd) {
      throw ValidationError("substituted values must be odd");
    }
    if (v.fermionic_residual() != 0.0) module = ValueModule::gar;
  }
  const Mask bits = space.block_bits(block);
  const Mask below = bits == 0 ? ~Mask{0} : (bits & (~bits + 1)) - 1;
  const int offset = space.base().total_generators() + block * space.block_size();

  std::unordered_map<Mask, GarElement> products;
  auto product_of = [&](Mask x) -> const GarElement& {
    auto it = products.find(x);
    if (it != products.end()) return it->second;
    GarElement p = GarElement::identity(ext);
    for (Mask rest = x; rest; rest &= rest - 1) {
      p = p * values[std::countr_zero(rest)];
    }
    return products.emplace(x, std::move(p)).first->second;
  };

  GarElement out(ext);
  for (const auto& [key, c] : f.body().raw_terms()) {
    const Mask x = (key & bits) >> offset;
    const Mask prefix = key & below;
    const Mask suffix = key & ~bits & ~below;
    GarElement term = raw_monomial(ext, prefix) * product_of(x);
    if (suffix) term = term * raw_monomial(ext, suffix);
    out += term * c;
  }
  return GHolFunction(space, module, std::move(out));
}

GHolFunction shift(const GHolFunction& f, int from, int by, double sign) {
  const VariableSpace& space = f.space();
  std::vector<GarElement> values;
  for (int i = 1; i <= space.block_size(); ++i) {
    values.push_back(GarElement::from_grassmann(space.variable(from, i) +
                                                space.variable(by, i, sign)));
  }
  return substitute(f, from, values);
}

GHolFunction relabel(const GHolFunction& f, int from, int to) {
  const VariableSpace& space = f.space();
  std::vector<GarElement> values;
  for (int i = 1; i <= space.block_size(); ++i) {
    values.push_back(GarElement::from_grassmann(space.variable(to, i)));
  }
  return substitute(f, from, values);
}

GHolFunction ghol_exp(const GHolFunction& f) {
  return GHolFunction(f.space(), f.module(), exp_nilpotent(f.body()));
}

GHolFunction map_coefficients(const GHolFunction& f, ValueModule module,
                              const std::function<GarElement(const GarElement&)>& map) {
  std::vector<std::pair<Mask, GarElement>> table;
  for (Mask s : f.subsets()) table.emplace_back(s, map(f.coefficient(s)));
  return GHolFunction::from_coefficients(f.space(), module, table);
}

TopForm::TopForm(int modes, Complex v_n) : modes_(modes), v_n_(v_n) {
  if (modes < 0) throw ValidationError("top form needs a nonnegative mode count");
  const Complex adjoint = (modes % 2 ? -1.0 : 1.0) * std::conj(v_n);
  if (std::abs(std::abs(v_n) - 1.0) > 1e-12 || std::abs(adjoint - v_n) > 1e-12) {
    throw ValidationError("top form must be self-adjoint and normalized");
  }
}

TopForm TopForm::canonical(int modes) {
  return TopForm(modes, modes % 2 ? Complex(0.0, 1.0) : Complex(1.0, 0.0));
}

Complex form_pairing(const TopForm& v1, const TopForm& v2) {
  if (v1.modes() != v2.modes()) throw Error("incompatible algebra configuration");
  return (v1.modes() % 2 ? -1.0 : 1.0) * v1.value() * v2.value();
}

GHolFunction integrate(const TopForm& v, const GHolFunction& f, int block) {
  const VariableSpace& space = f.space();
  if (v.modes() != space.base().modes()) throw Error("top form does not match the phase space");
  const Mask bits = space.block_bits(block);
  std::vector<detail::Term> raw;
  for (const auto& [key, c] : f.body().raw_terms()) {
    if ((key & bits) == bits) raw.emplace_back(key & ~bits, v.value() * c);
  }
  return GHolFunction(space, f.module(),
                      GarElement::from_raw_terms(space.extended(), std::move(raw)));
}

GarElement berezin(const TopForm& v, const GHolFunction& f) {
  const auto active = f.active_blocks();
  if (!(active.empty() || (active.size() == 1 && active[0] == 0))) {
    throw Error("berezin needs a single-variable function");
  }
  return f.space().project(integrate(v, f, 0).body());
}

}  // namespace garq
