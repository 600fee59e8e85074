// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/oracle.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace garq {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Image of one basis state under a single generator: amplitude and state.
struct Step {
  Complex amplitude;
  std::uint32_t state;
};

/// Generator g (0-based flat index) acting on |state>.
Step apply_generator(int g, int fermionic_dim, std::uint32_t state) {
  if (g < fermionic_dim) {
    const int mode = g / 2;
    const std::uint32_t bit = 1u << mode;
    const double jw = (std::popcount(state & (bit - 1)) & 1) ? -1.0 : 1.0;
    const bool occupied = state & bit;
    if (g % 2 == 0) return {jw * kInvSqrt2, state ^ bit};
    // i (c^dag - c): +i on creation, -i on annihilation.
    return {Complex(0.0, occupied ? -jw : jw) * kInvSqrt2, state ^ bit};
  }
  const int mode = fermionic_dim / 2 + (g - fermionic_dim);
  const std::uint32_t bit = 1u << mode;
  if (state & bit) return {0.0, 0};
  const double jw = (std::popcount(state & (bit - 1)) & 1) ? -1.0 : 1.0;
  return {jw, state | bit};
}

}  // namespace

DenseOperator represent(const GarElement& a, int m_env) {
  const AlgebraConfig& cfg = a.config();
  const int n = cfg.modes();
  if (m_env < 0 || m_env > cfg.grassmann_dim()) throw ValidationError("m_env out of range");
  const int modes = n + m_env;
  if (modes > kMaxOracleModes) throw SizeError("dense representation limited to 12 modes");
  const Mask allowed = low_bits(cfg.fermionic_dim() + m_env);
  for (const auto& t : a.raw_terms()) {
    if (t.first & ~allowed) throw ValidationError("element uses generators beyond m_env");
  }
  const std::uint32_t dim = 1u << modes;
  DenseOperator out{ComplexMatrix::Zero(dim, dim), modes};
  std::vector<int> gens;
  for (const auto& [mask, c] : a.raw_terms()) {
    gens.clear();
    for (Mask rest = mask; rest; rest &= rest - 1) gens.push_back(std::countr_zero(rest));
    for (std::uint32_t col = 0; col < dim; ++col) {
      Complex amp = c;
      std::uint32_t state = col;
      for (auto it = gens.rbegin(); it != gens.rend() && amp != Complex{}; ++it) {
        const Step s = apply_generator(*it, cfg.fermionic_dim(), state);
        amp *= s.amplitude;
        state = s.state;
      }
      if (amp != Complex{}) out.matrix(state, col) += amp;
    }
  }
  return out;
}

DenseOperator represent(const GarElement& a) { return represent(a, a.config().grassmann_dim()); }

DenseOperator represent(const GrassmannElement& a) {
  return represent(GarElement::from_grassmann(a));
}

double operator_norm(const DenseOperator& a) {
  if (a.matrix.size() == 0) return 0.0;
  const ComplexMatrix gram = a.matrix.adjoint() * a.matrix;
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
}

double operator_norm(const GarElement& a) { return operator_norm(represent(a)); }

double operator_norm(const GrassmannElement& a) { return operator_norm(represent(a)); }

DenseOperator density_matrix(const CovarianceMatrix& s) {
  const int n = s.modes();
  if (n > 6) throw SizeError("density matrix limited to 6 modes");
  const AlgebraConfig cfg(s.dim(), 0);
  const std::uint32_t dim = 1u << n;
  DenseOperator rho{ComplexMatrix::Zero(dim, dim), n};
  for (Mask subset = 0;; ++subset) {
    const int k = std::popcount(subset);
    if (k % 2 == 0) {
      std::vector<int> idx = indices_of(subset);
      std::vector<int> decreasing(idx.rbegin(), idx.rend());
      const Complex m = wick_moment(s, decreasing);
      if (m != Complex{}) {
        const DenseOperator b = represent(GarElement::b_monomial(cfg, subset));
        rho.matrix += std::ldexp(1.0, k - n) * m * b.matrix.adjoint();
      }
    }
    if (subset == low_bits(s.dim())) break;
  }
  return rho;
}

Complex trace_expectation(const DenseOperator& rho, const DenseOperator& e) {
  if (rho.dim() != e.dim()) throw ValidationError("operator dimension mismatch");
  return (rho.matrix * e.matrix).trace();
}

double trace_norm_distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw ValidationError("operator dimension mismatch");
  const ComplexMatrix d = a.matrix - b.matrix;
  const ComplexMatrix h = 0.5 * (d + d.adjoint());
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().sum();
}

}  // namespace garq
