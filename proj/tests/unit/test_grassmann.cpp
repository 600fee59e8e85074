// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "garq/grassmann.hpp"
#include "generators.hpp"

using namespace garq;
using garq::testing::Gen;

namespace {

GrassmannElement g(const AlgebraConfig& c, int j) { return GrassmannElement::generator(c, j); }

GrassmannElement counterexample() {
  const AlgebraConfig c(0, 6);
  return g(c, 1) * g(c, 2) + g(c, 3) * g(c, 4) + g(c, 5) * g(c, 6);
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(AlgebraConfig(3, 0), ValidationError);
  CHECK_THROWS_AS(AlgebraConfig(-2, 0), ValidationError);
  CHECK_THROWS_AS(AlgebraConfig(0, -1), ValidationError);
  CHECK_NOTHROW(AlgebraConfig(16, 16));
  CHECK(format_subset(0) == "{}");
  CHECK(format_subset(subset({1, 2, 5})) == "{1,2,5}");
  CHECK(indices_of(subset({3, 7})) == std::vector<int>{3, 7});
}

TEST_CASE("generator products") {
  const AlgebraConfig c(0, 4);
  CHECK(g(c, 1) * g(c, 2) == GrassmannElement::monomial(c, subset({1, 2})));
  CHECK(g(c, 2) * g(c, 1) == GrassmannElement::monomial(c, subset({1, 2}), -1.0));
  CHECK((g(c, 1) * g(c, 1)).is_zero());
  const auto s = g(c, 1) + g(c, 2);
  CHECK((s * s).is_zero());
  CHECK_THROWS_WITH(grassmann_mul(g(c, 1), g(AlgebraConfig(0, 3), 1)),
                    "incompatible algebra configuration");
}

TEST_CASE("square of the counterexample") {
  const AlgebraConfig c(0, 6);
  const auto sq = counterexample() * counterexample();
  const auto want = 2.0 * (GrassmannElement::monomial(c, subset({1, 2, 3, 4})) +
                           GrassmannElement::monomial(c, subset({1, 2, 5, 6})) +
                           GrassmannElement::monomial(c, subset({3, 4, 5, 6})));
  CHECK(max_distance(sq, want) == 0.0);
}

TEST_CASE("fock norm of the counterexample") {
  const auto l = counterexample();
  CHECK(fock_norm(l) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(fock_norm(l * l) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(fock_norm(l * l) > 3.0);
  CHECK(fock_norm(GrassmannElement::scalar(AlgebraConfig(0, 2), 1.0)) == 1.0);
}

TEST_CASE("star") {
  const AlgebraConfig c(0, 3);
  CHECK(grassmann_star(GrassmannElement::scalar(c, {1, 2})) == GrassmannElement::scalar(c, {1, -2}));
  CHECK(grassmann_star(g(c, 1) * g(c, 2)) == -(g(c, 1) * g(c, 2)));
  const auto m = GrassmannElement::monomial(c, subset({1, 2, 3}), {2, 3});
  CHECK(grassmann_star(m) == GrassmannElement::monomial(c, subset({1, 2, 3}), {-2, 3}));
}

TEST_CASE("parity") {
  const AlgebraConfig c(0, 2);
  const auto one = GrassmannElement::scalar(c, 1.0);
  CHECK(parity_of(g(c, 1)) == Parity::odd);
  CHECK(parity_of(one + g(c, 1) * g(c, 2)) == Parity::even);
  CHECK(parity_of(one + g(c, 1)) == Parity::mixed);
}

TEST_CASE("ring properties on random elements") {
  Gen gen(11);
  const AlgebraConfig c(0, 7);
  for (int t = 0; t < 100; ++t) {
    const auto a = gen.grassmann(c, 8), b = gen.grassmann(c, 8), d = gen.grassmann(c, 8);
    CHECK(max_distance((a * b) * d, a * (b * d)) < 1e-12);
    CHECK(max_distance(a * (b + d), a * b + a * d) < 1e-12);
    CHECK(max_distance(grassmann_star(grassmann_star(a)), a) == 0.0);
    CHECK(max_distance(grassmann_star(a * b), grassmann_star(b) * grassmann_star(a)) < 1e-12);
  }
}

TEST_CASE("graded commutativity") {
  Gen gen(12);
  const AlgebraConfig c(0, 6);
  for (int t = 0; t < 100; ++t) {
    const bool p = gen.integer(0, 1), q = gen.integer(0, 1);
    const auto a = gen.homogeneous_grassmann(c, 6, p);
    const auto b = gen.homogeneous_grassmann(c, 6, q);
    const double sign = (p && q) ? -1.0 : 1.0;
    CHECK(max_distance(a * b, sign * (b * a)) < 1e-12);
  }
}

TEST_CASE("nilpotency") {
  Gen gen(13);
  const AlgebraConfig c(0, 5);
  for (int t = 0; t < 20; ++t) {
    GrassmannElement p = GrassmannElement::scalar(c, 1.0);
    for (int k = 0; k < 6; ++k) p = p * gen.homogeneous_grassmann(c, 5, true);
    CHECK(p.is_zero());
    auto a = gen.grassmann(c, 6);
    a -= GrassmannElement::scalar(c, a.scalar_part());
    GrassmannElement power = a;
    for (int k = 0; k < 5; ++k) power = power * a;
    CHECK(power.max_abs() < 1e-12);
  }
}

TEST_CASE("embedding into a larger algebra") {
  const AlgebraConfig small(0, 2), big(0, 4);
  const auto e = embed(g(small, 1) * g(small, 2), big);
  CHECK(e == g(big, 1) * g(big, 2));
  CHECK_THROWS(embed(g(big, 4), small));
}
