// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "garq/calculus.hpp"
#include "garq/harmonic.hpp"
#include "generators.hpp"

using namespace garq;
using garq::testing::Gen;
using garq::testing::relative_error;

namespace {

/// Random function of every block of `space` with coefficients in `module`.
GHolFunction random_function(Gen& gen, const VariableSpace& space, ValueModule module, int terms) {
  const AlgebraConfig& ext = space.extended();
  const Mask keep = module == ValueModule::gar ? ~Mask{0} : ~ext.fermionic_mask();
  std::vector<detail::Term> raw;
  for (int k = 0; k < terms; ++k) raw.emplace_back(gen.mask(ext.total_generators()) & keep, gen.complex());
  return GHolFunction(space, module, GarElement::from_raw_terms(ext, std::move(raw)));
}

std::vector<TopForm> forms(int n) {
  const Complex c = n % 2 ? Complex(0, 1) : Complex(1, 0);
  return {TopForm(n, c), TopForm(n, -c)};
}

}  // namespace

TEST_CASE("top forms") {
  CHECK(TopForm::canonical(2).value() == Complex(1.0));
  CHECK(TopForm::canonical(1).value() == Complex(0, 1));
  CHECK_THROWS_WITH(TopForm(1, 1.0), "top form must be self-adjoint and normalized");
  CHECK_THROWS_WITH(TopForm(2, 2.0), "top form must be self-adjoint and normalized");
  CHECK_THROWS_AS(TopForm(2, Complex(0, 1)), ValidationError);
  CHECK(form_pairing(TopForm::canonical(1), TopForm::canonical(1)) == Complex(1.0));
  CHECK(form_pairing(TopForm(2, 1.0), TopForm(2, -1.0)) == Complex(-1.0));
}

TEST_CASE("function products") {
  const VariableSpace space(AlgebraConfig(2, 1));
  const auto x1 = as_function(space, space.variable(0, 1));
  const auto x2 = as_function(space, space.variable(0, 2));
  const auto p = ghol_mul(x1, x2);
  CHECK(p.subsets() == std::vector<Mask>{subset({1, 2})});
  CHECK(p.grassmann_coefficient(subset({1, 2})).scalar_part() == Complex(1.0));
  CHECK(ghol_mul(x1, x1).is_zero());
  CHECK(ghol_mul(x2, x1).grassmann_coefficient(subset({1, 2})).scalar_part() == Complex(-1.0));
  // (g1 xi_1)(xi_2) keeps g1 on the left of xi_1 xi_2.
  const auto g1 = GrassmannElement::generator(space.base(), 1);
  const auto gx = GHolFunction::from_coefficients(
      space, ValueModule::grassmann,
      std::vector<std::pair<Mask, GarElement>>{{subset({1}), GarElement::from_grassmann(g1)}});
  CHECK(ghol_mul(gx, x2).grassmann_coefficient(subset({1, 2})) == g1);
}

TEST_CASE("module tags") {
  const VariableSpace space(AlgebraConfig(2, 1));
  CHECK_THROWS_WITH(GHolFunction(space, ValueModule::grassmann, GarElement::majorana(space.extended(), 1)),
                    "grassmann-valued function has fermionic content");
  CHECK(combine_modules(ValueModule::grassmann, ValueModule::gar) == ValueModule::gar);
  CHECK(combine_modules(ValueModule::grassmann, ValueModule::grassmann) == ValueModule::grassmann);
}

TEST_CASE("berezin examples") {
  const VariableSpace space(AlgebraConfig(2, 0));
  const TopForm v(1, Complex(0, 1));
  const auto top = as_function(space, space.variable(0, 1) * space.variable(0, 2));
  CHECK(berezin(v, top) == GarElement::identity(space.base(), Complex(0, 1)));
  CHECK(berezin(v, GHolFunction::constant(space, GarElement::identity(space.base()))).is_zero());
  const auto f = GHolFunction::from_coefficients(
      space, ValueModule::gar,
      std::vector<std::pair<Mask, GarElement>>{
          {subset({1, 2}), GarElement::identity(space.base())},
          {subset({1}), GarElement::majorana(space.base(), 1)}});
  CHECK(berezin(v, f) == GarElement::identity(space.base(), Complex(0, 1)));
}

TEST_CASE("berezin structure") {
  Gen gen(41);
  for (int n = 1; n <= 2; ++n) {
    const AlgebraConfig base(2 * n, 2);
    for (const TopForm& v : forms(n)) {
      for (int t = 0; t < 10; ++t) {
        const VariableSpace one(base), two(base, 2), three(base, 3);
        const auto f = gen.gar_function(one, 8);
        const auto lambda = gen.grassmann(base, 3);

        // Translation invariance under a symbolic shift.
        const auto fw = random_function(gen, two, ValueModule::gar, 20);
        CHECK(max_distance(integrate(v, shift(fw, 0, 1), 0).body(), integrate(v, fw, 0).body()) < 1e-12);

        CHECK(max_distance(berezin(v, ghol_mul(f, lambda)), berezin(v, f) * lambda) < 1e-12);

        // Right-module maps commute with the integral.
        const auto eps = [](const GarElement& a) { return epsilon_q(a).element(); };
        CHECK(max_distance(berezin(v, map_coefficients(f, ValueModule::gar, eps)), eps(berezin(v, f))) < 1e-12);
        RightModuleHom phi(base);
        for (Mask s = 0; s <= base.fermionic_mask(); ++s) phi.set(s, gen.grassmann(base, 2));
        const auto apply = [&](const GarElement& a) { return GarElement::from_grassmann(phi(a)); };
        CHECK(max_distance(berezin(v, map_coefficients(f, ValueModule::grassmann, apply)),
                           apply(berezin(v, f))) < 1e-12);

        // Fubini.
        CHECK(max_distance(integrate(v, integrate(v, fw, 0), 1).body(),
                           integrate(v, integrate(v, fw, 1), 0).body()) < 1e-12);

        // Delta function: int v1(xi) int v2(eta) F(xi) e^{<eta*, xi - zeta>} = <v1*, v2> F(zeta).
        for (const TopForm& w : forms(n)) {
          const auto f3 = widen(f, 3);
          const auto kernel = ghol_exp(pairing_function(three, 1, 0) - pairing_function(three, 1, 2));
          const auto lhs = integrate(v, integrate(w, ghol_mul(f3, kernel), 1), 0);
          const auto rhs = relabel(f3, 0, 2) * form_pairing(v, w);
          CHECK(max_distance(lhs.body(), rhs.body()) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("wedge functions are multiplicative") {
  Gen gen(42);
  for (int n = 1; n <= 2; ++n) {
    const AlgebraConfig base(2 * n, 2);
    const VariableSpace space(base);
    const AlgebraConfig wedge(0, 2 * n + 2);
    for (int t = 0; t < 30; ++t) {
      const auto a = gen.grassmann(wedge, 6), b = gen.grassmann(wedge, 6);
      CHECK(max_distance(wedge_function(space, a * b).body(),
                         ghol_mul(wedge_function(space, a), wedge_function(space, b)).body()) < 1e-12);
    }
  }
}

TEST_CASE("two-form and quadratic form") {
  Gen gen(43);
  CHECK(two_form_of(ComplexMatrix::Zero(4, 4)).is_zero());
  ComplexMatrix sym = ComplexMatrix::Random(4, 4);
  sym = sym + sym.transpose().eval();
  CHECK(two_form_of(sym).max_abs() < 1e-15);
  ComplexMatrix a2(2, 2);
  a2 << 0.0, 3.0, -3.0, 0.0;
  const auto form = two_form_of(a2);
  CHECK(form.size() == 1);
  CHECK(form.coefficient(subset({1, 2})) == Complex(3.0));

  // <xi*, A xi> = 2 <a*, exp(xi)>
  for (int n = 1; n <= 3; ++n) {
    const VariableSpace space(AlgebraConfig(2 * n, 0));
    const ComplexMatrix a = gen.antisymmetric(2 * n);
    CHECK(max_distance(wedge_function(space, two_form_of(a)).body(),
                       quadratic_form(space, 0, a).body()) < 1e-14);
  }
}

TEST_CASE("pfaffian examples") {
  ComplexMatrix a2(2, 2);
  a2 << 0.0, Complex(2, 1), Complex(-2, -1), 0.0;
  CHECK(pfaffian(a2) == Complex(2, 1));
  ComplexMatrix a4(4, 4);
  a4 << 0, 1, 2, 3, -1, 0, 4, 5, -2, -4, 0, 6, -3, -5, -6, 0;
  CHECK(pfaffian(a4) == Complex(1.0 * 6 - 2.0 * 5 + 3.0 * 4));
  CHECK(relative_error(pfaffian_elimination(a4), 8.0) < 1e-14);
  CHECK(pfaffian(ComplexMatrix::Zero(3, 3)) == Complex(0.0));
  CHECK(pfaffian(ComplexMatrix::Zero(0, 0)) == Complex(1.0));
  ComplexMatrix bad = a2;
  bad(1, 0) = 1.0;
  CHECK_THROWS_WITH(pfaffian(bad), "matrix is not antisymmetric");
  CHECK_THROWS_AS(pfaffian_combinatorial(ComplexMatrix::Zero(18, 18)), SizeError);
}

TEST_CASE("pfaffian algorithms agree and square to the determinant") {
  Gen gen(44);
  for (int t = 0; t < 100; ++t) {
    const int dim = 2 * gen.integer(1, 7);
    const ComplexMatrix a = gen.antisymmetric(dim);
    const Complex comb = pfaffian_combinatorial(a), elim = pfaffian_elimination(a);
    CHECK(relative_error(elim, comb) < 1e-10);
    CHECK(relative_error(comb * comb, a.determinant()) < 1e-9);
  }
  const ComplexMatrix big = gen.antisymmetric(40);
  CHECK(relative_error(std::pow(pfaffian(big), 2), big.determinant()) < 1e-8);
}

TEST_CASE("pfaffian with respect to a form") {
  Gen gen(45);
  CHECK(pfaffian_wrt_form(TopForm::canonical(2), ComplexMatrix::Zero(4, 4)) == Complex(0.0));
  ComplexMatrix a2(2, 2);
  a2 << 0.0, 5.0, -5.0, 0.0;
  CHECK(pfaffian_wrt_form(TopForm(1, Complex(0, 1)), a2) == Complex(0, 5));
  for (int n = 1; n <= 4; ++n) {
    for (const TopForm& v : forms(n)) {
      const ComplexMatrix a = gen.antisymmetric(2 * n);
      const Complex p = pfaffian_wrt_form(v, a);
      CHECK(relative_error(p, v.value() * pfaffian(a)) < 1e-12);
      CHECK(relative_error(p * p, v.value() * v.value() * a.determinant()) < 1e-10);
    }
  }
  CHECK_THROWS_AS(pfaffian_wrt_form(TopForm::canonical(1), ComplexMatrix::Zero(4, 4)), ValidationError);
}

TEST_CASE("gaussian integrals") {
  Gen gen(46);
  CHECK(gaussian_integral(TopForm::canonical(2), ComplexMatrix::Zero(4, 4)) == Complex(0.0));
  for (int n = 1; n <= 3; ++n) {
    const VariableSpace space(AlgebraConfig(2 * n, 0));
    for (const TopForm& v : forms(n)) {
      const ComplexMatrix a = gen.antisymmetric(2 * n);
      const auto direct = berezin(v, ghol_exp(quadratic_form(space, 0, a)));
      CHECK(max_distance(direct, GarElement::identity(space.base(), gaussian_integral(v, a))) < 1e-12);
      CHECK(relative_error(gaussian_integral(v, a), pfaffian_wrt_form(v, a)) < 1e-14);
      CHECK(max_distance(gaussian_integral(v, a, space).body(),
                         gaussian_integral_expanded(v, a, space).body()) < 1e-10);
    }
  }
  // n = 1 with source: Pf (1 + 1/2 <eta*, A^{-1} eta>).
  const VariableSpace space(AlgebraConfig(2, 0));
  ComplexMatrix a(2, 2);
  a << 0.0, 2.0, -2.0, 0.0;
  const TopForm v = TopForm::canonical(1);
  const ComplexMatrix inv = a.inverse();
  const auto want = (GHolFunction::constant(space, GrassmannElement::scalar(space.base(), 1.0)) +
                     quadratic_form(space, 0, inv)) *
                    pfaffian_wrt_form(v, a);
  CHECK(max_distance(gaussian_integral(v, a, space).body(), want.body()) < 1e-14);
  CHECK_THROWS_WITH(gaussian_integral(v, ComplexMatrix::Zero(2, 2), space),
                    "source term requires invertible covariance");
}
