// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include <limits>

#include "doctest.h"
#include "garq/quasifree.hpp"
#include "generators.hpp"

using namespace garq;
using garq::testing::Gen;
using garq::testing::relative_error;

namespace {

std::vector<TopForm> forms(int n) {
  const Complex c = n % 2 ? Complex(0, 1) : Complex(1, 0);
  return {TopForm(n, c), TopForm(n, -c)};
}

ComplexMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("covariance validation") {
  const Complex i(0, 1);
  CHECK_NOTHROW(validate_covariance(ComplexMatrix::Identity(4, 4) * 0.5));
  CHECK_NOTHROW(validate_basis_projection(m2(0.5, 0.5 * i, -0.5 * i, 0.5)));
  CHECK_THROWS_WITH(validate_covariance(ComplexMatrix::Identity(2, 2)), "S + JSJ ≠ 1");
  CHECK_THROWS_WITH(validate_covariance(ComplexMatrix::Identity(3, 3) * 0.5),
                    "covariance must be square with even dimension");
  CHECK_THROWS_WITH(validate_covariance(ComplexMatrix::Identity(2, 4)),
                    "covariance must be square with even dimension");
  CHECK_THROWS_WITH(validate_covariance(m2(0.5, std::numeric_limits<double>::quiet_NaN(), 0, 0.5)),
                    "covariance entries must be finite");
  CHECK_THROWS_WITH(validate_covariance(m2(0.5, 0.5 * i, 0.5 * i, 0.5)), "not hermitian");
  CHECK_THROWS_WITH(validate_covariance(m2(0.5, 2.0 * i, -2.0 * i, 0.5)), "spectrum outside [0,1]");
  CHECK_THROWS_WITH(validate_basis_projection(m2(0.5, 0.3 * i, -0.3 * i, 0.5)), "not a projection");
}

TEST_CASE("random covariances satisfy the constraints") {
  std::mt19937_64 rng(61);
  for (int n = 1; n <= 5; ++n) {
    for (int t = 0; t < 10; ++t) {
      CHECK_NOTHROW(validate_covariance(random_covariance(n, rng).matrix()));
      CHECK_NOTHROW(validate_basis_projection(random_basis_projection(n, rng).matrix()));
    }
    const Eigen::MatrixXd o = random_orthogonal(2 * n, rng);
    CHECK((o.transpose() * o - Eigen::MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("moment examples") {
  std::mt19937_64 rng(62);
  const auto s = random_covariance(2, rng);
  const ComplexMatrix& m = s.matrix();
  CHECK(quasifree_moment(s, std::vector<int>{}) == Complex(1.0));
  CHECK(quasifree_moment(s, std::vector<int>{1, 3}) == m(0, 2));
  CHECK(quasifree_moment(s, std::vector<int>{3, 1}) == m(2, 0));
  const Complex four = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
  CHECK(relative_error(quasifree_moment(s, std::vector<int>{1, 2, 3, 4}), four) < 1e-14);
  CHECK(quasifree_moment(s, std::vector<int>{1, 2, 3}) == Complex(0.0));
  CHECK_THROWS_WITH(quasifree_moment(s, std::vector<int>{1, 1}), "repeated index in moment");
  CHECK_THROWS_WITH(quasifree_moment(s, std::vector<int>{0, 1}), "moment index out of range");
  CHECK_THROWS_WITH(quasifree_moment(s, std::vector<int>{1, 5}), "moment index out of range");
}

TEST_CASE("pfaffian moments agree with the pairing sum") {
  std::mt19937_64 rng(63);
  Gen gen(64);
  for (int t = 0; t < 100; ++t) {
    const int n = gen.integer(1, 5);
    const auto s = random_covariance(n, rng);
    std::vector<int> idx(2 * n);
    std::iota(idx.begin(), idx.end(), 1);
    std::shuffle(idx.begin(), idx.end(), gen.engine());
    idx.resize(std::min<int>(2 * gen.integer(0, n), 8));
    CHECK(std::abs(quasifree_moment(s, idx) - wick_moment(s, idx)) < 1e-12);
  }
}

TEST_CASE("g-extension") {
  std::mt19937_64 rng(65);
  const auto s = random_covariance(2, rng);
  const AlgebraConfig c(4, 2);
  const auto phi = g_extension(s, 2);
  const auto g1 = GrassmannElement::generator(c, 1), g2 = GrassmannElement::generator(c, 2);
  CHECK(phi(GarElement::from_grassmann(g1 * g2)) == g1 * g2);
  CHECK(phi(GarElement::b_monomial(c, subset({1, 2}))) == GrassmannElement::scalar(c, s.matrix()(1, 0)));
  CHECK(phi(GarElement::majorana(c, 1)).is_zero());
  CHECK(monomial_moment(s, subset({2, 3})) == s.matrix()(2, 1));
}

TEST_CASE("characteristic function") {
  std::mt19937_64 rng(66);
  const auto tracial = char_fn(canonical_covariance(2, 0.0));
  CHECK(tracial.subsets() == std::vector<Mask>{0});
  CHECK(tracial.grassmann_coefficient(0).scalar_part() == Complex(1.0));

  for (double c : {0.0, 0.3, 1.0}) {
    const auto f = char_fn(canonical_covariance(1, c));
    CHECK(f.grassmann_coefficient(0).scalar_part() == Complex(1.0));
    CHECK(std::abs(f.grassmann_coefficient(subset({1, 2})).scalar_part() - Complex(0, -c / 2)) < 1e-15);
  }
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto s = random_covariance(n, rng);
      CHECK(max_distance(char_fn(s).body(), char_fn_exponential(s).body()) < 1e-12);
      CHECK(max_distance(char_fn(s).body(), fourier_hom(g_extension(s)).body()) < 1e-14);
    }
  }
}

TEST_CASE("support projection") {
  std::mt19937_64 rng(67);
  Gen gen(68);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto p = random_basis_projection(n, rng);
      const GarElement e = support_projection(p).element();
      CHECK(max_distance(e * e, e) < 1e-12);
      CHECK(max_distance(gar_star(e), e) < 1e-12);
      const auto phi = g_extension(p.covariance());
      CHECK(std::abs(phi(e).scalar_part() - 1.0) < 1e-12);

      // Purity: omega_P(A E_P B) = omega_P(A) omega_P(B).
      const AlgebraConfig c(2 * n, 2);
      const auto phi2 = g_extension(p.covariance(), 2);
      const auto a = gen.gar(c, 6), b = gen.gar(c, 6);
      const auto ec = embed(e, c);
      CHECK(max_distance(phi2(a * ec * b), phi2(a) * phi2(b)) < 1e-12);
    }
  }
  const auto e1 = support_projection(canonical_basis_projection(1));
  CHECK(e1.coefficient(0) == Complex(0.5));
  CHECK(std::abs(e1.coefficient(subset({1, 2})) - Complex(0, 1)) < 1e-15);
}

TEST_CASE("sign of a basis projection") {
  std::mt19937_64 rng(69);
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto p = random_basis_projection(n, rng);
      const ComplexMatrix r = ComplexMatrix::Identity(2 * n, 2 * n) - 2.0 * p.matrix();
      CHECK(std::abs(std::abs(r.determinant()) - 1.0) < 1e-10);
      for (const TopForm& v : forms(n)) {
        const int sign = pf_sign(v, p);
        CHECK((sign == 1 || sign == -1));
        const ComplexMatrix anti = 0.5 * (r - r.transpose());
        CHECK(relative_error(Complex(sign), pfaffian_wrt_form(v, anti)) < 1e-10);
      }
      CHECK(pf_sign(forms(n)[0], p) == -pf_sign(forms(n)[1], p));
    }
  }
}

TEST_CASE("fourier transform of the support convolution") {
  std::mt19937_64 rng(70);
  for (int n = 1; n <= 2; ++n) {
    for (int t = 0; t < 4; ++t) {
      const auto p = random_basis_projection(n, rng);
      for (const TopForm& v : forms(n)) {
        CHECK(max_distance(conv_support(p, v).body(), conv_support_closed_form(p, v).body()) < 1e-12);
      }
    }
  }
}

TEST_CASE("fidelity") {
  std::mt19937_64 rng(71);
  for (int n = 1; n <= 4; ++n) {
    const auto p = random_basis_projection(n, rng);
    CHECK(fidelity_sq(p, p.covariance()) == doctest::Approx(1.0).epsilon(1e-12));
    const ComplexMatrix q = ComplexMatrix::Identity(2 * n, 2 * n) - p.matrix();
    CHECK(fidelity_sq(p, validate_covariance(q)) < 1e-12);
    for (int t = 0; t < 10; ++t) {
      const double f = fidelity_sq(p, random_covariance(n, rng));
      CHECK(f >= 0.0);
      CHECK(f <= 1.0 + 1e-10);
    }
  }
  for (double c : {0.0, 0.3, 0.7, 1.0}) {
    CHECK(std::abs(fidelity_sq(canonical_basis_projection(1), canonical_covariance(1, c)) - (1 + c) / 2) <
          1e-12);
  }
  CHECK_THROWS_AS(fidelity_sq(canonical_basis_projection(1), canonical_covariance(2, 0.5)), ValidationError);
}
