#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g1jac/explicit_omega.hpp"
#include "g1jac/invariants.hpp"

using namespace g1jac;

namespace {

std::mt19937_64 rng(555);

RatMatrix random_invertible(int n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    RatMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = Rational(entry(rng));
    if (g.inverse().has_value()) return g;
  }
}

// Closed forms for the test matrix Lambda (0-based index shift is harmless,
// only differences of indices enter):
//   mu_ij  = 2(n-2)(|i-j|^2 - n|i-j|) + n(n-1)(n-2)/3
//   nu_ijk = mu_ij (lambda_ik + lambda_jk), lambda_ij = sign(j-i) n - 2(j-i).
long long lambda_coeff(int n, int i, int j) {
  const int d = j - i;
  const int s = d < 0 ? -1 : (d > 0 ? 1 : 0);
  return s * n - 2 * d;
}

Rational mu_oracle(int n, int i, int j) {
  const long long d = std::abs(i - j);
  return Rational(2 * (n - 2) * (d * d - n * d)) + Rational(n * (n - 1) * (n - 2), 3);
}

Rational nu_oracle(int n, int i, int j, int k) {
  return mu_oracle(n, i, j) * Rational(lambda_coeff(n, i, k) + lambda_coeff(n, j, k));
}

Polynomial xij(int n, int i, int j) {
  return Polynomial::variable(n, i) * Polynomial::variable(n, j);
}

WeierstrassCurve curve_37a() {
  return WeierstrassCurve(Rational(0), Rational(0), Rational(1), Rational(-1), Rational(0));
}

}  // namespace

TEST_CASE("M and N vanish for the zero matrix") {
  const AltPolyMatrix zero(4, 4);
  const MMatrix m = matrix_M(zero);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m.at(i, j).is_zero());
  const NTensor t = tensor_N(zero, m);
  CHECK(t.at(1, 2, 3).is_zero());
  CHECK(c4_invariant(zero) == Rational(0));
  CHECK(c6_invariant(zero) == Rational(0));
}

TEST_CASE("M and N of Lambda match the mu/nu closed forms") {
  for (int n = 4; n <= 6; ++n) {
    const AltPolyMatrix lambda = lambda_matrix(n);
    const MMatrix m = matrix_M(lambda);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Polynomial expected = xij(n, i, j).scaled(mu_oracle(n, i, j));
        CHECK(m.at(i, j) == expected);
      }
    }
    const NTensor t = tensor_N(lambda, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Polynomial expected =
              (xij(n, i, j) * Polynomial::variable(n, k)).scaled(nu_oracle(n, i, j, k));
          CHECK(t.at(i, j, k) == expected);
        }
  }
  // spot values quoted for n = 5: mu_12 = -4 and nu_123 = -16
  CHECK(mu_oracle(5, 0, 1) == Rational(-4));
  CHECK(nu_oracle(5, 0, 1, 2) == Rational(-16));
  const AltPolyMatrix l5 = lambda_matrix(5);
  const MMatrix m5 = matrix_M(l5);
  CHECK(m5.at(0, 1) == xij(5, 0, 1).scaled(Rational(-4)));
  CHECK(tensor_N(l5, m5).at(0, 1, 2) ==
        (xij(5, 0, 1) * Polynomial::variable(5, 2)).scaled(Rational(-16)));
}

TEST_CASE("N is symmetric in its first two indices") {
  const AltPolyMatrix omega = build_omega_explicit(curve_37a(), 4).mat;
  const MMatrix m = matrix_M(omega);
  const NTensor t = tensor_N(omega, m);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) CHECK(t.at(i, j, k) == t.at(j, i, k));
}

TEST_CASE("M transports covariantly under the GL action") {
  const AltPolyMatrix omega = build_omega_explicit(curve_37a(), 3).mat;
  for (int trial = 0; trial < 5; ++trial) {
    const RatMatrix g = random_invertible(3);
    const RatMatrix ginv = *g.inverse();
    const MMatrix moved = matrix_M(gl_act(g, omega));
    const MMatrix base = matrix_M(omega);
    // M'_ij = sum_ab (g^-1)_ai (g^-1)_bj M_ab(y), y the substituted coords
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Polynomial expected(3);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) {
            const Polynomial sub = base.at(a, b).substitute_linear(g);
            if (!sub.is_zero()) expected += sub.scaled(ginv.at(a, i) * ginv.at(b, j));
          }
        CHECK(moved.at(i, j) == expected);
      }
    }
  }
}

TEST_CASE("c4 and c6 of Lambda") {
  for (int n = 4; n <= 6; ++n) {
    const AltPolyMatrix lambda = lambda_matrix(n);
    CHECK(c4_invariant(lambda) == Rational(n - 2).pow(4));
    CHECK(c6_invariant(lambda) == -Rational(n - 2).pow(6));
  }
}

TEST_CASE("c4/c6 of closed-form omegas against the curve invariants") {
  // c4(E) = 0 for y^2 + y = x^3, so c4 of its degree-5 omega vanishes
  const WeierstrassCurve e0(Rational(0), Rational(0), Rational(1), Rational(0), Rational(0));
  const AltPolyMatrix om0 = build_omega_explicit(e0, 5).mat;
  CHECK(c4_invariant(om0) == Rational(0));

  // c6(E) = -864 for y^2 = x^3 + 1; the degree-5 omega scales it by 3^6
  const WeierstrassCurve e1(Rational(0), Rational(0), Rational(0), Rational(0), Rational(1));
  const AltPolyMatrix om1 = build_omega_explicit(e1, 5).mat;
  CHECK(c6_invariant(om1) == Rational(-629856));
  CHECK(Rational(-629856) == Rational(3).pow(6) * e1.c6());
}

TEST_CASE("jacobian equation") {
  const WeierstrassCurve j0 = jacobian_equation(Rational(0), Rational(-216));
  CHECK(j0.a4 == Rational(0));
  CHECK(j0.a6 == Rational(11664));
  CHECK(j0.j_invariant() == Rational(0));

  const WeierstrassCurve j37 = jacobian_equation(Rational(48), Rational(-216));
  CHECK(j37.j_invariant() == Rational(110592, 37));
  // oracle: disc of the (c4, c6) pair is (c4^3 - c6^2)/1728 = 37
  CHECK((Rational(48).pow(3) - Rational(-216) * Rational(-216)) / Rational(1728) == Rational(37));

  // c4^3 = c6^2 is rejected
  CHECK_THROWS_AS(jacobian_equation(Rational(1), Rational(1)), DegenerateModel);
  CHECK_THROWS_AS(jacobian_equation(Rational(0), Rational(0)), DegenerateModel);
}

TEST_CASE("scaling omega twists (c4, c6) but not j") {
  const AltPolyMatrix omega = build_omega_explicit(curve_37a(), 4).mat;
  const Rational c4 = c4_invariant(omega), c6 = c6_invariant(omega);
  const Rational lambda(5, 3);
  const AltPolyMatrix scaled = omega.scaled(lambda);
  CHECK(c4_invariant(scaled) == lambda.pow(4) * c4);
  CHECK(c6_invariant(scaled) == lambda.pow(6) * c6);
  CHECK(jacobian_equation(c4, c6).j_invariant() ==
        jacobian_equation(c4_invariant(scaled), c6_invariant(scaled)).j_invariant());
}

TEST_CASE("unscaled sums for Lambda match the binomial identities") {
  for (int n = 4; n <= 7; ++n) {
    const AltPolyMatrix lambda = lambda_matrix(n);
    const MMatrix m = matrix_M(lambda);
    CHECK(c4_double_sum(m) == Rational(16, 3) * Rational(n) * Rational(n - 2).pow(2) *
                                  Rational(binomial(static_cast<unsigned long>(n) + 3, 5)));
    CHECK(c6_double_sum(tensor_N(lambda, m)) ==
          Rational(64) * Rational(n) * Rational(n - 2).pow(3) *
              Rational(binomial(static_cast<unsigned long>(n) + 5, 7)));
  }
}
