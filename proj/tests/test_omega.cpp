#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g1jac/explicit_omega.hpp"
#include "g1jac/omega.hpp"
#include "g1jac/secant.hpp"

using namespace g1jac;

namespace {

WeierstrassCurve curve_37a() {
  return WeierstrassCurve(Rational(0), Rational(0), Rational(1), Rational(-1), Rational(0));
}

std::mt19937_64 rng(31337);

RatMatrix random_invertible(int n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> entry(lo, hi);
  for (;;) {
    RatMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = Rational(entry(rng));
    if (g.inverse().has_value()) return g;
  }
}

Polynomial fermat_cubic() {
  Polynomial f(3);
  for (int i = 0; i < 3; ++i)
    f += Polynomial::variable(3, i) * Polynomial::variable(3, i) * Polynomial::variable(3, i);
  return f;
}

}  // namespace

TEST_CASE("solved omega of a plane cubic is proportional to the partials matrix") {
  const Polynomial f = fermat_cubic();
  const OmegaMatrix solved = solve_omega_for({f});
  CHECK(solved.provenance == OmegaProvenance::solved);
  CHECK(solved.mat.is_alternating());
  CHECK(solved.mat.entry_degree() == 2);
  Rational lambda;
  CHECK(proportional(solved.mat, classical_omega_cubic(f).mat, &lambda));
  CHECK(!lambda.is_zero());
  // normalized output: content 1
  CHECK(solved.mat.content() == Rational(1));
}

TEST_CASE("solved omega of a quadric pair is proportional to the minors matrix") {
  const FormBasis q = curve_quadrics(curve_37a(), 4);
  const OmegaMatrix solved = solve_omega_for(q.forms);
  const OmegaMatrix classical = classical_omega_quadric_pair(q.forms[0], q.forms[1]);
  Rational lambda;
  CHECK(proportional(solved.mat, classical.mat, &lambda));
}

TEST_CASE("n=5: the syzygy space is one-dimensional") {
  const auto chain = secant_chain(curve_quadrics(curve_37a(), 5));
  const OmegaMatrix solved = solve_omega_for(chain.forms);
  CHECK(solved.mat.is_alternating());
  // solving again is deterministic
  const OmegaMatrix again = solve_omega_for(chain.forms);
  CHECK(solved.mat == again.mat);
}

TEST_CASE("solve rejects inconsistent and underdetermined input") {
  // gradient row of a rank-1 quadric in 3 variables: x0^2 only involves x0,
  // and the annihilator space of (2x0, 0, 0) is far from 1-dimensional.
  Polynomial f(3);
  f.add_term(Monomial(std::vector<std::uint32_t>{2, 0, 0}), Rational(1));
  CHECK_THROWS_AS(solve_omega_for({f}), DegenerateModel);
}

TEST_CASE("gl action: identity, scalars, composition") {
  const AltPolyMatrix omega = build_omega_explicit(curve_37a(), 4).mat;
  CHECK(gl_act(RatMatrix::identity(4), omega) == omega);

  RatMatrix twice = RatMatrix::identity(4);
  for (int i = 0; i < 4; ++i) twice.at(i, i) = Rational(5);
  CHECK(gl_act(twice, omega) == omega);

  for (int trial = 0; trial < 5; ++trial) {
    const RatMatrix g = random_invertible(4);
    const RatMatrix h = random_invertible(4);
    CHECK(gl_act(g, gl_act(h, omega)) == gl_act(g * h, omega));
  }

  RatMatrix singular(4, 4);
  CHECK_THROWS_AS(gl_act(singular, omega), InvalidInput);
}

TEST_CASE("gl action preserves alternation and degree") {
  const AltPolyMatrix omega = build_omega_explicit(curve_37a(), 5).mat;
  const RatMatrix g = random_invertible(5);
  const AltPolyMatrix moved = gl_act(g, omega);
  CHECK(moved.is_alternating());
  CHECK(moved.entry_degree() == 2);
}

TEST_CASE("annihilation certificates") {
  const Polynomial f = fermat_cubic();
  const OmegaMatrix solved = solve_omega_for({f});
  const auto grads = std::vector<std::vector<Polynomial>>{gradient(f)};
  CHECK(verify_annihilation(solved.mat, grads).ok());

  // perturbing one entry breaks the identity
  AltPolyMatrix broken = solved.mat;
  Polynomial entry = broken.at(0, 1);
  entry += Polynomial::variable(3, 0) * Polynomial::variable(3, 0);
  broken.set_upper(0, 1, entry);
  CHECK(!verify_annihilation(broken, grads).ok());

  // quadric pair: the H2 bilinear identity is included
  const FormBasis q = curve_quadrics(curve_37a(), 4);
  const OmegaMatrix cl = classical_omega_quadric_pair(q.forms[0], q.forms[1]);
  const auto rep = verify_annihilation(cl.mat, {gradient(q.forms[0]), gradient(q.forms[1])});
  CHECK(rep.rows_annihilate);
  REQUIRE(rep.h2.has_value());
  CHECK(*rep.h2);
}

TEST_CASE("pfaffian certificates with the classical scalars") {
  // plane cubic: the 2x2 pfaffians are single entries; scalar +1 under the
  // chosen sign convention
  const Polynomial f = fermat_cubic();
  const auto rep3 = verify_pfaffians(classical_omega_cubic(f).mat, {gradient(f)});
  CHECK(rep3.ok);
  CHECK(rep3.scalar == Rational(1));

  // quadric pair: entries against gradient minors, scalar +1
  const FormBasis q = curve_quadrics(curve_37a(), 4);
  const OmegaMatrix cl = classical_omega_quadric_pair(q.forms[0], q.forms[1]);
  const auto rep4 = verify_pfaffians(cl.mat, {gradient(q.forms[0]), gradient(q.forms[1])});
  CHECK(rep4.ok);
  CHECK(rep4.scalar == Rational(1));

  // n=5: 4x4 pfaffians proportional to the quintic partials
  const auto chain = secant_chain(curve_quadrics(curve_37a(), 5));
  const OmegaMatrix solved = solve_omega_for(chain.forms);
  const auto rep5 = verify_pfaffians(solved.mat, {gradient(chain.forms[0])});
  CHECK(rep5.ok);
  CHECK(!rep5.scalar.is_zero());

  // a perturbed matrix has no global scalar
  AltPolyMatrix broken = solved.mat;
  broken.set_upper(0, 1, broken.at(0, 1).scaled(Rational(2)));
  CHECK(!verify_pfaffians(broken, {gradient(chain.forms[0])}).ok);
}

TEST_CASE("rank at secant points") {
  const WeierstrassCurve e = curve_37a();
  const auto chain = secant_chain(curve_quadrics(e, 5));
  const AltPolyMatrix omega = solve_omega_for(chain.forms).mat;

  const CurvePoint p0 = CurvePoint::affine(Rational(0), Rational(0));
  const CurvePoint p1 = add(e, p0, p0);
  CHECK(rank_at_secant_point(omega, e, {p0}, {Rational(1)}) == 2);
  CHECK(rank_at_secant_point(omega, e, {p1}, {Rational(7)}) == 2);
  CHECK(rank_at_secant_point(omega, e, {p0, p1}, {Rational(1), Rational(1)}) == 4);
  // a zero coefficient degenerates to the r=1 case
  CHECK(rank_at_secant_point(omega, e, {p0, p1}, {Rational(1), Rational(0)}) == 2);

  CHECK_THROWS_AS(rank_at_secant_point(omega, e, {p0, p0}, {Rational(1), Rational(1)}),
                  InvalidInput);
  CHECK_THROWS_AS(rank_at_secant_point(omega, e, {}, {}), InvalidInput);
  CHECK_THROWS_AS(
      rank_at_secant_point(omega, e, {p0, p1, multiply(e, 3, p0)},
                           {Rational(1), Rational(1), Rational(1)}),
      InvalidInput);  // n - 2r < 1
}

TEST_CASE("solved omega equals the closed form up to scale for n = 4, 5, 6") {
  const WeierstrassCurve e = curve_37a();
  for (int n = 4; n <= 6; ++n) {
    const FormBasis q = curve_quadrics(e, n);
    const auto forms = n == 4 ? q.forms : secant_chain(q).forms;
    const OmegaMatrix solved = solve_omega_for(forms);
    Rational lambda;
    CHECK(proportional(solved.mat, build_omega_explicit(e, n).mat, &lambda));
  }
}
