#include "g1jac/elliptic.hpp"

#include <algorithm>

#include "g1jac/linalg.hpp"

namespace g1jac {

WeierstrassCurve::WeierstrassCurve(Rational a1_, Rational a2_, Rational a3_, Rational a4_,
                                   Rational a6_)
    : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)),
      a6(std::move(a6_)) {
  if (discriminant().is_zero())
    throw InvalidInput("singular Weierstrass equation (discriminant zero)");
}

Rational WeierstrassCurve::discriminant() const {
  const Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - Rational(8) * B4.pow(3) - Rational(27) * B6 * B6 +
         Rational(9) * B2 * B4 * B6;
}

bool on_curve(const WeierstrassCurve& e, const CurvePoint& p) {
  if (p.infinity) return true;
  const Rational lhs = p.y * p.y + e.a1 * p.x * p.y + e.a3 * p.y;
  const Rational rhs = p.x.pow(3) + e.a2 * p.x * p.x + e.a4 * p.x + e.a6;
  return lhs == rhs;
}

CurvePoint negate(const WeierstrassCurve& e, const CurvePoint& p) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

CurvePoint add(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (p.x == q.x && (p.y + q.y + e.a1 * q.x + e.a3).is_zero()) return CurvePoint::at_infinity();
  Rational lambda, nu;
  if (p.x != q.x) {
    lambda = (q.y - p.y) / (q.x - p.x);
    nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
  } else {
    const Rational d = Rational(2) * p.y + e.a1 * p.x + e.a3;
    lambda = (Rational(3) * p.x * p.x + Rational(2) * e.a2 * p.x + e.a4 - e.a1 * p.y) / d;
    nu = (-p.x.pow(3) + e.a4 * p.x + Rational(2) * e.a6 - e.a3 * p.y) / d;
  }
  const Rational x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  const Rational y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return CurvePoint::affine(x3, y3);
}

CurvePoint multiply(const WeierstrassCurve& e, long k, const CurvePoint& p) {
  CurvePoint base = p;
  if (k < 0) {
    base = negate(e, base);
    k = -k;
  }
  CurvePoint acc = CurvePoint::at_infinity();
  while (k > 0) {
    if (k & 1) acc = add(e, acc, base);
    base = add(e, base, base);
    k >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------

namespace {

Monomial xy_monomial(unsigned a, unsigned b) {
  return Monomial(std::vector<std::uint32_t>{a, b});
}

// x^3 + a2 x^2 + a4 x + a6 - a1 xy - a3 y, the image of y^2.
Polynomial y_square_image(const WeierstrassCurve& e) {
  Polynomial r(2);
  r.add_term(xy_monomial(3, 0), Rational(1));
  r.add_term(xy_monomial(2, 0), e.a2);
  r.add_term(xy_monomial(1, 0), e.a4);
  r.add_term(xy_monomial(0, 0), e.a6);
  r.add_term(xy_monomial(1, 1), -e.a1);
  r.add_term(xy_monomial(0, 1), -e.a3);
  return r;
}

}  // namespace

Polynomial reduce_on_curve(const WeierstrassCurve& e, const Polynomial& p) {
  if (p.arity() != 2) throw InvalidInput("function field elements have two variables");
  const Polynomial ysq = y_square_image(e);
  Polynomial cur = p;
  for (;;) {
    Polynomial high(2), low(2);
    for (const auto& [m, c] : cur.terms()) {
      if (m.exp(1) >= 2) {
        high.add_term(xy_monomial(m.exp(0), m.exp(1) - 2), c);
      } else {
        low.add_term(m, c);
      }
    }
    if (high.is_zero()) return low;
    cur = low + high * ysq;
  }
}

Polynomial derivative_on_curve(const WeierstrassCurve& e, const Polynomial& f) {
  Polynomial xdot(2), ydot(2);
  xdot.add_term(xy_monomial(0, 1), Rational(2));
  xdot.add_term(xy_monomial(1, 0), e.a1);
  xdot.add_term(xy_monomial(0, 0), e.a3);
  ydot.add_term(xy_monomial(2, 0), Rational(3));
  ydot.add_term(xy_monomial(1, 0), Rational(2) * e.a2);
  ydot.add_term(xy_monomial(0, 0), e.a4);
  ydot.add_term(xy_monomial(0, 1), -e.a1);
  return reduce_on_curve(e, f.derivative(0) * xdot + f.derivative(1) * ydot);
}

std::vector<Polynomial> rr_basis(int n) {
  if (n < 3) throw InvalidInput("rr_basis needs n >= 3");
  std::vector<Polynomial> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (int m : coordinate_labels(n)) {
    Polynomial f(2);
    if (m % 2 == 0) {
      f.add_term(xy_monomial(static_cast<unsigned>(m / 2), 0), Rational(1));
    } else {
      f.add_term(xy_monomial(static_cast<unsigned>((m - 3) / 2), 1), Rational(1));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

std::vector<int> coordinate_labels(int n) {
  if (n < 3) throw InvalidInput("coordinate labels need n >= 3");
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n));
  labels.push_back(0);
  for (int m = 2; m <= n; ++m) labels.push_back(m);
  return labels;
}

FormBasis curve_quadrics(const WeierstrassCurve& e, int n) {
  if (n < 4) throw InvalidInput("curve_quadrics needs n >= 4 (for n = 3 the model is a cubic)");
  const auto basis_fns = rr_basis(n);
  // Monomial basis of L(2n.0_E): x^a y^b with b <= 1 and 2a + 3b <= 2n.
  std::vector<Monomial> target;
  for (int a = 0; 2 * a <= 2 * n; ++a) target.push_back(xy_monomial(static_cast<unsigned>(a), 0));
  for (int a = 0; 2 * a + 3 <= 2 * n; ++a)
    target.push_back(xy_monomial(static_cast<unsigned>(a), 1));
  if (static_cast<int>(target.size()) != 2 * n)
    throw InternalError("Riemann-Roch dimension of L(2n.0_E) is off");

  const auto pair_monomials = monomial_basis(n, 2);  // descending graded-lex
  RatMatrix m(2 * n, static_cast<int>(pair_monomials.size()));
  for (std::size_t p = 0; p < pair_monomials.size(); ++p) {
    // Each degree-2 monomial u_i u_j (or u_i^2) maps to the reduced product
    // of the corresponding basis functions.
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      for (unsigned rep = 0; rep < pair_monomials[p].exp(v); ++rep) {
        (i < 0 ? i : j) = v;
      }
    }
    const Polynomial prod = reduce_on_curve(
        e, basis_fns[static_cast<std::size_t>(i)] * basis_fns[static_cast<std::size_t>(j)]);
    for (const auto& [mono, c] : prod.terms()) {
      auto it = std::find(target.begin(), target.end(), mono);
      if (it == target.end()) throw InternalError("product escaped L(2n.0_E)");
      m.at(static_cast<int>(it - target.begin()), static_cast<int>(p)) = c;
    }
  }

  const auto kernel = kernel_basis(m);
  std::vector<Polynomial> quadrics;
  quadrics.reserve(kernel.size());
  for (const auto& v : kernel)
    quadrics.push_back(Polynomial::from_coeff_vector(n, pair_monomials, v));
  FormBasis out = make_form_basis(n, 2, std::move(quadrics));
  if (out.dimension() != n * (n - 3) / 2)
    throw InternalError("quadric space of the embedded curve has wrong dimension");
  return out;
}

std::pair<std::vector<Rational>, std::vector<Rational>> point_vector(const WeierstrassCurve& e,
                                                                     const CurvePoint& p, int n) {
  if (p.infinity) throw InvalidInput("point_vector needs an affine point");
  if (!on_curve(e, p)) throw InvalidInput("point is not on the curve");
  const std::vector<Rational> at{p.x, p.y};
  std::vector<Rational> v, dv;
  for (const auto& f : rr_basis(n)) {
    v.push_back(f.evaluate(at));
    dv.push_back(derivative_on_curve(e, f).evaluate(at));
  }
  return {v, dv};
}

Polynomial weierstrass_cubic(const WeierstrassCurve& e) {
  auto mono = [](unsigned u0, unsigned u1, unsigned u2) {
    return Monomial(std::vector<std::uint32_t>{u0, u1, u2});
  };
  Polynomial f(3);
  f.add_term(mono(1, 0, 2), Rational(1));
  f.add_term(mono(1, 1, 1), e.a1);
  f.add_term(mono(2, 0, 1), e.a3);
  f.add_term(mono(0, 3, 0), Rational(-1));
  f.add_term(mono(1, 2, 0), -e.a2);
  f.add_term(mono(2, 1, 0), -e.a4);
  f.add_term(mono(3, 0, 0), -e.a6);
  return f;
}

std::vector<CurvePoint> find_rational_points(const WeierstrassCurve& e, int max_count) {
  std::vector<CurvePoint> found;
  auto try_x = [&](const Rational& x) {
    if (static_cast<int>(found.size()) >= max_count) return;
    // y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0
    const Rational b = e.a1 * x + e.a3;
    const Rational c = -(x.pow(3) + e.a2 * x * x + e.a4 * x + e.a6);
    const Rational disc = b * b - Rational(4) * c;
    if (disc.sign() < 0) return;
    if (mpz_perfect_square_p(disc.num().get_mpz_t()) == 0 ||
        mpz_perfect_square_p(disc.den().get_mpz_t()) == 0)
      return;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), disc.num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), disc.den().get_mpz_t());
    const Rational root(sn, sd);
    for (const Rational& y : {(-b + root) / Rational(2), (-b - root) / Rational(2)}) {
      CurvePoint p = CurvePoint::affine(x, y);
      if (std::find(found.begin(), found.end(), p) == found.end() &&
          static_cast<int>(found.size()) < max_count)
        found.push_back(p);
    }
  };
  for (long den = 1; den <= 4; ++den)
    for (long num = -24; num <= 24; ++num) try_x(Rational(num, den));
  return found;
}

}  // namespace g1jac
