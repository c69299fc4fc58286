#ifndef G1JAC_ELLIPTIC_HPP
#define G1JAC_ELLIPTIC_HPP

#include <utility>
#include <vector>

#include "g1jac/polynomial.hpp"
#include "g1jac/rational.hpp"
#include "g1jac/secant_types.hpp"

namespace g1jac {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, nonsingular.
struct WeierstrassCurve {
  Rational a1, a2, a3, a4, a6;

  WeierstrassCurve(Rational a1_, Rational a2_, Rational a3_, Rational a4_, Rational a6_);

  Rational b2() const { return a1 * a1 + Rational(4) * a2; }
  Rational b4() const { return Rational(2) * a4 + a1 * a3; }
  Rational b6() const { return a3 * a3 + Rational(4) * a6; }
  Rational b8() const {
    return a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  Rational c4() const { return b2() * b2() - Rational(24) * b4(); }
  Rational c6() const {
    return -b2() * b2() * b2() + Rational(36) * b2() * b4() - Rational(216) * b6();
  }
  Rational discriminant() const;
  Rational j_invariant() const { return c4().pow(3) / discriminant(); }

  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.a4 == b.a4 && a.a6 == b.a6;
  }
};

// Affine point or the point at infinity.
struct CurvePoint {
  bool infinity = true;
  Rational x, y;

  static CurvePoint at_infinity() { return CurvePoint{}; }
  static CurvePoint affine(Rational x, Rational y) {
    return CurvePoint{false, std::move(x), std::move(y)};
  }
  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

bool on_curve(const WeierstrassCurve& e, const CurvePoint& p);
CurvePoint negate(const WeierstrassCurve& e, const CurvePoint& p);
CurvePoint add(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint multiply(const WeierstrassCurve& e, long k, const CurvePoint& p);

// ---------------------------------------------------------------------------
// Function-field arithmetic in K(E) = K(x)[y] / (Weierstrass relation).
//
// Elements are two-variable polynomials (variable 0 is x, variable 1 is y)
// kept in the unique normal form with y-degree <= 1 via repeated substitution
// of y^2 = x^3 + a2 x^2 + a4 x + a6 - a1 xy - a3 y.
using FunctionFieldElement = Polynomial;

Polynomial reduce_on_curve(const WeierstrassCurve& e, const Polynomial& p);

// f -> df/omega for omega = dx/(2y + a1 x + a3), in normal form.
Polynomial derivative_on_curve(const WeierstrassCurve& e, const Polynomial& f);

// The basis (1, x, y, x^2, xy, x^3, ...) of L(n.0_E): functions labelled by
// m in {0, 2, 3, ..., n}, with x_m = x^(m/2) for even m and x^((m-3)/2) y for
// odd m.  This listing order is the canonical coordinate order everywhere.
std::vector<Polynomial> rr_basis(int n);

// m-labels {0, 2, 3, ..., n} in coordinate order;
// position p (0-based) holds label (p == 0 ? 0 : p + 1).
std::vector<int> coordinate_labels(int n);

// Basis of the quadrics in the n coordinates vanishing on the degree-n
// embedding of E: the kernel of evaluating coordinate-pair products in
// L(2n.0_E).  Dimension n(n-3)/2, asserted.  Requires n >= 4.
FormBasis curve_quadrics(const WeierstrassCurve& e, int n);

// (vP, dvP): values of the rr_basis and of its omega-derivatives at an
// affine point P.
std::pair<std::vector<Rational>, std::vector<Rational>> point_vector(
    const WeierstrassCurve& e, const CurvePoint& p, int n);

// The plane cubic model of E in the coordinates (x_0 : x_2 : x_3) = (1:x:y):
// u2^2 u0 + a1 u0 u1 u2 + a3 u0^2 u2 - u1^3 - a2 u0 u1^2 - a4 u0^2 u1 - a6 u0^3.
Polynomial weierstrass_cubic(const WeierstrassCurve& e);

// Small search for affine rational points (bounded numerator/denominator of
// x), used to sample secant points for rank verification.
std::vector<CurvePoint> find_rational_points(const WeierstrassCurve& e, int max_count);

}  // namespace g1jac

#endif
