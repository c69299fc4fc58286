#ifndef G1JAC_EXPLICIT_OMEGA_HPP
#define G1JAC_EXPLICIT_OMEGA_HPP

#include <vector>

#include "g1jac/elliptic.hpp"
#include "g1jac/omega.hpp"

namespace g1jac {

// Polynomial ring for the closed-form construction: indeterminates x_m for m
// in the window [-6, n+7] plus the five symbolic Weierstrass coefficients
// a1, a2, a3, a4, a6 (a5 is identically zero).  Linear forms such as
// xdot/xbar live here with the a's kept symbolic; numeric curves are
// substituted in at the end.
class ExtendedRing {
 public:
  explicit ExtendedRing(int n);

  int n() const { return n_; }
  int arity() const { return arity_; }
  int window_lo() const { return lo_; }
  int window_hi() const { return hi_; }
  bool in_window(int m) const { return m >= lo_ && m <= hi_; }

  int x_slot(int m) const;
  int a_slot(int k) const;  // k in {1,2,3,4,6}

  Polynomial x(int m) const;
  Polynomial a(int k) const;

  // dx_m / omega as a linear form:
  //   (m/2)(2 x_{m+1} + a1 x_m + a3 x_{m-2})
  //     + [m odd] sum_{i=1..6} (-1)^i (m - i/2) a_i x_{m+1-i}.
  Polynomial xdot(int m) const;
  // (1/2)(2 x_{m+1} + a1 x_m + a3 x_{m-2}) + [m odd] sum (-1)^i a_i x_{m+1-i}.
  Polynomial xbar(int m) const;

  // Same as x/xbar but silently dropping references outside the window;
  // used by the truncated doubly-infinite-sum property test.
  Polynomial x_truncated(int m) const;
  Polynomial xbar_truncated(int m) const;

  // x_m -> x_{m+shift} on every term (a-variables untouched).
  Polynomial shift_x(const Polynomial& p, int shift) const;

  // Coefficient of a_k^1 (all other a-exponents zero), as a pure x-form.
  Polynomial a_coefficient(const Polynomial& p, int k) const;

  // Substitute the curve's rational a-coefficients, leaving a pure x-form.
  Polynomial substitute_curve(const Polynomial& p, const WeierstrassCurve& e) const;

  // Restriction to the curve: x_m -> x^(m/2) resp. x^((m-3)/2) y, followed
  // by normal-form reduction; the input must be a-free (use substitute_curve
  // first).
  Polynomial to_function_field(const Polynomial& p, const WeierstrassCurve& e) const;

  // The x-labels that actually occur in p (any a-exponents are ignored).
  std::vector<int> x_support(const Polynomial& p) const;

 private:
  int n_, lo_, hi_, arity_;
};

// A_rs = x_r xdot_s - x_s xdot_r on labels r, s in {0, 2, 3, ..., n};
// entries are quadratic in x_0, x_2, ..., x_{n+1} (asserted).
AltPolyMatrix build_A(const ExtendedRing& ring);

// B via the closed forms: for r = s (mod 2), r < s,
//   B_rs = 2(x_r xbar_s + x_{r+2} xbar_{s-2} + ... + x_{s-2} xbar_{r+2});
// for r even, s odd,
//   B_rs = -a1 x_r x_s + Q_{r,s+1} + a2 Q_{r,s-1} + a4 Q_{r,s-3}
//          + a6 Q_{r,s-5} - Q_{s,r+1}.
// Entries quadratic in x_0, x_2, ..., x_{n+1} (asserted).
AltPolyMatrix build_B(const ExtendedRing& ring);

// The Q building block of the odd/even closed form.
Polynomial q_form(const ExtendedRing& ring, int i, int j);

// nB - 2A with the a's symbolic; every x_m with m outside {0, 2, ..., n}
// must cancel (asserted -- a failure is an internal error).
struct SymbolicOmega {
  ExtendedRing ring;
  AltPolyMatrix a;
  AltPolyMatrix b;
  AltPolyMatrix omega;
};
SymbolicOmega build_omega_symbolic(int n);

// nB - 2A with the curve's coefficients substituted and the coordinates
// relabelled to positions 0..n-1.  Kept at its natural scale: its c4/c6 are
// exactly (n-2)^4 c4(E) and (n-2)^6 c6(E).
OmegaMatrix build_omega_explicit(const WeierstrassCurve& e, int n);

// The coefficient of a1 in the symbolic omega, and its closed form
//   gamma_rs x_r x_s + (-1)^s n [r+s even] sum_{k=1}^{(s-r)/2-1} x_{r+2k} x_{s-2k}
// with gamma_rs = (-1)^max(r,s) sign(s-r) n - 2((-1)^s floor(s/2) - (-1)^r floor(r/2)).
AltPolyMatrix omega_a1_part(const SymbolicOmega& so);
AltPolyMatrix omega_a1_closed_form(const ExtendedRing& ring);

// Lambda_ij = (sign(j-i) n - 2(j-i)) x_i x_j on 0-based positions; the test
// matrix with c4 = (n-2)^4 and c6 = -(n-2)^6.
AltPolyMatrix lambda_matrix(int n);

// The 3x3 matrix of signed partials of a ternary cubic.
OmegaMatrix classical_omega_cubic(const Polynomial& cubic);

// The 4x4 matrix of 2x2 gradient minors of a quaternary quadric pair,
// Omega_ij = dF1/dx_k dF2/dx_l - dF1/dx_l dF2/dx_k, (i,j,k,l) even.
OmegaMatrix classical_omega_quadric_pair(const Polynomial& f1, const Polynomial& f2);

}  // namespace g1jac

#endif
