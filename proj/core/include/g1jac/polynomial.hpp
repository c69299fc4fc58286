#ifndef G1JAC_POLYNOMIAL_HPP
#define G1JAC_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "g1jac/monomial.hpp"
#include "g1jac/rational.hpp"

namespace g1jac {

class RatMatrix;

// Sparse multivariate polynomial over the rationals with a fixed variable
// arity.  No zero coefficients are ever stored; the term map iterates in
// descending graded-lex order (leading term first).
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  explicit Polynomial(int arity) : arity_(arity) {
    if (arity < 0) throw InvalidInput("negative arity");
  }

  static Polynomial zero(int arity) { return Polynomial(arity); }
  static Polynomial constant(int arity, const Rational& c);
  static Polynomial variable(int arity, int i);
  static Polynomial term(const Monomial& m, const Rational& c);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  // True iff every term has degree d (vacuously true for 0).
  bool is_form(int d) const;

  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Exact formal partial derivative with respect to variable i (0-based).
  Polynomial derivative(int i) const;

  // p(y_0,...,y_{n-1}) with y_j = sum_i g(i,j) x_i, expanded and collected.
  Polynomial substitute_linear(const RatMatrix& g) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  // gcd of numerators over lcm of denominators, as a positive rational;
  // zero for the zero polynomial.
  Rational content() const;
  // p / (±content) with the leading coefficient positive.
  Polynomial primitive_normalized() const;

  std::vector<Rational> coeff_vector(const std::vector<Monomial>& basis) const;
  static Polynomial from_coeff_vector(int arity, const std::vector<Monomial>& basis,
                                      const std::vector<Rational>& coeffs);

  // Remaps variable i of this polynomial to variable perm[i] of a ring with
  // the given target arity; every used variable must be mapped (perm[i] >= 0
  // whenever x_i occurs).
  Polynomial remap_variables(int target_arity, const std::vector<int>& perm) const;

  std::string str() const;  // human-readable, for diagnostics

 private:
  int arity_;
  TermMap terms_;
  void require_same_ring(const Polynomial& o) const;
};

// All C(arity+degree-1, degree) monomials of the given degree in descending
// graded-lex order.  Deterministic; this ordering is the coordinate system
// for every coefficient-vector computation in the project.
std::vector<Monomial> monomial_basis(int arity, int degree);

std::vector<Polynomial> gradient(const Polynomial& p);

}  // namespace g1jac

#endif
