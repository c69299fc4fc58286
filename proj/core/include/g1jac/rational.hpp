#ifndef G1JAC_RATIONAL_HPP
#define G1JAC_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <ostream>
#include <string>
#include <utility>

#include "g1jac/errors.hpp"

namespace g1jac {

using Integer = mpz_class;

// Exact arbitrary-precision rational number.  Always in lowest terms with a
// positive denominator; equality is plain value equality.  Backed by GMP's
// mpq layer, wrapped so that every construction path canonicalizes (raw
// mpq_class does not canonicalize two-argument constructions).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}          // NOLINT: implicit by design
  Rational(long n) : v_(mpz_class(n)) {}
  Rational(long long n) : v_(mpz_class(static_cast<long>(n))) {
    static_assert(sizeof(long long) == sizeof(long), "LP64 expected");
  }
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (sgn(den) == 0) throw InvalidInput("rational with zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw InvalidInput("cannot parse rational: '" + s + "'");
    if (sgn(q.get_den()) == 0)
      throw InvalidInput("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  const Integer& num() const { return v_.get_num(); }
  const Integer& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const {
    Rational r = *this;
    if (r.sign() < 0) r.v_ = -r.v_;
    return r;
  }

  Rational pow(unsigned e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), e);
    Rational out;
    out.v_ = std::move(r);  // powers of a canonical fraction stay canonical
    return out;
  }

  Rational inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InvalidInput("division by zero");
    return wrap(a.v_ / b.v_);
  }
  Rational operator-() const { return wrap(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
  }

  // Rough size in bits, used for pivot selection in exact elimination.
  std::size_t bit_size() const {
    return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
  }

 private:
  static Rational wrap(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }
  mpq_class v_;
};

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace g1jac

#endif
