#ifndef G1JAC_MONOMIAL_HPP
#define G1JAC_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "g1jac/errors.hpp"

namespace g1jac {

// Exponent vector of fixed length (the variable arity).  The canonical total
// order used everywhere is graded lexicographic: compare total degree first,
// then exponent vectors lexicographically with variable 0 strongest.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial one(int arity) {
    return Monomial(std::vector<std::uint32_t>(static_cast<std::size_t>(arity), 0));
  }
  static Monomial variable(int arity, int i) {
    if (i < 0 || i >= arity) throw InvalidInput("variable index out of range");
    auto m = one(arity);
    m.e_[static_cast<std::size_t>(i)] = 1;
    return m;
  }

  int arity() const { return static_cast<int>(e_.size()); }
  std::uint32_t exp(int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  int degree() const {
    int d = 0;
    for (auto x : e_) d += static_cast<int>(x);
    return d;
  }

  Monomial times(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  Monomial times_variable(int i) const {
    Monomial r = *this;
    r.e_[static_cast<std::size_t>(i)] += 1;
    return r;
  }

  std::optional<Monomial> divided_by(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (r.e_[i] < o.e_[i]) return std::nullopt;
      r.e_[i] -= o.e_[i];
    }
    return r;
  }

  // <0, 0 or >0 as a is below, equal to or above b in graded lex.
  static int cmp_grlex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

 private:
  std::vector<std::uint32_t> e_;
};

// Leading-term-first ordering: the map comparator for polynomial storage, so
// iteration always runs from the grlex-largest monomial downwards.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp_grlex(a, b) > 0;
  }
};

}  // namespace g1jac

#endif
