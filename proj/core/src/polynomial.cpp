#include "g1jac/polynomial.hpp"

#include <sstream>

#include "g1jac/linalg.hpp"

namespace g1jac {

Polynomial Polynomial::constant(int arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term(Monomial::one(arity), c);
  return p;
}

Polynomial Polynomial::variable(int arity, int i) {
  Polynomial p(arity);
  p.add_term(Monomial::variable(arity, i), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.arity());
  p.add_term(m, c);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

bool Polynomial::is_form(int d) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.arity() != arity_) throw InvalidInput("monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw InternalError("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw InternalError("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (arity_ != o.arity_) throw InvalidInput("polynomial arity mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(arity_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial r(a.arity_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  // Iterate the shorter factor on the outside.
  const Polynomial& s = a.terms_.size() <= b.terms_.size() ? a : b;
  const Polynomial& t = a.terms_.size() <= b.terms_.size() ? b : a;
  for (const auto& [ms, cs] : s.terms_) {
    for (const auto& [mt, ct] : t.terms_) {
      r.add_term(ms.times(mt), cs * ct);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(arity_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, c * v);
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 0 || i >= arity_) throw InvalidInput("derivative index out of range");
  Polynomial r(arity_);
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m.exp(i);
    if (e == 0) continue;
    auto exps = m.exponents();
    exps[static_cast<std::size_t>(i)] = e - 1;
    r.add_term(Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
  }
  return r;
}

Polynomial Polynomial::substitute_linear(const RatMatrix& g) const {
  if (g.rows() != arity_ || g.cols() != arity_)
    throw InvalidInput("substitution matrix dimension mismatch");
  // Linear images of the variables: x_j -> sum_i g(i,j) x_i.
  std::vector<Polynomial> image;
  image.reserve(static_cast<std::size_t>(arity_));
  for (int j = 0; j < arity_; ++j) {
    Polynomial lj(arity_);
    for (int i = 0; i < arity_; ++i) lj.add_term(Monomial::variable(arity_, i), g.at(i, j));
    image.push_back(std::move(lj));
  }
  // Power cache per variable, grown on demand.
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(arity_));
  auto power = [&](int j, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[static_cast<std::size_t>(j)];
    if (cache.empty()) cache.push_back(Polynomial::constant(arity_, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * image[static_cast<std::size_t>(j)]);
    return cache[e];
  };
  Polynomial r(arity_);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(arity_, c);
    for (int j = 0; j < arity_; ++j) {
      const std::uint32_t e = m.exp(j);
      if (e > 0) t = t * power(j, e);
    }
    r += t;
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw InvalidInput("evaluation point length mismatch");
  Rational r(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < arity_; ++i) {
      const std::uint32_t e = m.exp(i);
      if (e > 0) t *= point[static_cast<std::size_t>(i)].pow(e);
    }
    r += t;
  }
  return r;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(0);
  Integer num(0), den(1);
  for (const auto& [m, c] : terms_) {
    num = gcd(num, c.num());
    den = lcm(den, c.den());
  }
  return Rational(num, den);
}

Polynomial Polynomial::primitive_normalized() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (leading_coeff().sign() < 0) c = -c;
  return scaled(c.inverse());
}

std::vector<Rational> Polynomial::coeff_vector(const std::vector<Monomial>& basis) const {
  std::vector<Rational> v;
  v.reserve(basis.size());
  for (const auto& m : basis) v.push_back(coeff(m));
  return v;
}

Polynomial Polynomial::from_coeff_vector(int arity, const std::vector<Monomial>& basis,
                                         const std::vector<Rational>& coeffs) {
  if (basis.size() != coeffs.size()) throw InvalidInput("coeff vector length mismatch");
  Polynomial p(arity);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
  return p;
}

Polynomial Polynomial::remap_variables(int target_arity, const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != arity_) throw InvalidInput("remap table length mismatch");
  Polynomial r(target_arity);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(target_arity), 0);
    for (int i = 0; i < arity_; ++i) {
      const std::uint32_t e = m.exp(i);
      if (e == 0) continue;
      const int t = perm[static_cast<std::size_t>(i)];
      if (t < 0 || t >= target_arity)
        throw InternalError("remap of a variable in use to an invalid slot");
      exps[static_cast<std::size_t>(t)] += e;
    }
    r.add_term(Monomial(std::move(exps)), c);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational a = c.abs();
    bool printed = false;
    if (a != Rational(1) || m.degree() == 0) {
      os << a.str();
      printed = true;
    }
    for (int i = 0; i < arity_; ++i) {
      const std::uint32_t e = m.exp(i);
      if (e == 0) continue;
      if (printed) os << "*";
      os << "x" << i;
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

namespace {

void fill_basis(int arity, int pos, int remaining, std::vector<std::uint32_t>& cur,
                std::vector<Monomial>& out) {
  if (pos == arity - 1) {
    cur[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(remaining);
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(e);
    fill_basis(arity, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(int arity, int degree) {
  if (arity < 1) throw InvalidInput("monomial basis needs arity >= 1");
  if (degree < 0) throw InvalidInput("monomial basis needs degree >= 0");
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(static_cast<std::size_t>(arity), 0);
  fill_basis(arity, 0, degree, cur, out);
  return out;
}

std::vector<Polynomial> gradient(const Polynomial& p) {
  std::vector<Polynomial> g;
  g.reserve(static_cast<std::size_t>(p.arity()));
  for (int i = 0; i < p.arity(); ++i) g.push_back(p.derivative(i));
  return g;
}

}  // namespace g1jac
