#include "g1jac/explicit_omega.hpp"

#include <algorithm>
#include <set>

namespace g1jac {

namespace {

constexpr int kAKeys[5] = {1, 2, 3, 4, 6};

int sign_of(int x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

}  // namespace

ExtendedRing::ExtendedRing(int n) : n_(n), lo_(-6), hi_(n + 7) {
  if (n < 3) throw InvalidInput("extended ring needs n >= 3");
  arity_ = (hi_ - lo_ + 1) + 5;
}

int ExtendedRing::x_slot(int m) const {
  if (!in_window(m)) throw InvalidInput("x index outside window");
  return m - lo_;
}

int ExtendedRing::a_slot(int k) const {
  for (int t = 0; t < 5; ++t)
    if (kAKeys[t] == k) return (hi_ - lo_ + 1) + t;
  throw InvalidInput("a-coefficient index must be 1, 2, 3, 4 or 6");
}

Polynomial ExtendedRing::x(int m) const { return Polynomial::variable(arity_, x_slot(m)); }
Polynomial ExtendedRing::a(int k) const { return Polynomial::variable(arity_, a_slot(k)); }

Polynomial ExtendedRing::xdot(int m) const {
  Polynomial out(arity_);
  const Rational half_m(m, 2);
  auto add = [&](int idx, const Rational& c, int a_key) {
    if (c.is_zero()) return;
    Monomial mono = Monomial::variable(arity_, x_slot(idx));
    if (a_key != 0) mono = mono.times_variable(a_slot(a_key));
    out.add_term(mono, c);
  };
  add(m + 1, Rational(m), 0);
  add(m, half_m, 1);
  add(m - 2, half_m, 3);
  const bool odd = (m % 2 + 2) % 2 == 1;
  if (odd) {
    for (int i = 1; i <= 6; ++i) {
      if (i == 5) continue;  // a5 = 0 by convention
      const int s = i % 2 == 0 ? 1 : -1;
      add(m + 1 - i, Rational(s) * Rational(2 * m - i, 2), i);
    }
  }
  return out;
}

Polynomial ExtendedRing::xbar(int m) const {
  Polynomial out(arity_);
  auto add = [&](int idx, const Rational& c, int a_key) {
    if (c.is_zero()) return;
    Monomial mono = Monomial::variable(arity_, x_slot(idx));
    if (a_key != 0) mono = mono.times_variable(a_slot(a_key));
    out.add_term(mono, c);
  };
  add(m + 1, Rational(1), 0);
  add(m, Rational(1, 2), 1);
  add(m - 2, Rational(1, 2), 3);
  const bool odd = (m % 2 + 2) % 2 == 1;
  if (odd) {
    for (int i = 1; i <= 6; ++i) {
      if (i == 5) continue;
      add(m + 1 - i, Rational(i % 2 == 0 ? 1 : -1), i);
    }
  }
  return out;
}

Polynomial ExtendedRing::x_truncated(int m) const {
  return in_window(m) ? x(m) : Polynomial::zero(arity_);
}

Polynomial ExtendedRing::xbar_truncated(int m) const {
  Polynomial out(arity_);
  auto add = [&](int idx, const Rational& c, int a_key) {
    if (c.is_zero() || !in_window(idx)) return;
    Monomial mono = Monomial::variable(arity_, x_slot(idx));
    if (a_key != 0) mono = mono.times_variable(a_slot(a_key));
    out.add_term(mono, c);
  };
  add(m + 1, Rational(1), 0);
  add(m, Rational(1, 2), 1);
  add(m - 2, Rational(1, 2), 3);
  const bool odd = (m % 2 + 2) % 2 == 1;
  if (odd) {
    for (int i = 1; i <= 6; ++i) {
      if (i == 5) continue;
      add(m + 1 - i, Rational(i % 2 == 0 ? 1 : -1), i);
    }
  }
  return out;
}

Polynomial ExtendedRing::shift_x(const Polynomial& p, int shift) const {
  std::vector<int> perm(static_cast<std::size_t>(arity_));
  for (int s = 0; s < arity_; ++s) perm[static_cast<std::size_t>(s)] = s;
  for (int m = lo_; m <= hi_; ++m) {
    const int target = m + shift;
    perm[static_cast<std::size_t>(x_slot(m))] = in_window(target) ? x_slot(target) : -1;
  }
  return p.remap_variables(arity_, perm);
}

Polynomial ExtendedRing::a_coefficient(const Polynomial& p, int k) const {
  const int slot = a_slot(k);
  Polynomial out(arity_);
  for (const auto& [m, c] : p.terms()) {
    if (m.exp(slot) != 1) continue;
    bool other = false;
    for (int t = 0; t < 5 && !other; ++t) {
      const int s = a_slot(kAKeys[t]);
      if (s != slot && m.exp(s) > 0) other = true;
    }
    if (other) continue;
    auto exps = m.exponents();
    exps[static_cast<std::size_t>(slot)] = 0;
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

Polynomial ExtendedRing::substitute_curve(const Polynomial& p, const WeierstrassCurve& e) const {
  const Rational* values[5] = {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6};
  Polynomial out(arity_);
  for (const auto& [m, c] : p.terms()) {
    Rational coeff = c;
    auto exps = m.exponents();
    for (int t = 0; t < 5; ++t) {
      const int slot = a_slot(kAKeys[t]);
      const std::uint32_t e2 = m.exp(slot);
      if (e2 > 0) {
        coeff *= values[t]->pow(e2);
        exps[static_cast<std::size_t>(slot)] = 0;
      }
    }
    out.add_term(Monomial(std::move(exps)), coeff);
  }
  return out;
}

Polynomial ExtendedRing::to_function_field(const Polynomial& p, const WeierstrassCurve& e) const {
  Polynomial out(2);
  for (const auto& [m, c] : p.terms()) {
    unsigned xe = 0, ye = 0;
    for (int mm = lo_; mm <= hi_; ++mm) {
      const std::uint32_t em = m.exp(x_slot(mm));
      if (em == 0) continue;
      if (mm % 2 == 0) {
        if (mm < 0) throw InvalidInput("negative even label cannot restrict to the curve");
        xe += static_cast<unsigned>(mm / 2) * em;
      } else {
        if (mm < 3) throw InvalidInput("odd label below 3 cannot restrict to the curve");
        xe += static_cast<unsigned>((mm - 3) / 2) * em;
        ye += em;
      }
    }
    for (int t = 0; t < 5; ++t)
      if (m.exp(a_slot(kAKeys[t])) > 0)
        throw InvalidInput("substitute the curve coefficients before restricting");
    out.add_term(Monomial(std::vector<std::uint32_t>{xe, ye}), c);
  }
  return reduce_on_curve(e, out);
}

std::vector<int> ExtendedRing::x_support(const Polynomial& p) const {
  std::set<int> labels;
  for (const auto& [m, c] : p.terms())
    for (int mm = lo_; mm <= hi_; ++mm)
      if (m.exp(x_slot(mm)) > 0) labels.insert(mm);
  return std::vector<int>(labels.begin(), labels.end());
}

namespace {

void assert_support(const ExtendedRing& ring, const AltPolyMatrix& m, int max_label,
                    const char* what) {
  for (int i = 0; i < m.size(); ++i) {
    for (int j = i + 1; j < m.size(); ++j) {
      for (int label : ring.x_support(m.at(i, j))) {
        const bool ok = label == 0 || (label >= 2 && label <= max_label);
        if (!ok)
          throw InternalError(std::string(what) + " contains x_" + std::to_string(label) +
                              " outside the allowed window");
      }
    }
  }
}

}  // namespace

AltPolyMatrix build_A(const ExtendedRing& ring) {
  const int n = ring.n();
  const auto labels = coordinate_labels(n);
  AltPolyMatrix a(n, ring.arity());
  std::vector<Polynomial> dots;
  dots.reserve(labels.size());
  for (int m : labels) dots.push_back(ring.xdot(m));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      a.set_upper(i, j,
                  ring.x(labels[static_cast<std::size_t>(i)]) * dots[static_cast<std::size_t>(j)] -
                      ring.x(labels[static_cast<std::size_t>(j)]) * dots[static_cast<std::size_t>(i)]);
    }
  }
  assert_support(ring, a, n + 1, "A");
  return a;
}

Polynomial q_form(const ExtendedRing& ring, int i, int j) {
  if ((i - j) % 2 != 0) throw InvalidInput("Q needs indices of equal parity");
  Polynomial out(ring.arity());
  if (i < j + 2) {
    for (int k = i; k <= j; k += 2) out += ring.x(k) * ring.x(i + j - k);
  } else if (i > j + 2) {
    for (int k = j + 2; k <= i - 2; k += 2) out -= ring.x(k) * ring.x(i + j - k);
  }
  return out;
}

namespace {

// r even, s odd.
Polynomial b_odd_entry(const ExtendedRing& ring, int r, int s) {
  Polynomial out = -(ring.a(1) * ring.x(r) * ring.x(s));
  out += q_form(ring, r, s + 1);
  out += ring.a(2) * q_form(ring, r, s - 1);
  out += ring.a(4) * q_form(ring, r, s - 3);
  out += ring.a(6) * q_form(ring, r, s - 5);
  out -= q_form(ring, s, r + 1);
  return out;
}

}  // namespace

AltPolyMatrix build_B(const ExtendedRing& ring) {
  const int n = ring.n();
  const auto labels = coordinate_labels(n);
  AltPolyMatrix b(n, ring.arity());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int r = labels[static_cast<std::size_t>(i)];
      const int s = labels[static_cast<std::size_t>(j)];
      Polynomial entry(ring.arity());
      if ((s - r) % 2 == 0) {
        for (int k = r; k <= s - 2; k += 2)
          entry += ring.x(k).scaled(Rational(2)) * ring.xbar(r + s - k);
      } else if (r % 2 == 0) {
        entry = b_odd_entry(ring, r, s);
      } else {
        entry = -b_odd_entry(ring, s, r);
      }
      b.set_upper(i, j, entry);
    }
  }
  assert_support(ring, b, n + 1, "B");
  return b;
}

SymbolicOmega build_omega_symbolic(int n) {
  ExtendedRing ring(n);
  AltPolyMatrix a = build_A(ring);
  AltPolyMatrix b = build_B(ring);
  AltPolyMatrix omega = b.scaled(Rational(n)) - a.scaled(Rational(2));
  assert_support(ring, omega, n, "nB - 2A");
  return SymbolicOmega{std::move(ring), std::move(a), std::move(b), std::move(omega)};
}

OmegaMatrix build_omega_explicit(const WeierstrassCurve& e, int n) {
  const SymbolicOmega so = build_omega_symbolic(n);
  const auto labels = coordinate_labels(n);
  std::vector<int> perm(static_cast<std::size_t>(so.ring.arity()), -1);
  for (int p = 0; p < n; ++p)
    perm[static_cast<std::size_t>(so.ring.x_slot(labels[static_cast<std::size_t>(p)]))] = p;
  AltPolyMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Polynomial numeric = so.ring.substitute_curve(so.omega.at(i, j), e);
      out.set_upper(i, j, numeric.remap_variables(n, perm));
    }
  }
  return OmegaMatrix{std::move(out), OmegaProvenance::explicit_form};
}

AltPolyMatrix omega_a1_part(const SymbolicOmega& so) {
  AltPolyMatrix out(so.omega.size(), so.ring.arity());
  for (int i = 0; i < so.omega.size(); ++i)
    for (int j = i + 1; j < so.omega.size(); ++j)
      out.set_upper(i, j, so.ring.a_coefficient(so.omega.at(i, j), 1));
  return out;
}

AltPolyMatrix omega_a1_closed_form(const ExtendedRing& ring) {
  const int n = ring.n();
  const auto labels = coordinate_labels(n);
  AltPolyMatrix out(n, ring.arity());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int r = labels[static_cast<std::size_t>(i)];
      const int s = labels[static_cast<std::size_t>(j)];
      const int gamma = (s % 2 == 0 ? 1 : -1) * sign_of(s - r) * n -
                        2 * ((s % 2 == 0 ? 1 : -1) * (s / 2) - (r % 2 == 0 ? 1 : -1) * (r / 2));
      Polynomial entry = ring.x(r).scaled(Rational(gamma)) * ring.x(s);
      if ((r + s) % 2 == 0) {
        const int sgn = s % 2 == 0 ? 1 : -1;
        for (int k = 1; k <= (s - r) / 2 - 1; ++k)
          entry += (ring.x(r + 2 * k) * ring.x(s - 2 * k)).scaled(Rational(sgn * n));
      }
      out.set_upper(i, j, entry);
    }
  }
  return out;
}

AltPolyMatrix lambda_matrix(int n) {
  if (n < 3) throw InvalidInput("lambda matrix needs n >= 3");
  AltPolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int coeff = sign_of(j - i) * n - 2 * (j - i);
      Polynomial e = Polynomial::variable(n, i) * Polynomial::variable(n, j);
      m.set_upper(i, j, e.scaled(Rational(coeff)));
    }
  }
  return m;
}

OmegaMatrix classical_omega_cubic(const Polynomial& cubic) {
  if (cubic.arity() != 3) throw InvalidInput("classical cubic construction needs 3 variables");
  if (cubic.is_zero() || !cubic.is_form(3))
    throw InvalidInput("classical cubic construction needs a nonzero ternary cubic");
  AltPolyMatrix m(3, 3);
  m.set_upper(0, 1, cubic.derivative(2));
  m.set_upper(0, 2, -cubic.derivative(1));
  m.set_upper(1, 2, cubic.derivative(0));
  return OmegaMatrix{std::move(m), OmegaProvenance::classical};
}

OmegaMatrix classical_omega_quadric_pair(const Polynomial& f1, const Polynomial& f2) {
  if (f1.arity() != 4 || f2.arity() != 4)
    throw InvalidInput("classical quadric construction needs 4 variables");
  if (f1.is_zero() || !f1.is_form(2) || f2.is_zero() || !f2.is_form(2))
    throw InvalidInput("classical quadric construction needs two quaternary quadrics");
  const auto g1 = gradient(f1);
  const auto g2 = gradient(f2);
  auto minor = [&](int k, int l) {
    return g1[static_cast<std::size_t>(k)] * g2[static_cast<std::size_t>(l)] -
           g1[static_cast<std::size_t>(l)] * g2[static_cast<std::size_t>(k)];
  };
  AltPolyMatrix m(4, 4);
  m.set_upper(0, 1, minor(2, 3));
  m.set_upper(0, 2, minor(3, 1));
  m.set_upper(0, 3, minor(1, 2));
  m.set_upper(1, 2, minor(0, 3));
  m.set_upper(1, 3, minor(2, 0));
  m.set_upper(2, 3, minor(0, 1));
  return OmegaMatrix{std::move(m), OmegaProvenance::classical};
}

}  // namespace g1jac
