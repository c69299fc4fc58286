#include "g1jac/invariants.hpp"

namespace g1jac {

MMatrix matrix_M(const AltPolyMatrix& omega) {
  const int n = omega.size();
  const int arity = omega.arity();
  // partials[i][r][s] = d omega_ir / d x_s
  std::vector<Polynomial> partials;
  partials.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                   static_cast<std::size_t>(arity));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < arity; ++s) partials.push_back(omega.at(i, r).derivative(s));
  auto d = [&](int i, int r, int s) -> const Polynomial& {
    return partials[(static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(r)) *
                        static_cast<std::size_t>(arity) +
                    static_cast<std::size_t>(s)];
  };
  MMatrix m(n, arity);
  auto entry = [&](int i, int j) {
    Polynomial acc(arity);
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) {
        const Polynomial& a = d(i, r, s);
        if (a.is_zero()) continue;
        const Polynomial& b = d(j, s, r);
        if (b.is_zero()) continue;
        acc += a * b;
      }
    }
    return acc;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Polynomial upper = entry(i, j);
      if (i != j && entry(j, i) != upper) throw InternalError("M matrix failed symmetry");
      m.set(i, j, upper);
    }
  }
  return m;
}

NTensor tensor_N(const AltPolyMatrix& omega, const MMatrix& m) {
  const int n = omega.size();
  if (m.size() != n || m.arity() != omega.arity())
    throw InvalidInput("tensor_N shape mismatch");
  const int arity = omega.arity();
  NTensor t(n, arity);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::vector<Polynomial> dm;
      dm.reserve(static_cast<std::size_t>(arity));
      for (int r = 0; r < arity; ++r) dm.push_back(m.at(i, j).derivative(r));
      for (int k = 0; k < n; ++k) {
        Polynomial acc(arity);
        for (int r = 0; r < n; ++r) {
          const Polynomial& a = dm[static_cast<std::size_t>(r)];
          if (a.is_zero()) continue;
          const Polynomial& b = omega.at(r, k);
          if (b.is_zero()) continue;
          acc += a * b;
        }
        t.set(i, j, k, acc);
      }
    }
  }
  return t;
}

namespace {

// d^2 p / dx_r dx_s of a quadratic form, read off the coefficients.
Rational hess(const Polynomial& p, int r, int s) {
  Monomial m = Monomial::variable(p.arity(), r).times_variable(s);
  const Rational c = p.coeff(m);
  return r == s ? Rational(2) * c : c;
}

// d^3 p / dx_r dx_s dx_t of a cubic form.
Rational third(const Polynomial& p, int r, int s, int t) {
  Monomial m = Monomial::variable(p.arity(), r).times_variable(s).times_variable(t);
  const Rational c = p.coeff(m);
  int mult = 1;
  if (r == s && s == t) mult = 6;
  else if (r == s || s == t || r == t) mult = 2;
  return Rational(mult) * c;
}

}  // namespace

Rational c4_double_sum(const MMatrix& m) {
  const int n = m.size();
  Rational sum(0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Rational wij(i == j ? 1 : 2);
      for (int r = 0; r < n; ++r) {
        for (int s = r; s < n; ++s) {
          const Rational wrs(r == s ? 1 : 2);
          const Rational a = hess(m.at(i, j), r, s);
          if (a.is_zero()) continue;
          const Rational b = hess(m.at(r, s), i, j);
          if (b.is_zero()) continue;
          sum += wij * wrs * a * b;
        }
      }
    }
  }
  return sum;
}

Rational c6_double_sum(const NTensor& t) {
  const int n = t.size();
  Rational sum(0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Rational wij(i == j ? 1 : 2);
      for (int k = 0; k < n; ++k) {
        const Polynomial& nijk = t.at(i, j, k);
        for (int r = 0; r < n; ++r) {
          for (int s = r; s < n; ++s) {
            const Rational wrs(r == s ? 1 : 2);
            for (int u = 0; u < n; ++u) {
              const Rational a = third(nijk, r, s, u);
              if (a.is_zero()) continue;
              const Rational b = third(t.at(r, s, u), i, j, k);
              if (b.is_zero()) continue;
              sum += wij * wrs * a * b;
            }
          }
        }
      }
    }
  }
  return sum;
}

Rational c4_invariant(const AltPolyMatrix& omega) {
  const int n = omega.size();
  if (n < 3) throw InvalidInput("c4 needs n >= 3");
  const Rational sum = c4_double_sum(matrix_M(omega));
  const Rational pre =
      Rational(3 * (n - 2) * (n - 2)) /
      (Rational(16) * Rational(n) * Rational(binomial(static_cast<unsigned long>(n) + 3, 5)));
  const Rational out = pre * sum;
  return out;
}

Rational c6_invariant(const AltPolyMatrix& omega) {
  const int n = omega.size();
  if (n < 3) throw InvalidInput("c6 needs n >= 3");
  const MMatrix m = matrix_M(omega);
  const NTensor t = tensor_N(omega, m);
  const Rational sum = c6_double_sum(t);
  const Rational pre =
      Rational(-(n - 2) * (n - 2) * (n - 2)) /
      (Rational(64) * Rational(n) * Rational(binomial(static_cast<unsigned long>(n) + 5, 7)));
  return pre * sum;
}

WeierstrassCurve jacobian_equation(const Rational& c4, const Rational& c6) {
  if (c4.pow(3) == c6 * c6)
    throw DegenerateModel("input is not a smooth genus one model (singular Jacobian)");
  return WeierstrassCurve(Rational(0), Rational(0), Rational(0), Rational(-27) * c4,
                          Rational(-54) * c6);
}

}  // namespace g1jac
