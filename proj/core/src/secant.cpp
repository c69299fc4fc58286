#include "g1jac/secant.hpp"

#include <map>

#include "g1jac/linalg.hpp"

namespace g1jac {

FormBasis make_form_basis(int arity, int degree, std::vector<Polynomial> forms) {
  for (auto& f : forms) {
    if (f.arity() != arity) throw InvalidInput("form basis arity mismatch");
    if (f.is_zero() || !f.is_form(degree))
      throw InvalidInput("form basis entry is not a nonzero form of the stated degree");
    f = f.primitive_normalized();
  }
  const auto basis = monomial_basis(arity, degree);
  RatMatrix m(static_cast<int>(forms.size()), static_cast<int>(basis.size()));
  for (std::size_t r = 0; r < forms.size(); ++r) {
    const auto v = forms[r].coeff_vector(basis);
    for (std::size_t c = 0; c < v.size(); ++c)
      m.at(static_cast<int>(r), static_cast<int>(c)) = v[c];
  }
  if (rank(m) != static_cast<int>(forms.size()))
    throw InvalidInput("form basis is linearly dependent");
  return FormBasis{arity, degree, std::move(forms)};
}

bool same_span(const FormBasis& a, const FormBasis& b) {
  if (a.arity != b.arity || a.degree != b.degree || a.dimension() != b.dimension()) return false;
  const auto basis = monomial_basis(a.arity, a.degree);
  SparseEchelon ech(static_cast<int>(basis.size()));
  auto to_row = [&](const Polynomial& f) {
    std::map<int, Rational> entries;
    const auto v = f.coeff_vector(basis);
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) entries[static_cast<int>(c)] = v[c];
    return sparse_row_from(entries);
  };
  for (const auto& f : a.forms) ech.insert(to_row(f));
  if (ech.rank() != a.dimension()) return false;
  for (const auto& f : b.forms)
    if (ech.insert(to_row(f))) return false;
  return true;
}

long long beta(int r, int n) {
  if (r < 1 || n < 3) throw InvalidInput("beta needs r >= 1 and n >= 3");
  auto c = [](int a, int b) -> long long {
    if (a < 0 || b < 0 || b > a) return 0;
    return binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b)).get_si();
  };
  return c(n - r, r) + c(n - r - 1, r - 1);
}

namespace {

// RREF of the coefficient matrix of the forms over the given monomial basis.
// Returns the reduced rows and the pivot column list.
struct EchelonBasis {
  std::vector<std::vector<Rational>> rows;
  std::vector<int> pivots;
};

EchelonBasis reduced_rows(const std::vector<Polynomial>& forms,
                          const std::vector<Monomial>& basis) {
  const int nc = static_cast<int>(basis.size());
  RatMatrix m(static_cast<int>(forms.size()), nc);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    const auto v = forms[r].coeff_vector(basis);
    for (int c = 0; c < nc; ++c) m.at(static_cast<int>(r), c) = v[static_cast<std::size_t>(c)];
  }
  EchelonBasis out;
  const int nr = static_cast<int>(forms.size());
  RatMatrix a = m;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    std::size_t best = 0;
    for (int i = r; i < nr; ++i) {
      if (a.at(i, c).is_zero()) continue;
      const std::size_t sz = a.at(i, c).bit_size();
      if (piv < 0 || sz < best) {
        piv = i;
        best = sz;
      }
    }
    if (piv < 0) continue;
    for (int j = 0; j < nc; ++j) std::swap(a.at(piv, j), a.at(r, j));
    const Rational d = a.at(r, c).inverse();
    for (int j = c; j < nc; ++j) a.at(r, j) *= d;
    for (int i = 0; i < nr; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      const Rational f = a.at(i, c);
      for (int j = c; j < nc; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rows.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    out.rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(nc));
    for (int j = 0; j < nc; ++j) out.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, j);
  }
  return out;
}

}  // namespace

FormBasis lift_step(const FormBasis& b) {
  const int n = b.arity;
  const int target_degree = b.degree + 1;
  const auto lower = monomial_basis(n, b.degree);
  const auto upper = monomial_basis(n, target_degree);
  const EchelonBasis ech = reduced_rows(b.forms, lower);
  if (static_cast<int>(ech.pivots.size()) != b.dimension())
    throw InvalidInput("lift_step input is linearly dependent");

  std::vector<bool> is_pivot(lower.size(), false);
  for (int c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  // Column index of the unknown coefficient f[mono].
  std::map<Monomial, int, GrlexDescending> upper_index;
  for (std::size_t k = 0; k < upper.size(); ++k) upper_index.emplace(upper[k], static_cast<int>(k));

  // Membership of df/dx_i in span(B), written against the RREF of B: for
  // every non-pivot monomial mu of the lower degree,
  //   coeff(df/dx_i, mu) - sum_p R_p[mu] coeff(df/dx_i, pivot_p) = 0,
  // and coeff(df/dx_i, nu) = (nu_i + 1) f[nu + e_i].
  std::vector<SparseRow> rows;
  for (int i = 0; i < n; ++i) {
    for (std::size_t cm = 0; cm < lower.size(); ++cm) {
      if (is_pivot[cm]) continue;
      std::map<int, Rational> entries;
      auto add = [&](const Monomial& nu, const Rational& w) {
        if (w.is_zero()) return;
        const Monomial up = nu.times_variable(i);
        const Rational factor(static_cast<long>(nu.exp(i)) + 1);
        entries[upper_index.at(up)] += w * factor;
      };
      add(lower[cm], Rational(1));
      for (std::size_t p = 0; p < ech.pivots.size(); ++p) {
        const Rational& coeff = ech.rows[p][cm];
        if (!coeff.is_zero()) add(lower[static_cast<std::size_t>(ech.pivots[p])], -coeff);
      }
      auto row = sparse_row_from(entries);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }

  const long long expected = beta(target_degree, n);
  const auto kernel =
      sparse_kernel(static_cast<int>(upper.size()), rows, static_cast<int>(expected));
  if (static_cast<long long>(kernel.size()) != expected)
    throw DegenerateModel("lift step dimension mismatch: expected beta(" +
                          std::to_string(target_degree) + "," + std::to_string(n) + ") = " +
                          std::to_string(expected) + ", got " + std::to_string(kernel.size()));
  std::vector<Polynomial> forms;
  forms.reserve(kernel.size());
  for (const auto& v : kernel) forms.push_back(Polynomial::from_coeff_vector(n, upper, v));
  return make_form_basis(n, target_degree, std::move(forms));
}

Polynomial hypersurface_step(const FormBasis& b) {
  const int n = b.arity;
  const int r = b.degree;
  if (n != 2 * r + 1) throw InvalidInput("hypersurface_step needs n = 2 deg + 1");
  if (r < 2) throw InvalidInput("hypersurface_step needs forms of degree >= 2");

  // Pairwise products span the lowest graded piece of the ideal square;
  // keep a maximal independent subset (deterministic insertion order).
  std::vector<Polynomial> products;
  for (int i = 0; i < b.dimension(); ++i)
    for (int j = i; j < b.dimension(); ++j)
      products.push_back(b.forms[static_cast<std::size_t>(i)] * b.forms[static_cast<std::size_t>(j)]);
  const auto prod_basis = monomial_basis(n, 2 * r);
  SparseEchelon indep(static_cast<int>(prod_basis.size()));
  std::vector<Polynomial> gens;
  for (auto& p : products) {
    std::map<int, Rational> entries;
    const auto v = p.coeff_vector(prod_basis);
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) entries[static_cast<int>(c)] = v[c];
    if (indep.insert(sparse_row_from(entries))) gens.push_back(std::move(p));
  }
  const int K = static_cast<int>(gens.size());

  // Unknowns c[i][k]: g_i = sum_k c[i][k] gens[k].  The forms g_i are the
  // partials of a single degree-n F exactly when dg_i/dx_j = dg_j/dx_i.
  std::vector<std::vector<Polynomial>> dgen(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    dgen[static_cast<std::size_t>(k)].reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      dgen[static_cast<std::size_t>(k)].push_back(gens[static_cast<std::size_t>(k)].derivative(v));
  }
  auto col = [K](int i, int k) { return i * K + k; };
  std::vector<SparseRow> rows;
  std::map<Monomial, std::map<int, Rational>, GrlexDescending> bucket;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bucket.clear();
      for (int k = 0; k < K; ++k) {
        for (const auto& [m, c] : dgen[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].terms())
          bucket[m][col(i, k)] += c;
        for (const auto& [m, c] : dgen[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)].terms())
          bucket[m][col(j, k)] -= c;
      }
      for (const auto& [m, entries] : bucket) {
        auto row = sparse_row_from(entries);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }

  const auto kernel = sparse_kernel(n * K, rows, 1);
  if (kernel.size() != 1)
    throw DegenerateModel("hypersurface space has dimension " + std::to_string(kernel.size()) +
                          ", expected 1");
  const auto& c = kernel.front();
  std::vector<Polynomial> g(static_cast<std::size_t>(n), Polynomial::zero(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < K; ++k) {
      const Rational& w = c[static_cast<std::size_t>(col(i, k))];
      if (!w.is_zero()) g[static_cast<std::size_t>(i)] += gens[static_cast<std::size_t>(k)].scaled(w);
    }
  }
  Polynomial f(n);
  for (int i = 0; i < n; ++i) f += Polynomial::variable(n, i) * g[static_cast<std::size_t>(i)];
  f = f.scaled(Rational(1, n));
  if (f.is_zero() || !f.is_form(n)) throw DegenerateModel("hypersurface form is degenerate");
  // Euler reconstruction must hand back the g_i as the partials of f, which
  // keeps every partial inside the ideal square by construction.
  for (int i = 0; i < n; ++i) {
    if (f.derivative(i) != g[static_cast<std::size_t>(i)])
      throw InternalError("hypersurface partials drifted from the solved syzygy");
  }
  return f.primitive_normalized();
}

SecantChainResult secant_chain(const FormBasis& quadrics) {
  const int n = quadrics.arity;
  if (n < 4) throw InvalidInput("secant_chain needs n >= 4");
  if (quadrics.degree != 2) throw InvalidInput("secant_chain input must consist of quadrics");
  if (quadrics.dimension() != n * (n - 3) / 2)
    throw InvalidInput("quadric space has dimension " + std::to_string(quadrics.dimension()) +
                       ", expected n(n-3)/2 = " + std::to_string(n * (n - 3) / 2));
  const int target = n % 2 == 0 ? n / 2 : (n - 1) / 2;
  FormBasis cur = quadrics;
  while (cur.degree < target) cur = lift_step(cur);
  SecantChainResult out;
  if (n % 2 == 0) {
    if (cur.dimension() != 2)
      throw DegenerateModel("even-degree chain should end with a pencil of forms");
    out.forms = cur.forms;
    out.degree = cur.degree;
  } else {
    out.forms = {hypersurface_step(cur)};
    out.degree = n;
  }
  return out;
}

}  // namespace g1jac
