#include "g1jac/omega.hpp"

#include <map>
#include <optional>
#include <string>

namespace g1jac {

namespace {

void validate_grad_rows(const std::vector<std::vector<Polynomial>>& grad_rows, int n) {
  if (grad_rows.size() != 1 && grad_rows.size() != 2)
    throw InvalidInput("expected one or two gradient rows");
  int degree = -1;
  for (const auto& row : grad_rows) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("gradient row length mismatch");
    for (const auto& p : row) {
      if (p.arity() != n) throw InvalidInput("gradient entry arity mismatch");
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) throw InvalidInput("gradient entries must be forms");
      if (degree < 0) degree = p.total_degree();
      else if (degree != p.total_degree()) throw InvalidInput("gradient entries of mixed degree");
    }
  }
  if (degree < 1) throw InvalidInput("gradient rows are identically zero");
}

// Constraint rows for sum_i row_i * q_i == 0 where the q_i, i != j, are
// unknown quadratics and q_j is fixed to zero (column block of the solver).
std::vector<SparseRow> column_block_rows(const std::vector<std::vector<Polynomial>>& grad_rows,
                                         int n, int j, const std::vector<Monomial>& quad) {
  const int q = static_cast<int>(quad.size());
  std::vector<SparseRow> rows;
  for (const auto& grow : grad_rows) {
    std::map<Monomial, std::map<int, Rational>, GrlexDescending> bucket;
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const int slot = i < j ? i : i - 1;
      for (const auto& [alpha, a] : grow[static_cast<std::size_t>(i)].terms()) {
        for (int k = 0; k < q; ++k) {
          bucket[alpha.times(quad[static_cast<std::size_t>(k)])][slot * q + k] += a;
        }
      }
    }
    for (const auto& [m, entries] : bucket) {
      auto row = sparse_row_from(entries);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return rows;
}

// Global formulation: unknowns are the n(n-1)/2 independent upper entries.
std::optional<AltPolyMatrix> solve_global(const std::vector<std::vector<Polynomial>>& grad_rows,
                                          int n, std::string* failure) {
  const auto quad = monomial_basis(n, 2);
  const int q = static_cast<int>(quad.size());
  const int pairs = n * (n - 1) / 2;
  std::vector<SparseRow> rows;
  for (const auto& grow : grad_rows) {
    for (int j = 0; j < n; ++j) {
      std::map<Monomial, std::map<int, Rational>, GrlexDescending> bucket;
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        const int sign = i < j ? 1 : -1;
        const int pidx = i < j ? pair_index(i, j, n) : pair_index(j, i, n);
        for (const auto& [alpha, a] : grow[static_cast<std::size_t>(i)].terms()) {
          for (int k = 0; k < q; ++k) {
            bucket[alpha.times(quad[static_cast<std::size_t>(k)])][pidx * q + k] +=
                sign > 0 ? a : -a;
          }
        }
      }
      for (const auto& [m, entries] : bucket) {
        auto row = sparse_row_from(entries);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  const auto kernel = sparse_kernel(pairs * q, rows, 1);
  if (kernel.empty()) {
    *failure = "no alternating quadratic syzygy exists";
    return std::nullopt;
  }
  if (kernel.size() > 1) {
    *failure = "syzygy space has dimension " + std::to_string(kernel.size());
    return std::nullopt;
  }
  AltPolyMatrix m(n, n);
  const auto& v = kernel.front();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int pidx = pair_index(i, j, n);
      std::vector<Rational> coeffs(quad.size());
      for (int k = 0; k < q; ++k)
        coeffs[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(pidx * q + k)];
      m.set_upper(i, j, Polynomial::from_coeff_vector(n, quad, coeffs));
    }
  }
  return m;
}

}  // namespace

OmegaMatrix solve_omega(const std::vector<std::vector<Polynomial>>& grad_rows, int n) {
  if (n < 3) throw InvalidInput("solve_omega needs n >= 3");
  validate_grad_rows(grad_rows, n);
  const auto quad = monomial_basis(n, 2);
  const int q = static_cast<int>(quad.size());

  // Fast path: one kernel per column.
  bool fallback = false;
  std::vector<std::vector<Polynomial>> cols;  // cols[j][i], entry (i,j)
  for (int j = 0; j < n && !fallback; ++j) {
    const auto rows = column_block_rows(grad_rows, n, j, quad);
    const auto kernel = sparse_kernel((n - 1) * q, rows, 1);
    if (kernel.size() != 1) {
      fallback = true;
      break;
    }
    std::vector<Polynomial> col(static_cast<std::size_t>(n), Polynomial::zero(n));
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const int slot = i < j ? i : i - 1;
      std::vector<Rational> coeffs(quad.size());
      for (int k = 0; k < q; ++k)
        coeffs[static_cast<std::size_t>(k)] = kernel.front()[static_cast<std::size_t>(slot * q + k)];
      col[static_cast<std::size_t>(i)] = Polynomial::from_coeff_vector(n, quad, coeffs);
    }
    cols.push_back(std::move(col));
  }

  if (!fallback) {
    // Glue the per-column scalars through the alternation constraint
    // alpha_j col_j[i] == -alpha_i col_i[j].
    std::vector<Rational> alpha(static_cast<std::size_t>(n));
    std::vector<bool> known(static_cast<std::size_t>(n), false);
    alpha[0] = Rational(1);
    known[0] = true;
    int known_count = 1;
    bool progress = true;
    while (known_count < n && progress) {
      progress = false;
      for (int i = 0; i < n && known_count < n; ++i) {
        if (!known[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < n; ++j) {
          if (known[static_cast<std::size_t>(j)] || i == j) continue;
          const Polynomial& wij = cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          const Polynomial& wji = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
          if (wij.is_zero() || wji.is_zero()) continue;
          // alpha_j * wji == -alpha_i * wij
          const Rational lead = wji.coeff(wij.leading_monomial());
          if (lead.is_zero()) {
            fallback = true;
            break;
          }
          alpha[static_cast<std::size_t>(j)] =
              -alpha[static_cast<std::size_t>(i)] * wij.leading_coeff() / lead;
          known[static_cast<std::size_t>(j)] = true;
          ++known_count;
          progress = true;
        }
        if (fallback) break;
      }
    }
    if (known_count < n) fallback = true;
    if (!fallback) {
      AltPolyMatrix m(n, n);
      for (int i = 0; i < n && !fallback; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const Polynomial upper =
              cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].scaled(
                  alpha[static_cast<std::size_t>(j)]);
          const Polynomial lower =
              cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].scaled(
                  alpha[static_cast<std::size_t>(i)]);
          if (lower != -upper) {
            fallback = true;
            break;
          }
          m.set_upper(i, j, upper);
        }
      }
      if (!fallback) return OmegaMatrix{m.normalized(), OmegaProvenance::solved};
    }
  }

  std::string failure;
  auto global = solve_global(grad_rows, n, &failure);
  if (!global) {
    if (failure.find("no alternating") != std::string::npos)
      throw InvalidInput("inconsistent input: " + failure);
    throw DegenerateModel(failure);
  }
  return OmegaMatrix{global->normalized(), OmegaProvenance::solved};
}

OmegaMatrix solve_omega_for(const std::vector<Polynomial>& forms) {
  if (forms.empty()) throw InvalidInput("no forms given");
  const int n = forms.front().arity();
  std::vector<std::vector<Polynomial>> grad_rows;
  grad_rows.reserve(forms.size());
  for (const auto& f : forms) grad_rows.push_back(gradient(f));
  return solve_omega(grad_rows, n);
}

AltPolyMatrix gl_act(const RatMatrix& g, const AltPolyMatrix& omega) {
  const int n = omega.size();
  if (g.rows() != n || g.cols() != n) throw InvalidInput("gl_act matrix dimension mismatch");
  const auto ginv_opt = g.inverse();
  if (!ginv_opt) throw InvalidInput("gl_act needs an invertible matrix");
  const RatMatrix& ginv = *ginv_opt;

  std::vector<Polynomial> substituted;
  substituted.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) substituted.push_back(omega.at(a, b).substitute_linear(g));

  AltPolyMatrix out(n, omega.arity());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Polynomial e(omega.arity());
      for (int a = 0; a < n; ++a) {
        const Rational& gi = ginv.at(a, i);
        if (gi.is_zero()) continue;
        for (int b = 0; b < n; ++b) {
          const Rational& gj = ginv.at(b, j);
          if (gj.is_zero()) continue;
          const Polynomial& s =
              substituted[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(b)];
          if (!s.is_zero()) e += s.scaled(gi * gj);
        }
      }
      out.set_upper(i, j, e);
    }
  }
  return out;
}

AnnihilationReport verify_annihilation(const AltPolyMatrix& omega,
                                       const std::vector<std::vector<Polynomial>>& grad_rows) {
  const int n = omega.size();
  validate_grad_rows(grad_rows, n);
  AnnihilationReport report;
  report.rows_annihilate = true;
  for (const auto& row : grad_rows) {
    for (int j = 0; j < n; ++j) {
      Polynomial acc(n);
      for (int i = 0; i < n; ++i) acc += row[static_cast<std::size_t>(i)] * omega.at(i, j);
      if (!acc.is_zero()) {
        report.rows_annihilate = false;
        break;
      }
    }
    if (!report.rows_annihilate) break;
  }
  if (grad_rows.size() == 2) {
    Polynomial acc(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Polynomial& e = omega.at(i, j);
        if (e.is_zero()) continue;
        acc += grad_rows[0][static_cast<std::size_t>(i)] * e *
               grad_rows[1][static_cast<std::size_t>(j)];
      }
    }
    report.h2 = acc.is_zero();
  }
  return report;
}

namespace {

// signed_values[k] must equal scalar * targets[k] for one common scalar.
PfaffianReport match_scalar(const std::vector<Polynomial>& signed_values,
                            const std::vector<Polynomial>& targets) {
  PfaffianReport report;
  Rational lambda;
  bool found = false;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    if (targets[k].is_zero()) continue;
    const Rational num = signed_values[k].coeff(targets[k].leading_monomial());
    lambda = num / targets[k].leading_coeff();
    found = true;
    break;
  }
  if (!found || lambda.is_zero()) return report;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    if (signed_values[k] != targets[k].scaled(lambda)) return report;
  }
  report.ok = true;
  report.scalar = lambda;
  return report;
}

}  // namespace

PfaffianReport verify_pfaffians(const AltPolyMatrix& omega,
                                const std::vector<std::vector<Polynomial>>& grad_rows) {
  const int n = omega.size();
  validate_grad_rows(grad_rows, n);
  std::vector<Polynomial> signed_values, targets;
  if (grad_rows.size() == 1) {
    if (n % 2 == 0) throw InvalidInput("one gradient row needs odd n");
    for (int i = 0; i < n; ++i) {
      std::vector<int> idx;
      for (int k = 0; k < n; ++k)
        if (k != i) idx.push_back(k);
      Polynomial pf = pfaffian(omega, idx);
      if (i % 2 == 1) pf = -pf;
      signed_values.push_back(std::move(pf));
      targets.push_back(grad_rows[0][static_cast<std::size_t>(i)]);
    }
  } else {
    if (n % 2 != 0) throw InvalidInput("two gradient rows need even n");
    const auto minors = minors_2x2(grad_rows);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> idx;
        for (int k = 0; k < n; ++k)
          if (k != i && k != j) idx.push_back(k);
        Polynomial pf = pfaffian(omega, idx);
        if ((i + j) % 2 == 0) pf = -pf;
        signed_values.push_back(std::move(pf));
        targets.push_back(minors[static_cast<std::size_t>(pair_index(i, j, n))]);
      }
    }
  }
  return match_scalar(signed_values, targets);
}

int rank_at_secant_point(const AltPolyMatrix& omega, const WeierstrassCurve& e,
                         const std::vector<CurvePoint>& points,
                         const std::vector<Rational>& xi) {
  const int n = omega.size();
  const int r = static_cast<int>(points.size());
  if (r == 0 || static_cast<int>(xi.size()) != r)
    throw InvalidInput("rank_at_secant_point needs matching points and coefficients");
  if (n - 2 * r < 1) throw InvalidInput("rank_at_secant_point needs n - 2r >= 1");
  for (int i = 0; i < r; ++i) {
    if (points[static_cast<std::size_t>(i)].infinity)
      throw InvalidInput("secant sample points must be affine");
    for (int j = i + 1; j < r; ++j)
      if (points[static_cast<std::size_t>(i)] == points[static_cast<std::size_t>(j)])
        throw InvalidInput("secant sample points must be distinct");
  }
  std::vector<Rational> v(static_cast<std::size_t>(n));
  for (int i = 0; i < r; ++i) {
    const auto [vp, dvp] = point_vector(e, points[static_cast<std::size_t>(i)], n);
    for (int k = 0; k < n; ++k)
      v[static_cast<std::size_t>(k)] += xi[static_cast<std::size_t>(i)] * vp[static_cast<std::size_t>(k)];
  }
  return rank(omega.evaluated_at(v));
}

bool proportional(const AltPolyMatrix& a, const AltPolyMatrix& b, Rational* lambda_out) {
  if (a.size() != b.size() || a.arity() != b.arity()) return false;
  Rational lambda;
  bool found = false;
  for (int i = 0; i < a.size() && !found; ++i) {
    for (int j = i + 1; j < a.size(); ++j) {
      const Polynomial& pb = b.at(i, j);
      if (pb.is_zero()) continue;
      lambda = a.at(i, j).coeff(pb.leading_monomial()) / pb.leading_coeff();
      found = true;
      break;
    }
  }
  if (!found || lambda.is_zero()) return false;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.at(i, j) != b.at(i, j).scaled(lambda)) return false;
  if (lambda_out != nullptr) *lambda_out = lambda;
  return true;
}

}  // namespace g1jac
