#include "g1jac/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace g1jac {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix product dimension mismatch");
  RatMatrix p(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) {
        const Rational& b = o.at(k, c);
        if (!b.is_zero()) p.at(r, c) += a * b;
      }
    }
  }
  return p;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_) throw InvalidInput("inverse of a non-square matrix");
  const int n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = RatMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    std::size_t best = 0;
    for (int r = c; r < n; ++r) {
      if (a.at(r, c).is_zero()) continue;
      const std::size_t sz = a.at(r, c).bit_size();
      if (piv < 0 || sz < best) {
        piv = r;
        best = sz;
      }
    }
    if (piv < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      std::swap(a.at(piv, j), a.at(c, j));
      std::swap(inv.at(piv, j), inv.at(c, j));
    }
    const Rational d = a.at(c, c).inverse();
    for (int j = 0; j < n; ++j) {
      a.at(c, j) *= d;
      inv.at(c, j) *= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a.at(r, c).is_zero()) continue;
      const Rational f = a.at(r, c);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

namespace {

std::size_t int_bits(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

// Integer copy of m with each row scaled by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const RatMatrix& m) {
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    Integer l(1);
    for (int c = 0; c < m.cols(); ++c) l = lcm(l, m.at(r, c).den());
    auto& row = rows[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) {
      const Rational v = m.at(r, c) * Rational(l);
      row[static_cast<std::size_t>(c)] = v.num();
    }
  }
  return rows;
}

}  // namespace

int rank(const RatMatrix& m) {
  auto a = integer_rows(m);
  const int nr = m.rows(), nc = m.cols();
  Integer prev(1);
  int r = 0;
  std::vector<int> colperm(static_cast<std::size_t>(nc));
  for (int c = 0; c < nc; ++c) colperm[static_cast<std::size_t>(c)] = c;
  while (r < nr && r < nc) {
    // Full pivoting, smallest entry first: rank is invariant under swaps and
    // small pivots keep the fraction-free updates from blowing up.
    int pi = -1, pj = -1;
    std::size_t best = 0;
    for (int i = r; i < nr; ++i) {
      for (int j = r; j < nc; ++j) {
        const Integer& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(colperm[static_cast<std::size_t>(j)])];
        if (sgn(v) == 0) continue;
        const std::size_t sz = int_bits(v);
        if (pi < 0 || sz < best) {
          pi = i;
          pj = j;
          best = sz;
        }
      }
    }
    if (pi < 0) break;
    std::swap(a[static_cast<std::size_t>(pi)], a[static_cast<std::size_t>(r)]);
    std::swap(colperm[static_cast<std::size_t>(pj)], colperm[static_cast<std::size_t>(r)]);
    const std::size_t pc = static_cast<std::size_t>(colperm[static_cast<std::size_t>(r)]);
    const Integer& piv = a[static_cast<std::size_t>(r)][pc];
    for (int i = r + 1; i < nr; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      const Integer f = row[pc];
      for (int j = r; j < nc; ++j) {
        const std::size_t cc = static_cast<std::size_t>(colperm[static_cast<std::size_t>(j)]);
        Integer t = piv * row[cc] - f * a[static_cast<std::size_t>(r)][cc];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        row[cc] = t;
      }
    }
    prev = piv;
    ++r;
  }
  return r;
}

namespace {

// Primitive integer vector with the first nonzero entry positive.
std::vector<Rational> normalize_vector(std::vector<Rational> v) {
  Integer num(0), den(1);
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    num = gcd(num, x.num());
    den = lcm(den, x.den());
  }
  if (num == 0) return v;
  Rational scale = Rational(den, num);
  for (const auto& x : v) {
    if (!x.is_zero()) {
      if ((x * scale).sign() < 0) scale = -scale;
      break;
    }
  }
  for (auto& x : v) x *= scale;
  return v;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  const int nr = m.rows(), nc = m.cols();
  RatMatrix a = m;
  std::vector<int> pivot_col;
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
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(nc), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> kernel;
  for (int f = 0; f < nc; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(nc));
    v[static_cast<std::size_t>(f)] = Rational(1);
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
      v[static_cast<std::size_t>(pivot_col[k])] = -a.at(static_cast<int>(k), f);
    kernel.push_back(normalize_vector(std::move(v)));
  }
  return kernel;
}

// ---------------------------------------------------------------------------

SparseRow sparse_row_from(const std::map<int, Rational>& entries) {
  Integer den(1);
  for (const auto& [c, v] : entries)
    if (!v.is_zero()) den = lcm(den, v.den());
  SparseRow row;
  row.reserve(entries.size());
  Integer content(0);
  for (const auto& [c, v] : entries) {
    if (v.is_zero()) continue;
    Rational scaled = v * Rational(den);
    row.emplace_back(c, scaled.num());
    content = gcd(content, scaled.num());
  }
  if (content > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return row;
}

namespace {

void strip_content(SparseRow& row) {
  Integer content(0);
  for (const auto& [c, v] : row) {
    content = gcd(content, v);
    if (content == 1) return;
  }
  if (content > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

// a := pa * a - va * b, where pa = b[pivot], va = a[pivot]; clears the pivot
// column of b from a.  Both rows sorted by column.
SparseRow combine(const SparseRow& a, const SparseRow& b, const Integer& pa, const Integer& va) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, pa * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -va * b[j].second);
      ++j;
    } else {
      Integer v = pa * a[i].second - va * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Integer* row_entry(const SparseRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& p, int c) { return p.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

}  // namespace

bool SparseEchelon::insert(SparseRow row) {
  strip_content(row);
  // Reduce against every pivot column the row touches.  Stored rows can hold
  // entries at free columns left of their own pivot, so the row must be
  // scanned in full, restarting after each elimination (the set of pivot
  // columns it meets strictly shrinks, so this terminates).
  bool reduced = true;
  while (reduced && !row.empty()) {
    reduced = false;
    for (const auto& [c, v] : row) {
      auto it = rows_.find(c);
      if (it == rows_.end()) continue;
      const Integer* pv = row_entry(it->second, c);
      row = combine(row, it->second, *pv, v);
      strip_content(row);
      reduced = true;
      break;
    }
  }
  if (row.empty()) return false;
  if (sgn(row.front().second) < 0)
    for (auto& [c, v] : row) v = -v;
  const int pivot = row.front().first;
  // Keep the stored rows fully inter-reduced: clear the new pivot column
  // everywhere else.
  for (auto& [c, other] : rows_) {
    const Integer* v = row_entry(other, pivot);
    if (v == nullptr) continue;
    other = combine(other, row, row.front().second, *v);
    strip_content(other);
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<std::vector<Rational>> SparseEchelon::kernel() const {
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (const auto& [c, row] : rows_) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> kernel;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols_));
    v[static_cast<std::size_t>(f)] = Rational(1);
    for (const auto& [c, row] : rows_) {
      const Integer* e = row_entry(row, f);
      if (e == nullptr) continue;
      const Integer* p = row_entry(row, c);
      v[static_cast<std::size_t>(c)] = -Rational(*e, *p);
    }
    kernel.push_back(normalize_vector(std::move(v)));
  }
  return kernel;
}

namespace {

bool annihilates(const SparseRow& row, const std::vector<Rational>& v) {
  Rational dot(0);
  for (const auto& [c, val] : row) dot += Rational(val) * v[static_cast<std::size_t>(c)];
  return dot.is_zero();
}

}  // namespace

std::vector<std::vector<Rational>> sparse_kernel(int cols, const std::vector<SparseRow>& rows,
                                                 std::optional<int> expected_dim) {
  SparseEchelon ech(cols);
  std::vector<std::vector<Rational>> cached;
  bool have_cached = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (expected_dim && ech.rank() == cols - *expected_dim) {
      if (!have_cached) {
        cached = ech.kernel();
        have_cached = true;
      }
      bool ok = true;
      for (const auto& v : cached) {
        if (!annihilates(rows[i], v)) {
          ok = false;
          break;
        }
      }
      if (ok) continue;
      have_cached = false;
    }
    ech.insert(rows[i]);
  }
  if (have_cached && ech.rank() == cols - *expected_dim) return cached;
  return ech.kernel();
}

// ---------------------------------------------------------------------------

AltPolyMatrix::AltPolyMatrix(int n, int arity) : n_(n), arity_(arity) {
  if (n < 0) throw InvalidInput("negative matrix size");
  e_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Polynomial::zero(arity));
}

void AltPolyMatrix::set_upper(int i, int j, const Polynomial& p) {
  if (i < 0 || j <= i || j >= n_) throw InvalidInput("set_upper needs 0 <= i < j < n");
  if (p.arity() != arity_) throw InvalidInput("entry arity mismatch");
  e_[idx(i, j)] = p;
  e_[idx(j, i)] = -p;
}

bool AltPolyMatrix::is_alternating() const {
  for (int i = 0; i < n_; ++i) {
    if (!at(i, i).is_zero()) return false;
    for (int j = i + 1; j < n_; ++j)
      if (at(j, i) != -at(i, j)) return false;
  }
  return true;
}

int AltPolyMatrix::entry_degree() const {
  int d = -1;
  for (const auto& p : e_) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw InternalError("non-homogeneous alternating matrix entry");
    if (d < 0) d = p.total_degree();
    else if (d != p.total_degree()) throw InternalError("mixed entry degrees in alternating matrix");
  }
  return d;
}

AltPolyMatrix AltPolyMatrix::scaled(const Rational& c) const {
  AltPolyMatrix r(n_, arity_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].scaled(c);
  return r;
}

AltPolyMatrix AltPolyMatrix::operator-(const AltPolyMatrix& o) const {
  if (n_ != o.n_ || arity_ != o.arity_) throw InvalidInput("alternating matrix shape mismatch");
  AltPolyMatrix r(n_, arity_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

AltPolyMatrix AltPolyMatrix::operator+(const AltPolyMatrix& o) const {
  if (n_ != o.n_ || arity_ != o.arity_) throw InvalidInput("alternating matrix shape mismatch");
  AltPolyMatrix r(n_, arity_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

Rational AltPolyMatrix::content() const {
  Integer num(0), den(1);
  for (const auto& p : e_) {
    for (const auto& [m, c] : p.terms()) {
      num = gcd(num, c.num());
      den = lcm(den, c.den());
    }
  }
  if (num == 0) return Rational(0);
  return Rational(num, den);
}

AltPolyMatrix AltPolyMatrix::normalized() const {
  const Rational c = content();
  if (c.is_zero()) return *this;
  Rational scale = c.inverse();
  for (int i = 0; i < n_ && !scale.is_zero(); ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const Polynomial& p = at(i, j);
      if (p.is_zero()) continue;
      if ((p.leading_coeff() * scale).sign() < 0) scale = -scale;
      return scaled(scale);
    }
  }
  return scaled(scale);
}

RatMatrix AltPolyMatrix::evaluated_at(const std::vector<Rational>& point) const {
  RatMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j).evaluate(point);
  return m;
}

namespace {

Polynomial pfaffian_impl(const AltPolyMatrix& m, std::uint64_t mask,
                         std::unordered_map<std::uint64_t, Polynomial>& memo) {
  if (mask == 0) return Polynomial::constant(m.arity(), Rational(1));
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::vector<int> idx;
  for (int i = 0; i < m.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) idx.push_back(i);
  const int first = idx[0];
  Polynomial acc(m.arity());
  int sign = 1;  // column position 2 carries (+1); alternates from there
  for (std::size_t t = 1; t < idx.size(); ++t) {
    const Polynomial& entry = m.at(first, idx[t]);
    if (!entry.is_zero()) {
      const std::uint64_t sub =
          mask & ~(std::uint64_t{1} << first) & ~(std::uint64_t{1} << idx[t]);
      Polynomial term = entry * pfaffian_impl(m, sub, memo);
      if (sign < 0) term = -term;
      acc += term;
    }
    sign = -sign;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

Polynomial pfaffian(const AltPolyMatrix& m, const std::vector<int>& index_set) {
  if (index_set.size() % 2 != 0) throw InvalidInput("pfaffian needs an even index set");
  if (m.size() > 64) throw InvalidInput("pfaffian supports sizes up to 64");
  std::uint64_t mask = 0;
  int prev = -1;
  for (int i : index_set) {
    if (i <= prev || i >= m.size())
      throw InvalidInput("pfaffian index set must be strictly increasing and in range");
    mask |= std::uint64_t{1} << i;
    prev = i;
  }
  std::unordered_map<std::uint64_t, Polynomial> memo;
  return pfaffian_impl(m, mask, memo);
}

Polynomial pfaffian(const AltPolyMatrix& m) {
  std::vector<int> all(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  return pfaffian(m, all);
}

int pair_index(int i, int j, int n) {
  if (!(0 <= i && i < j && j < n)) throw InvalidInput("pair_index needs 0 <= i < j < n");
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::vector<Polynomial> minors_2x2(const std::vector<std::vector<Polynomial>>& grad) {
  if (grad.size() != 2) throw InvalidInput("minors_2x2 needs exactly two rows");
  if (grad[0].size() != grad[1].size()) throw InvalidInput("minors_2x2 row length mismatch");
  const int n = static_cast<int>(grad[0].size());
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out.push_back(grad[0][static_cast<std::size_t>(i)] * grad[1][static_cast<std::size_t>(j)] -
                    grad[0][static_cast<std::size_t>(j)] * grad[1][static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

}  // namespace g1jac
