#ifndef G1JAC_LINALG_HPP
#define G1JAC_LINALG_HPP

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "g1jac/polynomial.hpp"
#include "g1jac/rational.hpp"

namespace g1jac {

// Dense matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
  }

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[idx(r, c)]; }
  const Rational& at(int r, int c) const { return a_[idx(r, c)]; }

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& o) const;
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  // Gauss-Jordan inverse; nullopt when singular.
  std::optional<RatMatrix> inverse() const;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Exact rank by fraction-free (Bareiss) elimination with pivots chosen to
// minimize entry bit size.
int rank(const RatMatrix& m);

// Basis of the right null space, dimension cols - rank.  Each vector is
// normalized to a primitive integer vector whose first nonzero entry is
// positive; the basis is the canonical RREF kernel basis ordered by free
// column, so the output is deterministic.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// ---------------------------------------------------------------------------
// Sparse streaming kernel machinery for the large syzygy systems.

// Sorted (column, value) pairs; values are content-stripped integers.
using SparseRow = std::vector<std::pair<int, Integer>>;

SparseRow sparse_row_from(const std::map<int, Rational>& entries);

// Incrementally maintained, fully inter-reduced row echelon over Z (each
// pivot column is zero in every other stored row).  Rows are kept primitive.
class SparseEchelon {
 public:
  explicit SparseEchelon(int cols) : cols_(cols) {}

  // Reduces the row against the current pivots.  Returns true and installs
  // a new pivot when a nonzero residual remains.
  bool insert(SparseRow row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  // Kernel basis in the same canonical normalization as kernel_basis().
  std::vector<std::vector<Rational>> kernel() const;

 private:
  int cols_;
  std::map<int, SparseRow> rows_;  // pivot column -> row
};

// Kernel of the row-streamed homogeneous system.  When expected_dim is set,
// elimination short-circuits once the rank pins the kernel to that
// dimension; the remaining rows are then only checked against the candidate
// basis (and elimination resumes if one of them fails).  The result can have
// any dimension; callers assert what they expect.
std::vector<std::vector<Rational>> sparse_kernel(int cols,
                                                 const std::vector<SparseRow>& rows,
                                                 std::optional<int> expected_dim);

// ---------------------------------------------------------------------------
// Alternating matrices of forms.

// n x n alternating matrix of polynomials: zero diagonal, entry(j,i) equal
// to -entry(i,j), all entries homogeneous of one common degree.
class AltPolyMatrix {
 public:
  AltPolyMatrix(int n, int arity);

  int size() const { return n_; }
  int arity() const { return arity_; }

  const Polynomial& at(int i, int j) const { return e_[idx(i, j)]; }
  // Sets entry (i,j), i < j, and mirrors -p into (j,i).
  void set_upper(int i, int j, const Polynomial& p);

  bool is_alternating() const;
  // Common homogeneous degree of the nonzero entries; -1 if all zero.
  int entry_degree() const;

  AltPolyMatrix scaled(const Rational& c) const;
  AltPolyMatrix operator-(const AltPolyMatrix& o) const;
  AltPolyMatrix operator+(const AltPolyMatrix& o) const;
  friend bool operator==(const AltPolyMatrix& a, const AltPolyMatrix& b) {
    return a.n_ == b.n_ && a.arity_ == b.arity_ && a.e_ == b.e_;
  }

  // Content over all entries; the canonical representative divides it out
  // and flips the sign so the first nonzero upper-triangle coefficient
  // (entries scanned row-major, monomials graded-lex) is positive.
  Rational content() const;
  AltPolyMatrix normalized() const;

  // Evaluates every entry at the point.
  RatMatrix evaluated_at(const std::vector<Rational>& point) const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }
  int n_, arity_;
  std::vector<Polynomial> e_;
};

// Pfaffian of the submatrix on the given (even-sized, strictly increasing)
// index set, by recursive first-row expansion
//   pf(M) = sum_j (-1)^j m_{1j} pf(M with rows/cols 1, j deleted),
// memoized on index subsets.  pf of the empty matrix is 1.
Polynomial pfaffian(const AltPolyMatrix& m, const std::vector<int>& index_set);
Polynomial pfaffian(const AltPolyMatrix& m);

// For a 2-row matrix of polynomials, the minors
//   d(F1,F2)/d(x_i,x_j) = grad[0][i] grad[1][j] - grad[0][j] grad[1][i]
// for i < j, listed in row-major pair order (0,1), (0,2), ..., (n-2,n-1).
std::vector<Polynomial> minors_2x2(const std::vector<std::vector<Polynomial>>& grad);

// Index of pair (i,j), i < j < n, in the row-major pair order above.
int pair_index(int i, int j, int n);

}  // namespace g1jac

#endif
