#ifndef G1JAC_INVARIANTS_HPP
#define G1JAC_INVARIANTS_HPP

#include <vector>

#include "g1jac/elliptic.hpp"
#include "g1jac/linalg.hpp"

namespace g1jac {

// Symmetric matrix of quadratic forms M_ij = sum_{r,s} dOmega_ir/dx_s dOmega_js/dx_r.
class MMatrix {
 public:
  MMatrix(int n, int arity)
      : n_(n), arity_(arity),
        e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Polynomial::zero(arity)) {}

  int size() const { return n_; }
  int arity() const { return arity_; }
  const Polynomial& at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, const Polynomial& p) {
    e_[idx(i, j)] = p;
    e_[idx(j, i)] = p;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }
  int n_, arity_;
  std::vector<Polynomial> e_;
};

// Cubic-form tensor N_ijk = sum_r dM_ij/dx_r Omega_rk, symmetric in (i,j);
// stored for i <= j.
class NTensor {
 public:
  NTensor(int n, int arity)
      : n_(n), arity_(arity),
        e_(static_cast<std::size_t>(n * (n + 1) / 2) * static_cast<std::size_t>(n),
           Polynomial::zero(arity)) {}

  int size() const { return n_; }
  const Polynomial& at(int i, int j, int k) const { return e_[idx(i, j, k)]; }
  void set(int i, int j, int k, const Polynomial& p) { e_[idx(i, j, k)] = p; }

 private:
  std::size_t idx(int i, int j, int k) const {
    if (i > j) std::swap(i, j);
    // position of (i,j), i <= j, in row-major upper-triangle order
    const int p = i * n_ - i * (i - 1) / 2 + (j - i);
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(k);
  }
  int n_, arity_;
  std::vector<Polynomial> e_;
};

MMatrix matrix_M(const AltPolyMatrix& omega);
NTensor tensor_N(const AltPolyMatrix& omega, const MMatrix& m);

// The contraction sums before the normalizing prefactors.
Rational c4_double_sum(const MMatrix& m);
Rational c6_double_sum(const NTensor& t);

// c4 = 3(n-2)^2 / (2^4 n C(n+3,5)) * sum, c6 = -(n-2)^3 / (2^6 n C(n+5,7)) * sum.
Rational c4_invariant(const AltPolyMatrix& omega);
Rational c6_invariant(const AltPolyMatrix& omega);

// y^2 = x^3 - 27 c4 x - 54 c6; throws DegenerateModel when c4^3 == c6^2.
WeierstrassCurve jacobian_equation(const Rational& c4, const Rational& c6);

}  // namespace g1jac

#endif
