#ifndef G1JAC_SECANT_HPP
#define G1JAC_SECANT_HPP

#include <vector>

#include "g1jac/secant_types.hpp"

namespace g1jac {

// Number of r-subsets of Z/nZ with no two elements adjacent:
// C(n-r, r) + C(n-r-1, r-1).  This counts the independent forms of degree r
// cutting out the secant variety one step below.
long long beta(int r, int n);

// From a basis B of the degree-(k+1) piece of I(Sec^k C), the space of all
// degree-(k+2) forms f with every partial derivative in span(B).  One exact
// kernel computation; output dimension asserted equal to beta(k+2, n).
FormBasis lift_step(const FormBasis& b);

// For n = 2 deg(B) + 1 odd: the unique (up to scale) degree-n form whose
// every partial lies in the span of pairwise products of B (the lowest
// graded piece of the ideal square).  Solved through the symmetric-mixed-
// partials formulation: find g_i in span(products) with dg_i/dx_j symmetric,
// then F = (1/n) sum x_i g_i by Euler's identity.
Polynomial hypersurface_step(const FormBasis& b);

// Full chain from the quadrics of a degree-n genus one normal curve to the
// minimal equations of the largest proper secant variety:
// one degree-n form for n odd, two forms of degree n/2 for n even.
// Every intermediate dimension is asserted against beta.
struct SecantChainResult {
  // size 1 (n odd) or 2 (n even)
  std::vector<Polynomial> forms;
  int degree = 0;
};
SecantChainResult secant_chain(const FormBasis& quadrics);

}  // namespace g1jac

#endif
