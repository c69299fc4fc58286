#ifndef G1JAC_SECANT_TYPES_HPP
#define G1JAC_SECANT_TYPES_HPP

#include <vector>

#include "g1jac/polynomial.hpp"

namespace g1jac {

// Basis of a graded piece of a homogeneous ideal: linearly independent forms
// of one common degree, coefficient vectors canonicalized.
struct FormBasis {
  int arity = 0;
  int degree = 0;
  std::vector<Polynomial> forms;

  int dimension() const { return static_cast<int>(forms.size()); }
};

// Checks homogeneity, arity, linear independence; normalizes each form to a
// primitive integer representative with positive leading coefficient.
FormBasis make_form_basis(int arity, int degree, std::vector<Polynomial> forms);

// True iff the two bases span the same subspace.
bool same_span(const FormBasis& a, const FormBasis& b);

}  // namespace g1jac

#endif
