#ifndef G1JAC_OMEGA_HPP
#define G1JAC_OMEGA_HPP

#include <optional>
#include <vector>

#include "g1jac/elliptic.hpp"
#include "g1jac/linalg.hpp"

namespace g1jac {

enum class OmegaProvenance { solved, explicit_form, classical };

// Alternating matrix of quadratic forms representing the invariant
// differential of a genus one normal curve.  Solver output is normalized
// (primitive integer coefficients, first nonzero upper-triangle coefficient
// positive); closed-form constructions keep their natural scale so the
// scaling laws relating them to the curve invariants hold exactly.
struct OmegaMatrix {
  AltPolyMatrix mat;
  OmegaProvenance provenance;
};

// Solves for the alternating quadratic matrix annihilated by the given
// gradient rows (one row for n odd, two for n even), identically as forms.
// The solution space must be one-dimensional: dimension 0 raises
// InvalidInput ("inconsistent"), dimension > 1 DegenerateModel.
//
// Columns are solved independently (each column block generically has a
// one-dimensional kernel) and then glued by the alternation constraint; on
// any anomaly the solver falls back to the single global kernel over the
// n(n-1)/2 independent entries.
OmegaMatrix solve_omega(const std::vector<std::vector<Polynomial>>& grad_rows, int n);

// Convenience: gradients of the given forms (F, or F1 and F2).
OmegaMatrix solve_omega_for(const std::vector<Polynomial>& forms);

// g * Omega = g^{-T} (Omega(sum_i g_i0 x_i, ..., sum_i g_i,n-1 x_i)) g^{-1}.
// Result is alternating with quadratic entries and is not normalized.
AltPolyMatrix gl_act(const RatMatrix& g, const AltPolyMatrix& omega);

struct AnnihilationReport {
  // Every grad row times every column of Omega is the zero form.
  bool rows_annihilate = false;
  // The mixed bilinear identity row1 . Omega . row2^T == 0; only meaningful
  // with two gradient rows.
  std::optional<bool> h2;
  bool ok() const { return rows_annihilate && (!h2.has_value() || *h2); }
};
AnnihilationReport verify_annihilation(const AltPolyMatrix& omega,
                                       const std::vector<std::vector<Polynomial>>& grad_rows);

// One gradient row: the signed principal Pfaffians (-1)^i pf(Omega^{i})
// (0-based sign, fixed so the classical plane-cubic matrix reports scalar 1)
// must all be one common scalar multiple of the partial derivatives.
// Two rows: the signed (n-2)-Pfaffians against the 2x2 minors of the
// gradient matrix.  Returns the scalar.
struct PfaffianReport {
  bool ok = false;
  Rational scalar;
};
PfaffianReport verify_pfaffians(const AltPolyMatrix& omega,
                                const std::vector<std::vector<Polynomial>>& grad_rows);

// Exact rank of Omega evaluated at sum_i xi_i * vP_i for distinct affine
// curve points; 2r for a generic point of Sec^r C.
int rank_at_secant_point(const AltPolyMatrix& omega, const WeierstrassCurve& e,
                         const std::vector<CurvePoint>& points,
                         const std::vector<Rational>& xi);

// True iff a and b generate the same line of matrices: a == lambda * b for
// some nonzero rational lambda.  Returns lambda through the out-parameter.
bool proportional(const AltPolyMatrix& a, const AltPolyMatrix& b, Rational* lambda = nullptr);

}  // namespace g1jac

#endif
