#ifndef G1JAC_PIPELINE_HPP
#define G1JAC_PIPELINE_HPP

#include <vector>

#include "g1jac/model_io.hpp"

namespace g1jac {

// The quadric model of E embedded by the complete degree-n linear system.
ModelInput embed_model(const WeierstrassCurve& e, int n);

// The Omega underlying a model, with the gradient rows that annihilate it
// (one row for odd n, two for even n).
struct OmegaResult {
  OmegaMatrix omega;
  std::vector<std::vector<Polynomial>> grad_rows;
};
OmegaResult compute_omega(const ModelInput& input);

// Whole pipeline: Omega, the invariants of its normalized representative,
// and the Jacobian y^2 = x^3 - 27 c4 x - 54 c6.  With verify set, also runs
// the annihilation, Pfaffian and secant-rank certificates (the rank check
// needs rational points and is only attempted for Weierstrass input).
JacobianReport full_jacobian(const ModelInput& input, bool verify);

// CLI exit code for a library exception: 2 invalid input, 3 degenerate
// model, 4 internal.
int exit_code_for(const std::exception& e);

}  // namespace g1jac

#endif
