#ifndef G1JAC_MODEL_IO_HPP
#define G1JAC_MODEL_IO_HPP

#include <optional>
#include <string>

#include "g1jac/elliptic.hpp"
#include "g1jac/linalg.hpp"
#include "g1jac/omega.hpp"
#include "g1jac/secant_types.hpp"

namespace g1jac {

// One of three model shapes: a plane cubic (degree 3), the quadrics of a
// degree-n curve (n >= 4), or a Weierstrass curve to embed at degree n.
struct ModelInput {
  int n = 0;
  std::optional<Polynomial> cubic;
  std::optional<FormBasis> quadrics;
  std::optional<WeierstrassCurve> weierstrass;
};

struct VerificationFlags {
  bool dimensions = false;
  std::optional<bool> annihilation;
  std::optional<bool> h2;
  std::optional<bool> pfaffian;
  std::optional<Rational> pfaffian_scalar;
  std::optional<bool> rank_secant;

  bool all_ok() const {
    auto pass = [](const std::optional<bool>& f) { return !f.has_value() || *f; };
    return dimensions && pass(annihilation) && pass(h2) && pass(pfaffian) && pass(rank_secant);
  }
  friend bool operator==(const VerificationFlags&, const VerificationFlags&) = default;
};

struct JacobianReport {
  int n = 0;
  AltPolyMatrix omega;  // normalized representative
  Rational c4, c6;
  WeierstrassCurve jacobian;
  Rational j;
  VerificationFlags verification;

  friend bool operator==(const JacobianReport& a, const JacobianReport& b) {
    return a.n == b.n && a.omega == b.omega && a.c4 == b.c4 && a.c6 == b.c6 &&
           a.jacobian == b.jacobian && a.j == b.j && a.verification == b.verification;
  }
};

// JSON schema: rationals are strings "p/q"; a polynomial is
//   {"vars": n, "terms": [{"exps": [...], "coeff": "p/q"}, ...]}
// with terms in descending graded-lex order; matrices are row-major arrays.
ModelInput parse_model(const std::string& json_text);
std::string model_to_json(const ModelInput& model);

std::string report_to_json(const JacobianReport& report);
JacobianReport parse_report(const std::string& json_text);

}  // namespace g1jac

#endif
