#include "g1jac/pipeline.hpp"

#include <algorithm>

#include "g1jac/explicit_omega.hpp"
#include "g1jac/invariants.hpp"
#include "g1jac/secant.hpp"

namespace g1jac {

ModelInput embed_model(const WeierstrassCurve& e, int n) {
  if (n < 4)
    throw InvalidInput("embed needs degree >= 4; degree 3 is the plane cubic model");
  ModelInput out;
  out.n = n;
  out.quadrics = curve_quadrics(e, n);
  return out;
}

OmegaResult compute_omega(const ModelInput& input) {
  if (input.cubic) {
    OmegaResult out{classical_omega_cubic(*input.cubic), {gradient(*input.cubic)}};
    return out;
  }
  if (input.quadrics) {
    const FormBasis& q = *input.quadrics;
    std::vector<Polynomial> forms;
    if (q.arity == 4) {
      forms = q.forms;  // the pair already cuts out the curve
    } else {
      forms = secant_chain(q).forms;
    }
    std::vector<std::vector<Polynomial>> grads;
    grads.reserve(forms.size());
    for (const auto& f : forms) grads.push_back(gradient(f));
    OmegaResult out{solve_omega(grads, q.arity), std::move(grads)};
    return out;
  }
  if (input.weierstrass) {
    const WeierstrassCurve& e = *input.weierstrass;
    if (input.n == 3) {
      const Polynomial cubic = weierstrass_cubic(e);
      return OmegaResult{classical_omega_cubic(cubic), {gradient(cubic)}};
    }
    ModelInput embedded = embed_model(e, input.n);
    return compute_omega(embedded);
  }
  throw InvalidInput("empty model");
}

namespace {

// Samples distinct points and checks rank Omega(sum xi_i vP_i) == 2r for
// r = 1 and r = 2 where the degree allows; one resample before giving up.
std::optional<bool> rank_certificate(const AltPolyMatrix& omega, const WeierstrassCurve& e,
                                     int n) {
  const auto points = find_rational_points(e, 8);
  if (points.empty()) return std::nullopt;
  auto check = [&](int r) -> std::optional<bool> {
    if (n - 2 * r < 1) return std::nullopt;
    std::vector<std::vector<CurvePoint>> samples;
    if (r == 1) {
      samples.push_back({points[0]});
      const CurvePoint dbl = add(e, points[0], points[0]);
      if (!dbl.infinity) samples.push_back({dbl});
      if (points.size() > 1) samples.push_back({points[1]});
    } else {
      std::vector<CurvePoint> pool = points;
      const CurvePoint dbl = add(e, points[0], points[0]);
      if (!dbl.infinity &&
          std::find(pool.begin(), pool.end(), dbl) == pool.end())
        pool.push_back(dbl);
      for (std::size_t i = 0; i < pool.size() && samples.size() < 2; ++i)
        for (std::size_t j = i + 1; j < pool.size() && samples.size() < 2; ++j)
          samples.push_back({pool[i], pool[j]});
      if (samples.empty()) return std::nullopt;
    }
    int tried = 0;
    for (const auto& sample : samples) {
      if (tried == 2) break;  // one resample, then give up
      ++tried;
      std::vector<Rational> xi(sample.size(), Rational(1));
      if (rank_at_secant_point(omega, e, sample, xi) == 2 * r) return true;
    }
    return false;
  };
  const auto r1 = check(1);
  const auto r2 = check(2);
  if (!r1.has_value() && !r2.has_value()) return std::nullopt;
  return (!r1.has_value() || *r1) && (!r2.has_value() || *r2);
}

}  // namespace

JacobianReport full_jacobian(const ModelInput& input, bool verify) {
  OmegaResult result = compute_omega(input);
  const AltPolyMatrix normalized = result.omega.mat.normalized();
  const Rational c4 = c4_invariant(normalized);
  const Rational c6 = c6_invariant(normalized);
  const WeierstrassCurve jac = jacobian_equation(c4, c6);
  JacobianReport report{input.n, normalized, c4,
                        c6,      jac,        jac.j_invariant(),
                        VerificationFlags{}};
  report.verification.dimensions = true;  // the chain asserts every beta
  if (verify) {
    const auto ann = verify_annihilation(normalized, result.grad_rows);
    report.verification.annihilation = ann.rows_annihilate;
    report.verification.h2 = ann.h2;
    const auto pf = verify_pfaffians(normalized, result.grad_rows);
    report.verification.pfaffian = pf.ok;
    if (pf.ok) report.verification.pfaffian_scalar = pf.scalar;
    if (input.weierstrass)
      report.verification.rank_secant = rank_certificate(normalized, *input.weierstrass, input.n);
  }
  return report;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidInput*>(&e) != nullptr) return 2;
  if (dynamic_cast<const DegenerateModel*>(&e) != nullptr) return 3;
  return 4;
}

}  // namespace g1jac
