#include "g1jac/model_io.hpp"

#include <json.hpp>

namespace g1jac {

namespace {

using nlohmann::json;

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["exps"] = m.exponents();
    t["coeff"] = c.str();
    terms.push_back(std::move(t));
  }
  json out;
  out["vars"] = p.arity();
  out["terms"] = std::move(terms);
  return out;
}

Polynomial poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw InvalidInput("polynomial JSON needs 'vars' and 'terms'");
  if (!j["vars"].is_number_integer() || j["vars"].get<int>() < 1)
    throw InvalidInput("polynomial 'vars' must be a positive integer");
  const int arity = j["vars"].get<int>();
  Polynomial p(arity);
  if (!j["terms"].is_array()) throw InvalidInput("polynomial 'terms' must be an array");
  for (const auto& t : j["terms"]) {
    if (!t.contains("exps") || !t.contains("coeff"))
      throw InvalidInput("polynomial term needs 'exps' and 'coeff'");
    const auto& exps = t["exps"];
    if (!exps.is_array() || static_cast<int>(exps.size()) != arity)
      throw InvalidInput("term 'exps' must list one exponent per variable");
    std::vector<std::uint32_t> e;
    e.reserve(exps.size());
    for (const auto& x : exps) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        throw InvalidInput("exponents must be non-negative integers");
      e.push_back(static_cast<std::uint32_t>(x.get<long long>()));
    }
    if (!t["coeff"].is_string()) throw InvalidInput("term 'coeff' must be a string");
    p.add_term(Monomial(std::move(e)), Rational::from_string(t["coeff"].get<std::string>()));
  }
  return p;
}

Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw InvalidInput(std::string("expected string field '") + key + "'");
  return Rational::from_string(j[key].get<std::string>());
}

json curve_to_json(const WeierstrassCurve& e) {
  json out;
  out["a1"] = e.a1.str();
  out["a2"] = e.a2.str();
  out["a3"] = e.a3.str();
  out["a4"] = e.a4.str();
  out["a6"] = e.a6.str();
  return out;
}

WeierstrassCurve curve_from_json(const json& j) {
  return WeierstrassCurve(rational_field(j, "a1"), rational_field(j, "a2"),
                          rational_field(j, "a3"), rational_field(j, "a4"),
                          rational_field(j, "a6"));
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("malformed JSON");
  return j;
}

}  // namespace

ModelInput parse_model(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer())
    throw InvalidInput("model needs an integer 'degree'");
  ModelInput model;
  model.n = j["degree"].get<int>();
  if (model.n < 3) throw InvalidInput("degree must be at least 3");
  const int shapes = static_cast<int>(j.contains("cubic")) +
                     static_cast<int>(j.contains("quadrics")) +
                     static_cast<int>(j.contains("weierstrass"));
  if (shapes != 1)
    throw InvalidInput("model needs exactly one of 'cubic', 'quadrics', 'weierstrass'");
  if (j.contains("cubic")) {
    if (model.n != 3) throw InvalidInput("cubic models have degree 3");
    Polynomial f = poly_from_json(j["cubic"]);
    if (f.arity() != 3 || f.is_zero() || !f.is_form(3))
      throw InvalidInput("'cubic' must be a nonzero ternary cubic form");
    model.cubic = std::move(f);
  } else if (j.contains("quadrics")) {
    if (model.n < 4) throw InvalidInput("quadric models need degree >= 4");
    if (!j["quadrics"].is_array()) throw InvalidInput("'quadrics' must be an array");
    std::vector<Polynomial> forms;
    for (const auto& q : j["quadrics"]) {
      Polynomial f = poly_from_json(q);
      if (f.arity() != model.n) throw InvalidInput("quadric arity must equal the degree");
      forms.push_back(std::move(f));
    }
    if (static_cast<int>(forms.size()) != model.n * (model.n - 3) / 2)
      throw InvalidInput("quadric model needs n(n-3)/2 = " +
                         std::to_string(model.n * (model.n - 3) / 2) + " forms, got " +
                         std::to_string(forms.size()));
    model.quadrics = make_form_basis(model.n, 2, std::move(forms));
  } else {
    model.weierstrass = curve_from_json(j["weierstrass"]);
  }
  return model;
}

std::string model_to_json(const ModelInput& model) {
  json out;
  out["degree"] = model.n;
  if (model.cubic) {
    out["cubic"] = poly_to_json(*model.cubic);
  } else if (model.quadrics) {
    json arr = json::array();
    for (const auto& f : model.quadrics->forms) arr.push_back(poly_to_json(f));
    out["quadrics"] = std::move(arr);
  } else if (model.weierstrass) {
    out["weierstrass"] = curve_to_json(*model.weierstrass);
  } else {
    throw InvalidInput("empty model");
  }
  return out.dump(2) + "\n";
}

std::string report_to_json(const JacobianReport& report) {
  json out;
  out["degree"] = report.n;
  json omega = json::array();
  for (int i = 0; i < report.omega.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < report.omega.size(); ++j) row.push_back(poly_to_json(report.omega.at(i, j)));
    omega.push_back(std::move(row));
  }
  out["omega"] = std::move(omega);
  out["c4"] = report.c4.str();
  out["c6"] = report.c6.str();
  out["jacobian"] = curve_to_json(report.jacobian);
  out["j"] = report.j.str();
  json ver;
  ver["dimensions"] = report.verification.dimensions;
  if (report.verification.annihilation) ver["annihilation"] = *report.verification.annihilation;
  if (report.verification.h2) ver["h2"] = *report.verification.h2;
  if (report.verification.pfaffian) ver["pfaffian"] = *report.verification.pfaffian;
  if (report.verification.pfaffian_scalar)
    ver["pfaffian_scalar"] = report.verification.pfaffian_scalar->str();
  if (report.verification.rank_secant) ver["rank_secant"] = *report.verification.rank_secant;
  out["verification"] = std::move(ver);
  return out.dump(2) + "\n";
}

JacobianReport parse_report(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("degree") || !j.contains("omega"))
    throw InvalidInput("report needs 'degree' and 'omega'");
  const int n = j["degree"].get<int>();
  AltPolyMatrix omega(n, n);
  const auto& rows = j["omega"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw InvalidInput("omega must be an n x n array");
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InvalidInput("omega must be an n x n array");
    for (int c = i + 1; c < n; ++c)
      omega.set_upper(i, c, poly_from_json(row[static_cast<std::size_t>(c)]));
  }
  // The lower triangle must mirror the upper one.
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < i; ++c)
      if (poly_from_json(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) !=
          omega.at(i, c))
        throw InvalidInput("omega is not alternating");
  JacobianReport report{
      n,
      std::move(omega),
      rational_field(j, "c4"),
      rational_field(j, "c6"),
      curve_from_json(j["jacobian"]),
      rational_field(j, "j"),
      VerificationFlags{},
  };
  if (j.contains("verification")) {
    const auto& v = j["verification"];
    if (v.contains("dimensions")) report.verification.dimensions = v["dimensions"].get<bool>();
    if (v.contains("annihilation"))
      report.verification.annihilation = v["annihilation"].get<bool>();
    if (v.contains("h2")) report.verification.h2 = v["h2"].get<bool>();
    if (v.contains("pfaffian")) report.verification.pfaffian = v["pfaffian"].get<bool>();
    if (v.contains("pfaffian_scalar"))
      report.verification.pfaffian_scalar =
          Rational::from_string(v["pfaffian_scalar"].get<std::string>());
    if (v.contains("rank_secant")) report.verification.rank_secant = v["rank_secant"].get<bool>();
  }
  return report;
}

}  // namespace g1jac
