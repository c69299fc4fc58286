// Command line front end: reads genus one models as JSON, emits the
// alternating matrix, the c4/c6 invariants and the Jacobian curve.
//
// Exit codes: 0 success, 2 invalid input, 3 degenerate model, 4 internal.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "g1jac/model_io.hpp"
#include "g1jac/pipeline.hpp"
#include "g1jac/selfcheck.hpp"

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw g1jac::InvalidInput("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw g1jac::InvalidInput("cannot open output file: " + path);
  out << text;
}

g1jac::Rational parse_coeff(const std::string& s) { return g1jac::Rational::from_string(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobians of genus one normal curves via alternating matrices of quadrics"};
  app.require_subcommand(1);

  std::string input_path, output_path;
  bool verify = false;

  auto* jac = app.add_subcommand("jacobian", "Full pipeline: model -> omega -> c4/c6 -> Jacobian");
  jac->add_option("--input", input_path, "model JSON file ('-' for stdin)")->required();
  jac->add_option("--output", output_path, "report destination (default stdout)");
  jac->add_flag("--verify", verify, "also run annihilation/Pfaffian/rank certificates");

  auto* omega = app.add_subcommand("omega", "Stop after the alternating matrix");
  omega->add_option("--input", input_path, "model JSON file ('-' for stdin)")->required();
  omega->add_option("--output", output_path, "report destination (default stdout)");

  std::string a1 = "0", a2 = "0", a3 = "0", a4 = "0", a6 = "0";
  int embed_n = 0;
  auto* embed = app.add_subcommand("embed", "Quadric model of a Weierstrass curve");
  embed->add_option("--a1", a1, "Weierstrass a1");
  embed->add_option("--a2", a2, "Weierstrass a2");
  embed->add_option("--a3", a3, "Weierstrass a3");
  embed->add_option("--a4", a4, "Weierstrass a4");
  embed->add_option("--a6", a6, "Weierstrass a6");
  embed->add_option("--n", embed_n, "embedding degree (>= 4)")->required();
  embed->add_option("--output", output_path, "model destination (default stdout)");

  int n_max = 5;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the built-in verification suite");
  selfcheck->add_option("--n-max", n_max, "largest degree to exercise (3..9)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (jac->parsed()) {
      const auto model = g1jac::parse_model(read_file(input_path));
      const auto report = g1jac::full_jacobian(model, verify);
      write_output(output_path, g1jac::report_to_json(report));
      if (verify && !report.verification.all_ok()) return 3;
      return 0;
    }
    if (omega->parsed()) {
      const auto model = g1jac::parse_model(read_file(input_path));
      auto result = g1jac::compute_omega(model);
      // Reuse the report schema, restricted to the matrix itself.
      nlohmann::json out;
      out["degree"] = model.n;
      const auto normalized = result.omega.mat.normalized();
      nlohmann::json rows = nlohmann::json::array();
      for (int i = 0; i < normalized.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < normalized.size(); ++j) {
          nlohmann::json terms = nlohmann::json::array();
          for (const auto& [m, c] : normalized.at(i, j).terms()) {
            nlohmann::json t;
            t["exps"] = m.exponents();
            t["coeff"] = c.str();
            terms.push_back(std::move(t));
          }
          nlohmann::json poly;
          poly["vars"] = normalized.arity();
          poly["terms"] = std::move(terms);
          row.push_back(std::move(poly));
        }
        rows.push_back(std::move(row));
      }
      out["omega"] = std::move(rows);
      write_output(output_path, out.dump(2) + "\n");
      return 0;
    }
    if (embed->parsed()) {
      const g1jac::WeierstrassCurve e(parse_coeff(a1), parse_coeff(a2), parse_coeff(a3),
                                      parse_coeff(a4), parse_coeff(a6));
      const auto model = g1jac::embed_model(e, embed_n);
      write_output(output_path, g1jac::model_to_json(model));
      return 0;
    }
    if (selfcheck->parsed()) {
      return g1jac::run_selfcheck(n_max, std::cout) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return g1jac::exit_code_for(e);
  }
  return 0;
}
