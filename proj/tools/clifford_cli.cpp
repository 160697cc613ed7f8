// Command-line front end: verification runs with reproducible reports, plane
// wave evaluation, Cayley tables, and the polar decomposition of a stored
// element.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clifford/dirac_hestenes.hpp"
#include "clifford/json_io.hpp"
#include "clifford/multivector.hpp"
#include "clifford/verify.hpp"

namespace {

using clifford::Multivector;
using clifford::Signature;

int run_verify(const std::vector<std::string>& suites, const clifford::verify::RunConfig& config,
               const std::string& out_path, bool human) {
  const std::vector<clifford::verify::SuiteReport> reports =
      clifford::verify::run_suites(suites.empty() ? std::vector<std::string>{"all"} : suites,
                                   config);
  const std::string serialized = clifford::io::report_to_string(reports);

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 2;
    }
    out << serialized;
  }

  if (human) {
    for (const auto& suite : reports) {
      std::cout << "suite " << suite.name << (suite.pass ? "  ok" : "  FAIL") << "\n";
      for (const auto& c : suite.checks) {
        std::cout << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.id << "  residual "
                  << c.residual << "  tolerance " << c.tolerance << "  samples " << c.samples
                  << "\n";
      }
    }
  } else if (out_path.empty()) {
    std::cout << serialized;
  }

  return clifford::verify::all_pass(reports) ? 0 : 1;
}

clifford::io::json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return clifford::io::json::parse(in);
}

int run_planewave(const std::string& params_path, double t, const std::vector<double>& x) {
  const clifford::dirac::PlaneWaveParams params =
      clifford::io::planewave_params_from_json(load_json(params_path));
  const clifford::SpacetimePoint pt{t, {x[0], x[1], x[2]}};
  const clifford::dirac::Mv30Field field = clifford::dirac::planewave_field(params);
  const double residual = clifford::inf_norm(clifford::dirac::dhe_residual(
      field, clifford::dirac::PotentialField::zero(), params.m, pt));

  clifford::io::json out;
  out["params"] = clifford::io::planewave_params_to_json(params);
  out["point"] = {{"t", pt.t}, {"x", {pt.x[0], pt.x[1], pt.x[2]}}};
  out["value"] = clifford::io::multivector_to_json(field.value(pt));
  out["energy"] = params.energy();
  out["dhe_residual"] = residual;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_table(const std::vector<int>& sig_pq) {
  const Signature sig(sig_pq[0], sig_pq[1]);
  std::vector<std::string> names;
  std::size_t width = 0;
  for (unsigned m = 0; m < sig.size(); ++m) {
    names.push_back(clifford::io::blade_name(m));
    width = std::max(width, names.back().size());
  }
  width += 1;  // room for the sign

  auto pad = [width](const std::string& s) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };

  std::ostringstream out;
  out << pad("") << " |";
  for (const auto& n : names) out << " " << pad("+" + n);
  out << "\n" << std::string(width, '-') << "-+" << std::string((width + 1) * names.size(), '-')
      << "\n";
  for (unsigned i = 0; i < sig.size(); ++i) {
    out << pad("+" + names[i]) << " |";
    for (unsigned j = 0; j < sig.size(); ++j) {
      const Multivector prod =
          Multivector::basis_blade(sig, i) * Multivector::basis_blade(sig, j);
      std::string cell = "?";
      for (unsigned k = 0; k < sig.size(); ++k) {
        if (prod[k] != 0.0) {
          cell = (prod[k] > 0.0 ? "+" : "-") + names[k];
          break;
        }
      }
      out << " " << pad(cell);
    }
    out << "\n";
  }
  std::cout << out.str();
  return 0;
}

int run_decompose(const std::string& in_path) {
  const Multivector psi = clifford::io::multivector_from_json(load_json(in_path));
  try {
    const clifford::dirac::LounestoDecomposition d = clifford::dirac::lounesto_decompose(psi);
    const Multivector recon =
        std::sqrt(d.rho) *
        clifford::mv_exp(Multivector::basis_blade(Signature::cl30(), 0b111, d.beta / 2.0)) *
        d.rotor;
    std::cout << clifford::io::lounesto_to_json(d, clifford::inf_norm(recon - psi)).dump(2)
              << "\n";
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification kernel for the Clifford algebras Cl(3,0), Cl(0,3), Cl(1,3)"};
  app.require_subcommand(1);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites, print a report");
  std::vector<std::string> suites;
  verify_cmd->add_option("--suite", suites,
                         "Suite to run (repeatable): core, rep, weyl, dirac, paravector, cl03, "
                         "or all (default)");
  clifford::verify::RunConfig config;
  verify_cmd->add_option("--seed", config.seed,
                         "PRNG seed (the CLIFFORD_SEED environment variable overrides this)");
  verify_cmd->add_option("--samples", config.samples, "Random samples per check")
      ->check(CLI::PositiveNumber);
  std::string out_path;
  verify_cmd->add_option("--out", out_path, "Write the JSON report to this file");
  bool human = false;
  verify_cmd->add_flag("--human", human, "Print a plain-text summary instead of JSON");
  verify_cmd
      ->add_flag("--inject-boost-sign-flip", config.flip_boost_sign,
                 "Sabotage the boosted plane waves; the run must then fail")
      ->group("");  // hidden: only the test harness has a use for it

  // planewave
  auto* wave_cmd = app.add_subcommand("planewave", "Evaluate a plane-wave solution at a point");
  std::string params_path;
  wave_cmd->add_option("--params", params_path, "JSON file with branch/spin/p/m")->required();
  double t = 0.0;
  wave_cmd->add_option("--t", t, "Time coordinate");
  std::vector<double> x{0.0, 0.0, 0.0};
  wave_cmd->add_option("--x", x, "Spatial coordinates x1,x2,x3")->delimiter(',')->expected(3);

  // table
  auto* table_cmd = app.add_subcommand("table", "Print the Cayley table of a signature");
  std::vector<int> sig_pq{3, 0};
  table_cmd->add_option("--sig", sig_pq, "Signature p,q (e.g. 0,3)")->delimiter(',')->expected(2);

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "Polar-decompose a stored Cl(3,0) element");
  std::string in_path;
  dec_cmd->add_option("--in", in_path, "JSON file holding the element")->required();

  CLI11_PARSE(app, argc, argv);

  if (const char* env_seed = std::getenv("CLIFFORD_SEED")) {
    try {
      config.seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      std::cerr << "error: CLIFFORD_SEED is not an unsigned integer: " << env_seed << "\n";
      return 2;
    }
  }

  try {
    if (verify_cmd->parsed()) return run_verify(suites, config, out_path, human);
    if (wave_cmd->parsed()) return run_planewave(params_path, t, x);
    if (table_cmd->parsed()) return run_table(sig_pq);
    if (dec_cmd->parsed()) return run_decompose(in_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
