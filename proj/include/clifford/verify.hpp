#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace clifford::verify {

/// Knobs for a verification run.  tolerance_override replaces the tolerance
/// of the named checks; flip_boost_sign deliberately mis-signs the momentum
/// in one boosted-wave check so the harness can prove the suite fails when
/// the algebra is wrong.
struct RunConfig {
  std::uint64_t seed = 0x517EC0DEull;
  int samples = 1000;
  std::map<std::string, double> tolerance_override;
  bool flip_boost_sign = false;
};

struct CheckRecord {
  std::string id;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int samples = 0;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckRecord> checks;
  bool pass = false;
  double wall_time_s = 0.0;  // informational; never serialized canonically
};

/// Registered suite names: core, rep, weyl, dirac, paravector, cl03.
std::vector<std::string> suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const RunConfig& config);

/// Runs the named suites ("all" expands to every suite) in name order.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names,
                                    const RunConfig& config);

bool all_pass(const std::vector<SuiteReport>& suites);

}  // namespace clifford::verify
