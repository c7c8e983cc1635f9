#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgip/types.hpp"

namespace kgip::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string subcommand = "verify";
  std::uint64_t seed = 42;
  Index dim = 8;
  Index modes = 8;
  Index sites = 64;
  double tol = kDefaultTol;
  double omega = 2.0;
  double mu = 5.0;
  double mass = 1.0;
  int kappa = 0;
  double alpha0 = 0.0;
  double a = 0.0;
  double lplus = 1.0;
  double lminus = 0.0;
  double lambda = 1.0;
  double t_final = 10.0;
  std::size_t steps = 100000;
  std::string out;
  std::string format = "json";

  /// Throws Error(InvalidArgument) on any out-of-range field.
  void validate() const;
  Json to_json() const;
};

struct CheckRecord {
  std::string name;
  std::string paper_anchor;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct Report {
  Json config;
  std::vector<CheckRecord> checks;
  Json data = Json::object();

  /// Residual-type check: passes iff measured <= bound (NaN fails).
  void add(std::string name, std::string anchor, double measured, double bound);

  std::size_t passed() const;
  bool all_passed() const { return passed() == checks.size(); }
  Json to_json() const;
};

/// Full property battery at cfg.dim, deterministic in (seed, dim, tol).
Report run_verify(const RunConfig& cfg);

struct ModelRun {
  Report report;
  std::string csv;  // time series, sho only
};

/// sho: integrates the oscillator and tabulates monitored products.
/// kg: mode table, family and Woodard checks, nonrelativistic gap.
/// wdw: spectrum, positivity class, grid cross-check.
ModelRun run_model(const RunConfig& cfg);

/// Two-space indented JSON; doubles print as shortest round-trip strings.
std::string dump(const Json& j);

/// Parses argv, runs, writes output; returns the process exit code.
int main_entry(int argc, char** argv);

}  // namespace kgip::cli
