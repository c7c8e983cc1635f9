#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "kgip/cli.hpp"

namespace kgip::cli {

namespace {

void add_common(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
  sub.add_option("--tol", cfg.tol, "residual tolerance")->capture_default_str();
  sub.add_option("--lambda", cfg.lambda, "two-component gauge parameter")->capture_default_str();
  sub.add_option("--out", cfg.out, "output path (stdout when empty)");
  sub.add_option("--format", cfg.format, "json or csv")->capture_default_str();
  // Accepted everywhere so one flag set drives every subcommand.
  sub.add_option("--dim", cfg.dim, "field dimension")->capture_default_str();
  sub.add_option("--modes", cfg.modes, "basis truncation")->capture_default_str();
  sub.add_option("--sites", cfg.sites, "lattice sites")->capture_default_str();
  sub.add_option("--omega", cfg.omega, "oscillator frequency")->capture_default_str();
  sub.add_option("--mu", cfg.mu, "field mass")->capture_default_str();
  sub.add_option("--mass", cfg.mass, "scalar mass in the FRW model")->capture_default_str();
  sub.add_option("--kappa", cfg.kappa, "spatial curvature {-1,0,1}")->capture_default_str();
  sub.add_option("--alpha0", cfg.alpha0, "reference alpha")->capture_default_str();
  sub.add_option("--a", cfg.a, "family label in (-1,1)")->capture_default_str();
  sub.add_option("--lplus", cfg.lplus, "L+ scalar")->capture_default_str();
  sub.add_option("--lminus", cfg.lminus, "L- scalar")->capture_default_str();
  sub.add_option("--t-final", cfg.t_final, "integration end time")->capture_default_str();
  sub.add_option("--steps", cfg.steps, "integration steps")->capture_default_str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  file << text;
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"Invariant inner products for Klein-Gordon type equations"};
  app.require_subcommand(1);
  RunConfig cfg;
  for (const char* name : {"verify", "sho", "kg", "wdw"}) {
    static const std::map<std::string, std::string> help = {
        {"verify", "run the full property battery"},
        {"sho", "oscillator time series (CSV or JSON)"},
        {"kg", "Klein-Gordon lattice family checks"},
        {"wdw", "FRW minisuperspace spectrum and positivity"}};
    auto* sub = app.add_subcommand(name, help.at(name));
    add_common(*sub, cfg);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "verify") {
      const Report report = run_verify(cfg);
      emit(dump(report.to_json()), cfg.out);
      return report.all_passed() ? 0 : 1;
    }
    const ModelRun run = run_model(cfg);
    emit(cfg.format == "csv" ? run.csv : dump(run.report.to_json()), cfg.out);
    if (cfg.format == "csv") {
      for (const auto& c : run.report.checks) {
        if (!c.pass) std::cerr << "check failed: " << c.name << " measured " << c.measured << " > " << c.bound << '\n';
      }
    }
    return run.report.all_passed() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cerr << app.get_subcommands().front()->help();
    return 2;
  }
}

}  // namespace kgip::cli
