#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "kgip/cli.hpp"
#include "kgip/models/kg_lattice.hpp"
#include "kgip/models/sho.hpp"
#include "kgip/models/wdw.hpp"
#include "kgip/random.hpp"

namespace kgip::cli {

namespace {

double relative_gap(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

ModelRun run_sho(const RunConfig& cfg) {
  ModelRun run;
  run.report.config = cfg.to_json();
  const ShoModel model = ShoModel::fixed(cfg.omega);
  const OperatorSource source = model.source();
  const InnerProductSpec spec = InnerProductSpec::from_scalars(1, cfg.lplus, cfg.lminus);
  const std::size_t stride = std::max<std::size_t>(1, cfg.steps / 1000);

  const FieldState start = sho_basic_mode(+1, cfg.omega, 0.0).field();
  const FieldTrajectory traj = evolve_field(source, start, 0.0, cfg.t_final, cfg.steps, {.record_stride = stride});
  const DriftTable table =
      drift_report(traj, traj, source, spec, {Monitor::SolutionInner, Monitor::KgInner}, cfg.lambda);
  const auto& sol = table.get(Monitor::SolutionInner);
  const auto& kg = table.get(Monitor::KgInner);

  std::ostringstream csv;
  csv << std::setprecision(17);
  csv << "t,x_re,x_im,x_dot_re,x_dot_im,solution_inner,kg_inner,drift_solution_inner,drift_kg_inner\n";
  double exact_gap = 0.0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double t = traj.times[k];
    const ShoSample x = ShoSample::from_field(traj.states[k]);
    exact_gap = std::max(exact_gap, std::abs(x.x - sho_basic_mode(+1, cfg.omega, t).x));
    csv << t << ',' << x.x.real() << ',' << x.x.imag() << ',' << x.x_dot.real() << ',' << x.x_dot.imag() << ','
        << sol.values[k].real() << ',' << kg.values[k].real() << ',' << sol.relative_drift[k] << ','
        << kg.relative_drift[k] << '\n';
  }
  run.csv = csv.str();

  run.report.add("sho_solution_inner_drift", "conserved positive product", sol.max_drift, 1e-6);
  run.report.add("sho_kg_inner_drift", "conserved Klein-Gordon product", kg.max_drift, 1e-6);
  run.report.add("sho_trajectory_error", "basic mode exp(-i omega t)", exact_gap, 1e-6);

  const Complex expected = cfg.lplus + cfg.lminus;
  run.report.add("sho_basic_mode_norm", "((zeta+, zeta+)) = A+", relative_gap(sol.values.front(), expected), cfg.tol);
  run.report.data["samples"] = traj.size();
  run.report.data["record_stride"] = stride;
  return run;
}

ModelRun run_kg(const RunConfig& cfg) {
  ModelRun run;
  run.report.config = cfg.to_json();
  KleinGordonLattice lattice;
  lattice.sites = cfg.sites;
  lattice.mu = cfg.mu;
  const KgSpectrum spectrum = kg_build(lattice);
  const Index n = spectrum.spectral.size();
  SplitMix64 rng(cfg.seed);

  double woodard = 0.0;
  double closed = 0.0;
  double family = 0.0;
  double min_norm = 1e300;
  const double a_plus = 1.0 + cfg.a;
  const double a_minus = 1.0 - cfg.a;
  const InnerProductSpec rel = kg_relativistic_spec(spectrum, a_plus, a_minus);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldState f1 = random_field(rng, n);
    const FieldState f2 = random_field(rng, n);
    const Complex ri0 = kg_inner_ri(f1, f2, spectrum, 0.0);
    woodard = std::max(woodard, relative_gap(woodard_inner(f1, f2, spectrum), ri0));
    closed = std::max(closed, relative_gap(woodard_inner_closed(f1, f2, spectrum), ri0));
    const Complex ri = kg_inner_ri(f1, f2, spectrum, cfg.a);
    family = std::max(family, relative_gap(solution_inner(f1, f2, spectrum.spectral, rel), ri));
    min_norm = std::min(min_norm, kg_inner_ri(f1, f1, spectrum, cfg.a).real());
  }
  run.report.add("woodard_equality", "a = 0 member equals the Woodard product", woodard, cfg.tol);
  run.report.add("woodard_closed_form", "Woodard product in closed form", closed, cfg.tol);
  run.report.add("family_equivalence", "relativistic family through mode weights", family, cfg.tol);
  run.report.add("family_positivity", "positive norms across the family", -min_norm, 0.0);

  // Basic-mode Gram matrix over a few modes of both energy signs.
  const Index probe = std::min<Index>(n, 4);
  double off_diag = 0.0;
  double diag = 0.0;
  for (Index m1 = 0; m1 < probe; ++m1) {
    for (int e1 : {+1, -1}) {
      const FieldState b1 = kg_basic_mode(spectrum, e1, m1, 0.3);
      for (Index m2 = 0; m2 < probe; ++m2) {
        for (int e2 : {+1, -1}) {
          const Complex value = kg_inner_ri(b1, kg_basic_mode(spectrum, e2, m2, 0.3), spectrum, cfg.a);
          if (m1 == m2 && e1 == e2) {
            const double expected = (e1 > 0 ? a_plus : a_minus) * spectrum.omega(m1) / spectrum.mu;
            diag = std::max(diag, relative_gap(value, expected));
          } else {
            off_diag = std::max(off_diag, std::abs(value));
          }
        }
      }
    }
  }
  run.report.add("basic_mode_diagonal", "basic modes are orthogonal", off_diag, cfg.tol);
  run.report.add("basic_mode_norms", "diagonal entries alpha_eps |N|^2", diag, cfg.tol);

  // Positive-energy packet in the lowest modes; the gap scales with (k_max / mu)^2.
  ComplexVector c1 = ComplexVector::Zero(n);
  ComplexVector c2 = ComplexVector::Zero(n);
  for (Index m = 0; m < std::min<Index>(n, 3); ++m) {
    c1(m) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    c2(m) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }
  const NonRelReport limit = kg_nonrel_limit_check(kg_positive_energy_solution(spectrum, c1, 0.0),
                                                   kg_positive_energy_solution(spectrum, c2, 0.0), spectrum, a_plus,
                                                   a_minus);
  const double ratio = limit.k_max / spectrum.mu;
  run.report.data["nonrelativistic_limit"] = {{"lhs", complex_json(limit.lhs)},
                                              {"rhs", complex_json(limit.rhs)},
                                              {"relative_gap", limit.relative_gap},
                                              {"k_max", limit.k_max},
                                              {"k_max_over_mu", ratio}};

  Json table = Json::array();
  for (Index m = 0; m < n; ++m) {
    const auto i = static_cast<std::size_t>(m);
    table.push_back({{"wave_index", spectrum.wave_index[i]},
                     {"k", spectrum.k_norm[i]},
                     {"omega_sq", spectrum.spectral.eigenvalues(m)},
                     {"omega", spectrum.omega(m)}});
  }
  run.report.data["modes"] = std::move(table);
  run.report.data["family_parameter"] = kg_family_parameter(a_plus, a_minus);
  return run;
}

ModelRun run_wdw(const RunConfig& cfg) {
  ModelRun run;
  run.report.config = cfg.to_json();
  WdwFrwModel model;
  model.mass = cfg.mass;
  model.kappa = cfg.kappa;
  model.alpha0 = cfg.alpha0;
  model.modes = cfg.modes;

  const RealVector values = wdw_eigenvalues(model, model.alpha0);
  const WdwPositivity cls = wdw_positivity(model, model.alpha0);
  const double scale_factor = std::exp(model.alpha0);
  const bool expect_negative = model.kappa == 1 && scale_factor > model.mass * (1.0 + 1e-12);
  const bool expect_zero = model.kappa == 1 && std::abs(scale_factor - model.mass) <= 1e-12 * model.mass;
  const WdwPositivity expected = expect_zero       ? WdwPositivity::HasZeroMode
                                 : expect_negative ? WdwPositivity::HasNegative
                                                   : WdwPositivity::AllPositive;
  run.report.add("positivity_classification", "sign of the lowest frequency", cls == expected ? 0.0 : 1.0, 0.0);

  const WdwCrossCheck coarse = wdw_numeric_crosscheck(model, model.alpha0, model.grid);
  const WdwCrossCheck fine = wdw_numeric_crosscheck(model, model.alpha0, 2 * model.grid);
  const double order = coarse.max_relative_error / std::max(fine.max_relative_error, 1e-300);
  run.report.add("grid_resolves_basis", "top mode within 5% on the grid", coarse.relative_error(model.modes - 1), 0.05);
  run.report.add("grid_convergence_order", "second-order error decay per doubling", std::abs(order - 4.0), 0.5);

  if (cls == WdwPositivity::AllPositive) {
    SplitMix64 rng(cfg.seed);
    const FieldState f = random_field(rng, model.modes);
    run.report.add("invariant_norm_positive", "positive product at alpha0", -wdw_invariant_inner(f, f, model).real(),
                   0.0);
  }

  run.report.data["classification"] = to_string(cls);
  run.report.data["scale_factor"] = scale_factor;
  run.report.data["omega_sq"] = std::vector<double>(values.data(), values.data() + values.size());
  run.report.data["grid"] = model.grid;
  run.report.data["grid_relative_error"] =
      std::vector<double>(coarse.relative_error.data(), coarse.relative_error.data() + coarse.relative_error.size());
  run.report.data["fine_grid_relative_error"] =
      std::vector<double>(fine.relative_error.data(), fine.relative_error.data() + fine.relative_error.size());
  return run;
}

}  // namespace

ModelRun run_model(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.subcommand == "sho") return run_sho(cfg);
  if (cfg.subcommand == "kg") return run_kg(cfg);
  if (cfg.subcommand == "wdw") return run_wdw(cfg);
  throw Error(ErrorKind::InvalidArgument, "unknown model '" + cfg.subcommand + "'");
}

}  // namespace kgip::cli
