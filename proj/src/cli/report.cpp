#include <algorithm>
#include <cmath>

#include "kgip/cli.hpp"

namespace kgip::cli {

void RunConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); };
  if (dim < 1) fail("--dim must be at least 1");
  if (modes < 1) fail("--modes must be at least 1");
  if (sites < 1) fail("--sites must be at least 1");
  if (steps < 1) fail("--steps must be at least 1");
  if (!(tol > 0.0)) fail("--tol must be positive");
  if (!(omega > 0.0)) fail("--omega must be positive");
  if (!(mu > 0.0)) fail("--mu must be positive");
  if (!(mass > 0.0)) fail("--mass must be positive");
  if (kappa < -1 || kappa > 1) fail("--kappa must be -1, 0 or 1");
  if (!(std::abs(a) < 1.0)) fail("--a must lie in (-1, 1)");
  if (!(lplus - std::abs(lminus) > 0.0)) fail("--lplus must exceed |--lminus|");
  if (lambda == 0.0 || !std::isfinite(lambda)) fail("--lambda must be finite and nonzero");
  if (!(t_final > 0.0)) fail("--t-final must be positive");
  if (format != "json" && format != "csv") fail("--format must be json or csv");
  if (format == "csv" && subcommand != "sho") fail("csv output is only produced by the sho subcommand");
}

Json RunConfig::to_json() const {
  return Json{{"subcommand", subcommand}, {"seed", seed},       {"dim", dim},         {"modes", modes},
              {"sites", sites},           {"tol", tol},         {"omega", omega},     {"mu", mu},
              {"mass", mass},             {"kappa", kappa},     {"alpha0", alpha0},   {"a", a},
              {"lplus", lplus},           {"lminus", lminus},   {"lambda", lambda},   {"t_final", t_final},
              {"steps", steps},           {"format", format}};
}

void Report::add(std::string name, std::string anchor, double measured, double bound) {
  checks.push_back({std::move(name), std::move(anchor), measured, bound, measured <= bound});
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

Json Report::to_json() const {
  Json out;
  out["config"] = config;
  Json list = Json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name},
                    {"paper_anchor", c.paper_anchor},
                    {"measured", c.measured},
                    {"bound", c.bound},
                    {"pass", c.pass}});
  }
  out["checks"] = std::move(list);
  out["summary"] = {{"total", checks.size()}, {"passed", passed()}};
  if (!data.empty()) out["data"] = data;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kgip::cli
