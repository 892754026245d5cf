#include "ocbounds/experiment.hpp"

#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ocbounds/active_set.hpp"
#include "ocbounds/expression.hpp"

namespace ocb {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double d = 0.0;
  try {
    d = std::stod(value, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != value.size()) throw std::invalid_argument("bad number for " + key + ": '" + value + "'");
  return d;
}

int to_int(const std::string& key, const std::string& value) {
  const double d = to_double(key, value);
  if (d != std::floor(d) || std::abs(d) > std::numeric_limits<int>::max())
    throw std::invalid_argument("bad integer for " + key + ": '" + value + "'");
  return static_cast<int>(d);
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  throw std::invalid_argument("bad boolean for " + key + ": '" + value + "'");
}

} // namespace

void RunConfig::validate() const {
  for (std::size_t i = 0; i < grids.size(); ++i) {
    if (grids[i] < 1) throw std::invalid_argument("grid sizes must be positive");
    if (i > 0 && grids[i] <= grids[i - 1]) throw std::invalid_argument("grid sizes must be increasing");
  }
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (preset != "sine" && preset != "custom") throw std::invalid_argument("unknown preset '" + preset + "'");
  if (format != "csv" && format != "json" && format != "text")
    throw std::invalid_argument("unknown format '" + format + "'");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");
  if (fixed_iters < 0) throw std::invalid_argument("fixed_iters must be nonnegative");
  if (max_outer < 1) throw std::invalid_argument("max_outer must be positive");
  if (ref_factor < 0) throw std::invalid_argument("ref_factor must be nonnegative");
  if (!(nu_lower > 0.0) || nu_upper < nu_lower) throw std::invalid_argument("need 0 < nu_lower <= nu_upper");
}

std::vector<int> parse_grid_list(const std::string& text) {
  std::vector<int> grids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    grids.push_back(to_int("grids", item));
  }
  return grids;
}

void set_config_value(RunConfig& c, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "grids") c.grids = parse_grid_list(value);
  else if (key == "lambda") c.lambda = to_double(key, value);
  else if (key == "preset") c.preset = value;
  else if (key == "nu") c.nu = value;
  else if (key == "nu_lower") c.nu_lower = to_double(key, value);
  else if (key == "nu_upper") c.nu_upper = to_double(key, value);
  else if (key == "f") c.f = value;
  else if (key == "y_d") c.y_d = value;
  else if (key == "u_d") c.u_d = value;
  else if (key == "exact_cost") c.exact_cost = to_double(key, value);
  else if (key == "constrained") c.constrained = to_bool(key, value);
  else if (key == "ua") c.ua = value;
  else if (key == "ub") c.ub = value;
  else if (key == "max_outer") c.max_outer = to_int(key, value);
  else if (key == "tol") c.tol = to_double(key, value);
  else if (key == "max_iter") c.max_iter = to_int(key, value);
  else if (key == "fixed_iters") c.fixed_iters = to_int(key, value);
  else if (key == "quadrature") c.quadrature = parse_quadrature_rule(value);
  else if (key == "ref_factor") c.ref_factor = to_int(key, value);
  else if (key == "out") c.out = value;
  else if (key == "format") c.format = value;
  else throw std::invalid_argument("unknown configuration key '" + key + "'");
}

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
    set_config_value(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

ProblemSpec build_problem(const RunConfig& config) {
  ProblemSpec spec;
  if (config.preset == "sine") {
    spec = sine_problem(config.lambda);
  } else if (config.preset == "custom") {
    spec.lambda = config.lambda;
    spec.nu = parse_function(config.nu);
    spec.nu_lower = config.nu_lower;
    spec.nu_upper = config.nu_upper;
    spec.f = parse_function(config.f);
    spec.y_d = parse_function(config.y_d);
    spec.u_d = parse_function(config.u_d);
    if (config.exact_cost) {
      ExactSolution e;
      e.cost = *config.exact_cost;
      spec.exact = std::move(e);
    }
  } else {
    throw std::invalid_argument("unknown preset '" + config.preset + "'");
  }
  if (config.constrained) {
    const double inf = std::numeric_limits<double>::infinity();
    spec.bounds = ControlBounds{config.ua.empty() ? constant_function(-inf) : parse_function(config.ua),
                                config.ub.empty() ? constant_function(inf) : parse_function(config.ub)};
    if (config.preset == "sine") spec.exact.reset();
  }
  return spec;
}

namespace {

GridReport run_grid(const RunConfig& config, const ProblemSpec& spec, int n) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const Mesh mesh(n);
  const QuadratureSet quad(mesh, config.quadrature);
  spec.validate(quad);

  const MinresOptions minres{config.tol, config.max_iter, config.fixed_iters};
  GridReport report;
  report.grid = n;
  std::optional<ScalarField> eta, zeta;
  if (spec.constrained()) {
    const ConstrainedSolution sol = solve_constrained(mesh, spec, {minres, config.max_outer});
    if (!sol.converged)
      throw std::runtime_error("grid " + std::to_string(n) + ": active set iteration did not settle within " +
                               std::to_string(config.max_outer) + " steps");
    eta = sol.y;
    zeta = sol.p;
    report.minres_iterations = sol.minres_iterations;
    report.active_set_iterations = sol.iterations;
  } else {
    const SaddleSystem system = build_saddle_system_unconstrained(mesh, spec);
    const BlockPreconditioner precond = build_preconditioner(system, spec, PreconditionerVariant::Unconstrained);
    const MinresResult r = minres_solve(system, precond, minres);
    if (r.status == MinresStatus::Breakdown || r.status == MinresStatus::MaxIterations)
      throw std::runtime_error("grid " + std::to_string(n) + ": MINRES " + to_string(r.status));
    eta = ScalarField(mesh, r.y, true);
    zeta = ScalarField(mesh, r.p, true);
    report.minres_iterations = r.iterations;
  }

  const EstimatorInput in =
      make_input(*eta, *zeta, reconstruct_flux(*eta, spec), reconstruct_flux(*zeta, spec), quad);
  report.bounds = evaluate_bounds(in, sample_problem(spec, quad), spec);
  report.wall_seconds = std::chrono::duration<double>(clock::now() - start).count();

  if (config.ref_factor > 0 && spec.exact && spec.exact->control) {
    report.norms = combined_norms(*zeta, spec, config.ref_factor);
    if (report.norms->norm1_sq > 0.0) report.bounds.i_m1 = std::sqrt(report.bounds.m_plus_1 / report.norms->norm1_sq);
  }
  return report;
}

} // namespace

std::vector<GridReport> run_experiment(const RunConfig& config) {
  config.validate();
  const ProblemSpec spec = build_problem(config);
  std::vector<GridReport> reports;
  reports.reserve(config.grids.size());
  for (int n : config.grids) reports.push_back(run_grid(config, spec, n));
  return reports;
}

std::vector<std::string> guaranteed_violations(const std::vector<GridReport>& reports,
                                               std::optional<double> exact_cost) {
  std::vector<std::string> v;
  for (const auto& r : reports) {
    const std::string g = "grid " + std::to_string(r.grid) + ": ";
    if (!(r.bounds.j_minus <= r.bounds.j_plus)) v.push_back(g + "minorant exceeds majorant");
    if (!(r.bounds.m_plus >= 0.0)) v.push_back(g + "negative error majorant");
    if (exact_cost && !(r.bounds.j_minus <= *exact_cost && *exact_cost <= r.bounds.j_plus))
      v.push_back(g + "exact cost outside [J-, J+]");
    if (r.norms) {
      if (!(r.norms->norm_sq <= r.bounds.m_plus)) v.push_back(g + "combined norm exceeds its majorant");
      if (!(r.norms->norm1_sq <= r.bounds.m_plus_1)) v.push_back(g + "weighted H1 norm exceeds its majorant");
    }
  }
  return v;
}

} // namespace ocb
