// ocbounds: run grid sweeps and print guaranteed cost bounds.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ocbounds/experiment.hpp"
#include "ocbounds/report.hpp"

namespace {

constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_failure = 3;

// Flags mirror the configuration keys; dashes stand for underscores.
const std::vector<std::pair<std::string, std::string>> run_flags{
    {"grids", "comma separated subdivision counts"},
    {"lambda", "regularization parameter"},
    {"preset", "sine or custom"},
    {"nu", "diffusion coefficient expression"},
    {"nu-lower", "lower bound of nu"},
    {"nu-upper", "upper bound of nu"},
    {"f", "source expression"},
    {"y-d", "target state expression"},
    {"u-d", "target control expression"},
    {"exact-cost", "known optimal cost for custom data"},
    {"ua", "lower control bound expression"},
    {"ub", "upper control bound expression"},
    {"max-outer", "active set iteration limit"},
    {"tol", "relative MINRES residual tolerance"},
    {"max-iter", "MINRES iteration limit"},
    {"fixed-iters", "run exactly N MINRES steps"},
    {"quadrature", "7-point or edge-midpoint"},
    {"ref-factor", "reference mesh refinement for combined norms, 0 to skip"},
    {"out", "output file (default stdout)"},
    {"format", "csv, json or text"},
};

std::string key_of(std::string flag) {
  for (char& c : flag)
    if (c == '-') c = '_';
  return flag;
}

int run(const ocb::RunConfig& config) {
  const auto reports = ocb::run_experiment(config);
  const auto rows = ocb::to_rows(reports);
  if (config.out.empty()) {
    ocb::write_report(rows, config.format, std::cout);
  } else {
    std::ofstream file(config.out);
    if (!file) throw std::runtime_error("cannot open " + config.out + " for writing");
    ocb::write_report(rows, config.format, file);
    if (!file) throw std::runtime_error("failed writing " + config.out);
  }
  const ocb::ProblemSpec spec = ocb::build_problem(config);
  std::optional<double> exact;
  if (spec.exact) exact = spec.exact->cost;
  const auto violations = ocb::guaranteed_violations(reports, exact);
  for (const auto& v : violations) std::cerr << "violated: " << v << '\n';
  return violations.empty() ? EXIT_SUCCESS : exit_violation;
}

int check(double lambda) {
  ocb::RunConfig config;
  config.grids = {4, 8};
  config.lambda = lambda;
  config.ref_factor = 2;
  const auto reports = ocb::run_experiment(config);
  const double exact = ocb::sine_problem_cost(lambda);
  for (const auto& r : reports)
    std::cout << "grid " << r.grid << ": " << ocb::format_number(r.bounds.j_minus) << " <= "
              << ocb::format_number(exact) << " <= " << ocb::format_number(r.bounds.j_plus) << '\n';
  const auto violations = ocb::guaranteed_violations(reports, exact);
  for (const auto& v : violations) std::cerr << "violated: " << v << '\n';
  std::cout << (violations.empty() ? "ok" : "FAILED") << '\n';
  return violations.empty() ? EXIT_SUCCESS : exit_violation;
}

int table(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  ocb::write_report(ocb::read_json(in), format, std::cout);
  return EXIT_SUCCESS;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guaranteed bounds for elliptic optimal control problems"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "solve on a sequence of grids and report bounds");
  std::string config_path;
  bool constrained = false;
  run_cmd->add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
  run_cmd->add_flag("--constrained", constrained, "impose the box constraints ua <= u <= ub");
  std::vector<std::pair<std::string, std::string>> values(run_flags.size());
  std::vector<CLI::Option*> options;
  for (std::size_t i = 0; i < run_flags.size(); ++i) {
    values[i].first = run_flags[i].first;
    options.push_back(run_cmd->add_option("--" + run_flags[i].first, values[i].second, run_flags[i].second));
  }

  auto* check_cmd = app.add_subcommand("check", "self test of the guaranteed inequalities on small meshes");
  double check_lambda = 0.01;
  check_cmd->add_option("--lambda", check_lambda, "regularization parameter");

  auto* table_cmd = app.add_subcommand("table", "print a JSON report as a table");
  std::string table_path, table_format = "text";
  table_cmd->add_option("file", table_path, "JSON report")->required()->check(CLI::ExistingFile);
  table_cmd->add_option("--format", table_format, "text or csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      ocb::RunConfig config;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        config = ocb::parse_config(in);
      }
      if (constrained) config.constrained = true;
      for (std::size_t i = 0; i < options.size(); ++i)
        if (options[i]->count() > 0) ocb::set_config_value(config, key_of(values[i].first), values[i].second);
      config.validate();
      return run(config);
    }
    if (*check_cmd) return check(check_lambda);
    if (*table_cmd) return table(table_path, table_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return EXIT_SUCCESS;
}
