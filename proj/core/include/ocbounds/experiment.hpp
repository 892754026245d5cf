#pragma once

/// \file experiment.hpp
/// \brief Grid sweeps: solve, reconstruct, bound, report.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ocbounds/estimator.hpp"
#include "ocbounds/quadrature.hpp"
#include "ocbounds/reference.hpp"

namespace ocb {

/// Experiment configuration. The text form is one `key = value` per line
/// ('#' starts a comment); keys equal the field names below, and grids is a
/// comma separated list. Expressions use the grammar of Expression.
struct RunConfig {
  std::vector<int> grids{8, 16, 32, 64, 128, 256};
  double lambda = 0.01;
  std::string preset = "sine"; ///< "sine" or "custom"
  // custom problems
  std::string nu = "1";
  double nu_lower = 1.0;
  double nu_upper = 1.0;
  std::string f = "0";
  std::string y_d = "0";
  std::string u_d = "0";
  std::optional<double> exact_cost; ///< enables J based indices for custom data
  // box constraints
  bool constrained = false;
  std::string ua; ///< empty means unbounded below
  std::string ub; ///< empty means unbounded above
  int max_outer = 50;
  // linear solver
  double tol = 1e-10;
  int max_iter = 1000;
  int fixed_iters = 0;
  QuadratureRule quadrature = QuadratureRule::SevenPoint;
  /// Reference refinement for the combined norms; 0 skips them.
  int ref_factor = 4;
  std::string out;
  std::string format = "text"; ///< csv, json or text

  /// Throws std::invalid_argument for nonincreasing or nonpositive grids,
  /// lambda <= 0, or an unknown preset or format.
  void validate() const;
};

/// Applies one key/value pair. Throws std::invalid_argument for unknown keys
/// or malformed values.
void set_config_value(RunConfig& config, const std::string& key, const std::string& value);
RunConfig parse_config(std::istream& in, RunConfig base = {});
std::vector<int> parse_grid_list(const std::string& text);

/// Continuous problem described by the configuration. The sine preset keeps
/// its exact solution only when unconstrained.
ProblemSpec build_problem(const RunConfig& config);

struct GridReport {
  int grid = 0;
  BoundsReport bounds;
  std::optional<CombinedNorms> norms;
  int minres_iterations = 0;
  int active_set_iterations = 0;
  double wall_seconds = 0.0;
};

/// Runs every grid in order. Solver failures throw std::runtime_error with the
/// grid size in the message.
std::vector<GridReport> run_experiment(const RunConfig& config);

/// Descriptions of violated guaranteed inequalities: J- <= J+ and M+ >= 0,
/// J- <= J <= J+ when the exact cost is given, and the combined norm bounds
/// when reference norms were computed.
std::vector<std::string> guaranteed_violations(const std::vector<GridReport>& reports,
                                               std::optional<double> exact_cost = std::nullopt);

} // namespace ocb
