#pragma once

/// \file problem.hpp
/// \brief Data of the distributed elliptic optimal control problem
///
///   minimise  1/2 ||y - y_d||^2 + lambda/2 ||v - u_d||^2
///   subject to  -div(nu grad y) = f + v in Omega,  y = 0 on the boundary,
///               u_a <= v <= u_b  (optional box constraints).

#include <functional>
#include <numbers>
#include <optional>

#include "ocbounds/mesh.hpp"

namespace ocb {

class QuadratureSet;

using ScalarFunction = std::function<double(const Point&)>;
using VectorFunction = std::function<Vec2(const Point&)>;

/// Friedrichs constant of the unit square, ||w|| <= C_F ||grad w||.
inline constexpr double friedrichs_unit_square = 1.0 / (std::numbers::sqrt2 * std::numbers::pi);

struct ControlBounds {
  ScalarFunction lower;
  ScalarFunction upper;
};

/// Known optimal solution, used to report efficiency indices.
struct ExactSolution {
  ScalarFunction state;
  VectorFunction state_gradient;
  ScalarFunction adjoint;
  VectorFunction adjoint_gradient;
  ScalarFunction control;
  double cost = 0.0; ///< J(y(u), u)
};

struct ProblemSpec {
  ScalarFunction nu;
  double nu_lower = 1.0;
  double nu_upper = 1.0;
  double lambda = 0.01;
  ScalarFunction f;
  ScalarFunction y_d;
  ScalarFunction u_d;
  std::optional<ControlBounds> bounds;
  double c_f = friedrichs_unit_square;
  std::optional<ExactSolution> exact;

  bool constrained() const noexcept { return bounds.has_value(); }

  /// Checks lambda > 0, c_f > 0, nu_lower <= nu <= nu_upper and u_a <= u_b
  /// at every quadrature point. Throws std::invalid_argument.
  void validate(const QuadratureSet& quad) const;
};

/// Smooth benchmark on the unit square with y = sin(pi x1) sin(pi x2),
/// u = 2 pi^2 y, p = -lambda u, f = u_d = 0, nu = 1 and
/// y_d = (1 + 4 lambda pi^4) y. With lambda = 0.01, J(y(u), u) = 2.385.
ProblemSpec sine_problem(double lambda = 0.01);

/// J(y(u), u) for sine_problem(lambda).
double sine_problem_cost(double lambda);

ScalarFunction constant_function(double value);

} // namespace ocb
