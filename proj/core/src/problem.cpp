#include "ocbounds/problem.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ocbounds/quadrature.hpp"

namespace ocb {

using std::numbers::pi;

ScalarFunction constant_function(double value) {
  return [value](const Point&) { return value; };
}

void ProblemSpec::validate(const QuadratureSet& quad) const {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (!(c_f > 0.0)) throw std::invalid_argument("Friedrichs constant must be positive");
  if (!(nu_lower > 0.0) || nu_lower > nu_upper)
    throw std::invalid_argument("require 0 < nu_lower <= nu_upper");
  if (!nu || !f || !y_d || !u_d) throw std::invalid_argument("problem data function missing");
  if (bounds && (!bounds->lower || !bounds->upper))
    throw std::invalid_argument("control bound function missing");

  for (const Point& x : quad.points()) {
    const double v = nu(x);
    if (v < nu_lower || v > nu_upper) {
      std::ostringstream msg;
      msg << "nu(" << x.x() << ", " << x.y() << ") = " << v << " outside [" << nu_lower << ", "
          << nu_upper << "]";
      throw std::invalid_argument(msg.str());
    }
    if (bounds && bounds->lower(x) > bounds->upper(x)) {
      std::ostringstream msg;
      msg << "u_a > u_b at (" << x.x() << ", " << x.y() << ")";
      throw std::invalid_argument(msg.str());
    }
  }
}

double sine_problem_cost(double lambda) {
  // ||sin(pi x1) sin(pi x2)||^2 = 1/4
  const double pi4 = std::pow(pi, 4);
  const double state_misfit = 4.0 * lambda * pi4;
  const double control = 2.0 * pi * pi;
  return 0.5 * state_misfit * state_misfit * 0.25 + 0.5 * lambda * control * control * 0.25;
}

ProblemSpec sine_problem(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");

  const auto s = [](const Point& x) { return std::sin(pi * x.x()) * std::sin(pi * x.y()); };
  const auto grad_s = [](const Point& x) {
    return Vec2(pi * std::cos(pi * x.x()) * std::sin(pi * x.y()),
                pi * std::sin(pi * x.x()) * std::cos(pi * x.y()));
  };
  const double target_scale = 1.0 + 4.0 * lambda * std::pow(pi, 4);
  const double control_scale = 2.0 * pi * pi;
  const double adjoint_scale = -lambda * control_scale;

  ProblemSpec spec;
  spec.nu = constant_function(1.0);
  spec.nu_lower = spec.nu_upper = 1.0;
  spec.lambda = lambda;
  spec.f = constant_function(0.0);
  spec.u_d = constant_function(0.0);
  spec.y_d = [s, target_scale](const Point& x) { return target_scale * s(x); };

  ExactSolution exact;
  exact.state = s;
  exact.state_gradient = grad_s;
  exact.adjoint = [s, adjoint_scale](const Point& x) { return adjoint_scale * s(x); };
  exact.adjoint_gradient = [grad_s, adjoint_scale](const Point& x) -> Vec2 {
    return adjoint_scale * grad_s(x);
  };
  exact.control = [s, control_scale](const Point& x) { return control_scale * s(x); };
  exact.cost = sine_problem_cost(lambda);
  spec.exact = std::move(exact);
  return spec;
}

} // namespace ocb
