#include "ocbounds/active_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ocb {

ActiveSetMasks ActiveSetMasks::all_inactive(std::size_t num_vertices) {
  ActiveSetMasks m;
  m.state.assign(num_vertices, NodeState::Inactive);
  return m;
}

std::size_t ActiveSetMasks::count(NodeState s) const { return static_cast<std::size_t>(std::count(state.begin(), state.end(), s)); }

Eigen::VectorXd ActiveSetMasks::indicator(NodeState s) const {
  Eigen::VectorXd r(static_cast<Eigen::Index>(state.size()));
  for (std::size_t i = 0; i < state.size(); ++i) r[static_cast<Eigen::Index>(i)] = state[i] == s ? 1.0 : 0.0;
  return r;
}

namespace {

Eigen::VectorXd nodal_values(const Mesh& mesh, const ScalarFunction& g) {
  Eigen::VectorXd r(static_cast<Eigen::Index>(mesh.num_vertices()));
  for (int v = 0; v < r.size(); ++v) r[v] = g(mesh.vertex(v));
  return r;
}

void require_masks(const Mesh& mesh, const ActiveSetMasks& masks) {
  if (masks.size() != mesh.num_vertices()) throw std::invalid_argument("active set masks do not match vertex count");
}

} // namespace

Eigen::VectorXd nodal_lower_bound(const Mesh& mesh, const ProblemSpec& spec) {
  if (!spec.bounds) return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(mesh.num_vertices()),
                                                      -std::numeric_limits<double>::infinity());
  return nodal_values(mesh, spec.bounds->lower);
}

Eigen::VectorXd nodal_upper_bound(const Mesh& mesh, const ProblemSpec& spec) {
  if (!spec.bounds) return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(mesh.num_vertices()),
                                                      std::numeric_limits<double>::infinity());
  return nodal_values(mesh, spec.bounds->upper);
}

ActiveSetMasks update_active_sets(const ActiveSetState& state, const ProblemSpec& spec) {
  const Mesh& mesh = state.u.mesh();
  const Eigen::VectorXd& u = state.u.values();
  if (state.multiplier.size() != u.size()) throw std::invalid_argument("multiplier does not match control");
  const Eigen::VectorXd ua = nodal_lower_bound(mesh, spec);
  const Eigen::VectorXd ub = nodal_upper_bound(mesh, spec);
  ActiveSetMasks m = ActiveSetMasks::all_inactive(mesh.num_vertices());
  for (int v = 0; v < u.size(); ++v) {
    const double s = u[v] + state.multiplier[v];
    if (s < ua[v]) m.state[v] = NodeState::LowerActive;
    else if (s > ub[v]) m.state[v] = NodeState::UpperActive;
  }
  return m;
}

SaddleSystem build_saddle_system_active(const Mesh& mesh, const ProblemSpec& spec, const ActiveSetMasks& masks) {
  if (!(spec.lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  require_masks(mesh, masks);
  const Eigen::VectorXd inactive = masks.indicator(NodeState::Inactive);

  SaddleSystem s;
  s.a = apply_dirichlet(assemble_mass(mesh), mesh);
  s.b = apply_dirichlet(assemble_stiffness(mesh, spec), mesh, 0.0);
  s.b.data *= -1.0;
  s.c = apply_dirichlet(assemble_weighted_mass(mesh, inactive), mesh);
  s.c.data *= -1.0 / spec.lambda;
  s.rhs_top = apply_dirichlet(assemble_load(mesh, spec.y_d), mesh);

  Eigen::VectorXd source = assemble_load(mesh, spec.f) + assemble_weighted_load(mesh, spec.u_d, inactive);
  if (spec.bounds) {
    source += assemble_weighted_load(mesh, spec.bounds->lower, masks.indicator(NodeState::LowerActive));
    source += assemble_weighted_load(mesh, spec.bounds->upper, masks.indicator(NodeState::UpperActive));
  }
  s.rhs_bottom = -apply_dirichlet(source, mesh);
  s.variant = PreconditionerVariant::ActiveSet;
  return s;
}

Eigen::VectorXd control_from_adjoint(const Mesh& mesh, const ProblemSpec& spec, const ActiveSetMasks& masks,
                                     const Eigen::VectorXd& p) {
  require_masks(mesh, masks);
  const Eigen::VectorXd ud = nodal_values(mesh, spec.u_d);
  const Eigen::VectorXd ua = nodal_lower_bound(mesh, spec);
  const Eigen::VectorXd ub = nodal_upper_bound(mesh, spec);
  Eigen::VectorXd u(p.size());
  for (int v = 0; v < p.size(); ++v) {
    switch (masks.state[v]) {
    case NodeState::Inactive: u[v] = ud[v] - p[v] / spec.lambda; break;
    case NodeState::LowerActive: u[v] = ua[v]; break;
    case NodeState::UpperActive: u[v] = ub[v]; break;
    }
  }
  return u;
}

double projection_residual(const Mesh& mesh, const ProblemSpec& spec, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& p) {
  const Eigen::VectorXd ud = nodal_values(mesh, spec.u_d);
  const Eigen::VectorXd ua = nodal_lower_bound(mesh, spec);
  const Eigen::VectorXd ub = nodal_upper_bound(mesh, spec);
  double r = 0.0;
  for (int v = 0; v < u.size(); ++v)
    r = std::max(r, std::abs(u[v] - std::clamp(ud[v] - p[v] / spec.lambda, ua[v], ub[v])));
  return r;
}

namespace {

struct InnerSolve {
  Eigen::VectorXd y, p;
  int iterations;
};

InnerSolve solve_system(const SaddleSystem& system, const ProblemSpec& spec, const MinresOptions& options,
                        int outer) {
  const BlockPreconditioner precond = build_preconditioner(system, spec, system.variant);
  MinresResult r = minres_solve(system, precond, options);
  if (r.status == MinresStatus::Breakdown || r.status == MinresStatus::MaxIterations)
    throw std::runtime_error("MINRES " + to_string(r.status) + " in active set iteration " + std::to_string(outer));
  return {std::move(r.y), std::move(r.p), r.iterations};
}

} // namespace

ConstrainedSolution solve_constrained(const Mesh& mesh, const ProblemSpec& spec, const ConstrainedOptions& options) {
  if (options.max_outer < 1) throw std::invalid_argument("max_outer must be at least 1");
  const Eigen::VectorXd ud = nodal_values(mesh, spec.u_d);

  ConstrainedSolution sol{ScalarField::zero(mesh, true), ScalarField::zero(mesh, true), ScalarField::zero(mesh),
                          {}, ActiveSetMasks::all_inactive(mesh.num_vertices()), 0, 0, false};

  InnerSolve cur = solve_system(build_saddle_system_unconstrained(mesh, spec), spec, options.minres, 0);
  sol.minres_iterations += cur.iterations;
  ActiveSetState state{0, ActiveSetMasks::all_inactive(mesh.num_vertices()), {}, ScalarField::zero(mesh, true),
                       ScalarField::zero(mesh, true), ScalarField::zero(mesh)};

  const auto absorb = [&](const InnerSolve& s) {
    state.y = ScalarField(mesh, s.y, true);
    state.p = ScalarField(mesh, s.p, true);
    Eigen::VectorXd u = control_from_adjoint(mesh, spec, state.masks, s.p);
    state.multiplier = ud - s.p / spec.lambda - u;
    state.u = ScalarField(mesh, std::move(u));
  };
  absorb(cur);
  ActiveSetMasks masks = update_active_sets(state, spec);

  for (int k = 1; k <= options.max_outer; ++k) {
    state.iteration = k;
    state.masks = masks;
    // An all-inactive system is the unconstrained one just solved.
    if (!(k == 1 && masks.count(NodeState::Inactive) == masks.size())) {
      cur = solve_system(build_saddle_system_active(mesh, spec, masks), spec, options.minres, k);
      sol.minres_iterations += cur.iterations;
    }
    absorb(cur);
    ActiveSetMasks next = update_active_sets(state, spec);
    sol.iterations = k;
    if (next == masks) {
      sol.converged = true;
      break;
    }
    masks = std::move(next);
  }

  sol.y = state.y;
  sol.p = state.p;
  sol.u = state.u;
  sol.multiplier = state.multiplier;
  sol.masks = state.masks;
  return sol;
}

} // namespace ocb
