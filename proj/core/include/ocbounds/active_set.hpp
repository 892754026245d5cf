#pragma once

/// \file active_set.hpp
/// \brief Primal-dual active set method for box constrained controls.
///
/// Active sets live on mesh nodes. Set integrals such as int_I phi_i phi_j
/// are evaluated with the P1 interpolant of the nodal set indicator as weight,
/// so a fully inactive mesh reproduces the unconstrained system exactly and
/// the discrete control is
///
///   u_h = chi_I (u_d - p_h / lambda) + chi_a u_a + chi_b u_b,
///
/// with chi_* the interpolated indicators; its nodal values are the clipped
/// values clip(u_d - p/lambda, u_a, u_b) once the sets have settled.

#include <cstdint>
#include <vector>

#include "ocbounds/saddle_solver.hpp"

namespace ocb {

enum class NodeState : std::uint8_t { Inactive, LowerActive, UpperActive };

struct ActiveSetMasks {
  std::vector<NodeState> state;

  static ActiveSetMasks all_inactive(std::size_t num_vertices);

  std::size_t size() const noexcept { return state.size(); }
  std::size_t count(NodeState s) const;
  /// 1.0 where the node is in set s, 0.0 elsewhere.
  Eigen::VectorXd indicator(NodeState s) const;

  bool operator==(const ActiveSetMasks&) const = default;
};

struct ActiveSetState {
  int iteration = 0;
  ActiveSetMasks masks;
  Eigen::VectorXd multiplier; ///< nodal mu = -p/lambda + u_d - u
  ScalarField y;
  ScalarField p;
  ScalarField u;
};

/// Nodal bounds; +-infinity when the problem is unconstrained.
Eigen::VectorXd nodal_lower_bound(const Mesh& mesh, const ProblemSpec& spec);
Eigen::VectorXd nodal_upper_bound(const Mesh& mesh, const ProblemSpec& spec);

/// Lower-active where u + mu < u_a, upper-active where u + mu > u_b, inactive
/// otherwise (ties are inactive).
ActiveSetMasks update_active_sets(const ActiveSetState& state, const ProblemSpec& spec);

SaddleSystem build_saddle_system_active(const Mesh& mesh, const ProblemSpec& spec, const ActiveSetMasks& masks);

/// Nodal control implied by (p, masks).
Eigen::VectorXd control_from_adjoint(const Mesh& mesh, const ProblemSpec& spec, const ActiveSetMasks& masks,
                                     const Eigen::VectorXd& p);

struct ConstrainedOptions {
  MinresOptions minres;
  int max_outer = 50;
};

struct ConstrainedSolution {
  ScalarField y;
  ScalarField p;
  ScalarField u;
  Eigen::VectorXd multiplier;
  ActiveSetMasks masks;
  int iterations = 0; ///< active set determinations
  int minres_iterations = 0; ///< summed over all inner solves
  bool converged = false;
};

/// Warm start from the unconstrained solve, then iterate until two
/// consecutive active sets coincide. Non-termination within max_outer is
/// reported through `converged`; a failing inner solve throws std::runtime_error.
ConstrainedSolution solve_constrained(const Mesh& mesh, const ProblemSpec& spec,
                                      const ConstrainedOptions& options = {});

/// max_i |u_i - clip(u_d - p_i/lambda, u_a, u_b)| over the nodes.
double projection_residual(const Mesh& mesh, const ProblemSpec& spec, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& p);

} // namespace ocb
