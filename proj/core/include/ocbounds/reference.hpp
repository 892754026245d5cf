#pragma once

/// \file reference.hpp
/// \brief Reference solves on refined meshes, used to measure true errors.
///
/// A reference mesh has ref_factor times the subdivisions of the evaluation
/// mesh, so every fine triangle lies inside one coarse triangle and coarse P1
/// data is evaluated exactly. Integrals are streamed element by element with
/// the degree 5 rule.

#include <memory>

#include "ocbounds/fields.hpp"

namespace ocb {

/// Nodal Dirichlet solution on an owned reference mesh.
struct ReferenceSolution {
  std::unique_ptr<const Mesh> mesh;
  Eigen::VectorXd values;

  ScalarField field() const { return ScalarField(*mesh, values, true); }
};

/// p_eta on a mesh refined by ref_factor: -div(nu grad p) = eta - y_d, p = 0
/// on the boundary.
ReferenceSolution reference_adjoint(const ScalarField& eta, const ProblemSpec& spec, int ref_factor = 4);

struct CombinedNorms {
  double state_l2_sq = 0.0;   ///< |y(u) - y(v_zeta)|^2
  double state_grad_sq = 0.0; ///< |grad(y(u) - y(v_zeta))|^2
  double control_l2_sq = 0.0; ///< |u - v_zeta|^2
  double norm_sq = 0.0;       ///< 1/2 state_l2_sq + lambda/2 control_l2_sq
  double norm1_sq = 0.0;      ///< 1/2 state_l2_sq + 2 lambda nu^2 / C^2 state_grad_sq
};

/// Squared combined norms of u - v_zeta for the exact control u of
/// spec.exact and v_zeta = clip(u_d - zeta/lambda, u_a, u_b). The state
/// difference y(u - v_zeta) is computed by one Poisson solve on the
/// reference mesh. Throws std::invalid_argument if spec.exact is missing or
/// ref_factor < 1.
CombinedNorms combined_norms(const ScalarField& zeta, const ProblemSpec& spec, int ref_factor = 4);

} // namespace ocb
