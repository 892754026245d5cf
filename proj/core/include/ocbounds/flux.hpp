#pragma once

/// \file flux.hpp
/// \brief Lowest order Raviart-Thomas fields and flux reconstruction from P1
/// gradients by normal flux averaging.
///
/// The degree of freedom of edge e is the normal component tau . n_e with
/// respect to the edge's fixed normal (see Mesh). On a triangle T with local
/// edge k opposite vertex P_k the field is
///
///   tau(x) = sum_k d_{e_k} s_k |e_k| / (2|T|) (x - P_k),
///
/// where s_k = +1 if n_{e_k} points out of T and -1 otherwise.

#include <Eigen/Core>

#include "ocbounds/fields.hpp"

namespace ocb {

class FluxField {
public:
  /// Throws std::invalid_argument if the length does not match the edge count.
  FluxField(const Mesh& mesh, Eigen::VectorXd edge_fluxes);

  static FluxField zero(const Mesh& mesh);

  const Mesh& mesh() const noexcept { return *mesh_; }
  const Eigen::VectorXd& edge_fluxes() const noexcept { return fluxes_; }

  /// Value at a point given by barycentric coordinates on `element`.
  Vec2 value_at(int element, const Eigen::Vector3d& barycentric) const;
  double divergence(int element) const;

private:
  const Mesh* mesh_;
  Eigen::VectorXd fluxes_;
};

/// Interior edges get the mean of nu grad(field) . n_e from both neighbours,
/// boundary edges the value of their single triangle. nu is evaluated at the
/// triangle centroids, as in the stiffness matrix.
FluxField reconstruct_flux(const ScalarField& field, const ProblemSpec& spec);

/// Elementwise constant divergence: outward edge fluxes times edge lengths,
/// summed and divided by the area.
Eigen::VectorXd flux_divergence(const FluxField& flux);

/// Throws std::invalid_argument if x lies outside the element.
Vec2 flux_eval(const FluxField& flux, int element, const Point& x);

/// RT0 interpolant: edge dofs are the mean normal components of g along the
/// edges (three point Gauss rule).
FluxField interpolate_flux(const Mesh& mesh, const VectorFunction& g);

QuadratureVectorField sample(const FluxField& flux, const QuadratureSet& quad);
QuadratureField sample_divergence(const FluxField& flux, const QuadratureSet& quad);

} // namespace ocb
