#pragma once

/// \file fields.hpp
/// \brief P1 finite element fields and values sampled at quadrature points.
///
/// Every integral in the library is a weighted sum over a QuadratureSet. A
/// QuadratureField holds one value per quadrature point, so norms and inner
/// products of arbitrary combinations of P1 fields, Raviart-Thomas fields,
/// elementwise constants, analytic data and pointwise projections are
/// evaluated in one place. Fields tied to different quadrature sets never mix.

#include <Eigen/Core>

#include "ocbounds/problem.hpp"
#include "ocbounds/quadrature.hpp"

namespace ocb {

/// Continuous piecewise linear function given by its nodal values.
class ScalarField {
public:
  /// Throws std::invalid_argument if the length does not match the vertex
  /// count, or if a Dirichlet field has nonzero boundary values.
  ScalarField(const Mesh& mesh, Eigen::VectorXd values, bool dirichlet = false);

  static ScalarField zero(const Mesh& mesh, bool dirichlet = false);
  /// Nodal interpolant; boundary values are set to zero when dirichlet is true.
  static ScalarField interpolate(const Mesh& mesh, const ScalarFunction& g, bool dirichlet = false);

  const Mesh& mesh() const noexcept { return *mesh_; }
  const Eigen::VectorXd& values() const noexcept { return values_; }
  bool dirichlet() const noexcept { return dirichlet_; }

  double value(int element, const Point& x) const;
  double value_at(int element, const Eigen::Vector3d& barycentric) const;
  Vec2 gradient(int element) const;

private:
  const Mesh* mesh_;
  Eigen::VectorXd values_;
  bool dirichlet_;
};

/// Scalar values at the points of one QuadratureSet.
class QuadratureField {
public:
  QuadratureField(const QuadratureSet& quad, Eigen::ArrayXd values);
  QuadratureField(const QuadratureSet& quad, double constant);

  const QuadratureSet& quadrature() const noexcept { return *quad_; }
  const Eigen::ArrayXd& values() const noexcept { return values_; }
  Eigen::ArrayXd& values() noexcept { return values_; }

  QuadratureField& operator+=(const QuadratureField& other);
  QuadratureField& operator-=(const QuadratureField& other);
  QuadratureField& operator*=(double s);

private:
  const QuadratureSet* quad_;
  Eigen::ArrayXd values_;
};

/// Two-component vector values (column q holds point q).
class QuadratureVectorField {
public:
  QuadratureVectorField(const QuadratureSet& quad, Eigen::Array2Xd values);

  const QuadratureSet& quadrature() const noexcept { return *quad_; }
  const Eigen::Array2Xd& values() const noexcept { return values_; }
  Eigen::Array2Xd& values() noexcept { return values_; }

  QuadratureVectorField& operator+=(const QuadratureVectorField& other);
  QuadratureVectorField& operator-=(const QuadratureVectorField& other);
  QuadratureVectorField& operator*=(double s);

private:
  const QuadratureSet* quad_;
  Eigen::Array2Xd values_;
};

QuadratureField operator+(QuadratureField a, const QuadratureField& b);
QuadratureField operator-(QuadratureField a, const QuadratureField& b);
QuadratureField operator*(double s, QuadratureField a);
/// Pointwise product.
QuadratureField operator*(const QuadratureField& a, const QuadratureField& b);
QuadratureVectorField operator+(QuadratureVectorField a, const QuadratureVectorField& b);
QuadratureVectorField operator-(QuadratureVectorField a, const QuadratureVectorField& b);
QuadratureVectorField operator*(double s, QuadratureVectorField a);
/// Scalar field times vector field, pointwise.
QuadratureVectorField operator*(const QuadratureField& a, const QuadratureVectorField& b);

/// Throws std::invalid_argument when field and quadrature live on different meshes.
QuadratureField sample(const ScalarField& field, const QuadratureSet& quad);
QuadratureVectorField sample_gradient(const ScalarField& field, const QuadratureSet& quad);
QuadratureField sample(const ScalarFunction& g, const QuadratureSet& quad);
QuadratureVectorField sample(const VectorFunction& g, const QuadratureSet& quad);
/// One value per triangle.
QuadratureField sample_elementwise(const Eigen::VectorXd& per_element, const QuadratureSet& quad);

/// Evaluates a P1 field of a coarser nested mesh at the points of quad by
/// point location, for comparisons on a refined reference mesh.
QuadratureField sample_transferred(const ScalarField& coarse, const QuadratureSet& quad);
QuadratureVectorField sample_gradient_transferred(const ScalarField& coarse, const QuadratureSet& quad);

double l2_norm(const QuadratureField& g);
double l2_norm(const QuadratureVectorField& g);
double l2_inner(const QuadratureField& a, const QuadratureField& b);
double l2_inner(const QuadratureVectorField& a, const QuadratureVectorField& b);
double integrate(const QuadratureField& g);

} // namespace ocb
