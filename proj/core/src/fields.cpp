#include "ocbounds/fields.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ocb {

namespace {

void require_same(const QuadratureSet& a, const QuadratureSet& b) {
  if (&a != &b) throw std::invalid_argument("quadrature fields belong to different quadrature sets");
}

void require_mesh(const Mesh& field_mesh, const QuadratureSet& quad) {
  if (&field_mesh != &quad.mesh())
    throw std::invalid_argument("field and quadrature set are defined on different meshes");
}

} // namespace

// ScalarField ---------------------------------------------------------------

ScalarField::ScalarField(const Mesh& mesh, Eigen::VectorXd values, bool dirichlet)
    : mesh_(&mesh), values_(std::move(values)), dirichlet_(dirichlet) {
  if (static_cast<std::size_t>(values_.size()) != mesh.num_vertices())
    throw std::invalid_argument("nodal value count " + std::to_string(values_.size()) +
                                " does not match vertex count " + std::to_string(mesh.num_vertices()));
  if (dirichlet_)
    for (int v = 0; v < values_.size(); ++v)
      if (mesh.is_boundary_vertex(v) && values_[v] != 0.0)
        throw std::invalid_argument("Dirichlet field has nonzero boundary value at vertex " +
                                    std::to_string(v));
}

ScalarField ScalarField::zero(const Mesh& mesh, bool dirichlet) {
  return ScalarField(mesh, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mesh.num_vertices())), dirichlet);
}

ScalarField ScalarField::interpolate(const Mesh& mesh, const ScalarFunction& g, bool dirichlet) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(mesh.num_vertices()));
  for (int i = 0; i < v.size(); ++i)
    v[i] = (dirichlet && mesh.is_boundary_vertex(i)) ? 0.0 : g(mesh.vertex(i));
  return ScalarField(mesh, std::move(v), dirichlet);
}

double ScalarField::value_at(int element, const Eigen::Vector3d& b) const {
  const auto& tri = mesh_->triangle(element);
  return b[0] * values_[tri[0]] + b[1] * values_[tri[1]] + b[2] * values_[tri[2]];
}

double ScalarField::value(int element, const Point& x) const {
  return value_at(element, mesh_->barycentric(element, x));
}

Vec2 ScalarField::gradient(int element) const {
  const auto& tri = mesh_->triangle(element);
  const auto g = mesh_->barycentric_gradients(element);
  return values_[tri[0]] * g[0] + values_[tri[1]] * g[1] + values_[tri[2]] * g[2];
}

// QuadratureField -----------------------------------------------------------

QuadratureField::QuadratureField(const QuadratureSet& quad, Eigen::ArrayXd values)
    : quad_(&quad), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.size()) != quad.size())
    throw std::invalid_argument("sample count does not match quadrature set");
}

QuadratureField::QuadratureField(const QuadratureSet& quad, double constant)
    : quad_(&quad), values_(Eigen::ArrayXd::Constant(static_cast<Eigen::Index>(quad.size()), constant)) {}

QuadratureField& QuadratureField::operator+=(const QuadratureField& other) {
  require_same(*quad_, *other.quad_);
  values_ += other.values_;
  return *this;
}

QuadratureField& QuadratureField::operator-=(const QuadratureField& other) {
  require_same(*quad_, *other.quad_);
  values_ -= other.values_;
  return *this;
}

QuadratureField& QuadratureField::operator*=(double s) {
  values_ *= s;
  return *this;
}

QuadratureVectorField::QuadratureVectorField(const QuadratureSet& quad, Eigen::Array2Xd values)
    : quad_(&quad), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.cols()) != quad.size())
    throw std::invalid_argument("sample count does not match quadrature set");
}

QuadratureVectorField& QuadratureVectorField::operator+=(const QuadratureVectorField& other) {
  require_same(*quad_, *other.quad_);
  values_ += other.values_;
  return *this;
}

QuadratureVectorField& QuadratureVectorField::operator-=(const QuadratureVectorField& other) {
  require_same(*quad_, *other.quad_);
  values_ -= other.values_;
  return *this;
}

QuadratureVectorField& QuadratureVectorField::operator*=(double s) {
  values_ *= s;
  return *this;
}

QuadratureField operator+(QuadratureField a, const QuadratureField& b) { return a += b; }
QuadratureField operator-(QuadratureField a, const QuadratureField& b) { return a -= b; }
QuadratureField operator*(double s, QuadratureField a) { return a *= s; }

QuadratureField operator*(const QuadratureField& a, const QuadratureField& b) {
  require_same(a.quadrature(), b.quadrature());
  return QuadratureField(a.quadrature(), a.values() * b.values());
}

QuadratureVectorField operator+(QuadratureVectorField a, const QuadratureVectorField& b) { return a += b; }
QuadratureVectorField operator-(QuadratureVectorField a, const QuadratureVectorField& b) { return a -= b; }
QuadratureVectorField operator*(double s, QuadratureVectorField a) { return a *= s; }

QuadratureVectorField operator*(const QuadratureField& a, const QuadratureVectorField& b) {
  require_same(a.quadrature(), b.quadrature());
  Eigen::Array2Xd v = b.values();
  v.row(0) *= a.values().transpose();
  v.row(1) *= a.values().transpose();
  return QuadratureVectorField(a.quadrature(), std::move(v));
}

// Sampling ------------------------------------------------------------------

QuadratureField sample(const ScalarField& field, const QuadratureSet& quad) {
  require_mesh(field.mesh(), quad);
  const auto& ref = quad.reference();
  const int nq = quad.points_per_element();
  Eigen::ArrayXd v(static_cast<Eigen::Index>(quad.size()));
  for (int t = 0; t < static_cast<int>(field.mesh().num_triangles()); ++t)
    for (int q = 0; q < nq; ++q) v[quad.index(t, q)] = field.value_at(t, ref.barycentric[q]);
  return QuadratureField(quad, std::move(v));
}

QuadratureVectorField sample_gradient(const ScalarField& field, const QuadratureSet& quad) {
  require_mesh(field.mesh(), quad);
  const int nq = quad.points_per_element();
  Eigen::Array2Xd v(2, static_cast<Eigen::Index>(quad.size()));
  for (int t = 0; t < static_cast<int>(field.mesh().num_triangles()); ++t) {
    const Vec2 g = field.gradient(t);
    for (int q = 0; q < nq; ++q) v.col(static_cast<Eigen::Index>(quad.index(t, q))) = g.array();
  }
  return QuadratureVectorField(quad, std::move(v));
}

QuadratureField sample(const ScalarFunction& g, const QuadratureSet& quad) {
  Eigen::ArrayXd v(static_cast<Eigen::Index>(quad.size()));
  const auto pts = quad.points();
  for (std::size_t i = 0; i < pts.size(); ++i) v[static_cast<Eigen::Index>(i)] = g(pts[i]);
  return QuadratureField(quad, std::move(v));
}

QuadratureVectorField sample(const VectorFunction& g, const QuadratureSet& quad) {
  Eigen::Array2Xd v(2, static_cast<Eigen::Index>(quad.size()));
  const auto pts = quad.points();
  for (std::size_t i = 0; i < pts.size(); ++i) v.col(static_cast<Eigen::Index>(i)) = g(pts[i]).array();
  return QuadratureVectorField(quad, std::move(v));
}

QuadratureField sample_elementwise(const Eigen::VectorXd& per_element, const QuadratureSet& quad) {
  if (static_cast<std::size_t>(per_element.size()) != quad.mesh().num_triangles())
    throw std::invalid_argument("elementwise data does not match triangle count");
  const int nq = quad.points_per_element();
  Eigen::ArrayXd v(static_cast<Eigen::Index>(quad.size()));
  for (int t = 0; t < per_element.size(); ++t)
    for (int q = 0; q < nq; ++q) v[quad.index(t, q)] = per_element[t];
  return QuadratureField(quad, std::move(v));
}

QuadratureField sample_transferred(const ScalarField& coarse, const QuadratureSet& quad) {
  const auto pts = quad.points();
  Eigen::ArrayXd v(static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const int t = coarse.mesh().locate(pts[i]);
    v[static_cast<Eigen::Index>(i)] = coarse.value(t, pts[i]);
  }
  return QuadratureField(quad, std::move(v));
}

QuadratureVectorField sample_gradient_transferred(const ScalarField& coarse, const QuadratureSet& quad) {
  const auto pts = quad.points();
  Eigen::Array2Xd v(2, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i)
    v.col(static_cast<Eigen::Index>(i)) = coarse.gradient(coarse.mesh().locate(pts[i])).array();
  return QuadratureVectorField(quad, std::move(v));
}

// Integrals -----------------------------------------------------------------

namespace {

Eigen::Map<const Eigen::ArrayXd> weights_of(const QuadratureSet& quad) {
  return {quad.weights().data(), static_cast<Eigen::Index>(quad.size())};
}

} // namespace

double integrate(const QuadratureField& g) { return (weights_of(g.quadrature()) * g.values()).sum(); }

double l2_inner(const QuadratureField& a, const QuadratureField& b) {
  require_same(a.quadrature(), b.quadrature());
  return (weights_of(a.quadrature()) * a.values() * b.values()).sum();
}

double l2_inner(const QuadratureVectorField& a, const QuadratureVectorField& b) {
  require_same(a.quadrature(), b.quadrature());
  const Eigen::ArrayXd dots = (a.values() * b.values()).colwise().sum().transpose();
  return (weights_of(a.quadrature()) * dots).sum();
}

double l2_norm(const QuadratureField& g) { return std::sqrt(std::max(0.0, l2_inner(g, g))); }
double l2_norm(const QuadratureVectorField& g) { return std::sqrt(std::max(0.0, l2_inner(g, g))); }

} // namespace ocb
