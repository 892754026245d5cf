#include "ocbounds/flux.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ocb {

FluxField::FluxField(const Mesh& mesh, Eigen::VectorXd edge_fluxes) : mesh_(&mesh), fluxes_(std::move(edge_fluxes)) {
  if (static_cast<std::size_t>(fluxes_.size()) != mesh.num_edges())
    throw std::invalid_argument("flux vector does not match edge count");
}

FluxField FluxField::zero(const Mesh& mesh) {
  return FluxField(mesh, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mesh.num_edges())));
}

Vec2 FluxField::value_at(int element, const Eigen::Vector3d& b) const {
  const Mesh& m = *mesh_;
  const auto& tri = m.triangle(element);
  const auto& edges = m.triangle_edges(element);
  const Point x = b[0] * m.vertex(tri[0]) + b[1] * m.vertex(tri[1]) + b[2] * m.vertex(tri[2]);
  const double scale = 1.0 / (2.0 * m.area(element));
  Vec2 r = Vec2::Zero();
  for (int k = 0; k < 3; ++k) {
    const int e = edges[k];
    r += (fluxes_[e] * m.edge_orientation(element, k) * m.edge_length(e) * scale) * (x - m.vertex(tri[k]));
  }
  return r;
}

double FluxField::divergence(int element) const {
  const Mesh& m = *mesh_;
  const auto& edges = m.triangle_edges(element);
  double s = 0.0;
  for (int k = 0; k < 3; ++k) s += fluxes_[edges[k]] * m.edge_orientation(element, k) * m.edge_length(edges[k]);
  return s / m.area(element);
}

FluxField reconstruct_flux(const ScalarField& field, const ProblemSpec& spec) {
  const Mesh& mesh = field.mesh();
  const auto flux_of = [&](int t) {
    const auto& tri = mesh.triangle(t);
    const Point c = (mesh.vertex(tri[0]) + mesh.vertex(tri[1]) + mesh.vertex(tri[2])) / 3.0;
    return Vec2(spec.nu(c) * field.gradient(t));
  };
  Eigen::VectorXd d(static_cast<Eigen::Index>(mesh.num_edges()));
  for (int e = 0; e < d.size(); ++e) {
    const auto& [t0, t1] = mesh.edge_triangles(e);
    const Vec2& n = mesh.edge_normal(e);
    d[e] = t1 < 0 ? flux_of(t0).dot(n) : 0.5 * (flux_of(t0) + flux_of(t1)).dot(n);
  }
  return FluxField(mesh, std::move(d));
}

Eigen::VectorXd flux_divergence(const FluxField& flux) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(flux.mesh().num_triangles()));
  for (int t = 0; t < d.size(); ++t) d[t] = flux.divergence(t);
  return d;
}

Vec2 flux_eval(const FluxField& flux, int element, const Point& x) {
  if (element < 0 || static_cast<std::size_t>(element) >= flux.mesh().num_triangles())
    throw std::invalid_argument("element index out of range");
  const Eigen::Vector3d b = flux.mesh().barycentric(element, x);
  if (b.minCoeff() < -1e-12) throw std::invalid_argument("point lies outside the element");
  return flux.value_at(element, b);
}

FluxField interpolate_flux(const Mesh& mesh, const VectorFunction& g) {
  // Gauss-Legendre on [0, 1]
  const double r = std::sqrt(0.6);
  const std::array<double, 3> s{0.5 * (1.0 - r), 0.5, 0.5 * (1.0 + r)};
  const std::array<double, 3> w{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  Eigen::VectorXd d(static_cast<Eigen::Index>(mesh.num_edges()));
  for (int e = 0; e < d.size(); ++e) {
    const Point& a = mesh.vertex(mesh.edge(e)[0]);
    const Point& b = mesh.vertex(mesh.edge(e)[1]);
    double v = 0.0;
    for (int q = 0; q < 3; ++q) v += w[q] * g(a + s[q] * (b - a)).dot(mesh.edge_normal(e));
    d[e] = v;
  }
  return FluxField(mesh, std::move(d));
}

QuadratureVectorField sample(const FluxField& flux, const QuadratureSet& quad) {
  if (&flux.mesh() != &quad.mesh()) throw std::invalid_argument("flux and quadrature live on different meshes");
  const auto& ref = quad.reference();
  const int nq = quad.points_per_element();
  Eigen::Array2Xd v(2, static_cast<Eigen::Index>(quad.size()));
  for (int t = 0; t < static_cast<int>(flux.mesh().num_triangles()); ++t)
    for (int q = 0; q < nq; ++q) v.col(static_cast<Eigen::Index>(quad.index(t, q))) = flux.value_at(t, ref.barycentric[q]).array();
  return QuadratureVectorField(quad, std::move(v));
}

QuadratureField sample_divergence(const FluxField& flux, const QuadratureSet& quad) {
  if (&flux.mesh() != &quad.mesh()) throw std::invalid_argument("flux and quadrature live on different meshes");
  return sample_elementwise(flux_divergence(flux), quad);
}

} // namespace ocb
