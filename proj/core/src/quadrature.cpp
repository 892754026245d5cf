#include "ocbounds/quadrature.hpp"

#include <stdexcept>

namespace ocb {

namespace {

ReferenceRule make_edge_midpoint() {
  ReferenceRule r;
  r.barycentric = {{0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}, {0.5, 0.5, 0.0}};
  r.weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  return r;
}

// Radon's seven point formula.
ReferenceRule make_seven_point() {
  ReferenceRule r;
  const double a1 = 0.059715871789769820, b1 = 0.470142064105115090;
  const double a2 = 0.797426985353087322, b2 = 0.101286507323456339;
  const double w0 = 0.225;
  const double w1 = 0.132394152788506181;
  const double w2 = 0.125939180544827153;
  r.barycentric = {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
                   {a1, b1, b1}, {b1, a1, b1}, {b1, b1, a1},
                   {a2, b2, b2}, {b2, a2, b2}, {b2, b2, a2}};
  r.weights = {w0, w1, w1, w1, w2, w2, w2};
  return r;
}

} // namespace

QuadratureRule parse_quadrature_rule(std::string_view id) {
  if (id == "edge-midpoint" || id == "degree2") return QuadratureRule::EdgeMidpoint;
  if (id == "7-point" || id == "seven-point" || id == "degree5") return QuadratureRule::SevenPoint;
  throw std::invalid_argument("unknown quadrature rule '" + std::string(id) + "'");
}

std::string to_string(QuadratureRule rule) {
  return rule == QuadratureRule::EdgeMidpoint ? "edge-midpoint" : "7-point";
}

const ReferenceRule& reference_rule(QuadratureRule rule) {
  static const ReferenceRule midpoint = make_edge_midpoint();
  static const ReferenceRule seven = make_seven_point();
  switch (rule) {
  case QuadratureRule::EdgeMidpoint: return midpoint;
  case QuadratureRule::SevenPoint: return seven;
  }
  throw std::invalid_argument("unknown quadrature rule");
}

QuadratureSet::QuadratureSet(const Mesh& mesh, QuadratureRule rule)
    : mesh_(&mesh), rule_(rule), reference_(&reference_rule(rule)) {
  const std::size_t nq = reference_->size();
  points_.reserve(mesh.num_triangles() * nq);
  weights_.reserve(mesh.num_triangles() * nq);
  for (int t = 0; t < static_cast<int>(mesh.num_triangles()); ++t) {
    const auto& tri = mesh.triangle(t);
    const double area = mesh.area(t);
    for (std::size_t q = 0; q < nq; ++q) {
      const auto& b = reference_->barycentric[q];
      points_.push_back(b[0] * mesh.vertex(tri[0]) + b[1] * mesh.vertex(tri[1]) +
                        b[2] * mesh.vertex(tri[2]));
      weights_.push_back(reference_->weights[q] * area);
    }
  }
}

QuadratureSet locate_quadrature_points(const Mesh& mesh, QuadratureRule rule) {
  return QuadratureSet(mesh, rule);
}

} // namespace ocb
