#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocbounds/mesh.hpp"

namespace ocb {

/// Triangle quadrature rules.
enum class QuadratureRule {
  EdgeMidpoint, ///< 3 points, exact for degree 2.
  SevenPoint,   ///< 7 points, exact for degree 5.
};

/// Accepts "edge-midpoint" / "degree2" and "7-point" / "degree5".
/// Throws std::invalid_argument on anything else.
QuadratureRule parse_quadrature_rule(std::string_view id);
std::string to_string(QuadratureRule rule);

/// Reference rule in barycentric coordinates, weights summing to one.
struct ReferenceRule {
  std::vector<Eigen::Vector3d> barycentric;
  std::vector<double> weights;

  std::size_t size() const noexcept { return weights.size(); }
};

const ReferenceRule& reference_rule(QuadratureRule rule);

/// Physical quadrature points and weights for every triangle of a mesh,
/// stored element by element: entry e * points_per_element() + q.
class QuadratureSet {
public:
  QuadratureSet(const Mesh& mesh, QuadratureRule rule);

  const Mesh& mesh() const noexcept { return *mesh_; }
  QuadratureRule rule() const noexcept { return rule_; }
  const ReferenceRule& reference() const noexcept { return *reference_; }

  int points_per_element() const noexcept { return static_cast<int>(reference_->size()); }
  std::size_t size() const noexcept { return weights_.size(); }

  std::span<const Point> points() const noexcept { return points_; }
  std::span<const double> weights() const noexcept { return weights_; }
  const Point& point(int element, int q) const { return points_[index(element, q)]; }
  double weight(int element, int q) const { return weights_[index(element, q)]; }
  std::size_t index(int element, int q) const {
    return static_cast<std::size_t>(element) * reference_->size() + q;
  }

private:
  const Mesh* mesh_;
  QuadratureRule rule_;
  const ReferenceRule* reference_;
  std::vector<Point> points_;
  std::vector<double> weights_;
};

QuadratureSet locate_quadrature_points(const Mesh& mesh, QuadratureRule rule);

} // namespace ocb
