#pragma once

/// \file mesh.hpp
/// \brief Uniform Friedrichs-Keller triangulation of the unit square.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace ocb {

using Point = Eigen::Vector2d;
using Vec2 = Eigen::Vector2d;

/// Index pair of the (at most two) triangles sharing an edge. The second
/// entry is -1 on the boundary.
using EdgeTriangles = std::array<int, 2>;

/// Immutable triangulation of (0,1)^2 obtained by splitting each of the
/// n x n square cells along its lower-left to upper-right diagonal.
///
/// Numbering:
///  - vertex (i, j) has index i + j (n+1) and coordinates (i/n, j/n);
///  - cell (i, j) holds triangles 2c and 2c+1 with c = i + j n, namely
///    (v00, v10, v11) and (v00, v11, v01), both counterclockwise;
///  - local edge k of a triangle is the edge opposite local vertex k;
///  - edges are numbered in order of first appearance while traversing
///    the triangles, so edge_triangles(e)[0] is always the lower index.
///
/// Every edge carries a fixed unit normal: the outward normal of its
/// lower-indexed triangle. For interior edges it therefore points from the
/// lower-indexed to the higher-indexed neighbour, on the boundary it points
/// out of the domain.
class Mesh {
public:
  /// Throws std::invalid_argument for n < 1.
  explicit Mesh(int n);

  int subdivisions() const noexcept { return n_; }
  double h() const noexcept { return 1.0 / n_; }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_triangles() const noexcept { return triangles_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Point> vertices() const noexcept { return vertices_; }
  std::span<const std::array<int, 3>> triangles() const noexcept { return triangles_; }
  std::span<const std::array<int, 2>> edges() const noexcept { return edges_; }

  const Point& vertex(int v) const { return vertices_[v]; }
  const std::array<int, 3>& triangle(int t) const { return triangles_[t]; }
  const std::array<int, 2>& edge(int e) const { return edges_[e]; }

  const EdgeTriangles& edge_triangles(int e) const { return edge_triangles_[e]; }
  /// Global edge indices of a triangle, local edge k opposite local vertex k.
  const std::array<int, 3>& triangle_edges(int t) const { return triangle_edges_[t]; }
  bool is_boundary_edge(int e) const { return edge_triangles_[e][1] < 0; }
  bool is_boundary_vertex(int v) const { return boundary_vertex_[v] != 0; }
  std::span<const char> boundary_vertex_flags() const noexcept { return boundary_vertex_; }

  const Vec2& edge_normal(int e) const { return edge_normals_[e]; }
  double edge_length(int e) const { return edge_lengths_[e]; }
  /// +1 if the global normal of local edge k is outward for triangle t.
  int edge_orientation(int t, int k) const { return edge_signs_[t][k]; }

  /// Signed area; positive for every triangle of this mesh.
  double area(int t) const;
  /// Constant gradients of the three barycentric coordinates on t.
  std::array<Vec2, 3> barycentric_gradients(int t) const;
  Eigen::Vector3d barycentric(int t, const Point& x) const;

  /// Triangle containing x. Points on shared edges resolve to one of the
  /// neighbours. Throws std::out_of_range for points outside the closed square.
  int locate(const Point& x) const;

private:
  int n_;
  std::vector<Point> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<EdgeTriangles> edge_triangles_;
  std::vector<std::array<int, 3>> triangle_edges_;
  std::vector<std::array<int, 3>> edge_signs_;
  std::vector<Vec2> edge_normals_;
  std::vector<double> edge_lengths_;
  std::vector<char> boundary_vertex_;
};

Mesh build_uniform_mesh(int n);

/// Plain-text dump ("v x y" and "t i j k" lines) for debugging.
void write_mesh(const Mesh& mesh, std::ostream& out);

} // namespace ocb
