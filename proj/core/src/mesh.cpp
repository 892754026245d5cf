#include "ocbounds/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ocb {

namespace {

// Upper bound on the number of higher-indexed neighbours of a vertex in the
// Friedrichs-Keller pattern (right, upper, upper-right) with some slack.
constexpr int max_forward_neighbours = 4;

Vec2 outward_normal(const Point& a, const Point& b, const Point& opposite) {
  Vec2 t = b - a;
  Vec2 n(t.y(), -t.x());
  n.normalize();
  if (n.dot(opposite - a) > 0.0) n = -n;
  return n;
}

} // namespace

Mesh::Mesh(int n) : n_(n) {
  if (n < 1)
    throw std::invalid_argument("mesh subdivision count must be >= 1, got " + std::to_string(n));

  const int np = n + 1;
  vertices_.reserve(static_cast<std::size_t>(np) * np);
  boundary_vertex_.assign(static_cast<std::size_t>(np) * np, 0);
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      vertices_.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n);
      if (i == 0 || j == 0 || i == n || j == n) boundary_vertex_[i + j * np] = 1;
    }

  triangles_.reserve(2 * static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int v00 = i + j * np, v10 = v00 + 1, v01 = v00 + np, v11 = v01 + 1;
      triangles_.push_back({v00, v10, v11});
      triangles_.push_back({v00, v11, v01});
    }

  // Edge discovery keyed by the lower vertex index.
  std::vector<std::array<int, 2 * max_forward_neighbours>> forward(vertices_.size());
  std::vector<int> forward_count(vertices_.size(), 0);

  const std::size_t expected_edges = vertices_.size() + triangles_.size() - 1;
  edges_.reserve(expected_edges);
  edge_triangles_.reserve(expected_edges);
  triangle_edges_.resize(triangles_.size());
  edge_signs_.resize(triangles_.size());

  for (int t = 0; t < static_cast<int>(triangles_.size()); ++t) {
    const auto& tri = triangles_[t];
    for (int k = 0; k < 3; ++k) {
      int a = tri[(k + 1) % 3], b = tri[(k + 2) % 3];
      if (a > b) std::swap(a, b);
      int found = -1;
      auto& slots = forward[a];
      for (int s = 0; s < forward_count[a]; ++s)
        if (slots[2 * s] == b) {
          found = slots[2 * s + 1];
          break;
        }
      if (found < 0) {
        if (forward_count[a] == max_forward_neighbours)
          throw std::logic_error("unexpected vertex valence in uniform mesh");
        found = static_cast<int>(edges_.size());
        edges_.push_back({a, b});
        edge_triangles_.push_back({t, -1});
        edge_normals_.push_back(outward_normal(vertices_[a], vertices_[b], vertices_[tri[k]]));
        edge_lengths_.push_back((vertices_[b] - vertices_[a]).norm());
        slots[2 * forward_count[a]] = b;
        slots[2 * forward_count[a] + 1] = found;
        ++forward_count[a];
        edge_signs_[t][k] = 1;
      } else {
        edge_triangles_[found][1] = t;
        edge_signs_[t][k] = -1;
      }
      triangle_edges_[t][k] = found;
    }
  }
}

double Mesh::area(int t) const {
  const auto& tri = triangles_[t];
  const Vec2 e1 = vertices_[tri[1]] - vertices_[tri[0]];
  const Vec2 e2 = vertices_[tri[2]] - vertices_[tri[0]];
  return 0.5 * (e1.x() * e2.y() - e1.y() * e2.x());
}

std::array<Vec2, 3> Mesh::barycentric_gradients(int t) const {
  const auto& tri = triangles_[t];
  const double two_area = 2.0 * area(t);
  std::array<Vec2, 3> g;
  for (int k = 0; k < 3; ++k) {
    const Point& a = vertices_[tri[(k + 1) % 3]];
    const Point& b = vertices_[tri[(k + 2) % 3]];
    // Rotated opposite edge, scaled so that grad(lambda_k) . (x_k - a) = 1.
    g[k] = Vec2(a.y() - b.y(), b.x() - a.x()) / two_area;
  }
  return g;
}

Eigen::Vector3d Mesh::barycentric(int t, const Point& x) const {
  const auto& tri = triangles_[t];
  const Point& p0 = vertices_[tri[0]];
  const auto g = barycentric_gradients(t);
  const double l1 = g[1].dot(x - p0);
  const double l2 = g[2].dot(x - p0);
  return {1.0 - l1 - l2, l1, l2};
}

int Mesh::locate(const Point& x) const {
  constexpr double slack = 1e-12;
  if (!(x.x() >= -slack && x.x() <= 1.0 + slack && x.y() >= -slack && x.y() <= 1.0 + slack))
    throw std::out_of_range("point outside the unit square");
  const double sx = x.x() * n_, sy = x.y() * n_;
  const int i = std::clamp(static_cast<int>(std::floor(sx)), 0, n_ - 1);
  const int j = std::clamp(static_cast<int>(std::floor(sy)), 0, n_ - 1);
  const int cell = i + j * n_;
  return (sx - i >= sy - j) ? 2 * cell : 2 * cell + 1;
}

Mesh build_uniform_mesh(int n) { return Mesh(n); }

void write_mesh(const Mesh& mesh, std::ostream& out) {
  for (const auto& v : mesh.vertices()) out << "v " << v.x() << ' ' << v.y() << '\n';
  for (const auto& t : mesh.triangles()) out << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

} // namespace ocb
