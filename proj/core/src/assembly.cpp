#include "ocbounds/assembly.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/SparseCholesky>

namespace ocb {

namespace {

using Triplet = Eigen::Triplet<double, int>;

template <class ElementMatrix>
SparseMatrix assemble(const Mesh& mesh, ElementMatrix&& element_matrix) {
  const int nv = static_cast<int>(mesh.num_vertices());
  std::vector<Triplet> triplets;
  triplets.reserve(9 * mesh.num_triangles());
  for (int t = 0; t < static_cast<int>(mesh.num_triangles()); ++t) {
    const Eigen::Matrix3d local = element_matrix(t);
    const auto& tri = mesh.triangle(t);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) triplets.emplace_back(tri[a], tri[b], local(a, b));
  }
  SparseMatrix m;
  m.data.resize(nv, nv);
  m.data.setFromTriplets(triplets.begin(), triplets.end());
  m.symmetric = true;
  return m;
}

Point centroid(const Mesh& mesh, int t) {
  const auto& tri = mesh.triangle(t);
  return (mesh.vertex(tri[0]) + mesh.vertex(tri[1]) + mesh.vertex(tri[2])) / 3.0;
}

void require_nodal(const Mesh& mesh, const Eigen::VectorXd& w) {
  if (static_cast<std::size_t>(w.size()) != mesh.num_vertices())
    throw std::invalid_argument("nodal weight vector does not match vertex count");
}

} // namespace

double symmetry_defect(const SparseMatrix& a) {
  const SparseMatrix::Storage t = a.data.transpose();
  const SparseMatrix::Storage d = a.data - t;
  double scale = 0.0, defect = 0.0;
  for (int k = 0; k < a.data.outerSize(); ++k)
    for (SparseMatrix::Storage::InnerIterator it(a.data, k); it; ++it) scale = std::max(scale, std::abs(it.value()));
  for (int k = 0; k < d.outerSize(); ++k)
    for (SparseMatrix::Storage::InnerIterator it(d, k); it; ++it) defect = std::max(defect, std::abs(it.value()));
  return scale > 0.0 ? defect / scale : defect;
}

SparseMatrix assemble_mass(const Mesh& mesh) {
  return assemble(mesh, [&](int t) {
    Eigen::Matrix3d m;
    m << 2, 1, 1, 1, 2, 1, 1, 1, 2;
    return Eigen::Matrix3d(m * (mesh.area(t) / 12.0));
  });
}

SparseMatrix assemble_weighted_mass(const Mesh& mesh, const Eigen::VectorXd& w) {
  require_nodal(mesh, w);
  const auto& ref = reference_rule(QuadratureRule::SevenPoint);
  return assemble(mesh, [&](int t) {
    const auto& tri = mesh.triangle(t);
    const double area = mesh.area(t);
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    for (std::size_t q = 0; q < ref.size(); ++q) {
      const Eigen::Vector3d& b = ref.barycentric[q];
      const double wq = ref.weights[q] * area * (b[0] * w[tri[0]] + b[1] * w[tri[1]] + b[2] * w[tri[2]]);
      m.noalias() += wq * (b * b.transpose());
    }
    return m;
  });
}

SparseMatrix assemble_stiffness(const Mesh& mesh, const ProblemSpec& spec) {
  return assemble(mesh, [&](int t) {
    const auto g = mesh.barycentric_gradients(t);
    const double scale = spec.nu(centroid(mesh, t)) * mesh.area(t);
    Eigen::Matrix3d k;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) k(a, b) = scale * g[a].dot(g[b]);
    return k;
  });
}

Eigen::VectorXd assemble_weighted_load(const Mesh& mesh, const ScalarFunction& g, const Eigen::VectorXd& w) {
  require_nodal(mesh, w);
  const auto& ref = reference_rule(QuadratureRule::SevenPoint);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mesh.num_vertices()));
  for (int t = 0; t < static_cast<int>(mesh.num_triangles()); ++t) {
    const auto& tri = mesh.triangle(t);
    const double area = mesh.area(t);
    const double w0 = w[tri[0]], w1 = w[tri[1]], w2 = w[tri[2]];
    if (w0 == 0.0 && w1 == 0.0 && w2 == 0.0) continue;
    for (std::size_t q = 0; q < ref.size(); ++q) {
      const Eigen::Vector3d& bc = ref.barycentric[q];
      const Point x = bc[0] * mesh.vertex(tri[0]) + bc[1] * mesh.vertex(tri[1]) + bc[2] * mesh.vertex(tri[2]);
      const double weight = bc[0] * w0 + bc[1] * w1 + bc[2] * w2;
      const double gq = ref.weights[q] * area * weight * g(x);
      for (int a = 0; a < 3; ++a) b[tri[a]] += gq * bc[a];
    }
  }
  return b;
}

Eigen::VectorXd assemble_load(const Mesh& mesh, const ScalarFunction& g) {
  return assemble_weighted_load(mesh, g, Eigen::VectorXd::Ones(static_cast<Eigen::Index>(mesh.num_vertices())));
}

SparseMatrix apply_dirichlet(const SparseMatrix& a, const Mesh& mesh, double diagonal) {
  if (static_cast<std::size_t>(a.rows()) != mesh.num_vertices())
    throw std::invalid_argument("matrix dimension does not match vertex count");
  SparseMatrix r = a;
  for (int row = 0; row < r.data.outerSize(); ++row) {
    const bool boundary_row = mesh.is_boundary_vertex(row);
    for (SparseMatrix::Storage::InnerIterator it(r.data, row); it; ++it) {
      if (boundary_row || mesh.is_boundary_vertex(it.col()))
        it.valueRef() = (it.col() == row) ? diagonal : 0.0;
    }
  }
  r.data.prune(0.0);
  // Keep a diagonal entry on every boundary row even if the pattern had none.
  if (diagonal != 0.0)
    for (int v = 0; v < r.data.rows(); ++v)
      if (mesh.is_boundary_vertex(v)) r.data.coeffRef(v, v) = diagonal;
  r.data.makeCompressed();
  return r;
}

Eigen::VectorXd apply_dirichlet(const Eigen::VectorXd& b, const Mesh& mesh) {
  if (static_cast<std::size_t>(b.size()) != mesh.num_vertices())
    throw std::invalid_argument("vector length does not match vertex count");
  Eigen::VectorXd r = b;
  for (int v = 0; v < r.size(); ++v)
    if (mesh.is_boundary_vertex(v)) r[v] = 0.0;
  return r;
}

ScalarField solve_dirichlet_problem(const Mesh& mesh, const ProblemSpec& spec, const Eigen::VectorXd& load) {
  const SparseMatrix k = apply_dirichlet(assemble_stiffness(mesh, spec), mesh);
  const Eigen::SparseMatrix<double> kc = k.data;
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> chol(kc);
  if (chol.info() != Eigen::Success) throw std::runtime_error("stiffness factorization failed");
  Eigen::VectorXd w = chol.solve(apply_dirichlet(load, mesh));
  for (int v = 0; v < w.size(); ++v)
    if (mesh.is_boundary_vertex(v)) w[v] = 0.0;
  return ScalarField(mesh, std::move(w), true);
}

} // namespace ocb
