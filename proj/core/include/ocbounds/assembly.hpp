#pragma once

/// \file assembly.hpp
/// \brief P1 mass and stiffness matrices, load vectors and Dirichlet reduction.

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "ocbounds/fields.hpp"
#include "ocbounds/problem.hpp"

namespace ocb {

/// Row-compressed sparse matrix with a symmetry flag.
struct SparseMatrix {
  using Storage = Eigen::SparseMatrix<double, Eigen::RowMajor, int>;

  Storage data;
  bool symmetric = false;

  Eigen::Index rows() const noexcept { return data.rows(); }
  Eigen::VectorXd operator*(const Eigen::VectorXd& x) const { return data * x; }
};

/// Largest |A - A^T| entry relative to max |A|.
double symmetry_defect(const SparseMatrix& a);

/// M_ij = int phi_i phi_j, exact element matrices.
SparseMatrix assemble_mass(const Mesh& mesh);

/// int w_h phi_i phi_j with w_h the P1 interpolant of nodal weights, integrated
/// with the degree 5 rule (exact). With all weights one this equals the mass matrix.
SparseMatrix assemble_weighted_mass(const Mesh& mesh, const Eigen::VectorXd& nodal_weights);

/// K_ij = int nu grad phi_i . grad phi_j with nu taken at element centroids.
SparseMatrix assemble_stiffness(const Mesh& mesh, const ProblemSpec& spec);

/// b_j = int g phi_j with the degree 5 rule.
Eigen::VectorXd assemble_load(const Mesh& mesh, const ScalarFunction& g);

/// b_j = int w_h g phi_j with w_h the P1 interpolant of nodal weights.
Eigen::VectorXd assemble_weighted_load(const Mesh& mesh, const ScalarFunction& g,
                                       const Eigen::VectorXd& nodal_weights);

/// Replaces boundary rows and columns by `diagonal` times the identity.
/// Pass diagonal = 0 to decouple an off-diagonal block entirely.
SparseMatrix apply_dirichlet(const SparseMatrix& a, const Mesh& mesh, double diagonal = 1.0);
/// Zeroes boundary entries.
Eigen::VectorXd apply_dirichlet(const Eigen::VectorXd& b, const Mesh& mesh);

/// Solves -div(nu grad w) = g, w = 0 on the boundary, by sparse Cholesky.
ScalarField solve_dirichlet_problem(const Mesh& mesh, const ProblemSpec& spec, const Eigen::VectorXd& load);

} // namespace ocb
