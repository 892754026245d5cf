#pragma once

/// \file saddle_solver.hpp
/// \brief Discrete optimality systems and their block-diagonal preconditioned
/// MINRES solution.
///
/// The unknowns are the nodal state and adjoint vectors (y, p). With M the
/// mass matrix, K the stiffness matrix and M_I the mass matrix restricted to
/// the inactive set, the systems read
///
///   [ M    -K         ] [y]   [ y_d moments            ]
///   [ -K   -M_I/lambda] [p] = [ -(f + control moments) ]
///
/// and M_I = M when no bound is active. Dirichlet rows are identity rows in
/// the diagonal blocks and empty in the coupling block.

#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCholesky>

#include "ocbounds/assembly.hpp"

namespace ocb {

enum class PreconditionerVariant { Unconstrained, ActiveSet };

struct SaddleSystem {
  SparseMatrix a; ///< top-left, M
  SparseMatrix b; ///< off-diagonal, -K (symmetric)
  SparseMatrix c; ///< bottom-right, -M_I / lambda
  Eigen::VectorXd rhs_top;
  Eigen::VectorXd rhs_bottom;
  PreconditionerVariant variant = PreconditionerVariant::Unconstrained;

  Eigen::Index block_size() const noexcept { return a.rows(); }
  /// Full operator applied to the stacked vector (y, p).
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::VectorXd rhs() const;
};

SaddleSystem build_saddle_system_unconstrained(const Mesh& mesh, const ProblemSpec& spec);

/// Exact application of diag(M + sqrt(lambda) K, M_I/lambda + K/sqrt(lambda)).
/// Both blocks are formed from the system matrices (M_I is the system's
/// bottom-right block) and factorized by sparse Cholesky.
class BlockPreconditioner {
public:
  BlockPreconditioner(const SaddleSystem& system, double lambda, PreconditionerVariant variant);

  PreconditionerVariant variant() const noexcept { return variant_; }
  Eigen::Index block_size() const noexcept { return n_; }

  /// z = P^{-1} r for the stacked residual r.
  Eigen::VectorXd apply(const Eigen::VectorXd& r) const;

  const Eigen::SparseMatrix<double>& state_block() const noexcept { return state_block_; }
  const Eigen::SparseMatrix<double>& adjoint_block() const noexcept { return adjoint_block_; }

private:
  PreconditionerVariant variant_;
  Eigen::Index n_;
  Eigen::SparseMatrix<double> state_block_;
  Eigen::SparseMatrix<double> adjoint_block_;
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> state_factor_;
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> adjoint_factor_;
};

/// Throws std::invalid_argument if the variant does not match the system, and
/// std::runtime_error if a block fails to factorize.
BlockPreconditioner build_preconditioner(const SaddleSystem& system, const ProblemSpec& spec,
                                         PreconditionerVariant variant);

struct MinresOptions {
  double tolerance = 1e-10; ///< on the relative preconditioned residual
  int max_iterations = 1000;
  /// If positive, run exactly this many steps regardless of the tolerance.
  int fixed_iterations = 0;
};

enum class MinresStatus { Converged, MaxIterations, FixedIterations, Breakdown };

struct MinresResult {
  Eigen::VectorXd y;
  Eigen::VectorXd p;
  int iterations = 0;
  /// ||r_k||_{P^{-1}} / ||b||_{P^{-1}} for k = 0..iterations.
  std::vector<double> residual_history;
  MinresStatus status = MinresStatus::Converged;
  int breakdown_iteration = -1;

  bool converged() const noexcept { return status == MinresStatus::Converged; }
};

std::string to_string(MinresStatus status);

/// Preconditioned MINRES from a zero initial guess. Throws
/// std::invalid_argument for a nonpositive tolerance.
MinresResult minres_solve(const SaddleSystem& system, const BlockPreconditioner& precond,
                          const MinresOptions& options = {});

} // namespace ocb
