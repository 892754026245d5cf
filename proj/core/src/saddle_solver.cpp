#include "ocbounds/saddle_solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ocb {

Eigen::VectorXd SaddleSystem::apply(const Eigen::VectorXd& x) const {
  const Eigen::Index n = block_size();
  Eigen::VectorXd r(2 * n);
  r.head(n) = a.data * x.head(n) + b.data * x.tail(n);
  r.tail(n) = b.data * x.head(n) + c.data * x.tail(n);
  return r;
}

Eigen::VectorXd SaddleSystem::rhs() const {
  Eigen::VectorXd r(rhs_top.size() + rhs_bottom.size());
  r << rhs_top, rhs_bottom;
  return r;
}

SaddleSystem build_saddle_system_unconstrained(const Mesh& mesh, const ProblemSpec& spec) {
  if (!(spec.lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  const SparseMatrix mass = assemble_mass(mesh);
  const SparseMatrix stiffness = assemble_stiffness(mesh, spec);

  SaddleSystem s;
  s.a = apply_dirichlet(mass, mesh);
  s.b = apply_dirichlet(stiffness, mesh, 0.0);
  s.b.data *= -1.0;
  s.c = s.a;
  s.c.data *= -1.0 / spec.lambda;
  s.rhs_top = apply_dirichlet(assemble_load(mesh, spec.y_d), mesh);
  const Eigen::VectorXd source = assemble_load(mesh, [&](const Point& x) { return spec.f(x) + spec.u_d(x); });
  s.rhs_bottom = -apply_dirichlet(source, mesh);
  s.variant = PreconditionerVariant::Unconstrained;
  return s;
}

BlockPreconditioner::BlockPreconditioner(const SaddleSystem& system, double lambda,
                                         PreconditionerVariant variant)
    : variant_(variant), n_(system.block_size()) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  const double sl = std::sqrt(lambda);
  // b = -K, c = -M_I / lambda
  const SparseMatrix::Storage p1 = system.a.data - sl * system.b.data;
  const SparseMatrix::Storage p2 = -(system.c.data) - (1.0 / sl) * system.b.data;
  state_block_ = p1;
  adjoint_block_ = p2;
  state_factor_.compute(state_block_);
  if (state_factor_.info() != Eigen::Success)
    throw std::runtime_error("preconditioner block M + sqrt(lambda) K is not positive definite");
  adjoint_factor_.compute(adjoint_block_);
  if (adjoint_factor_.info() != Eigen::Success)
    throw std::runtime_error("preconditioner block M_I/lambda + K/sqrt(lambda) is not positive definite");
}

Eigen::VectorXd BlockPreconditioner::apply(const Eigen::VectorXd& r) const {
  Eigen::VectorXd z(r.size());
  z.head(n_) = state_factor_.solve(r.head(n_));
  z.tail(n_) = adjoint_factor_.solve(r.tail(n_));
  return z;
}

BlockPreconditioner build_preconditioner(const SaddleSystem& system, const ProblemSpec& spec,
                                         PreconditionerVariant variant) {
  if (variant == PreconditionerVariant::Unconstrained && system.variant != PreconditionerVariant::Unconstrained)
    throw std::invalid_argument("unconstrained preconditioner requested for an active-set system");
  return BlockPreconditioner(system, spec.lambda, variant);
}

std::string to_string(MinresStatus status) {
  switch (status) {
  case MinresStatus::Converged: return "converged";
  case MinresStatus::MaxIterations: return "max-iterations";
  case MinresStatus::FixedIterations: return "fixed-iterations";
  case MinresStatus::Breakdown: return "breakdown";
  }
  return "unknown";
}

MinresResult minres_solve(const SaddleSystem& system, const BlockPreconditioner& precond,
                          const MinresOptions& options) {
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("MINRES tolerance must be positive");
  const Eigen::Index n = system.block_size();
  if (precond.block_size() != n) throw std::invalid_argument("preconditioner size does not match system");

  MinresResult result;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(2 * n);
  const auto finish = [&](MinresStatus status) {
    result.status = status;
    result.y = x.head(n);
    result.p = x.tail(n);
    return result;
  };

  Eigen::VectorXd r1 = system.rhs();
  Eigen::VectorXd y = precond.apply(r1);
  double beta1 = r1.dot(y);
  if (beta1 < 0.0) {
    result.breakdown_iteration = 0;
    return finish(MinresStatus::Breakdown);
  }
  if (beta1 == 0.0) {
    result.residual_history.push_back(0.0);
    return finish(MinresStatus::Converged);
  }
  beta1 = std::sqrt(beta1);
  result.residual_history.push_back(1.0);

  const int max_steps = options.fixed_iterations > 0 ? options.fixed_iterations : options.max_iterations;
  double oldb = 0.0, beta = beta1, dbar = 0.0, epsln = 0.0, phibar = beta1;
  double cs = -1.0, sn = 0.0;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(2 * n), w1(2 * n), w2 = Eigen::VectorXd::Zero(2 * n);
  Eigen::VectorXd r2 = r1, v(2 * n);

  for (int itn = 1; itn <= max_steps; ++itn) {
    v = y / beta;
    y = system.apply(v);
    if (itn >= 2) y -= (beta / oldb) * r1;
    const double alfa = v.dot(y);
    y -= (alfa / beta) * r2;
    r1.swap(r2);
    r2 = y;
    y = precond.apply(r2);
    oldb = beta;
    beta = r2.dot(y);
    if (beta < 0.0) {
      result.iterations = itn - 1;
      result.breakdown_iteration = itn;
      return finish(MinresStatus::Breakdown);
    }
    beta = std::sqrt(beta);

    const double oldeps = epsln;
    const double delta = cs * dbar + sn * alfa;
    const double gbar = sn * dbar - cs * alfa;
    epsln = sn * beta;
    dbar = -cs * beta;
    const double gamma = std::max(std::hypot(gbar, beta), std::numeric_limits<double>::min());
    cs = gbar / gamma;
    sn = beta / gamma;
    const double phi = cs * phibar;
    phibar = sn * phibar;

    w1.swap(w2);
    w2.swap(w);
    w = (v - oldeps * w1 - delta * w2) / gamma;
    x += phi * w;

    result.iterations = itn;
    result.residual_history.push_back(phibar / beta1);
    if (beta == 0.0) return finish(MinresStatus::Converged);
    if (options.fixed_iterations <= 0 && phibar / beta1 <= options.tolerance)
      return finish(MinresStatus::Converged);
  }
  return finish(options.fixed_iterations > 0 ? MinresStatus::FixedIterations : MinresStatus::MaxIterations);
}

} // namespace ocb
