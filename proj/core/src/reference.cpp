#include "ocbounds/reference.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

#include "ocbounds/assembly.hpp"
#include "ocbounds/estimator.hpp"

namespace ocb {

namespace {

std::unique_ptr<const Mesh> refine(const Mesh& coarse, int ref_factor) {
  if (ref_factor < 1) throw std::invalid_argument("reference factor must be at least 1");
  return std::make_unique<const Mesh>(coarse.subdivisions() * ref_factor);
}

/// Calls g(x, coarse_element) at every fine quadrature point and accumulates
/// the load vector int g phi_i; the values are also handed to `keep`.
template <class Integrand, class Keep>
Eigen::VectorXd transferred_load(const Mesh& fine, const Mesh& coarse, Integrand&& g, Keep&& keep) {
  const auto& ref = reference_rule(QuadratureRule::SevenPoint);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(fine.num_vertices()));
  for (int t = 0; t < static_cast<int>(fine.num_triangles()); ++t) {
    const auto& tri = fine.triangle(t);
    const Point& p0 = fine.vertex(tri[0]);
    const Point& p1 = fine.vertex(tri[1]);
    const Point& p2 = fine.vertex(tri[2]);
    const int ct = coarse.locate((p0 + p1 + p2) / 3.0);
    const double area = fine.area(t);
    for (std::size_t q = 0; q < ref.size(); ++q) {
      const Eigen::Vector3d& bc = ref.barycentric[q];
      const Point x = bc[0] * p0 + bc[1] * p1 + bc[2] * p2;
      const double v = g(x, ct);
      keep(t, static_cast<int>(q), v);
      const double wv = ref.weights[q] * area * v;
      for (int a = 0; a < 3; ++a) b[tri[a]] += wv * bc[a];
    }
  }
  return b;
}

} // namespace

ReferenceSolution reference_adjoint(const ScalarField& eta, const ProblemSpec& spec, int ref_factor) {
  ReferenceSolution r{refine(eta.mesh(), ref_factor), {}};
  const Eigen::VectorXd load = transferred_load(
      *r.mesh, eta.mesh(), [&](const Point& x, int ct) { return eta.value(ct, x) - spec.y_d(x); },
      [](int, int, double) {});
  r.values = solve_dirichlet_problem(*r.mesh, spec, load).values();
  return r;
}

CombinedNorms combined_norms(const ScalarField& zeta, const ProblemSpec& spec, int ref_factor) {
  if (!spec.exact || !spec.exact->control) throw std::invalid_argument("combined norms need the exact control");
  const auto fine = refine(zeta.mesh(), ref_factor);
  const auto& ref = reference_rule(QuadratureRule::SevenPoint);
  const int nq = static_cast<int>(ref.size());
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<double> diff(fine->num_triangles() * ref.size());
  const auto control_difference = [&](const Point& x, int ct) {
    const double lower = spec.bounds ? spec.bounds->lower(x) : -inf;
    const double upper = spec.bounds ? spec.bounds->upper(x) : inf;
    return spec.exact->control(x) - project_control(zeta.value(ct, x), spec.u_d(x), lower, upper, spec.lambda);
  };
  const Eigen::VectorXd load = transferred_load(*fine, zeta.mesh(), control_difference,
                                                [&](int t, int q, double v) { diff[t * nq + q] = v; });
  const ScalarField dy = solve_dirichlet_problem(*fine, spec, load);

  CombinedNorms n;
  for (int t = 0; t < static_cast<int>(fine->num_triangles()); ++t) {
    const double area = fine->area(t);
    const Vec2 g = dy.gradient(t);
    n.state_grad_sq += area * g.squaredNorm();
    for (int q = 0; q < nq; ++q) {
      const double w = ref.weights[q] * area;
      const double y = dy.value_at(t, ref.barycentric[q]);
      n.state_l2_sq += w * y * y;
      n.control_l2_sq += w * diff[t * nq + q] * diff[t * nq + q];
    }
  }
  const double c = spec.c_f, nu = spec.nu_lower;
  n.norm_sq = 0.5 * n.state_l2_sq + 0.5 * spec.lambda * n.control_l2_sq;
  n.norm1_sq = 0.5 * n.state_l2_sq + 2.0 * spec.lambda * nu * nu / (c * c) * n.state_grad_sq;
  return n;
}

} // namespace ocb
