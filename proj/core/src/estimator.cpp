#include "ocbounds/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ocb {

namespace {

constexpr double param_min = 1e-8;
constexpr double param_max = 1e8;

double clamp_param(double x) { return std::clamp(x, param_min, param_max); }

void require_same(const QuadratureSet& a, const QuadratureSet& b) {
  if (&a != &b) throw std::invalid_argument("estimator inputs live on different quadrature sets");
}

double squared(double x) { return x * x; }

} // namespace

ProblemSamples sample_problem(const ProblemSpec& spec, const QuadratureSet& quad) {
  ProblemSamples s{sample(spec.nu, quad), sample(spec.f, quad), sample(spec.y_d, quad), sample(spec.u_d, quad),
                   std::nullopt, std::nullopt};
  if (spec.bounds) {
    s.lower = sample(spec.bounds->lower, quad);
    s.upper = sample(spec.bounds->upper, quad);
  }
  return s;
}

EstimatorInput make_input(const ScalarField& eta, const ScalarField& zeta, const FluxField& tau, const FluxField& rho,
                          const QuadratureSet& quad) {
  return {sample(eta, quad), sample_gradient(eta, quad), sample(zeta, quad), sample_gradient(zeta, quad),
          sample(tau, quad), sample_divergence(tau, quad), sample(rho, quad), sample_divergence(rho, quad)};
}

double project_control(double zeta, double u_d, double lower, double upper, double lambda) {
  return std::min(upper, std::max(lower, u_d - zeta / lambda));
}

QuadratureField project_control(const QuadratureField& zeta, const ProblemSamples& data, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  require_same(zeta.quadrature(), data.u_d.quadrature());
  Eigen::ArrayXd v = data.u_d.values() - zeta.values() / lambda;
  if (data.lower) v = v.max(data.lower->values());
  if (data.upper) v = v.min(data.upper->values());
  return QuadratureField(zeta.quadrature(), std::move(v));
}

double MajorantTerms::value(double alpha, double beta) const {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw std::invalid_argument("alpha and beta must be positive");
  return (1.0 + alpha) * a1 + (1.0 + alpha) * (1.0 + beta) / alpha * a2 +
         (1.0 + alpha) * (1.0 + beta) / (alpha * beta) * a3 + control;
}

MajorantTerms majorant_terms(const EstimatorInput& in, const QuadratureField& v, const ProblemSamples& data,
                             const ProblemSpec& spec) {
  require_same(in.eta.quadrature(), data.f.quadrature());
  require_same(v.quadrature(), data.f.quadrature());
  const double c = spec.c_f, nu = spec.nu_lower;
  MajorantTerms t;
  t.a1 = 0.5 * squared(l2_norm(in.eta - data.y_d));
  t.a2 = c * c / (2.0 * nu * nu) * squared(l2_norm(in.tau - data.nu * in.grad_eta));
  t.a3 = std::pow(c, 4) / (2.0 * nu * nu) * squared(l2_norm(data.f + v + in.div_tau));
  t.control = 0.5 * spec.lambda * squared(l2_norm(v - data.u_d));
  return t;
}

double majorant(const EstimatorParams& params, const MajorantTerms& terms) {
  return terms.value(params.alpha, params.beta);
}

MinorantTerms minorant(const EstimatorInput& in, const ProblemSamples& data, const ProblemSpec& spec) {
  require_same(in.eta.quadrature(), data.f.quadrature());
  const QuadratureField v = project_control(in.zeta, data, spec.lambda);
  const QuadratureField r1e = data.f + v + in.div_tau;
  const QuadratureVectorField r2e = in.tau - data.nu * in.grad_eta;
  const QuadratureField r3e = in.eta - data.y_d;

  MinorantTerms t;
  t.r1_eta = l2_norm(r1e);
  t.r1_zeta = l2_norm(r3e + in.div_rho);
  t.r2_eta = l2_norm(r2e);
  t.r2_zeta = l2_norm(in.rho - data.nu * in.grad_zeta);
  t.r3_eta = l2_norm(r3e);
  t.r3_zeta = l2_norm(in.zeta);
  t.r4 = l2_inner(r1e, in.zeta);
  t.r5 = l2_inner(r2e, in.grad_zeta);
  t.control = 0.5 * spec.lambda * squared(l2_norm(v - data.u_d));

  const double c = spec.c_f, nu = spec.nu_lower, lambda = spec.lambda;
  const double adjoint = (c * t.r1_zeta + t.r2_zeta) / nu;
  const double state = std::pow(c, 3) / (lambda * nu) * t.r1_zeta + c * c / (lambda * nu) * t.r2_zeta +
                       c * t.r1_eta + t.r2_eta;
  t.value = 0.5 * squared(t.r3_eta) + t.control + t.r4 + t.r5 - adjoint * state;
  return t;
}

double adjoint_error_bound(const MinorantTerms& terms, const ProblemSpec& spec) {
  return (spec.c_f * terms.r1_zeta + terms.r2_zeta) / spec.nu_lower;
}

double adjoint_error_bound(const EstimatorInput& in, const ProblemSamples& data, const ProblemSpec& spec) {
  const double r1 = l2_norm(in.eta - data.y_d + in.div_rho);
  const double r2 = l2_norm(in.rho - data.nu * in.grad_zeta);
  return (spec.c_f * r1 + r2) / spec.nu_lower;
}

EstimatorParams optimize_params(const MajorantTerms& terms, const EstimatorParams& start) {
  EstimatorParams p = start;
  p.alpha = clamp_param(p.alpha);
  p.beta = clamp_param(p.beta);
  double previous = terms.value(p.alpha, p.beta);
  for (int sweep = 0; sweep < p.max_sweeps; ++sweep) {
    if (terms.a2 > 0.0 && terms.a3 > 0.0) p.beta = clamp_param(std::sqrt(terms.a3 / terms.a2));
    else if (terms.a2 > 0.0) p.beta = param_min;
    else if (terms.a3 > 0.0) p.beta = param_max;

    const double b = (1.0 + p.beta) * (terms.a2 + terms.a3 / p.beta);
    if (b <= 0.0) p.alpha = param_min;
    else if (terms.a1 <= 0.0) p.alpha = param_max;
    else p.alpha = clamp_param(std::sqrt(b / terms.a1));

    const double current = terms.value(p.alpha, p.beta);
    const bool done = std::abs(previous - current) <= p.tolerance * std::abs(current);
    previous = current;
    if (done) break;
  }
  return p;
}

double error_majorant(const EstimatorParams& params, const MajorantTerms& at_v_zeta, const MinorantTerms& minor) {
  return majorant(params, at_v_zeta) - minor.value;
}

double error_majorant_h1(const EstimatorParams& params, const MajorantTerms& at_v_zeta, const MinorantTerms& minor,
                         const ProblemSpec& spec) {
  const double c = spec.c_f;
  return error_majorant(params, at_v_zeta, minor) +
         3.0 * spec.lambda / (2.0 * c * c) * squared(minor.r2_eta + c * minor.r1_eta);
}

ControlGap control_gap_bound(const QuadratureField& p_eta, const QuadratureField& zeta, const ProblemSamples& data,
                             double lambda) {
  const QuadratureField vp = project_control(p_eta, data, lambda);
  const QuadratureField vz = project_control(zeta, data, lambda);
  return {l2_norm(vp - vz), l2_norm(p_eta - zeta) / lambda};
}

EfficiencyIndices efficiency_indices(double j_plus, double j_minus, double exact_cost) {
  if (!(j_minus > 0.0)) throw std::domain_error("efficiency index undefined for a nonpositive minorant");
  if (!(exact_cost > 0.0)) throw std::domain_error("efficiency index undefined for a nonpositive cost");
  return {j_plus / exact_cost, exact_cost / j_minus, j_plus / j_minus};
}

BoundsReport evaluate_bounds(const EstimatorInput& in, const ProblemSamples& data, const ProblemSpec& spec,
                             const EstimatorParams& start) {
  BoundsReport r;
  r.components = minorant(in, data, spec);
  const QuadratureField v = project_control(in.zeta, data, spec.lambda);
  const MajorantTerms terms = majorant_terms(in, v, data, spec);
  r.params = optimize_params(terms, start);
  r.j_plus = majorant(r.params, terms);
  r.j_minus = r.components.value;
  r.m_plus = error_majorant(r.params, terms, r.components);
  r.m_plus_1 = error_majorant_h1(r.params, terms, r.components, spec);
  if (spec.exact && r.j_minus > 0.0 && spec.exact->cost > 0.0) {
    const EfficiencyIndices e = efficiency_indices(r.j_plus, r.j_minus, spec.exact->cost);
    r.i_plus = e.i_plus;
    r.i_minus = e.i_minus;
    r.i_two_sided = e.i_two_sided;
  }
  return r;
}

BoundsReport evaluate_bounds(const ScalarField& eta, const ScalarField& zeta, const ProblemSpec& spec,
                             QuadratureRule rule) {
  if (&eta.mesh() != &zeta.mesh()) throw std::invalid_argument("eta and zeta live on different meshes");
  const QuadratureSet quad(eta.mesh(), rule);
  const EstimatorInput in =
      make_input(eta, zeta, reconstruct_flux(eta, spec), reconstruct_flux(zeta, spec), quad);
  return evaluate_bounds(in, sample_problem(spec, quad), spec);
}

} // namespace ocb
