#pragma once

/// \file estimator.hpp
/// \brief Guaranteed two-sided bounds for the optimal cost and computable
/// error majorants.
///
/// All quantities are integrals of sampled fields over one QuadratureSet. The
/// approximations (eta, zeta) may be arbitrary; the fluxes (tau, rho) only
/// need to be H(div) conforming. With v_zeta = clip(u_d - zeta/lambda, u_a, u_b)
/// evaluated at the quadrature points,
///
///   J+ = (1+a)/2 |eta-y_d|^2 + (1+a)(1+b) C^2/(2 a nu^2) |tau - nu grad eta|^2
///      + (1+a)(1+b) C^4/(2 a b nu^2) |f + v + div tau|^2 + lambda/2 |v - u_d|^2
///
///   J- = 1/2 |eta-y_d|^2 + lambda/2 |v_zeta - u_d|^2 + (f + v_zeta + div tau, zeta)
///      + (tau - nu grad eta, grad zeta) - 1/nu (C R1z + R2z) (C^3/(lambda nu) R1z
///      + C^2/(lambda nu) R2z + C R1e + R2e)
///
/// where C is the Friedrichs constant, nu the lower bound of the diffusion
/// coefficient and the residual norms R are those of MinorantTerms.

#include <optional>

#include "ocbounds/flux.hpp"

namespace ocb {

struct EstimatorParams {
  double alpha = 1.0;
  double beta = 1.0;
  double tolerance = 1e-10; ///< relative majorant change between sweeps
  int max_sweeps = 100;
};

/// Problem data sampled at the points of one QuadratureSet.
struct ProblemSamples {
  QuadratureField nu;
  QuadratureField f;
  QuadratureField y_d;
  QuadratureField u_d;
  std::optional<QuadratureField> lower;
  std::optional<QuadratureField> upper;
};

ProblemSamples sample_problem(const ProblemSpec& spec, const QuadratureSet& quad);

/// Approximations, their gradients and the fluxes with their divergences.
struct EstimatorInput {
  QuadratureField eta;
  QuadratureVectorField grad_eta;
  QuadratureField zeta;
  QuadratureVectorField grad_zeta;
  QuadratureVectorField tau;
  QuadratureField div_tau;
  QuadratureVectorField rho;
  QuadratureField div_rho;
};

EstimatorInput make_input(const ScalarField& eta, const ScalarField& zeta, const FluxField& tau, const FluxField& rho,
                          const QuadratureSet& quad);

double project_control(double zeta, double u_d, double lower, double upper, double lambda);
/// v_zeta at every point; unconstrained data gives u_d - zeta/lambda.
QuadratureField project_control(const QuadratureField& zeta, const ProblemSamples& data, double lambda);

/// Coefficients of the majorant as a function of (alpha, beta):
/// J+ = (1+a) a1 + (1+a)(1+b)/a a2 + (1+a)(1+b)/(a b) a3 + control.
struct MajorantTerms {
  double a1 = 0.0; ///< |eta - y_d|^2 / 2
  double a2 = 0.0; ///< C^2/(2 nu^2) |tau - nu grad eta|^2
  double a3 = 0.0; ///< C^4/(2 nu^2) |f + v + div tau|^2
  double control = 0.0; ///< lambda/2 |v - u_d|^2

  /// Throws std::invalid_argument for nonpositive alpha or beta.
  double value(double alpha, double beta) const;
};

MajorantTerms majorant_terms(const EstimatorInput& in, const QuadratureField& v, const ProblemSamples& data,
                             const ProblemSpec& spec);

double majorant(const EstimatorParams& params, const MajorantTerms& terms);

struct MinorantTerms {
  double r1_eta = 0.0;  ///< |f + v_zeta + div tau|
  double r1_zeta = 0.0; ///< |eta - y_d + div rho|
  double r2_eta = 0.0;  ///< |tau - nu grad eta|
  double r2_zeta = 0.0; ///< |rho - nu grad zeta|
  double r3_eta = 0.0;  ///< |eta - y_d|
  double r3_zeta = 0.0; ///< |zeta|
  double r4 = 0.0;      ///< (f + v_zeta + div tau, zeta)
  double r5 = 0.0;      ///< (tau - nu grad eta, grad zeta)
  double control = 0.0; ///< lambda/2 |v_zeta - u_d|^2
  double value = 0.0;
};

MinorantTerms minorant(const EstimatorInput& in, const ProblemSamples& data, const ProblemSpec& spec);

/// Upper bound for |grad(p_eta - zeta)|, with p_eta the exact adjoint of eta.
double adjoint_error_bound(const MinorantTerms& terms, const ProblemSpec& spec);
double adjoint_error_bound(const EstimatorInput& in, const ProblemSamples& data, const ProblemSpec& spec);

/// Alternating closed-form minimisation of the majorant over alpha and beta,
/// starting from `start`. Degenerate coefficients pin the affected parameter
/// to a bound of [1e-8, 1e8].
EstimatorParams optimize_params(const MajorantTerms& terms, const EstimatorParams& start = {});

/// J+ - J-, bounds the squared combined norm of u - v_zeta.
double error_majorant(const EstimatorParams& params, const MajorantTerms& at_v_zeta, const MinorantTerms& minor);
/// M+ plus 3 lambda/(2 C^2) (R2e + C R1e)^2, bounds the weighted H1 variant.
double error_majorant_h1(const EstimatorParams& params, const MajorantTerms& at_v_zeta, const MinorantTerms& minor,
                         const ProblemSpec& spec);

struct ControlGap {
  double lhs = 0.0; ///< |v_{p_eta} - v_zeta|
  double rhs = 0.0; ///< |p_eta - zeta| / lambda
};

/// Both fields must be sampled on the same QuadratureSet as `data`.
ControlGap control_gap_bound(const QuadratureField& p_eta, const QuadratureField& zeta, const ProblemSamples& data,
                             double lambda);

struct EfficiencyIndices {
  double i_plus = 0.0;
  double i_minus = 0.0;
  double i_two_sided = 0.0;
};

/// Throws std::domain_error if J- <= 0 or the exact cost is not positive.
EfficiencyIndices efficiency_indices(double j_plus, double j_minus, double exact_cost);

struct BoundsReport {
  double j_plus = 0.0;
  double j_minus = 0.0;
  double m_plus = 0.0;
  double m_plus_1 = 0.0;
  MinorantTerms components;
  EstimatorParams params;
  std::optional<double> i_plus;
  std::optional<double> i_minus;
  std::optional<double> i_two_sided;
  std::optional<double> i_m1;

  /// J- <= J+ and M+ >= 0; M+_1 >= M+ follows.
  bool consistent() const noexcept { return j_minus <= j_plus && m_plus >= 0.0; }
};

/// Full evaluation for discrete (eta, zeta): fluxes by reconstruct_flux,
/// majorant at v_zeta with optimised parameters, minorant, error majorants,
/// and J-based indices when spec.exact is set. i_m1 is left empty.
BoundsReport evaluate_bounds(const ScalarField& eta, const ScalarField& zeta, const ProblemSpec& spec,
                             QuadratureRule rule = QuadratureRule::SevenPoint);

/// Same from already sampled input.
BoundsReport evaluate_bounds(const EstimatorInput& in, const ProblemSamples& data, const ProblemSpec& spec,
                             const EstimatorParams& start = {});

} // namespace ocb
