#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ocbounds/flux.hpp"
#include "oracles.hpp"

using namespace ocb;

namespace {

Eigen::Vector3d centroid_bc() { return Eigen::Vector3d::Constant(1.0 / 3.0); }

Point at(const Mesh& m, int t, const Eigen::Vector3d& b) {
  const auto& tri = m.triangle(t);
  return b[0] * m.vertex(tri[0]) + b[1] * m.vertex(tri[1]) + b[2] * m.vertex(tri[2]);
}

} // namespace

TEST(Flux, ZeroFieldIsZero) {
  const Mesh m(3);
  const FluxField z = FluxField::zero(m);
  EXPECT_EQ(z.edge_fluxes().size(), static_cast<Eigen::Index>(m.num_edges()));
  EXPECT_EQ(z.value_at(4, centroid_bc()).norm(), 0.0);
  EXPECT_EQ(flux_divergence(z).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_THROW(FluxField(m, Eigen::VectorXd::Zero(3)), std::invalid_argument);
}

TEST(Flux, ReproducesRaviartThomasFieldsExactly) {
  // a + b x lies in RT0; interpolation must reproduce it everywhere
  const Mesh m(5);
  const VectorFunction g = [](const Point& x) { return Vec2(0.3 + 1.5 * x.x(), -0.7 + 1.5 * x.y()); };
  const FluxField f = interpolate_flux(m, g);
  const Eigen::VectorXd div = flux_divergence(f);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < int(m.num_triangles()); ++t) {
    double a = u(rng), b = u(rng) * (1 - a);
    const Eigen::Vector3d bc(a, b, 1 - a - b);
    EXPECT_LT((f.value_at(t, bc) - g(at(m, t, bc))).norm(), 1e-12);
    EXPECT_NEAR(div[t], 3.0, 1e-11);
    EXPECT_NEAR(f.divergence(t), 3.0, 1e-11);
  }
}

TEST(Flux, ConstantFieldIsDivergenceFree) {
  const Mesh m(4);
  const FluxField f = interpolate_flux(m, [](const Point&) { return Vec2(2.0, -1.0); });
  EXPECT_LT(flux_divergence(f).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((f.value_at(9, Eigen::Vector3d(0.2, 0.5, 0.3)) - Vec2(2.0, -1.0)).norm(), 1e-12);
}

TEST(Flux, NormalComponentAtEdgeMidpointEqualsTheDof) {
  const Mesh m(3);
  std::mt19937 rng(3);
  std::normal_distribution<double> n;
  Eigen::VectorXd d(m.num_edges());
  for (auto& x : d) x = n(rng);
  const FluxField f(m, d);
  for (int t = 0; t < int(m.num_triangles()); ++t)
    for (int k = 0; k < 3; ++k) {
      Eigen::Vector3d bc = Eigen::Vector3d::Constant(0.5);
      bc[k] = 0.0;
      const int e = m.triangle_edges(t)[k];
      EXPECT_NEAR(f.value_at(t, bc).dot(m.edge_normal(e)), d[e], 1e-12);
    }
}

TEST(Flux, DivergenceTheoremOverTheSquare) {
  const Mesh m(6);
  std::mt19937 rng(11);
  std::normal_distribution<double> n;
  Eigen::VectorXd d(m.num_edges());
  for (auto& x : d) x = n(rng);
  const FluxField f(m, d);
  const Eigen::VectorXd div = flux_divergence(f);
  double volume = 0.0, boundary = 0.0;
  for (int t = 0; t < int(m.num_triangles()); ++t) volume += div[t] * m.area(t);
  for (int e = 0; e < int(m.num_edges()); ++e)
    if (m.is_boundary_edge(e)) boundary += d[e] * m.edge_length(e);
  EXPECT_NEAR(volume, boundary, 1e-11);
}

TEST(Flux, InterpolationIsLinear) {
  const Mesh m(4);
  const VectorFunction g1 = [](const Point& x) { return Vec2(std::sin(x.x()), x.y() * x.y()); };
  const VectorFunction g2 = [](const Point& x) { return Vec2(x.x() * x.y(), std::exp(x.x())); };
  const FluxField a = interpolate_flux(m, g1), b = interpolate_flux(m, g2);
  const FluxField c = interpolate_flux(m, [&](const Point& x) -> Vec2 { return 2.0 * g1(x) - 3.0 * g2(x); });
  EXPECT_LT((c.edge_fluxes() - (2.0 * a.edge_fluxes() - 3.0 * b.edge_fluxes())).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Flux, InterpolationUsesMeanNormalComponent) {
  const Mesh m(2);
  // degree 5 along each edge, integrated exactly by three Gauss points
  const VectorFunction g = [](const Point& x) { return Vec2(x.x() * x.x() * x.y(), std::pow(x.y(), 5) - x.x()); };
  const FluxField f = interpolate_flux(m, g);
  const auto [q, w] = oracle::gauss_legendre(8);
  for (int e = 0; e < int(m.num_edges()); ++e) {
    const Point a = m.vertex(m.edge(e)[0]), b = m.vertex(m.edge(e)[1]);
    double mean = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) mean += w[i] * g(a + q[i] * (b - a)).dot(m.edge_normal(e));
    EXPECT_NEAR(f.edge_fluxes()[e], mean, 1e-12);
  }
}

TEST(Flux, ReconstructionOfLinearFieldIsExact) {
  // grad of a global linear function is constant and continuous
  const Mesh m(5);
  const ProblemSpec spec = sine_problem();
  const ScalarField y = ScalarField::interpolate(m, [](const Point& x) { return 2.0 * x.x() - x.y(); });
  const FluxField f = reconstruct_flux(y, spec);
  for (int t = 0; t < int(m.num_triangles()); t += 7)
    EXPECT_LT((f.value_at(t, Eigen::Vector3d(0.1, 0.6, 0.3)) - Vec2(2.0, -1.0)).norm(), 1e-12);
  EXPECT_LT(flux_divergence(f).cwiseAbs().maxCoeff(), 1e-11);
}

TEST(Flux, ReconstructionAveragesNeighbourNormals) {
  const Mesh m(4);
  ProblemSpec spec = sine_problem();
  spec.nu = [](const Point& x) { return 1.0 + x.x(); };
  spec.nu_upper = 2.0;
  const ScalarField y = ScalarField::interpolate(m, [](const Point& x) { return x.x() * x.x() + x.y(); });
  const FluxField f = reconstruct_flux(y, spec);
  for (int e = 0; e < int(m.num_edges()); ++e) {
    const auto& et = m.edge_triangles(e);
    const auto side = [&](int t) {
      const auto& tri = m.triangle(t);
      const Point c = (m.vertex(tri[0]) + m.vertex(tri[1]) + m.vertex(tri[2])) / 3.0;
      return spec.nu(c) * y.gradient(t).dot(m.edge_normal(e));
    };
    const double expect = et[1] < 0 ? side(et[0]) : 0.5 * (side(et[0]) + side(et[1]));
    EXPECT_NEAR(f.edge_fluxes()[e], expect, 1e-12);
  }
}

TEST(Flux, EvaluationOutsideTheElementThrows) {
  const Mesh m(2);
  const FluxField f = FluxField::zero(m);
  const auto& tri = m.triangle(0);
  EXPECT_NO_THROW(flux_eval(f, 0, m.vertex(tri[1])));
  EXPECT_THROW(flux_eval(f, 0, Point(0.9, 0.9)), std::invalid_argument);
}

TEST(Flux, SampledValuesMatchPointEvaluation) {
  const Mesh m(3);
  const QuadratureSet quad(m, QuadratureRule::SevenPoint);
  const FluxField f = interpolate_flux(m, [](const Point& x) { return Vec2(x.y(), x.x() * x.x()); });
  const QuadratureVectorField s = sample(f, quad);
  const QuadratureField d = sample_divergence(f, quad);
  const Eigen::VectorXd div = flux_divergence(f);
  for (int t = 0; t < int(m.num_triangles()); ++t)
    for (int q = 0; q < quad.points_per_element(); ++q) {
      const auto i = static_cast<Eigen::Index>(quad.index(t, q));
      EXPECT_LT((Vec2(s.values().col(i)) - flux_eval(f, t, quad.point(t, q))).norm(), 1e-12);
      EXPECT_DOUBLE_EQ(d.values()[i], div[t]);
    }
}
