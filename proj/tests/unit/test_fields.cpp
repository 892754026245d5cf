#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ocbounds/fields.hpp"
#include "oracles.hpp"

using namespace ocb;

TEST(ScalarField, ValidatesLengthAndBoundaryValues) {
  const Mesh m(2);
  EXPECT_THROW(ScalarField(m, Eigen::VectorXd::Zero(8)), std::invalid_argument);
  EXPECT_THROW(ScalarField(m, Eigen::VectorXd::Ones(9), true), std::invalid_argument);
  EXPECT_NO_THROW(ScalarField(m, Eigen::VectorXd::Ones(9), false));
}

TEST(ScalarField, InterpolatesLinearFunctionsExactly) {
  const Mesh m(3);
  const auto g = [](const Point& x) { return 1.0 + 2.0 * x.x() - 0.5 * x.y(); };
  const ScalarField f = ScalarField::interpolate(m, g);
  const Point p(0.41, 0.73);
  EXPECT_NEAR(f.value(m.locate(p), p), g(p), 1e-14);
  for (int t = 0; t < int(m.num_triangles()); ++t) EXPECT_NEAR((f.gradient(t) - Vec2(2.0, -0.5)).norm(), 0.0, 1e-12);
}

TEST(ScalarField, DirichletInterpolationZeroesTheBoundary) {
  const Mesh m(3);
  const ScalarField f = ScalarField::interpolate(m, [](const Point&) { return 1.0; }, true);
  for (int v = 0; v < int(m.num_vertices()); ++v) EXPECT_EQ(f.values()[v], m.is_boundary_vertex(v) ? 0.0 : 1.0);
}

TEST(QuadratureFields, NormsAndInnerProductsOfPolynomials) {
  const Mesh m(4);
  const QuadratureSet q(m, QuadratureRule::SevenPoint);
  const auto x = sample([](const Point& p) { return p.x(); }, q);
  const auto y = sample([](const Point& p) { return p.y(); }, q);
  EXPECT_NEAR(integrate(x * y), 0.25, 1e-14);
  EXPECT_NEAR(l2_norm(x), std::sqrt(1.0 / 3.0), 1e-14);
  EXPECT_NEAR(l2_inner(x, y), 0.25, 1e-14);
  const auto v = sample([](const Point& p) { return Vec2(p.x(), 2.0); }, q);
  EXPECT_NEAR(l2_norm(v), std::sqrt(1.0 / 3.0 + 4.0), 1e-13);
  EXPECT_NEAR(l2_inner(v, x * v), 0.25 + 2.0, 1e-13);
  EXPECT_NEAR(l2_norm(2.0 * x - x - x), 0.0, 1e-15);
}

TEST(QuadratureFields, MixingQuadratureSetsThrows) {
  const Mesh m(2);
  const QuadratureSet a(m, QuadratureRule::SevenPoint), b(m, QuadratureRule::SevenPoint);
  const QuadratureField fa(a, 1.0), fb(b, 1.0);
  EXPECT_THROW(fa + fb, std::invalid_argument);
  const Mesh other(2);
  EXPECT_THROW(sample(ScalarField::zero(other), a), std::invalid_argument);
}

TEST(QuadratureFields, L2ErrorOfInterpolantMatchesGaussOracle) {
  // |I_h s - s| with s = sin(pi x) sin(pi y), reference by collapsed Gauss
  const double pi = std::numbers::pi;
  const auto s = [pi](const Point& p) { return std::sin(pi * p.x()) * std::sin(pi * p.y()); };
  const Mesh m(4);
  const QuadratureSet q(m, QuadratureRule::SevenPoint);
  const ScalarField ih = ScalarField::interpolate(m, s, true);
  const double computed = l2_norm(sample(ih, q) - sample(s, q));

  const oracle::Grid g(4);
  double ref = 0.0;
  for (const auto& tri : g.t) {
    Eigen::Matrix3d mm;
    for (int a = 0; a < 3; ++a) mm.row(a) << 1.0, g.v[tri[a]].x(), g.v[tri[a]].y();
    const Eigen::Vector3d coef = mm.inverse() * Eigen::Vector3d(s(g.v[tri[0]]), s(g.v[tri[1]]), s(g.v[tri[2]]));
    ref += oracle::integrate_triangle(
        [&](double x, double y) {
          const double e = coef[0] + coef[1] * x + coef[2] * y - std::sin(pi * x) * std::sin(pi * y);
          return e * e;
        },
        g.v[tri[0]], g.v[tri[1]], g.v[tri[2]], 14);
  }
  // the degree 5 rule is not exact for e^2
  EXPECT_NEAR(computed, std::sqrt(ref), 1e-3 * std::sqrt(ref));
}

TEST(QuadratureFields, TransferredSamplingEvaluatesCoarseField) {
  const Mesh coarse(2), fine(6);
  const QuadratureSet q(fine, QuadratureRule::SevenPoint);
  const auto g = [](const Point& p) { return 3.0 * p.x() - p.y(); };
  const ScalarField c = ScalarField::interpolate(coarse, g);
  EXPECT_NEAR(l2_norm(sample_transferred(c, q) - sample(g, q)), 0.0, 1e-13);
  const auto grad = sample_gradient_transferred(c, q);
  EXPECT_NEAR(l2_norm(grad - sample([](const Point&) { return Vec2(3.0, -1.0); }, q)), 0.0, 1e-12);
}

TEST(QuadratureFields, ElementwiseSamplingRequiresOneValuePerTriangle) {
  const Mesh m(2);
  const QuadratureSet q(m, QuadratureRule::EdgeMidpoint);
  EXPECT_THROW(sample_elementwise(Eigen::VectorXd::Zero(3), q), std::invalid_argument);
  const auto f = sample_elementwise(Eigen::VectorXd::LinSpaced(8, 0, 7), q);
  EXPECT_DOUBLE_EQ(f.values()[q.index(5, 1)], 5.0);
}
