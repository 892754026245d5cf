#include <gtest/gtest.h>

#include <cmath>

#include "ocbounds/quadrature.hpp"

using namespace ocb;

namespace {

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

// int over the reference triangle of x^a y^b = a! b! / (a + b + 2)!
double monomial_integral(int a, int b) { return factorial(a) * factorial(b) / factorial(a + b + 2); }

double apply_rule(const ReferenceRule& r, int a, int b) {
  double s = 0.0;
  for (std::size_t q = 0; q < r.size(); ++q) {
    const double x = r.barycentric[q][1], y = r.barycentric[q][2];
    s += r.weights[q] * 0.5 * std::pow(x, a) * std::pow(y, b);
  }
  return s;
}

} // namespace

TEST(Quadrature, WeightsSumToOneAndPointsAreInside) {
  for (auto rule : {QuadratureRule::EdgeMidpoint, QuadratureRule::SevenPoint}) {
    const auto& r = reference_rule(rule);
    double s = 0.0;
    for (std::size_t q = 0; q < r.size(); ++q) {
      s += r.weights[q];
      EXPECT_NEAR(r.barycentric[q].sum(), 1.0, 1e-15);
      EXPECT_GE(r.barycentric[q].minCoeff(), 0.0);
    }
    EXPECT_NEAR(s, 1.0, 1e-14);
  }
}

TEST(Quadrature, SevenPointRuleIsExactUpToDegreeFive) {
  const auto& r = reference_rule(QuadratureRule::SevenPoint);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b) EXPECT_NEAR(apply_rule(r, a, b), monomial_integral(a, b), 1e-15) << a << b;
  EXPECT_GT(std::abs(apply_rule(r, 6, 0) - monomial_integral(6, 0)), 1e-8);
}

TEST(Quadrature, EdgeMidpointRuleIsExactUpToDegreeTwo) {
  const auto& r = reference_rule(QuadratureRule::EdgeMidpoint);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 2; ++b) EXPECT_NEAR(apply_rule(r, a, b), monomial_integral(a, b), 1e-15);
  EXPECT_GT(std::abs(apply_rule(r, 3, 0) - monomial_integral(3, 0)), 1e-6);
}

TEST(Quadrature, ParsesRuleIdentifiers) {
  EXPECT_EQ(parse_quadrature_rule("7-point"), QuadratureRule::SevenPoint);
  EXPECT_EQ(parse_quadrature_rule("degree5"), QuadratureRule::SevenPoint);
  EXPECT_EQ(parse_quadrature_rule("edge-midpoint"), QuadratureRule::EdgeMidpoint);
  EXPECT_EQ(parse_quadrature_rule(to_string(QuadratureRule::EdgeMidpoint)), QuadratureRule::EdgeMidpoint);
  EXPECT_THROW(parse_quadrature_rule("gauss-17"), std::invalid_argument);
}

TEST(Quadrature, SetIntegratesQuadraticsOverTheSquare) {
  const Mesh m(3);
  const QuadratureSet q(m, QuadratureRule::EdgeMidpoint);
  EXPECT_EQ(q.size(), m.num_triangles() * 3);
  double s = 0.0, area = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& p = q.points()[i];
    s += q.weights()[i] * p.x() * p.y();
    area += q.weights()[i];
  }
  EXPECT_NEAR(area, 1.0, 1e-14);
  EXPECT_NEAR(s, 0.25, 1e-14);
  EXPECT_EQ(q.point(4, 2), q.points()[q.index(4, 2)]);
}
