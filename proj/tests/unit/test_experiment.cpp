#include <gtest/gtest.h>

#include <sstream>

#include "ocbounds/experiment.hpp"

using namespace ocb;

TEST(Config, ParsesKeyValueLinesWithComments) {
  std::istringstream in(
      "# sweep\n"
      "grids = 4, 8,16\n"
      "lambda = 1e-4   # small\n"
      "\n"
      "preset = custom\n"
      "f = 1 + x\n"
      "constrained = yes\n"
      "ub = 3\n"
      "quadrature = edge-midpoint\n"
      "format = json\n");
  const RunConfig c = parse_config(in);
  EXPECT_EQ(c.grids, (std::vector<int>{4, 8, 16}));
  EXPECT_DOUBLE_EQ(c.lambda, 1e-4);
  EXPECT_EQ(c.preset, "custom");
  EXPECT_EQ(c.f, "1 + x");
  EXPECT_TRUE(c.constrained);
  EXPECT_EQ(c.ua, "");
  EXPECT_EQ(c.ub, "3");
  EXPECT_EQ(c.quadrature, QuadratureRule::EdgeMidpoint);
  EXPECT_EQ(c.format, "json");
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, LaterValuesOverrideTheBase) {
  RunConfig base;
  base.lambda = 0.5;
  base.ref_factor = 0;
  std::istringstream in("lambda = 0.25\n");
  const RunConfig c = parse_config(in, base);
  EXPECT_DOUBLE_EQ(c.lambda, 0.25);
  EXPECT_EQ(c.ref_factor, 0);
}

TEST(Config, RejectsMalformedInput) {
  RunConfig c;
  EXPECT_THROW(set_config_value(c, "colour", "red"), std::invalid_argument);
  EXPECT_THROW(set_config_value(c, "lambda", "0.1x"), std::invalid_argument);
  EXPECT_THROW(set_config_value(c, "max_iter", "2.5"), std::invalid_argument);
  EXPECT_THROW(set_config_value(c, "constrained", "maybe"), std::invalid_argument);
  EXPECT_THROW(set_config_value(c, "quadrature", "gauss"), std::invalid_argument);
  std::istringstream in("lambda 0.1\n");
  EXPECT_THROW(parse_config(in), std::invalid_argument);
}

TEST(Config, ValidationCatchesBadValues) {
  const auto bad = [](auto mutate) {
    RunConfig c;
    mutate(c);
    EXPECT_THROW(c.validate(), std::invalid_argument);
  };
  bad([](RunConfig& c) { c.grids = {8, 8}; });
  bad([](RunConfig& c) { c.grids = {0}; });
  bad([](RunConfig& c) { c.lambda = 0.0; });
  bad([](RunConfig& c) { c.preset = "cosine"; });
  bad([](RunConfig& c) { c.format = "xml"; });
  bad([](RunConfig& c) { c.nu_upper = 0.5; });
  bad([](RunConfig& c) { c.ref_factor = -1; });
  RunConfig empty;
  empty.grids.clear();
  EXPECT_NO_THROW(empty.validate());
  EXPECT_TRUE(run_experiment(empty).empty());
}

TEST(Config, GridList) {
  EXPECT_EQ(parse_grid_list(" 2 ,4,"), (std::vector<int>{2, 4}));
  EXPECT_TRUE(parse_grid_list("").empty());
  EXPECT_THROW(parse_grid_list("4,a"), std::invalid_argument);
}

TEST(Problem, SinePresetKeepsExactDataOnlyWithoutBounds) {
  RunConfig c;
  EXPECT_TRUE(build_problem(c).exact.has_value());
  c.constrained = true;
  c.ub = "15";
  const ProblemSpec s = build_problem(c);
  EXPECT_FALSE(s.exact.has_value());
  ASSERT_TRUE(s.bounds);
  EXPECT_DOUBLE_EQ(s.bounds->upper(Point(0.3, 0.3)), 15.0);
  EXPECT_TRUE(std::isinf(s.bounds->lower(Point(0.3, 0.3))));
}

TEST(Problem, CustomPresetParsesExpressions) {
  RunConfig c;
  c.preset = "custom";
  c.y_d = "x * y";
  c.exact_cost = 1.5;
  const ProblemSpec s = build_problem(c);
  EXPECT_DOUBLE_EQ(s.y_d(Point(0.5, 0.25)), 0.125);
  ASSERT_TRUE(s.exact);
  EXPECT_DOUBLE_EQ(s.exact->cost, 1.5);
  c.f = "1 +";
  EXPECT_THROW(build_problem(c), std::invalid_argument);
}

TEST(Experiment, SmallSineSweepSatisfiesTheGuarantees) {
  RunConfig c;
  c.grids = {4, 8};
  c.ref_factor = 2;
  const auto reports = run_experiment(c);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[1].grid, 8);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.norms.has_value());
    EXPECT_TRUE(r.bounds.i_m1.has_value());
    EXPECT_GT(r.minres_iterations, 0);
  }
  EXPECT_TRUE(guaranteed_violations(reports, sine_problem_cost(c.lambda)).empty());
  EXPECT_LT(reports[1].bounds.m_plus, reports[0].bounds.m_plus);
}

TEST(Experiment, RepeatedRunsAreIdentical) {
  RunConfig c;
  c.grids = {6};
  c.ref_factor = 0;
  const auto a = run_experiment(c), b = run_experiment(c);
  EXPECT_EQ(a[0].bounds.j_plus, b[0].bounds.j_plus);
  EXPECT_EQ(a[0].bounds.j_minus, b[0].bounds.j_minus);
  EXPECT_EQ(a[0].minres_iterations, b[0].minres_iterations);
  EXPECT_FALSE(a[0].norms.has_value());
}

TEST(Experiment, ConstrainedCustomRunCountsOuterIterations) {
  RunConfig c;
  c.grids = {8};
  c.constrained = true;
  c.ua = "0";
  c.ub = "15";
  const auto r = run_experiment(c);
  EXPECT_GE(r[0].active_set_iterations, 1);
  EXPECT_FALSE(r[0].norms.has_value());
  EXPECT_TRUE(guaranteed_violations(r).empty());
}

TEST(Experiment, ViolationsAreReported) {
  GridReport r;
  r.grid = 8;
  r.bounds.j_plus = 1.0;
  r.bounds.j_minus = 2.0;
  r.bounds.m_plus = -1.0;
  r.norms = CombinedNorms{};
  r.norms->norm_sq = 1.0;
  r.norms->norm1_sq = 1.0;
  const auto v = guaranteed_violations({r}, 3.0);
  EXPECT_EQ(v.size(), 5u);
  EXPECT_NE(v[0].find("grid 8"), std::string::npos);
}

TEST(Experiment, SolverFailureNamesTheGrid) {
  RunConfig c;
  c.grids = {8};
  c.max_iter = 1;
  c.ref_factor = 0;
  try {
    run_experiment(c);
    FAIL() << "expected a solver failure";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("grid 8"), std::string::npos);
  }
}
