// Copyright 2026 The condiam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "condiam/simplex.hpp"

#include <array>
#include <cmath>
#include <random>

#include "gtest/gtest.h"

namespace condiam {
namespace {

LPConstraint row(std::vector<double> c, Sense s, double rhs) { return {std::move(c), s, rhs}; }

bool feasible(const LPProblem& lp, const std::vector<double>& x, double tol) {
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (x[j] < lp.lower[j] - tol || x[j] > lp.upper[j] + tol) return false;
  }
  for (const auto& c : lp.constraints) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < c.coeffs.size(); ++j) lhs += c.coeffs[j] * x[j];
    if (c.sense == Sense::kLessEqual && lhs > c.rhs + tol) return false;
    if (c.sense == Sense::kGreaterEqual && lhs < c.rhs - tol) return false;
    if (c.sense == Sense::kEqual && std::fabs(lhs - c.rhs) > tol) return false;
  }
  return true;
}

TEST(SimplexTest, SingleBoundedVariable) {
  LPProblem lp{{1.0}, {}, {-1.0}, {1.0}, true};
  LPSolution s = simplex_solve(lp);
  ASSERT_EQ(s.status, LPStatus::kOptimal);
  EXPECT_DOUBLE_EQ(s.objective_value, 1.0);
  lp.maximize = false;
  EXPECT_DOUBLE_EQ(simplex_solve(lp).objective_value, -1.0);
}

TEST(SimplexTest, BoxCorner) {
  LPProblem lp{{1.0, 1.0}, {}, {-1.0, -1.0}, {1.0, 1.0}, true};
  LPSolution s = simplex_solve(lp);
  ASSERT_EQ(s.status, LPStatus::kOptimal);
  EXPECT_DOUBLE_EQ(s.objective_value, 2.0);
  EXPECT_DOUBLE_EQ(s.x[0], 1.0);
  EXPECT_DOUBLE_EQ(s.x[1], 1.0);
}

TEST(SimplexTest, ClassicTextbook) {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36.
  LPProblem lp{{3, 5},
               {row({1, 0}, Sense::kLessEqual, 4), row({0, 2}, Sense::kLessEqual, 12),
                row({3, 2}, Sense::kLessEqual, 18)},
               {0, 0},
               {kInfinity, kInfinity},
               true};
  LPSolution s = simplex_solve(lp);
  ASSERT_EQ(s.status, LPStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, 36.0, 1e-12);
  EXPECT_NEAR(s.x[0], 2.0, 1e-12);
  EXPECT_NEAR(s.x[1], 6.0, 1e-12);
}

TEST(SimplexTest, Infeasible) {
  LPProblem lp{{1, 1},
               {row({1, 1}, Sense::kGreaterEqual, 3)},
               {-1, -1},
               {1, 1},
               true};
  EXPECT_EQ(simplex_solve(lp).status, LPStatus::kInfeasible);
}

TEST(SimplexTest, Unbounded) {
  LPProblem lp{{1, 0}, {row({1, -1}, Sense::kLessEqual, 1)}, {0, 0}, {kInfinity, kInfinity}, true};
  EXPECT_EQ(simplex_solve(lp).status, LPStatus::kUnbounded);
  LPProblem free{{1}, {}, {-kInfinity}, {kInfinity}, false};
  EXPECT_EQ(simplex_solve(free).status, LPStatus::kUnbounded);
}

TEST(SimplexTest, EqualityAndFreeVariables) {
  // min x + 2y subject to x - y = 1, x + y >= -3, both free: x = -1, y = -2.
  LPProblem lp{{1, 2},
               {row({1, -1}, Sense::kEqual, 1), row({1, 1}, Sense::kGreaterEqual, -3)},
               {-kInfinity, -kInfinity},
               {kInfinity, kInfinity},
               false};
  LPSolution s = simplex_solve(lp);
  ASSERT_EQ(s.status, LPStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, -5.0, 1e-12);
  EXPECT_NEAR(s.x[0], -1.0, 1e-12);
  EXPECT_NEAR(s.x[1], -2.0, 1e-12);
}

TEST(SimplexTest, RedundantEqualities) {
  LPProblem lp{{1, 1},
               {row({1, 1}, Sense::kEqual, 1), row({2, 2}, Sense::kEqual, 2)},
               {0, 0},
               {1, 1},
               true};
  LPSolution s = simplex_solve(lp);
  ASSERT_EQ(s.status, LPStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, 1.0, 1e-12);
}

// Degree-1 alternating polynomial on mesh {0, -1}: values y0, y1 in [-1, 1],
// no constraints, objective is the Lagrange extrapolation to 1: 2*y0 - y1.
TEST(SimplexTest, TwoPointExtrapolation) {
  LPProblem lp{{2, -1}, {}, {-1, -1}, {1, 1}, true};
  LPSolution s = simplex_solve(lp);
  ASSERT_EQ(s.status, LPStatus::kOptimal);
  EXPECT_DOUBLE_EQ(s.objective_value, 3.0);
}

TEST(SimplexTest, ZeroIterationBudget) {
  LPProblem lp{{3, 5},
               {row({1, 0}, Sense::kLessEqual, 4), row({3, 2}, Sense::kLessEqual, 18)},
               {0, 0},
               {kInfinity, kInfinity},
               true};
  SimplexOptions opts;
  opts.max_iterations = 0;
  EXPECT_EQ(simplex_solve(lp, opts).status, LPStatus::kIterationLimit);
}

TEST(SimplexTest, StatusNames) {
  EXPECT_EQ(to_string(LPStatus::kOptimal), "optimal");
  EXPECT_EQ(to_string(LPStatus::kInfeasible), "infeasible");
}

// Brute-force oracle for two-variable LPs inside a box: the optimum sits at an
// intersection of two boundary lines.
double brute_force_2d(const LPProblem& lp) {
  std::vector<std::array<double, 3>> lines;  // a x + b y = c
  for (const auto& c : lp.constraints) lines.push_back({c.coeffs[0], c.coeffs[1], c.rhs});
  lines.push_back({1, 0, lp.lower[0]});
  lines.push_back({1, 0, lp.upper[0]});
  lines.push_back({0, 1, lp.lower[1]});
  lines.push_back({0, 1, lp.upper[1]});
  double best = lp.maximize ? -kInfinity : kInfinity;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& p = lines[i];
      const auto& q = lines[j];
      const double det = p[0] * q[1] - p[1] * q[0];
      if (std::fabs(det) < 1e-12) continue;
      std::vector<double> x{(p[2] * q[1] - p[1] * q[2]) / det, (p[0] * q[2] - p[2] * q[0]) / det};
      if (!feasible(lp, x, 1e-9)) continue;
      const double v = lp.objective[0] * x[0] + lp.objective[1] * x[1];
      best = lp.maximize ? std::max(best, v) : std::min(best, v);
    }
  }
  return best;
}

TEST(SimplexPropertyTest, MatchesVertexEnumerationIn2D) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_int_distribution<int> count(0, 6);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    LPProblem lp;
    lp.objective = {u(rng), u(rng)};
    lp.lower = {-2.0 - std::fabs(u(rng)), -2.0 - std::fabs(u(rng))};
    lp.upper = {2.0 + std::fabs(u(rng)), 2.0 + std::fabs(u(rng))};
    lp.maximize = trial % 2 == 0;
    const int rows = count(rng);
    for (int r = 0; r < rows; ++r) {
      const Sense sense = r % 3 == 0 ? Sense::kGreaterEqual : Sense::kLessEqual;
      lp.constraints.push_back(row({u(rng), u(rng)}, sense, u(rng)));
    }
    LPSolution s = simplex_solve(lp);
    const double oracle = brute_force_2d(lp);
    if (std::isinf(oracle)) {
      EXPECT_EQ(s.status, LPStatus::kInfeasible) << trial;
      ++infeasible;
      continue;
    }
    ASSERT_EQ(s.status, LPStatus::kOptimal) << trial;
    EXPECT_NEAR(s.objective_value, oracle, 1e-9 * std::max(1.0, std::fabs(oracle))) << trial;
    EXPECT_TRUE(feasible(lp, s.x, 1e-9)) << trial;
    ++optimal;
  }
  EXPECT_GT(optimal, 100);
  EXPECT_GT(infeasible, 5);
}

TEST(SimplexPropertyTest, FeasibleAndDeterministicInHigherDimension) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 6;
    LPProblem lp;
    lp.objective.resize(n);
    for (double& c : lp.objective) c = u(rng);
    lp.lower.assign(n, -1.0);
    lp.upper.assign(n, 1.0);
    for (int r = 0; r < n / 2; ++r) {
      std::vector<double> c(n);
      for (double& v : c) v = u(rng);
      lp.constraints.push_back(row(c, Sense::kEqual, 0.0));
    }
    LPSolution a = simplex_solve(lp);
    LPSolution b = simplex_solve(lp);
    ASSERT_EQ(a.status, LPStatus::kOptimal);
    EXPECT_TRUE(feasible(lp, a.x, 1e-9));
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.objective_value, b.objective_value);
    double dot = 0.0;
    for (int j = 0; j < n; ++j) dot += lp.objective[j] * a.x[j];
    EXPECT_NEAR(dot, a.objective_value, 1e-12);
  }
}

}  // namespace
}  // namespace condiam
