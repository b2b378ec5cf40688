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

#ifndef CONDIAM_SIMPLEX_HPP_
#define CONDIAM_SIMPLEX_HPP_

#include <limits>
#include <string_view>
#include <vector>

namespace condiam {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct LPConstraint {
  std::vector<double> coeffs;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// maximize (or minimize) objective . x subject to the constraints and
// lower <= x <= upper. Empty bound vectors mean x >= 0 with no upper bound.
struct LPProblem {
  std::vector<double> objective;
  std::vector<LPConstraint> constraints;
  std::vector<double> lower;
  std::vector<double> upper;
  bool maximize = true;

  int num_variables() const { return static_cast<int>(objective.size()); }
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string_view to_string(LPStatus status);

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  double objective_value = 0.0;
  std::vector<double> x;
  int iterations = 0;
};

struct SimplexOptions {
  double pivot_tol = 1e-11;
  double feasibility_tol = 1e-9;
  int max_iterations = 100000;
};

// Two-phase dense tableau simplex with Bland's rule, so the pivot sequence
// (and hence the returned vertex) is a deterministic function of the input.
LPSolution simplex_solve(const LPProblem& lp, const SimplexOptions& options = {});

}  // namespace condiam

#endif  // CONDIAM_SIMPLEX_HPP_
