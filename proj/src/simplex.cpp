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

#include <cmath>

#include "condiam/error.hpp"

namespace condiam {

std::string_view to_string(LPStatus status) {
  switch (status) {
    case LPStatus::kOptimal:
      return "optimal";
    case LPStatus::kInfeasible:
      return "infeasible";
    case LPStatus::kUnbounded:
      return "unbounded";
    case LPStatus::kIterationLimit:
      return "iteration-limit";
  }
  return "unknown";
}

namespace {

struct Term {
  int column;
  double sign;
};

// Original variable j equals offset[j] + sum(sign * column value).
struct VariableMap {
  std::vector<std::vector<Term>> terms;
  std::vector<double> offset;
  int columns = 0;
};

class Tableau {
 public:
  Tableau(int rows, int columns)
      : rows_(rows), cols_(columns), cells_(static_cast<std::size_t>(rows) * (columns + 1), 0.0),
        basis_(rows, -1) {}

  double& at(int r, int c) { return cells_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  int rows() const { return rows_; }
  int columns() const { return cols_; }
  std::vector<int>& basis() { return basis_; }

  void pivot(int r, int c, std::vector<double>& objective_row) {
    const double p = at(r, c);
    for (int j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    const double f = objective_row[c];
    if (f != 0.0) {
      for (int j = 0; j <= cols_; ++j) objective_row[j] -= f * at(r, j);
      objective_row[c] = 0.0;
    }
    basis_[r] = c;
  }

  void drop_row(int r) {
    const std::size_t width = cols_ + 1;
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r * width),
                 cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * width));
    basis_.erase(basis_.begin() + r);
    --rows_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> cells_;
  std::vector<int> basis_;
};

// Bottom row z_j = c_B B^-1 A_j - c_j (last entry is the objective value),
// for maximization of `cost`.
std::vector<double> objective_row(Tableau& t, const std::vector<double>& cost) {
  std::vector<double> z(t.columns() + 1, 0.0);
  for (int j = 0; j < t.columns(); ++j) z[j] = -cost[j];
  for (int i = 0; i < t.rows(); ++i) {
    const double cb = cost[t.basis()[i]];
    if (cb == 0.0) continue;
    for (int j = 0; j <= t.columns(); ++j) z[j] += cb * t.at(i, j);
  }
  return z;
}

enum class PhaseResult { kOptimal, kUnbounded, kIterationLimit };

PhaseResult run_phase(Tableau& t, std::vector<double>& z, const std::vector<char>& barred,
                      const SimplexOptions& options, int& iterations) {
  while (true) {
    int entering = -1;
    for (int j = 0; j < t.columns(); ++j) {
      if (!barred[j] && z[j] < -options.feasibility_tol) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return PhaseResult::kOptimal;
    if (iterations >= options.max_iterations) return PhaseResult::kIterationLimit;

    int leaving = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < t.rows(); ++i) {
      const double a = t.at(i, entering);
      if (a <= options.pivot_tol) continue;
      const double ratio = t.rhs(i) / a;
      if (leaving < 0 || ratio < best_ratio - options.pivot_tol ||
          (std::fabs(ratio - best_ratio) <= options.pivot_tol &&
           t.basis()[i] < t.basis()[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) return PhaseResult::kUnbounded;
    t.pivot(leaving, entering, z);
    ++iterations;
  }
}

}  // namespace

LPSolution simplex_solve(const LPProblem& lp, const SimplexOptions& options) {
  const int nvars = lp.num_variables();
  auto lower_of = [&](int j) { return lp.lower.empty() ? 0.0 : lp.lower[j]; };
  auto upper_of = [&](int j) { return lp.upper.empty() ? kInfinity : lp.upper[j]; };
  if ((!lp.lower.empty() && static_cast<int>(lp.lower.size()) != nvars) ||
      (!lp.upper.empty() && static_cast<int>(lp.upper.size()) != nvars)) {
    throw InputError("LP bound vectors must match the number of variables");
  }
  for (const auto& row : lp.constraints) {
    if (static_cast<int>(row.coeffs.size()) != nvars) {
      throw InputError("LP constraint width must match the number of variables");
    }
  }

  LPSolution solution;
  VariableMap map;
  map.terms.resize(nvars);
  map.offset.assign(nvars, 0.0);
  std::vector<LPConstraint> rows;
  for (int j = 0; j < nvars; ++j) {
    const double lo = lower_of(j);
    const double hi = upper_of(j);
    if (lo > hi || lo == kInfinity || hi == -kInfinity) return solution;  // infeasible
    if (std::isfinite(lo)) {
      map.offset[j] = lo;
      map.terms[j].push_back({map.columns++, 1.0});
      if (std::isfinite(hi)) rows.push_back({{}, Sense::kLessEqual, hi - lo});
    } else if (std::isfinite(hi)) {
      map.offset[j] = hi;
      map.terms[j].push_back({map.columns++, -1.0});
    } else {
      map.terms[j].push_back({map.columns++, 1.0});
      map.terms[j].push_back({map.columns++, -1.0});
    }
  }
  const int structural = map.columns;

  // Bound rows were pushed with empty coefficient vectors; fill them now.
  {
    int bound_row = 0;
    for (int j = 0; j < nvars; ++j) {
      if (std::isfinite(lower_of(j)) && std::isfinite(upper_of(j))) {
        rows[bound_row].coeffs.assign(structural, 0.0);
        rows[bound_row].coeffs[map.terms[j][0].column] = 1.0;
        ++bound_row;
      }
    }
  }
  for (const auto& c : lp.constraints) {
    LPConstraint row{std::vector<double>(structural, 0.0), c.sense, c.rhs};
    for (int j = 0; j < nvars; ++j) {
      if (c.coeffs[j] == 0.0) continue;
      row.rhs -= c.coeffs[j] * map.offset[j];
      for (auto term : map.terms[j]) row.coeffs[term.column] += c.coeffs[j] * term.sign;
    }
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (row.rhs < 0.0) {
      row.rhs = -row.rhs;
      for (double& a : row.coeffs) a = -a;
      if (row.sense == Sense::kLessEqual) {
        row.sense = Sense::kGreaterEqual;
      } else if (row.sense == Sense::kGreaterEqual) {
        row.sense = Sense::kLessEqual;
      }
    }
  }

  int extra = 0;
  for (const auto& row : rows) extra += row.sense == Sense::kGreaterEqual ? 2 : 1;
  const int total = structural + extra;
  const int m = static_cast<int>(rows.size());
  Tableau t(m, total);
  std::vector<char> artificial(total, 0);
  int next = structural;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < structural; ++j) t.at(i, j) = rows[i].coeffs[j];
    t.rhs(i) = rows[i].rhs;
    switch (rows[i].sense) {
      case Sense::kLessEqual:
        t.at(i, next) = 1.0;
        t.basis()[i] = next++;
        break;
      case Sense::kGreaterEqual:
        t.at(i, next++) = -1.0;
        [[fallthrough]];
      case Sense::kEqual:
        t.at(i, next) = 1.0;
        artificial[next] = 1;
        t.basis()[i] = next++;
        break;
    }
  }

  int iterations = 0;
  std::vector<char> none_barred(total, 0);
  bool any_artificial = false;
  for (char a : artificial) any_artificial = any_artificial || a;
  if (any_artificial) {
    std::vector<double> phase1_cost(total, 0.0);
    for (int j = 0; j < total; ++j) phase1_cost[j] = artificial[j] ? -1.0 : 0.0;
    auto z = objective_row(t, phase1_cost);
    auto result = run_phase(t, z, none_barred, options, iterations);
    solution.iterations = iterations;
    if (result == PhaseResult::kIterationLimit) {
      solution.status = LPStatus::kIterationLimit;
      return solution;
    }
    double scale = 1.0;
    for (const auto& row : rows) scale = std::max(scale, std::fabs(row.rhs));
    if (z[total] < -options.feasibility_tol * scale) {
      solution.status = LPStatus::kInfeasible;
      return solution;
    }
    // Pivot remaining (zero-level) artificials out of the basis, dropping
    // rows that turn out to be linearly dependent.
    for (int i = 0; i < t.rows();) {
      if (!artificial[t.basis()[i]]) {
        ++i;
        continue;
      }
      int column = -1;
      for (int j = 0; j < total; ++j) {
        if (!artificial[j] && std::fabs(t.at(i, j)) > options.pivot_tol) {
          column = j;
          break;
        }
      }
      if (column < 0) {
        t.drop_row(i);
      } else {
        t.pivot(i, column, z);
        ++i;
      }
    }
  }

  std::vector<double> cost(total, 0.0);
  const double direction = lp.maximize ? 1.0 : -1.0;
  for (int j = 0; j < nvars; ++j) {
    for (auto term : map.terms[j]) cost[term.column] += direction * lp.objective[j] * term.sign;
  }
  auto z = objective_row(t, cost);
  auto result = run_phase(t, z, artificial, options, iterations);
  solution.iterations = iterations;
  if (result == PhaseResult::kIterationLimit) {
    solution.status = LPStatus::kIterationLimit;
    return solution;
  }
  if (result == PhaseResult::kUnbounded) {
    solution.status = LPStatus::kUnbounded;
    return solution;
  }

  std::vector<double> column_value(total, 0.0);
  for (int i = 0; i < t.rows(); ++i) column_value[t.basis()[i]] = t.rhs(i);
  solution.x.assign(nvars, 0.0);
  solution.objective_value = 0.0;
  for (int j = 0; j < nvars; ++j) {
    double x = map.offset[j];
    for (auto term : map.terms[j]) x += term.sign * column_value[term.column];
    solution.x[j] = x;
    solution.objective_value += lp.objective[j] * x;
  }
  solution.status = LPStatus::kOptimal;
  return solution;
}

}  // namespace condiam
