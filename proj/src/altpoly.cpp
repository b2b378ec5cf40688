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

#include "condiam/altpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "condiam/error.hpp"
#include "condiam/simplex.hpp"

namespace condiam {

NewtonPolynomial::NewtonPolynomial(std::vector<double> nodes, std::vector<double> coeffs)
    : nodes_(std::move(nodes)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != nodes_.size() + 1) {
    throw InputError("Newton form needs exactly one more coefficient than nodes");
  }
}

NewtonPolynomial NewtonPolynomial::constant(double c) { return NewtonPolynomial({}, {c}); }

NewtonPolynomial NewtonPolynomial::monomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  std::vector<double> nodes(coeffs.size() - 1, 0.0);
  return NewtonPolynomial(std::move(nodes), std::move(coeffs));
}

NewtonPolynomial NewtonPolynomial::interpolate(std::span<const double> xs,
                                               std::span<const double> ys) {
  if (xs.empty() || xs.size() != ys.size()) {
    throw InputError("interpolation needs matching, non-empty point and value lists");
  }
  std::vector<double> nodes(xs.begin(), xs.end() - 1);
  return NewtonPolynomial(std::move(nodes), divided_differences(xs, ys));
}

double NewtonPolynomial::operator()(double x) const {
  double r = coeffs_.back();
  for (int i = degree() - 1; i >= 0; --i) r = r * (x - nodes_[i]) + coeffs_[i];
  return r;
}

NewtonPolynomial NewtonPolynomial::reflected() const {
  std::vector<double> nodes(nodes_.size());
  std::vector<double> coeffs(coeffs_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) nodes[i] = -nodes_[i];
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs[i] = (i % 2 == 0 ? 1.0 : -1.0) * coeffs_[i];
  return NewtonPolynomial(std::move(nodes), std::move(coeffs));
}

std::vector<double> divided_differences(std::span<const double> points,
                                        std::span<const double> values) {
  const std::size_t b = points.size();
  std::vector<double> table(values.begin(), values.end());
  std::vector<double> out(b);
  if (b == 0) return out;
  out[0] = table[0];
  for (std::size_t order = 1; order < b; ++order) {
    for (std::size_t i = 0; i + order < b; ++i) {
      table[i] = (table[i + 1] - table[i]) / (points[i + order] - points[i]);
    }
    out[order] = table[0];
  }
  return out;
}

double AlternatingPolynomial::sup_norm() const {
  double s = 0.0;
  for (double y : values_at_mesh) s = std::max(s, std::fabs(y));
  return s;
}

double evaluate(const AlternatingPolynomial& p, double x) { return p.poly(x); }

namespace {

// Descending points with the evaluation point above them.
struct CanonicalMesh {
  std::vector<double> points;
  double eval;
  bool reflected;
};

CanonicalMesh canonical(const SpectralMesh& mesh) {
  CanonicalMesh c{{mesh.points().begin(), mesh.points().end()}, mesh.eval_point(), false};
  if (!mesh.eval_above()) {
    for (double& x : c.points) x = -x;
    c.eval = -c.eval;
    c.reflected = true;
  }
  return c;
}

// Longest subsequence of extremal points whose signs alternate, scanning in
// mesh order.
std::vector<int> alternation_points(std::span<const double> values, double tol) {
  std::vector<int> picked;
  for (int j = 0; j < static_cast<int>(values.size()); ++j) {
    if (std::fabs(values[j]) < 1.0 - tol) continue;
    if (picked.empty() || (values[j] > 0) != (values[picked.back()] > 0)) picked.push_back(j);
  }
  return picked;
}

NewtonPolynomial sign_pattern_interpolant(std::span<const double> nodes) {
  std::vector<double> signs(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) signs[i] = i % 2 == 0 ? 1.0 : -1.0;
  return NewtonPolynomial::interpolate(nodes, signs);
}

NewtonPolynomial solve_by_lp(const CanonicalMesh& c, int k) {
  const int b = static_cast<int>(c.points.size());
  const auto& x = c.points;

  LPProblem lp;
  lp.objective.resize(b);
  for (int j = 0; j < b; ++j) {
    double l = 1.0;
    for (int i = 0; i < b; ++i) {
      if (i != j) l *= (c.eval - x[i]) / (x[j] - x[i]);
    }
    lp.objective[j] = l;
  }
  lp.lower.assign(b, -1.0);
  lp.upper.assign(b, 1.0);
  for (int order = k + 1; order < b; ++order) {
    LPConstraint row{std::vector<double>(b, 0.0), Sense::kEqual, 0.0};
    double scale = 0.0;
    for (int j = 0; j <= order; ++j) {
      double w = 1.0;
      for (int i = 0; i <= order; ++i) {
        if (i != j) w /= x[j] - x[i];
      }
      row.coeffs[j] = w;
      scale = std::max(scale, std::fabs(w));
    }
    for (double& w : row.coeffs) w /= scale;
    lp.constraints.push_back(std::move(row));
  }

  LPSolution sol = simplex_solve(lp);
  if (sol.status != LPStatus::kOptimal) {
    std::ostringstream msg;
    msg << "alternating-polynomial LP (b=" << b << ", k=" << k
        << ") ended with status " << to_string(sol.status);
    throw NumericError(msg.str());
  }

  auto picked = alternation_points(sol.x, 1e-7);
  if (static_cast<int>(picked.size()) < k + 1) {
    std::ostringstream msg;
    msg << "LP optimum for k=" << k << " alternates at only " << picked.size()
        << " mesh points";
    throw NumericError(msg.str());
  }
  picked.resize(k + 1);
  std::vector<double> nodes;
  std::vector<double> values;
  for (int j : picked) {
    nodes.push_back(x[j]);
    values.push_back(sol.x[j] > 0 ? 1.0 : -1.0);
  }
  NewtonPolynomial poly = NewtonPolynomial::interpolate(nodes, values);
  const double polished = poly(c.eval);
  if (std::fabs(polished - sol.objective_value) > 1e-6 * std::max(1.0, std::fabs(polished))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "polished value " << polished << " disagrees with LP optimum "
        << sol.objective_value << " (k=" << k << ")";
    throw NumericError(msg.str());
  }
  return poly;
}

AlternatingPolynomial finish(const SpectralMesh& mesh, int k, NewtonPolynomial canonical_poly,
                             bool reflected, bool check) {
  NewtonPolynomial poly = reflected ? canonical_poly.reflected() : std::move(canonical_poly);
  std::vector<double> values;
  values.reserve(mesh.size());
  for (double x : mesh.points()) values.push_back(poly(x));
  const double extremal = poly(mesh.eval_point());
  int count = 0;
  for (double y : values) count += std::fabs(y) >= 1.0 - kCertTol ? 1 : 0;
  AlternatingPolynomial p{k, mesh, std::move(poly), std::move(values), extremal, count};
  if (check) {
    std::ostringstream msg;
    if (p.sup_norm() > 1.0 + kCertTol) {
      msg << "P_" << k << " exceeds 1 on the mesh (sup " << p.sup_norm() << ")";
      throw NumericError(msg.str());
    }
    if (static_cast<int>(alternation_points(p.values_at_mesh, kCertTol).size()) < k + 1) {
      msg << "P_" << k << " lost its alternation certificate";
      throw NumericError(msg.str());
    }
  }
  return p;
}

}  // namespace

AlternatingPolynomial alternating_polynomial(const SpectralMesh& mesh, int k,
                                             const AltPolyOptions& options) {
  const int b = mesh.size();
  if (k < 0 || k > b - 1) {
    throw InputError("degree k=" + std::to_string(k) + " out of range 0.." +
                     std::to_string(b - 1));
  }
  if (k == 0) return finish(mesh, 0, NewtonPolynomial::constant(1.0), false, true);
  CanonicalMesh c = canonical(mesh);
  NewtonPolynomial poly = (k == b - 1 && !options.force_lp)
                              ? sign_pattern_interpolant(c.points)
                              : solve_by_lp(c, k);
  return finish(mesh, k, std::move(poly), c.reflected, true);
}

std::vector<AlternatingPolynomial> alternating_polynomials(const SpectralMesh& mesh,
                                                           const AltPolyOptions& options) {
  std::vector<AlternatingPolynomial> out;
  out.reserve(mesh.size());
  for (int k = 0; k < mesh.size(); ++k) out.push_back(alternating_polynomial(mesh, k, options));
  return out;
}

AlternatingPolynomial closed_form_p1(const SpectralMesh& mesh) {
  if (mesh.size() < 2) throw InputError("closed-form P_1 needs at least two mesh points");
  CanonicalMesh c = canonical(mesh);
  const double first = c.points.front();
  const double last = c.points.back();
  const double width = first - last;
  auto poly = NewtonPolynomial::monomial({-(first + last) / width, 2.0 / width});
  return finish(mesh, 1, std::move(poly), c.reflected, false);
}

double interpolated_pbminus1_value(const SpectralMesh& mesh) {
  std::vector<double> all{mesh.eval_point()};
  all.insert(all.end(), mesh.points().begin(), mesh.points().end());
  auto pi = [&](std::size_t i) {
    double p = 1.0;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j != i) p *= std::fabs(all[i] - all[j]);
    }
    return p;
  };
  const double pi0 = pi(0);
  double sum = 0.0;
  for (std::size_t i = 1; i < all.size(); ++i) sum += pi0 / pi(i);
  return sum;
}

SymMatrix apply_to_matrix(const NewtonPolynomial& p, const SymMatrix& a) {
  const int n = a.order();
  const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  const auto coeffs = p.coeffs();
  const auto nodes = p.nodes();
  for (int i = 0; i < n; ++i) m[idx(i, i)] = coeffs.back();
  std::vector<double> next(m.size());
  for (int d = p.degree() - 1; d >= 0; --d) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double acc = -nodes[d] * m[idx(i, j)];
        for (int l = 0; l < n; ++l) acc += a(i, l) * m[idx(l, j)];
        next[idx(i, j)] = acc;
      }
      next[idx(i, i)] += coeffs[d];
    }
    m.swap(next);
  }
  return SymMatrix::from_dense(n, std::move(m));
}

SymMatrix apply_to_matrix(const AlternatingPolynomial& p, const SymMatrix& a) {
  return apply_to_matrix(p.poly, a);
}

}  // namespace condiam
