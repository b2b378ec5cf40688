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

#include "condiam/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace condiam {

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::kDegreeAdjacency:
      return "degree-adjacency";
    case MatrixKind::kChungLaplacian:
      return "laplacian";
    case MatrixKind::kStandardAdjacency:
      return "standard";
  }
  return "unknown";
}

MatrixKind parse_matrix_kind(std::string_view name) {
  if (name == "degree-adjacency") return MatrixKind::kDegreeAdjacency;
  if (name == "laplacian") return MatrixKind::kChungLaplacian;
  if (name == "standard") return MatrixKind::kStandardAdjacency;
  throw InputError("unknown matrix kind '" + std::string(name) + "'");
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::from_dense(int n, std::vector<double> row_major) {
  if (row_major.size() != static_cast<std::size_t>(n) * n) {
    throw InputError("dense matrix has the wrong number of entries");
  }
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m.set(i, j, 0.5 * (row_major[m.index(i, j)] + row_major[m.index(j, i)]));
    }
  }
  return m;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n_; ++j) acc += data_[index(i, j)] * x[j];
    y[i] = acc;
  }
  return y;
}

SymMatrix degree_adjacency_matrix(const Graph& g) {
  SymMatrix a(g.order());
  for (auto [u, v] : g.edges()) {
    a.set(u, v, 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v)));
  }
  return a;
}

SymMatrix chung_laplacian(const Graph& g) {
  SymMatrix l = degree_adjacency_matrix(g);
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) l.set(i, j, (i == j ? 1.0 : 0.0) - l(i, j));
  }
  return l;
}

SymMatrix standard_adjacency_matrix(const Graph& g) {
  SymMatrix a(g.order());
  for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

SymMatrix matrix_of_kind(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::kDegreeAdjacency:
      return degree_adjacency_matrix(g);
    case MatrixKind::kChungLaplacian:
      return chung_laplacian(g);
    case MatrixKind::kStandardAdjacency:
      return standard_adjacency_matrix(g);
  }
  return SymMatrix();
}

std::vector<std::pair<double, int>> Spectrum::clusters(double dedup_tol) const {
  std::vector<std::pair<double, int>> out;
  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (count > 0 && values[i - 1] - values[i] >= dedup_tol) {
      out.emplace_back(sum / count, count);
      sum = 0.0;
      count = 0;
    }
    sum += values[i];
    ++count;
  }
  if (count > 0) out.emplace_back(sum / count, count);
  return out;
}

Spectrum sym_eigenvalues(const SymMatrix& m, MatrixKind kind, double convergence_tol,
                         int max_sweeps) {
  if (!(convergence_tol > 0.0)) throw InputError("convergence tolerance must be positive");
  const int n = m.order();
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  double frobenius = 0.0;
  for (double x : a) frobenius += x * x;
  frobenius = std::sqrt(frobenius);
  const double target = convergence_tol * std::max(frobenius, 1e-300);

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
    }
    return std::sqrt(s);
  };

  double off = off_norm();
  int sweep = 0;
  while (off > target) {
    if (sweep == max_sweeps) {
      std::ostringstream msg;
      msg << "eigensolver did not converge after " << max_sweeps
          << " sweeps; residual off-diagonal norm " << off;
      throw NumericError(msg.str());
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int r = 0; r < n; ++r) {
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = c * arp - s * arq;
          at(r, q) = s * arp + c * arq;
        }
        for (int r = 0; r < n; ++r) {
          const double apr = at(p, r);
          const double aqr = at(q, r);
          at(p, r) = c * apr - s * aqr;
          at(q, r) = s * apr + c * aqr;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
    ++sweep;
    off = off_norm();
  }

  Spectrum out;
  out.kind = kind;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = at(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

SpectralMesh SpectralMesh::from_points(std::vector<double> points, double eval_point,
                                       double min_gap) {
  if (points.empty()) throw InputError("mesh must contain at least one point");
  for (double x : points) {
    if (!std::isfinite(x)) throw InputError("mesh points must be finite");
  }
  if (!std::isfinite(eval_point)) throw InputError("evaluation point must be finite");
  auto [lo, hi] = std::minmax_element(points.begin(), points.end());
  MatrixKind kind;
  if (eval_point > *hi) {
    kind = MatrixKind::kDegreeAdjacency;
    std::sort(points.begin(), points.end(), std::greater<>());
  } else if (eval_point < *lo) {
    kind = MatrixKind::kChungLaplacian;
    std::sort(points.begin(), points.end());
  } else {
    throw InputError("evaluation point must lie strictly outside the mesh range");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (std::fabs(points[i] - points[i - 1]) <= min_gap) {
      throw InputError("mesh points must be distinct (duplicate near " +
                       std::to_string(points[i]) + ")");
    }
  }
  return SpectralMesh(kind, std::move(points), eval_point);
}

SpectralMesh extract_mesh(const Spectrum& s, double dedup_tol) {
  if (!(dedup_tol > 0.0)) throw InputError("dedup tolerance must be positive");
  if (s.kind == MatrixKind::kStandardAdjacency) {
    throw InputError("a mesh is only defined for degree-adjacency or laplacian spectra");
  }
  const std::size_t n = s.values.size();
  if (n < 2) throw NumericError("spectrum too short to contain a non-Perron eigenvalue");

  std::vector<double> rest;
  double perron;
  double neighbour;
  const bool laplacian = s.kind == MatrixKind::kChungLaplacian;
  if (!laplacian) {
    perron = 1.0;
    if (std::fabs(s.values.front() - perron) > dedup_tol) {
      throw NumericError("largest eigenvalue " + std::to_string(s.values.front()) +
                         " is not the Perron value 1");
    }
    neighbour = s.values[1];
    rest.assign(s.values.begin() + 1, s.values.end());
  } else {
    perron = 0.0;
    if (std::fabs(s.values.back() - perron) > dedup_tol) {
      throw NumericError("smallest eigenvalue " + std::to_string(s.values.back()) +
                         " is not the Perron value 0");
    }
    neighbour = s.values[n - 2];
    rest.assign(s.values.begin(), s.values.end() - 1);
  }
  if (std::fabs(perron - neighbour) <= dedup_tol) {
    throw NumericError("Perron eigenvalue appears to be multiple (graph disconnected?)");
  }

  Spectrum remainder{s.kind, std::move(rest)};
  std::vector<double> points;
  for (auto [value, mult] : remainder.clusters(dedup_tol)) points.push_back(value);
  if (laplacian) std::reverse(points.begin(), points.end());
  if (points.empty()) throw NumericError("empty mesh");
  return SpectralMesh(s.kind, std::move(points), perron);
}

std::vector<double> perron_vector(const Graph& g) {
  std::vector<double> nu(g.order());
  for (int v = 0; v < g.order(); ++v) nu[v] = std::sqrt(static_cast<double>(g.degree(v)));
  return nu;
}

}  // namespace condiam
