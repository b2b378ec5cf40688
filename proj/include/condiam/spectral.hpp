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

#ifndef CONDIAM_SPECTRAL_HPP_
#define CONDIAM_SPECTRAL_HPP_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "condiam/graph.hpp"

namespace condiam {

enum class MatrixKind { kDegreeAdjacency, kChungLaplacian, kStandardAdjacency };

std::string_view to_string(MatrixKind kind);
MatrixKind parse_matrix_kind(std::string_view name);

// Dense symmetric matrix. Stores all n*n entries; set() writes both
// triangles so entry(i,j) == entry(j,i) always holds exactly.
class SymMatrix {
 public:
  explicit SymMatrix(int n = 0) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  static SymMatrix identity(int n);
  // Symmetrizes by averaging mirrored entries; `row_major` must hold n*n values.
  static SymMatrix from_dense(int n, std::vector<double> row_major);

  int order() const { return n_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, double value) {
    data_[index(i, j)] = value;
    data_[index(j, i)] = value;
  }
  std::span<const double> data() const { return data_; }
  double trace() const;

  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<double> data_;
};

// Entry 1/sqrt(d_i d_j) on edges, zero elsewhere.
SymMatrix degree_adjacency_matrix(const Graph& g);
// I minus the degree-adjacency matrix.
SymMatrix chung_laplacian(const Graph& g);
SymMatrix standard_adjacency_matrix(const Graph& g);
SymMatrix matrix_of_kind(const Graph& g, MatrixKind kind);

struct Spectrum {
  MatrixKind kind = MatrixKind::kDegreeAdjacency;
  std::vector<double> values;  // descending, with multiplicity

  // Groups values closer than `dedup_tol`; returns (mean, multiplicity).
  std::vector<std::pair<double, int>> clusters(double dedup_tol) const;
};

inline constexpr double kDefaultConvergenceTol = 1e-12;
inline constexpr double kDefaultDedupTol = 1e-8;
inline constexpr int kDefaultMaxSweeps = 100;

// Cyclic Jacobi rotations. Throws NumericError when the off-diagonal norm
// is still above convergence_tol * ||a||_F after max_sweeps sweeps.
Spectrum sym_eigenvalues(const SymMatrix& a, MatrixKind kind = MatrixKind::kDegreeAdjacency,
                         double convergence_tol = kDefaultConvergenceTol,
                         int max_sweeps = kDefaultMaxSweeps);

// Distinct non-Perron eigenvalues plus the excluded Perron value.
//
// For the degree-adjacency side the points are descending and the
// evaluation point lies above them (1 for a real spectrum). For the
// Laplacian side they are ascending with the evaluation point below (0).
class SpectralMesh {
 public:
  // Validating constructor for literal meshes. The side is inferred from
  // where eval_point sits; points are sorted accordingly. Throws InputError
  // on duplicates (closer than min_gap), empty input or an eval point inside
  // the mesh range.
  static SpectralMesh from_points(std::vector<double> points, double eval_point,
                                  double min_gap = 0.0);

  MatrixKind kind() const { return kind_; }
  bool eval_above() const { return kind_ != MatrixKind::kChungLaplacian; }
  std::span<const double> points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }
  double eval_point() const { return eval_point_; }

 private:
  SpectralMesh(MatrixKind kind, std::vector<double> points, double eval_point)
      : kind_(kind), points_(std::move(points)), eval_point_(eval_point) {}
  friend SpectralMesh extract_mesh(const Spectrum& s, double dedup_tol);

  MatrixKind kind_;
  std::vector<double> points_;
  double eval_point_;
};

// Removes one copy of the Perron value and merges near-equal eigenvalues
// (cluster mean). Throws NumericError if the Perron value is missing or not
// separated from the rest by more than dedup_tol.
SpectralMesh extract_mesh(const Spectrum& s, double dedup_tol = kDefaultDedupTol);

// (sqrt(d_1), ..., sqrt(d_n)), fixed by the degree-adjacency matrix.
std::vector<double> perron_vector(const Graph& g);

}  // namespace condiam

#endif  // CONDIAM_SPECTRAL_HPP_
