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

#ifndef CONDIAM_ALTPOLY_HPP_
#define CONDIAM_ALTPOLY_HPP_

#include <span>
#include <vector>

#include "condiam/spectral.hpp"

namespace condiam {

// p(x) = c_0 + c_1 (x - x_0) + c_2 (x - x_0)(x - x_1) + ... + c_d prod_{i<d}(x - x_i)
class NewtonPolynomial {
 public:
  NewtonPolynomial() : coeffs_{0.0} {}
  NewtonPolynomial(std::vector<double> nodes, std::vector<double> coeffs);

  static NewtonPolynomial constant(double c);
  // Coefficients of 1, x, x^2, ...
  static NewtonPolynomial monomial(std::vector<double> coeffs);
  // Divided-difference interpolant of (xs[i], ys[i]); degree xs.size() - 1.
  static NewtonPolynomial interpolate(std::span<const double> xs, std::span<const double> ys);

  int degree() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> coeffs() const { return coeffs_; }

  double operator()(double x) const;
  // q(x) = p(-x).
  NewtonPolynomial reflected() const;

 private:
  std::vector<double> nodes_;
  std::vector<double> coeffs_;
};

inline constexpr double kCertTol = 1e-6;

struct AlternatingPolynomial {
  int k = 0;
  SpectralMesh mesh;
  NewtonPolynomial poly;
  std::vector<double> values_at_mesh;  // in mesh order
  double extremal_value = 1.0;         // value at mesh.eval_point()
  int alternation_count = 0;           // mesh points with |value| >= 1 - kCertTol

  double sup_norm() const;
  double operator()(double x) const { return poly(x); }
};

struct AltPolyOptions {
  // Solve k = b-1 by LP as well instead of interpolating the sign pattern.
  bool force_lp = false;
};

// Maximizes P(eval_point) over deg P <= k subject to |P| <= 1 on the mesh.
// The LP runs in value space: unknowns are the mesh values, the degree
// bound becomes vanishing divided differences of orders k+1..b-1, and the
// objective weights are the Lagrange basis values at the evaluation point.
// The LP vertex is then polished by interpolating through k+1 of its
// alternation points. Laplacian-side meshes are handled by reflecting x -> -x.
AlternatingPolynomial alternating_polynomial(const SpectralMesh& mesh, int k,
                                             const AltPolyOptions& options = {});

// All k = 0..b-1.
std::vector<AlternatingPolynomial> alternating_polynomials(const SpectralMesh& mesh,
                                                           const AltPolyOptions& options = {});

// (2x - x_first - x_last) / (x_first - x_last), in canonical orientation.
AlternatingPolynomial closed_form_p1(const SpectralMesh& mesh);

// P_{b-1}(eval) = sum_i pi_0 / pi_i with pi_i = prod_{j != i} |x_i - x_j| over
// {eval} and the mesh. Independent of the LP and of NewtonPolynomial.
double interpolated_pbminus1_value(const SpectralMesh& mesh);

double evaluate(const AlternatingPolynomial& p, double x);

// Horner over the Newton form: M <- (A - x_i I) M + c_i I.
SymMatrix apply_to_matrix(const NewtonPolynomial& p, const SymMatrix& a);
SymMatrix apply_to_matrix(const AlternatingPolynomial& p, const SymMatrix& a);

// Divided differences f[x_0..x_r] for r = 0..b-1 of `values` on `points`.
std::vector<double> divided_differences(std::span<const double> points,
                                        std::span<const double> values);

}  // namespace condiam

#endif  // CONDIAM_ALTPOLY_HPP_
