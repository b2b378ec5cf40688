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

#ifndef CONDIAM_BOUNDS_HPP_
#define CONDIAM_BOUNDS_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "condiam/altpoly.hpp"
#include "condiam/graph.hpp"
#include "condiam/spectral.hpp"

namespace condiam {

// Two vertex sets with min degrees >= alpha, >= beta and sizes >= s, >= t.
struct BoundQuery {
  int alpha = 1;
  int beta = 1;
  int s = 1;
  int t = 1;

  friend bool operator==(const BoundQuery&, const BoundQuery&) = default;
};

// Throws InputError unless 1 <= s,t <= n and delta <= alpha,beta <= Delta.
void validate_query(const Graph& g, const BoundQuery& q);

// True when fewer than s vertices have degree >= alpha (or t / beta): the
// conditional diameter is then taken over an empty family.
bool is_vacuous(const Graph& g, const BoundQuery& q);

enum class ThresholdSource {
  kGeneral,         // sqrt((2m/(s alpha) - 1)(2m/(t beta) - 1))
  kSetProfile,      // same with the exact rho of two given sets
  kDegreePair,      // 2m/alpha - 1
  kMinDegree,       // 2m/delta - 1
  kRegular,         // n - 1
  kUnicyclic,       // 2n - 1
  kRegularSetPair,  // sqrt((n/s - 1)(n/t - 1))
};

std::string_view to_string(ThresholdSource source);

// Relative slack applied to every "P_k > threshold" comparison and to the
// floors of the separator bounds, so that exact ties which land one ulp on
// the wrong side never produce a certificate.
inline constexpr double kTieSlack = 1e-9;

bool exceeds(double pk_value, double threshold, double margin = 0.0);
long robust_floor(double x);

// Throws InputError ("query exceeds handshake capacity") if s*alpha > 2m
// or t*beta > 2m.
double threshold_general(int m, const BoundQuery& q);

double lemma_set_threshold(int m, const VertexSet& s, const VertexSet& t);

enum class Corollary { kDegreePair, kMinDegree, kRegular, kUnicyclic, kRegularSetPair };

Corollary parse_corollary(std::string_view letter);
ThresholdSource source_of(Corollary c);

struct CorollaryParams {
  int alpha = 0;  // kDegreePair
  int s = 1;      // kRegularSetPair
  int t = 1;      // kRegularSetPair
};

// Throws InputError when the graph misses the corollary's precondition
// (regularity, unicyclicity, alpha range).
double corollary_threshold(const Graph& g, Corollary which, const CorollaryParams& params = {});

// The query that a corollary specializes, used to cross-check its threshold
// against threshold_general and against the oracle.
BoundQuery corollary_query(const Graph& g, Corollary which, const CorollaryParams& params = {});

// Smallest k with pk_values[k] > threshold (+ margin); pk_values ordered by k.
std::optional<int> min_certified_k(std::span<const double> pk_values, double threshold,
                                   double margin = 0.0);

// floor(2m / (alpha (P_k + 1))): largest s for two sets at distance > k.
long max_separated_set_size(int m, int alpha, double pk_value);
// floor(2m / (s (P_k + 1))).
long max_separated_degree(int m, int s, double pk_value);
// floor(n / (P_k + 1)), regular graphs.
long regular_separated_size(int n, double pk_value);
// n - 2 floor(2m / (alpha (P_k + 1))), floored at 0.
long vertex_separator_lower_bound(int n, int m, int alpha, double pk_value);

struct SpectralOptions {
  double convergence_tol = kDefaultConvergenceTol;
  double dedup_tol = kDefaultDedupTol;
  int max_sweeps = kDefaultMaxSweeps;
};

// Spectrum, mesh and the full table P_0..P_{b-1} for one matrix of a graph.
struct SpectralAnalysis {
  Spectrum spectrum;
  SpectralMesh mesh;
  std::vector<AlternatingPolynomial> polynomials;

  std::vector<double> extremal_values() const;
};

SpectralAnalysis analyze(const Graph& g, MatrixKind kind, const SpectralOptions& options = {});

struct CertificateRow {
  int k = 0;
  double pk_value = 0.0;
  double threshold = 0.0;
  bool certified = false;
};

struct BoundCertificate {
  BoundQuery query;
  MatrixKind kind = MatrixKind::kDegreeAdjacency;
  ThresholdSource source = ThresholdSource::kGeneral;
  double threshold = 0.0;
  double margin = 0.0;
  bool vacuous = false;
  std::vector<CertificateRow> rows;
  std::optional<int> min_certified_k;
};

BoundCertificate make_certificate(const BoundQuery& q, MatrixKind kind, ThresholdSource source,
                                  double threshold, std::span<const double> pk_values,
                                  double margin = 0.0);

// Certificate for `q` from an existing analysis (degree-adjacency or
// Laplacian); the threshold is threshold_general.
BoundCertificate certify(const Graph& g, const BoundQuery& q, const SpectralAnalysis& analysis,
                         double margin = 0.0);

BoundCertificate degree_adjacency_certificate(const Graph& g, const BoundQuery& q,
                                              const SpectralOptions& options = {});
// P_k evaluated at 0 on the ascending Laplacian mesh.
BoundCertificate laplacian_certificate(const Graph& g, const BoundQuery& q,
                                       const SpectralOptions& options = {});

}  // namespace condiam

#endif  // CONDIAM_BOUNDS_HPP_
