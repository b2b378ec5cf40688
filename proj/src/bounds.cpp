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

#include "condiam/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "condiam/error.hpp"

namespace condiam {

namespace {

int count_eligible(const Graph& g, int min_degree) {
  return static_cast<int>(std::count_if(g.degrees().begin(), g.degrees().end(),
                                        [&](int d) { return d >= min_degree; }));
}

}  // namespace

void validate_query(const Graph& g, const BoundQuery& q) {
  const int n = g.order();
  if (q.s < 1 || q.s > n || q.t < 1 || q.t > n) {
    throw InputError("set sizes must satisfy 1 <= s,t <= n=" + std::to_string(n));
  }
  for (int a : {q.alpha, q.beta}) {
    if (a < g.min_degree() || a > g.max_degree()) {
      throw InputError("degree bound " + std::to_string(a) + " outside [" +
                       std::to_string(g.min_degree()) + ", " + std::to_string(g.max_degree()) +
                       "]");
    }
  }
}

bool is_vacuous(const Graph& g, const BoundQuery& q) {
  return count_eligible(g, q.alpha) < q.s || count_eligible(g, q.beta) < q.t;
}

std::string_view to_string(ThresholdSource source) {
  switch (source) {
    case ThresholdSource::kGeneral:
      return "general";
    case ThresholdSource::kSetProfile:
      return "set-profile";
    case ThresholdSource::kDegreePair:
      return "degree-pair";
    case ThresholdSource::kMinDegree:
      return "min-degree";
    case ThresholdSource::kRegular:
      return "regular";
    case ThresholdSource::kUnicyclic:
      return "unicyclic";
    case ThresholdSource::kRegularSetPair:
      return "regular-set-pair";
  }
  return "unknown";
}

bool exceeds(double pk_value, double threshold, double margin) {
  return pk_value > threshold + margin + kTieSlack * std::max(1.0, std::fabs(threshold));
}

long robust_floor(double x) {
  return static_cast<long>(std::floor(x + kTieSlack * std::max(1.0, std::fabs(x))));
}

double threshold_general(int m, const BoundQuery& q) {
  if (q.alpha < 1 || q.beta < 1 || q.s < 1 || q.t < 1) {
    throw InputError("alpha, beta, s, t must all be positive");
  }
  const double two_m = 2.0 * m;
  if (static_cast<double>(q.s) * q.alpha > two_m || static_cast<double>(q.t) * q.beta > two_m) {
    throw InputError("query exceeds handshake capacity: s*alpha and t*beta must not exceed 2m=" +
                     std::to_string(2 * m));
  }
  return std::sqrt((two_m / (static_cast<double>(q.s) * q.alpha) - 1.0) *
                   (two_m / (static_cast<double>(q.t) * q.beta) - 1.0));
}

double lemma_set_threshold(int m, const VertexSet& s, const VertexSet& t) {
  if (s.empty() || t.empty()) throw InputError("set threshold needs non-empty sets");
  const double two_m = 2.0 * m;
  const double fs = two_m * s.size() / s.rho() - 1.0;
  const double ft = two_m * t.size() / t.rho() - 1.0;
  // rho(U) <= |U| * sum of degrees <= 2m|U| by Cauchy-Schwarz; tiny negatives
  // are rounding.
  if (fs < -1e-12 || ft < -1e-12) {
    throw InputError("inconsistent set profile: rho exceeds 2m times the set size");
  }
  return std::sqrt(std::max(fs, 0.0) * std::max(ft, 0.0));
}

Corollary parse_corollary(std::string_view letter) {
  if (letter == "a") return Corollary::kDegreePair;
  if (letter == "b") return Corollary::kMinDegree;
  if (letter == "c") return Corollary::kRegular;
  if (letter == "d") return Corollary::kUnicyclic;
  if (letter == "e") return Corollary::kRegularSetPair;
  throw InputError("unknown corollary '" + std::string(letter) + "' (expected a-e)");
}

ThresholdSource source_of(Corollary c) {
  switch (c) {
    case Corollary::kDegreePair:
      return ThresholdSource::kDegreePair;
    case Corollary::kMinDegree:
      return ThresholdSource::kMinDegree;
    case Corollary::kRegular:
      return ThresholdSource::kRegular;
    case Corollary::kUnicyclic:
      return ThresholdSource::kUnicyclic;
    case Corollary::kRegularSetPair:
      return ThresholdSource::kRegularSetPair;
  }
  return ThresholdSource::kGeneral;
}

BoundQuery corollary_query(const Graph& g, Corollary which, const CorollaryParams& params) {
  const int delta = g.min_degree();
  switch (which) {
    case Corollary::kDegreePair:
      return {params.alpha, params.alpha, 1, 1};
    case Corollary::kMinDegree:
    case Corollary::kRegular:
    case Corollary::kUnicyclic:
      return {delta, delta, 1, 1};
    case Corollary::kRegularSetPair:
      return {delta, delta, params.s, params.t};
  }
  return {};
}

double corollary_threshold(const Graph& g, Corollary which, const CorollaryParams& params) {
  const double n = g.order();
  const double two_m = 2.0 * g.size();
  switch (which) {
    case Corollary::kDegreePair:
      if (params.alpha < g.min_degree() || params.alpha > g.max_degree()) {
        throw InputError("degree-pair bound needs delta <= alpha <= Delta");
      }
      return two_m / params.alpha - 1.0;
    case Corollary::kMinDegree:
      return two_m / g.min_degree() - 1.0;
    case Corollary::kRegular:
      if (!g.is_regular()) throw InputError("regular-graph bound applied to a non-regular graph");
      return n - 1.0;
    case Corollary::kUnicyclic:
      if (!is_unicyclic(g)) throw InputError("unicyclic bound applied to a graph with m != n");
      return 2.0 * n - 1.0;
    case Corollary::kRegularSetPair:
      if (!g.is_regular()) throw InputError("regular-graph bound applied to a non-regular graph");
      if (params.s < 1 || params.t < 1 || params.s > g.order() || params.t > g.order()) {
        throw InputError("set sizes must satisfy 1 <= s,t <= n");
      }
      return std::sqrt((n / params.s - 1.0) * (n / params.t - 1.0));
  }
  return 0.0;
}

std::optional<int> min_certified_k(std::span<const double> pk_values, double threshold,
                                   double margin) {
  for (std::size_t k = 0; k < pk_values.size(); ++k) {
    if (exceeds(pk_values[k], threshold, margin)) return static_cast<int>(k);
  }
  return std::nullopt;
}

long max_separated_set_size(int m, int alpha, double pk_value) {
  if (alpha < 1 || pk_value < 1.0 - kCertTol) {
    throw InputError("separated-set bound needs alpha >= 1 and P_k >= 1");
  }
  return robust_floor(2.0 * m / (alpha * (pk_value + 1.0)));
}

long max_separated_degree(int m, int s, double pk_value) {
  if (s < 1 || pk_value < 1.0 - kCertTol) {
    throw InputError("separated-degree bound needs s >= 1 and P_k >= 1");
  }
  return robust_floor(2.0 * m / (s * (pk_value + 1.0)));
}

long regular_separated_size(int n, double pk_value) {
  if (pk_value < 1.0 - kCertTol) throw InputError("separated-set bound needs P_k >= 1");
  return robust_floor(n / (pk_value + 1.0));
}

long vertex_separator_lower_bound(int n, int m, int alpha, double pk_value) {
  return std::max(0L, n - 2 * max_separated_set_size(m, alpha, pk_value));
}

std::vector<double> SpectralAnalysis::extremal_values() const {
  std::vector<double> out;
  out.reserve(polynomials.size());
  for (const auto& p : polynomials) out.push_back(p.extremal_value);
  return out;
}

SpectralAnalysis analyze(const Graph& g, MatrixKind kind, const SpectralOptions& options) {
  Spectrum spectrum = sym_eigenvalues(matrix_of_kind(g, kind), kind, options.convergence_tol,
                                      options.max_sweeps);
  SpectralMesh mesh = extract_mesh(spectrum, options.dedup_tol);
  auto polys = alternating_polynomials(mesh);
  return SpectralAnalysis{std::move(spectrum), std::move(mesh), std::move(polys)};
}

BoundCertificate make_certificate(const BoundQuery& q, MatrixKind kind, ThresholdSource source,
                                  double threshold, std::span<const double> pk_values,
                                  double margin) {
  BoundCertificate cert;
  cert.query = q;
  cert.kind = kind;
  cert.source = source;
  cert.threshold = threshold;
  cert.margin = margin;
  for (std::size_t k = 0; k < pk_values.size(); ++k) {
    CertificateRow row{static_cast<int>(k), pk_values[k], threshold,
                       exceeds(pk_values[k], threshold, margin)};
    if (row.certified && !cert.min_certified_k) cert.min_certified_k = row.k;
    cert.rows.push_back(row);
  }
  return cert;
}

BoundCertificate certify(const Graph& g, const BoundQuery& q, const SpectralAnalysis& analysis,
                         double margin) {
  validate_query(g, q);
  auto values = analysis.extremal_values();
  auto cert = make_certificate(q, analysis.mesh.kind(), ThresholdSource::kGeneral,
                               threshold_general(g.size(), q), values, margin);
  cert.vacuous = is_vacuous(g, q);
  return cert;
}

BoundCertificate degree_adjacency_certificate(const Graph& g, const BoundQuery& q,
                                              const SpectralOptions& options) {
  return certify(g, q, analyze(g, MatrixKind::kDegreeAdjacency, options));
}

BoundCertificate laplacian_certificate(const Graph& g, const BoundQuery& q,
                                       const SpectralOptions& options) {
  return certify(g, q, analyze(g, MatrixKind::kChungLaplacian, options));
}

}  // namespace condiam
