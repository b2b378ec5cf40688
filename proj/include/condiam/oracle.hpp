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

#ifndef CONDIAM_ORACLE_HPP_
#define CONDIAM_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "condiam/bounds.hpp"
#include "condiam/graph.hpp"

namespace condiam {

struct OracleLimits {
  int max_order = 16;
  // Cap on the number of size-s subsets enumerated by one call.
  std::uint64_t max_subsets = 2'000'000;
  // Full bipartition enumeration for the separator oracle.
  int max_separator_order = 12;
};

// Raised when a query would exceed OracleLimits.
class OracleLimitError : public InputError {
 public:
  using InputError::InputError;
};

// Raised when no vertex sets satisfy the query's degree/size constraints.
class VacuousQueryError : public InputError {
 public:
  using InputError::InputError;
};

struct ExactResult {
  int value = 0;
  std::vector<int> first;   // witness S (or U)
  std::vector<int> second;  // witness T (or W)
};

struct SeparatorResult {
  int separator_size = 0;  // vs = n - 2u
  int part_size = 0;       // u
  std::vector<int> first;
  std::vector<int> second;
  std::vector<int> separator;
};

std::uint64_t binomial(int n, int k);

// Exact conditional-diameter computations on one graph. Distances are
// computed once on construction.
//
// The conditional diameter uses the reduction: enlarging S or T can only
// shrink their distance, so the maximum is attained with |S| = s and
// |T| = t; for a fixed S the best T is the t beta-eligible vertices with
// the largest d_S(v) = min_{u in S} d(u, v), whose set distance is the t-th
// largest d_S. Hence the answer is the max over size-s subsets S of that
// order statistic. S and T may intersect.
class ExactOracle {
 public:
  explicit ExactOracle(const Graph& g, OracleLimits limits = {});

  const Graph& graph() const { return g_; }
  const DistanceMatrix& distances() const { return d_; }

  ExactResult degree_diameter(int alpha, int beta) const;
  ExactResult conditional_diameter(const BoundQuery& q) const;
  // Naive enumeration over all (S, T) pairs of exact sizes; independent
  // check of conditional_diameter for small graphs.
  ExactResult conditional_diameter_naive(const BoundQuery& q) const;
  // Largest s admitting two alpha-eligible size-s sets at distance > k;
  // value 0 with empty witnesses when none exists.
  ExactResult max_separated_size(int alpha, int k) const;
  // Minimum (alpha, k)-vertex separator by enumerating every alpha-eligible
  // U and pairing it with the eligible vertices farther than k from U.
  // nullopt when no balanced pair with u >= 1 exists.
  std::optional<SeparatorResult> vertex_separator(int alpha, int k) const;

 private:
  std::vector<int> eligible(int min_degree) const;
  void check_order(int limit) const;

  Graph g_;
  DistanceMatrix d_;
  OracleLimits limits_;
};

struct Violation {
  std::string check;
  BoundQuery query;
  MatrixKind kind = MatrixKind::kDegreeAdjacency;
  int k = 0;
  double pk_value = 0.0;
  double threshold = 0.0;
  long bound = 0;
  int exact = 0;
  std::vector<int> first;
  std::vector<int> second;
};

struct SoundnessOptions {
  int lemma_pairs = 20;
  std::uint64_t lemma_seed = 0;
  // Separated-set, regular and separator bounds run only up to this order.
  int separator_max_order = 10;
  double margin = 0.0;
  SpectralOptions spectral;
  OracleLimits limits;
};

struct SoundnessReport {
  int queries = 0;
  int vacuous = 0;
  long checks = 0;
  std::vector<Violation> violations;
};

// Every query s,t <= max_st with alpha, beta over realized degrees.
std::vector<BoundQuery> all_queries(const Graph& g, int max_st);

// Checks every certified k against the oracle, for both the degree-adjacency
// and the Laplacian certificate, plus their agreement, the set-profile bound
// on random set pairs and the separated-set / separator bounds.
SoundnessReport verify_soundness(const Graph& g, const std::vector<BoundQuery>& queries,
                                 const SoundnessOptions& options = {});

}  // namespace condiam

#endif  // CONDIAM_ORACLE_HPP_
