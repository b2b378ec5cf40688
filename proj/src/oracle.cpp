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

#include "condiam/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "condiam/error.hpp"

namespace condiam {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

namespace {

// Calls visit(indices) for every size-k combination of 0..n-1 in
// lexicographic order.
template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<int> pick(const std::vector<int>& pool, const std::vector<int>& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(pool[i]);
  return out;
}

}  // namespace

ExactOracle::ExactOracle(const Graph& g, OracleLimits limits)
    : g_(g), d_(distance_matrix(g)), limits_(limits) {}

std::vector<int> ExactOracle::eligible(int min_degree) const {
  std::vector<int> out;
  for (int v = 0; v < g_.order(); ++v) {
    if (g_.degree(v) >= min_degree) out.push_back(v);
  }
  return out;
}

void ExactOracle::check_order(int limit) const {
  if (g_.order() > limit) {
    throw OracleLimitError("exact oracle limited to n <= " + std::to_string(limit) + ", got n=" +
                           std::to_string(g_.order()));
  }
}

ExactResult ExactOracle::degree_diameter(int alpha, int beta) const {
  auto a = eligible(alpha);
  auto b = eligible(beta);
  if (a.empty() || b.empty()) {
    throw VacuousQueryError("vacuous query: no vertex of the required degree");
  }
  ExactResult best{-1, {}, {}};
  for (int u : a) {
    for (int v : b) {
      if (d_(u, v) > best.value) best = {d_(u, v), {u}, {v}};
    }
  }
  return best;
}

ExactResult ExactOracle::conditional_diameter(const BoundQuery& q) const {
  check_order(limits_.max_order);
  auto a = eligible(q.alpha);
  auto b = eligible(q.beta);
  if (static_cast<int>(a.size()) < q.s || static_cast<int>(b.size()) < q.t) {
    throw VacuousQueryError("vacuous query: too few vertices of the required degree");
  }
  if (binomial(static_cast<int>(a.size()), q.s) > limits_.max_subsets) {
    throw OracleLimitError("conditional-diameter oracle would enumerate too many subsets");
  }
  ExactResult best{-1, {}, {}};
  std::vector<int> dist_to_s(b.size());
  std::vector<int> order(b.size());
  for_each_combination(static_cast<int>(a.size()), q.s, [&](const std::vector<int>& idx) {
    auto s = pick(a, idx);
    for (std::size_t i = 0; i < b.size(); ++i) {
      int m = d_(s[0], b[i]);
      for (int u : s) m = std::min(m, d_(u, b[i]));
      dist_to_s[i] = m;
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return dist_to_s[x] > dist_to_s[y]; });
    const int value = dist_to_s[order[q.t - 1]];
    if (value > best.value) {
      std::vector<int> t;
      for (int i = 0; i < q.t; ++i) t.push_back(b[order[i]]);
      std::sort(t.begin(), t.end());
      best = {value, std::move(s), std::move(t)};
    }
  });
  return best;
}

ExactResult ExactOracle::conditional_diameter_naive(const BoundQuery& q) const {
  check_order(limits_.max_order);
  auto a = eligible(q.alpha);
  auto b = eligible(q.beta);
  if (static_cast<int>(a.size()) < q.s || static_cast<int>(b.size()) < q.t) {
    throw VacuousQueryError("vacuous query: too few vertices of the required degree");
  }
  if (binomial(static_cast<int>(a.size()), q.s) * binomial(static_cast<int>(b.size()), q.t) >
      limits_.max_subsets) {
    throw OracleLimitError("naive oracle would enumerate too many subset pairs");
  }
  ExactResult best{-1, {}, {}};
  for_each_combination(static_cast<int>(a.size()), q.s, [&](const std::vector<int>& si) {
    auto s = pick(a, si);
    for_each_combination(static_cast<int>(b.size()), q.t, [&](const std::vector<int>& ti) {
      auto t = pick(b, ti);
      int dist = d_(s[0], t[0]);
      for (int u : s) {
        for (int v : t) dist = std::min(dist, d_(u, v));
      }
      if (dist > best.value) best = {dist, s, t};
    });
  });
  return best;
}

ExactResult ExactOracle::max_separated_size(int alpha, int k) const {
  check_order(limits_.max_order);
  const int count = static_cast<int>(eligible(alpha).size());
  for (int s = count / 2; s >= 1; --s) {
    ExactResult r = conditional_diameter({alpha, alpha, s, s});
    if (r.value > k) return {s, std::move(r.first), std::move(r.second)};
  }
  return {0, {}, {}};
}

std::optional<SeparatorResult> ExactOracle::vertex_separator(int alpha, int k) const {
  check_order(limits_.max_separator_order);
  auto a = eligible(alpha);
  const int na = static_cast<int>(a.size());
  int best_u = 0;
  std::vector<int> best_first;
  std::vector<int> best_second;
  std::vector<int> dist(na);
  for (std::uint32_t mask = 1; mask < (1u << na); ++mask) {
    std::vector<int> u;
    for (int i = 0; i < na; ++i) {
      if (mask & (1u << i)) u.push_back(a[i]);
    }
    std::vector<int> far;
    for (int w : a) {
      int m = d_(u[0], w);
      for (int x : u) m = std::min(m, d_(x, w));
      if (m > k) far.push_back(w);
    }
    const int size = std::min(static_cast<int>(u.size()), static_cast<int>(far.size()));
    if (size > best_u) {
      best_u = size;
      best_first.assign(u.begin(), u.begin() + size);
      best_second.assign(far.begin(), far.begin() + size);
    }
  }
  if (best_u == 0) return std::nullopt;
  SeparatorResult r;
  r.part_size = best_u;
  r.separator_size = g_.order() - 2 * best_u;
  r.first = best_first;
  r.second = best_second;
  std::vector<char> used(g_.order(), 0);
  for (int v : best_first) used[v] = 1;
  for (int v : best_second) used[v] = 1;
  for (int v = 0; v < g_.order(); ++v) {
    if (!used[v]) r.separator.push_back(v);
  }
  return r;
}

std::vector<BoundQuery> all_queries(const Graph& g, int max_st) {
  std::vector<BoundQuery> out;
  const auto degrees = g.realized_degrees();
  const int top = std::min(max_st, g.order());
  for (int alpha : degrees) {
    for (int beta : degrees) {
      for (int s = 1; s <= top; ++s) {
        for (int t = 1; t <= top; ++t) out.push_back({alpha, beta, s, t});
      }
    }
  }
  return out;
}

namespace {

bool within_handshake(int m, const BoundQuery& q) {
  return static_cast<long>(q.s) * q.alpha <= 2L * m && static_cast<long>(q.t) * q.beta <= 2L * m;
}

std::vector<int> random_subset(int n, int size, std::mt19937_64& rng) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (int i = 0; i < size; ++i) {
    std::uniform_int_distribution<int> pick_index(i, n - 1);
    std::swap(all[i], all[pick_index(rng)]);
  }
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

SoundnessReport verify_soundness(const Graph& g, const std::vector<BoundQuery>& queries,
                                 const SoundnessOptions& options) {
  SoundnessReport report;
  ExactOracle oracle(g, options.limits);
  const SpectralAnalysis adjacency = analyze(g, MatrixKind::kDegreeAdjacency, options.spectral);
  const SpectralAnalysis laplacian = analyze(g, MatrixKind::kChungLaplacian, options.spectral);
  const auto pk = adjacency.extremal_values();
  const auto pl = laplacian.extremal_values();
  const int n = g.order();
  const int m = g.size();

  if (pk.size() != pl.size()) {
    Violation v;
    v.check = "laplacian-mesh-size";
    v.exact = static_cast<int>(pl.size());
    v.bound = static_cast<long>(pk.size());
    report.violations.push_back(v);
  } else {
    for (std::size_t k = 0; k < pk.size(); ++k) {
      ++report.checks;
      if (std::fabs(pk[k] - pl[k]) > 1e-8 * std::max(1.0, std::fabs(pk[k]))) {
        Violation v;
        v.check = "laplacian-value";
        v.kind = MatrixKind::kChungLaplacian;
        v.k = static_cast<int>(k);
        v.pk_value = pl[k];
        v.threshold = pk[k];
        report.violations.push_back(v);
      }
    }
  }

  for (const BoundQuery& q : queries) {
    ++report.queries;
    if (!within_handshake(m, q) || is_vacuous(g, q)) {
      ++report.vacuous;
      continue;
    }
    const BoundCertificate certs[] = {certify(g, q, adjacency, options.margin),
                                      certify(g, q, laplacian, options.margin)};
    ++report.checks;
    if (certs[0].min_certified_k != certs[1].min_certified_k) {
      Violation v;
      v.check = "laplacian-certificate";
      v.query = q;
      v.kind = MatrixKind::kChungLaplacian;
      v.k = certs[1].min_certified_k.value_or(-1);
      v.bound = certs[0].min_certified_k.value_or(-1);
      v.threshold = certs[0].threshold;
      report.violations.push_back(v);
    }
    if (!certs[0].min_certified_k && !certs[1].min_certified_k) continue;
    const ExactResult exact = oracle.conditional_diameter(q);
    for (const auto& cert : certs) {
      for (const auto& row : cert.rows) {
        if (!row.certified) continue;
        ++report.checks;
        if (exact.value > row.k) {
          report.violations.push_back({"conditional-diameter", q, cert.kind, row.k,
                                       row.pk_value, row.threshold, row.k, exact.value,
                                       exact.first, exact.second});
        }
      }
    }
  }

  std::mt19937_64 rng(options.lemma_seed);
  const DistanceMatrix& d = oracle.distances();
  std::uniform_int_distribution<int> size_dist(1, std::min(3, n));
  for (int i = 0; i < options.lemma_pairs; ++i) {
    VertexSet s(g, random_subset(n, size_dist(rng), rng));
    VertexSet t(g, random_subset(n, size_dist(rng), rng));
    const double threshold = lemma_set_threshold(m, s, t);
    const int dist = set_distance(d, s, t);
    for (std::size_t k = 0; k < pk.size(); ++k) {
      if (!exceeds(pk[k], threshold, options.margin)) continue;
      ++report.checks;
      if (dist > static_cast<int>(k)) {
        report.violations.push_back(
            {"set-profile", {s.min_degree(), t.min_degree(), s.size(), t.size()},
             MatrixKind::kDegreeAdjacency, static_cast<int>(k), pk[k], threshold,
             static_cast<long>(k), dist, {s.vertices().begin(), s.vertices().end()},
             {t.vertices().begin(), t.vertices().end()}});
      }
    }
  }

  if (n <= options.separator_max_order) {
    for (int alpha : g.realized_degrees()) {
      for (std::size_t kk = 0; kk < pk.size(); ++kk) {
        const int k = static_cast<int>(kk);
        const BoundQuery q{alpha, alpha, 0, 0};
        const ExactResult sep = oracle.max_separated_size(alpha, k);
        auto record = [&](const char* check, long bound, int exact) {
          report.violations.push_back(
              {check, q, MatrixKind::kDegreeAdjacency, k, pk[kk], 0.0, bound, exact,
               sep.first, sep.second});
        };

        const long size_bound = max_separated_set_size(m, alpha, pk[kk]);
        ++report.checks;
        if (sep.value > size_bound) record("separated-set", size_bound, sep.value);

        if (sep.value >= 1) {
          const long degree_bound = max_separated_degree(m, sep.value, pk[kk]);
          ++report.checks;
          if (alpha > degree_bound) record("separated-degree", degree_bound, alpha);
        }

        if (g.is_regular()) {
          const long regular_bound = regular_separated_size(n, pk[kk]);
          ++report.checks;
          if (sep.value > regular_bound) record("regular-separated-set", regular_bound, sep.value);
        }

        const auto separator = oracle.vertex_separator(alpha, k);
        ++report.checks;
        const int part = separator ? separator->part_size : 0;
        if (part != sep.value) record("separator-oracle-agreement", sep.value, part);
        if (separator) {
          const long lower = vertex_separator_lower_bound(n, m, alpha, pk[kk]);
          ++report.checks;
          if (separator->separator_size < lower) {
            record("vertex-separator", lower, separator->separator_size);
          }
        }
      }
    }
  }
  return report;
}

}  // namespace condiam
