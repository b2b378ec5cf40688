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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

namespace condiam {
namespace {

std::vector<double> ten_vertex_values() {
  const double r19 = std::sqrt(19.0);
  SpectralMesh mesh = extract_mesh({MatrixKind::kDegreeAdjacency,
                                    {1, (1 + r19) / 6, 0.5358, 0, 0, -1.0 / 3, -1.0 / 3, -0.3765,
                                     (1 - r19) / 6, -0.8259}});
  std::vector<double> out;
  for (const auto& p : alternating_polynomials(mesh)) out.push_back(p.extremal_value);
  return out;
}

TEST(ThresholdTest, General) {
  EXPECT_DOUBLE_EQ(threshold_general(10, {2, 2, 1, 1}), 9.0);
  EXPECT_NEAR(threshold_general(14, {3, 3, 2, 2}), 28.0 / 6 - 1, 1e-12);
  // Regular graph: 2m = n r gives n - 1.
  EXPECT_NEAR(threshold_general(15, {3, 3, 1, 1}), 9.0, 1e-12);
  EXPECT_DOUBLE_EQ(threshold_general(4, {2, 2, 4, 4}), 0.0);
  try {
    threshold_general(4, {3, 2, 3, 1});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("handshake capacity"), std::string::npos);
  }
  EXPECT_THROW(threshold_general(4, {0, 1, 1, 1}), InputError);
}

TEST(ThresholdTest, SetProfile) {
  Graph c6 = generate(GraphFamily::kCycle, 6);
  EXPECT_DOUBLE_EQ(lemma_set_threshold(6, VertexSet(c6, {0}), VertexSet(c6, {3})), 5.0);
  Graph star = generate(GraphFamily::kStar, 5);
  // Singletons of degrees 4 and 1 in a graph with m = 4.
  EXPECT_NEAR(lemma_set_threshold(4, VertexSet(star, {0}), VertexSet(star, {2})),
              std::sqrt((8.0 / 4 - 1) * (8.0 / 1 - 1)), 1e-12);
  Graph petersen = generate(GraphFamily::kPetersen, 10);
  for (int s = 1; s <= 4; ++s) {
    for (int t = 1; t <= 4; ++t) {
      std::vector<int> a(s), b(t);
      for (int i = 0; i < s; ++i) a[i] = i;
      for (int i = 0; i < t; ++i) b[i] = 9 - i;
      EXPECT_NEAR(lemma_set_threshold(15, VertexSet(petersen, a), VertexSet(petersen, b)),
                  threshold_general(15, {3, 3, s, t}), 1e-12);
    }
  }
}

TEST(ThresholdTest, SetProfileNeverBelowGeneralForEligibleSets) {
  // rho(U) >= |U|^2 min degree, so the set threshold is at most the general one.
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = generate(GraphFamily::kRandomConnected, 4 + seed % 8, seed, 0.3);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> a{pick(rng)}, b{pick(rng)};
      if (int x = pick(rng); x != a[0]) a.push_back(x);
      VertexSet sa(g, a), sb(g, b);
      BoundQuery q{sa.min_degree(), sb.min_degree(), sa.size(), sb.size()};
      EXPECT_LE(lemma_set_threshold(g.size(), sa, sb),
                threshold_general(g.size(), q) * (1 + 1e-12) + 1e-12);
    }
  }
}

TEST(CorollaryTest, ExamplesAndSubstitutions) {
  Graph c4 = generate(GraphFamily::kCycle, 4);
  EXPECT_DOUBLE_EQ(corollary_threshold(c4, Corollary::kMinDegree), 3.0);
  Graph petersen = generate(GraphFamily::kPetersen, 10);
  EXPECT_DOUBLE_EQ(corollary_threshold(petersen, Corollary::kRegular), 9.0);
  Graph c9 = generate(GraphFamily::kCycle, 9);
  EXPECT_DOUBLE_EQ(corollary_threshold(c9, Corollary::kUnicyclic), 17.0);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = generate(GraphFamily::kRandomConnected, 3 + seed % 9, seed, 0.4);
    const int m = g.size();
    for (int a = g.min_degree(); a <= g.max_degree(); ++a) {
      EXPECT_NEAR(corollary_threshold(g, Corollary::kDegreePair, {.alpha = a}),
                  threshold_general(m, {a, a, 1, 1}), 1e-12);
      EXPECT_EQ(corollary_query(g, Corollary::kDegreePair, {.alpha = a}), (BoundQuery{a, a, 1, 1}));
    }
    const int d = g.min_degree();
    EXPECT_NEAR(corollary_threshold(g, Corollary::kMinDegree), threshold_general(m, {d, d, 1, 1}),
                1e-12);
  }
  for (const Graph& g : {generate(GraphFamily::kPetersen, 10), generate(GraphFamily::kComplete, 6),
                         generate(GraphFamily::kCycle, 7)}) {
    const int r = g.min_degree();
    EXPECT_NEAR(corollary_threshold(g, Corollary::kRegular),
                threshold_general(g.size(), {r, r, 1, 1}), 1e-12);
    for (int s = 1; s <= 3; ++s) {
      for (int t = 1; t <= 3; ++t) {
        EXPECT_NEAR(corollary_threshold(g, Corollary::kRegularSetPair, {.s = s, .t = t}),
                    threshold_general(g.size(), {r, r, s, t}), 1e-12);
      }
    }
  }
  // Unicyclic: m = n with the weakest degree bound 1.
  for (int n : {3, 5, 9}) {
    Graph cycle = generate(GraphFamily::kCycle, n);
    EXPECT_NEAR(corollary_threshold(cycle, Corollary::kUnicyclic),
                threshold_general(n, {1, 1, 1, 1}), 1e-12);
  }
}

TEST(CorollaryTest, Preconditions) {
  Graph star = generate(GraphFamily::kStar, 5);
  EXPECT_THROW(corollary_threshold(star, Corollary::kRegular), InputError);
  EXPECT_THROW(corollary_threshold(star, Corollary::kRegularSetPair), InputError);
  EXPECT_THROW(corollary_threshold(star, Corollary::kUnicyclic), InputError);
  EXPECT_THROW(corollary_threshold(star, Corollary::kDegreePair, {.alpha = 5}), InputError);
  Graph c4 = generate(GraphFamily::kCycle, 4);
  EXPECT_THROW(corollary_threshold(c4, Corollary::kRegularSetPair, {.s = 5, .t = 1}), InputError);
  EXPECT_EQ(parse_corollary("e"), Corollary::kRegularSetPair);
  EXPECT_THROW(parse_corollary("f"), InputError);
  EXPECT_EQ(to_string(source_of(Corollary::kUnicyclic)), "unicyclic");
}

TEST(CertifyTest, MinCertifiedK) {
  auto values = ten_vertex_values();
  EXPECT_EQ(min_certified_k(values, 13.0), 6);
  EXPECT_EQ(min_certified_k(values, 0.5), 0);
  const std::vector<double> petersen{1.0, 7.0 / 3};
  EXPECT_EQ(min_certified_k(petersen, 9.0), std::nullopt);
  // A tie is not certified.
  const std::vector<double> c6{1.0, 5.0 / 3, 5.0};
  EXPECT_EQ(min_certified_k(c6, 5.0), std::nullopt);
  EXPECT_EQ(min_certified_k(c6, 4.999), 2);
  EXPECT_EQ(min_certified_k(c6, 1.0), 1);
  EXPECT_EQ(min_certified_k(c6, 1.0, 1.0), 2);
}

TEST(CertifyTest, CertificateTableIsMonotone) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = generate(GraphFamily::kRandomConnected, 3 + seed % 9, seed, 0.3);
    SpectralAnalysis an = analyze(g, MatrixKind::kDegreeAdjacency);
    BoundQuery q{g.min_degree(), g.max_degree(), 1, 2};
    if (2 * g.max_degree() > 2 * g.size()) continue;
    BoundCertificate cert = certify(g, q, an);
    EXPECT_EQ(cert.threshold, threshold_general(g.size(), q));
    bool seen = false;
    for (std::size_t k = 0; k < cert.rows.size(); ++k) {
      if (k > 0) EXPECT_GT(cert.rows[k].pk_value, cert.rows[k - 1].pk_value);
      EXPECT_EQ(cert.rows[k].certified, cert.rows[k].pk_value > cert.threshold + 1e-9 * std::max(1.0, cert.threshold));
      if (seen) EXPECT_TRUE(cert.rows[k].certified);
      if (cert.rows[k].certified && !seen) {
        EXPECT_EQ(cert.min_certified_k, static_cast<int>(k));
        seen = true;
      }
    }
    if (!seen) EXPECT_FALSE(cert.min_certified_k.has_value());
  }
}

TEST(CertifyTest, QueryValidation) {
  Graph star = generate(GraphFamily::kStar, 5);
  EXPECT_THROW(validate_query(star, {5, 1, 1, 1}), InputError);
  EXPECT_THROW(validate_query(star, {1, 1, 6, 1}), InputError);
  EXPECT_THROW(validate_query(star, {1, 1, 1, 0}), InputError);
  EXPECT_NO_THROW(validate_query(star, {4, 1, 1, 4}));
  EXPECT_TRUE(is_vacuous(star, {4, 1, 2, 1}));
  EXPECT_FALSE(is_vacuous(star, {4, 1, 1, 4}));
}

TEST(SeparatorBoundTest, Arithmetic) {
  EXPECT_EQ(max_separated_set_size(14, 2, 12.2), 1);
  EXPECT_EQ(max_separated_set_size(14, 3, 2.33), 2);
  EXPECT_EQ(max_separated_set_size(14, 3, 20.0), 0);
  EXPECT_EQ(max_separated_degree(14, 3, 2.33), 2);
  EXPECT_EQ(max_separated_degree(14, 2, 2.33), 4);
  EXPECT_EQ(max_separated_degree(10, 1, 1.0), 10);
  EXPECT_EQ(max_separated_degree(10, 7, 2.0), 0);
  EXPECT_EQ(regular_separated_size(10, 7.0 / 3), 3);
  EXPECT_EQ(regular_separated_size(10, 9.0), 1);
  EXPECT_EQ(vertex_separator_lower_bound(10, 14, 2, 12.2), 8);
  EXPECT_EQ(vertex_separator_lower_bound(10, 14, 3, 20.0), 10);
  EXPECT_THROW(max_separated_set_size(14, 0, 2.0), InputError);
  EXPECT_THROW(max_separated_degree(14, 1, 0.5), InputError);
  // Exact quotient lands on the integer despite rounding.
  EXPECT_EQ(max_separated_set_size(6, 2, 0.1 * 3 * 10 - 1), 2);
}

TEST(SeparatorBoundTest, RegularSubstitution) {
  for (int n = 4; n <= 20; ++n) {
    for (int r = 1; r < n; ++r) {
      if (n * r % 2) continue;
      for (double pk : {1.0, 7.0 / 3, 3.5, 9.0}) {
        EXPECT_EQ(regular_separated_size(n, pk), max_separated_set_size(n * r / 2, r, pk));
      }
    }
  }
}

TEST(ExampleChainTest, TenVertexMeshWithFourteenEdges) {
  auto values = ten_vertex_values();
  const int m = 14;
  EXPECT_EQ(min_certified_k(values, threshold_general(m, {2, 2, 1, 1})), 6);
  EXPECT_EQ(min_certified_k(values, threshold_general(m, {2, 3, 1, 1})), 5);
  EXPECT_EQ(min_certified_k(values, threshold_general(m, {2, 3, 1, 2})), 5);
  EXPECT_EQ(min_certified_k(values, threshold_general(m, {3, 3, 2, 2})), 4);
  EXPECT_EQ(min_certified_k(values, threshold_general(m, {2, 2, 3, 3})), 4);
  EXPECT_EQ(max_separated_set_size(m, 2, values[5]), 1);
  EXPECT_EQ(max_separated_set_size(m, 3, values[3]), 2);
  EXPECT_EQ(vertex_separator_lower_bound(10, m, 2, values[5]), 8);
}

TEST(ExampleChainTest, FourteenIsTheOnlyConsistentEdgeCount) {
  auto values = ten_vertex_values();
  std::vector<int> consistent;
  // A connected graph on 10 vertices has between 9 and 45 edges.
  for (int m = 9; m <= 45; ++m) {
    bool ok = min_certified_k(values, threshold_general(m, {2, 2, 1, 1})) == 6 &&
              min_certified_k(values, threshold_general(m, {2, 3, 1, 1})) == 5 &&
              min_certified_k(values, threshold_general(m, {2, 3, 1, 2})) == 5 &&
              min_certified_k(values, threshold_general(m, {3, 3, 2, 2})) == 4 &&
              min_certified_k(values, threshold_general(m, {2, 2, 3, 3})) == 4 &&
              max_separated_set_size(m, 2, values[5]) == 1 &&
              max_separated_set_size(m, 3, values[3]) == 2;
    if (ok) consistent.push_back(m);
  }
  EXPECT_EQ(consistent, std::vector<int>{14});
}

TEST(LaplacianTest, MatchesDegreeAdjacency) {
  Graph c4 = generate(GraphFamily::kCycle, 4);
  SpectralAnalysis lc4 = analyze(c4, MatrixKind::kChungLaplacian);
  ASSERT_EQ(lc4.polynomials.size(), 2u);
  EXPECT_NEAR(lc4.polynomials[1].extremal_value, 3.0, 1e-12);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = generate(GraphFamily::kRandomConnected, 3 + seed % 9, seed, 0.35);
    SpectralAnalysis a = analyze(g, MatrixKind::kDegreeAdjacency);
    SpectralAnalysis l = analyze(g, MatrixKind::kChungLaplacian);
    ASSERT_EQ(a.polynomials.size(), l.polynomials.size());
    for (std::size_t k = 0; k < a.polynomials.size(); ++k) {
      EXPECT_NEAR(l.polynomials[k].extremal_value, a.polynomials[k].extremal_value,
                  1e-8 * a.polynomials[k].extremal_value);
    }
    for (int al = g.min_degree(); al <= g.max_degree(); ++al) {
      for (int s = 1; s <= 2; ++s) {
        BoundQuery q{al, g.min_degree(), s, 1};
        if (s * al > 2 * g.size()) continue;
        EXPECT_EQ(certify(g, q, a).min_certified_k, certify(g, q, l).min_certified_k);
      }
    }
  }
}

}  // namespace
}  // namespace condiam
