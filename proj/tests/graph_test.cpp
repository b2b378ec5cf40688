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

#include "condiam/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

namespace condiam {
namespace {

GraphErrorKind parse_error_kind(std::string_view text, bool dimacs = false) {
  try {
    dimacs ? parse_dimacs(text) : parse_edge_list(text);
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a parse error for: " << text;
  return GraphErrorKind::kMalformed;
}

TEST(ParseEdgeListTest, PathOfThree) {
  Graph g = parse_edge_list("0 1\n1 2");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.degrees(), (std::vector<int>{1, 2, 1}));
}

TEST(ParseEdgeListTest, CommentsAndBlankLines) {
  Graph g = parse_edge_list("# a triangle\n\n0 1  # first\n1\t2\n\n2 0\r\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(g.is_regular());
}

TEST(ParseEdgeListTest, ErrorsAreDistinct) {
  EXPECT_EQ(parse_error_kind("0 1\n1 0"), GraphErrorKind::kDuplicateEdge);
  EXPECT_EQ(parse_error_kind("0 1\n2 3"), GraphErrorKind::kDisconnected);
  EXPECT_EQ(parse_error_kind("0 1\n1 1"), GraphErrorKind::kSelfLoop);
  EXPECT_EQ(parse_error_kind("0 x"), GraphErrorKind::kMalformed);
  EXPECT_EQ(parse_error_kind("0 1 2"), GraphErrorKind::kMalformed);
  EXPECT_EQ(parse_error_kind("0 -1"), GraphErrorKind::kMalformed);
  EXPECT_EQ(parse_error_kind("# nothing\n"), GraphErrorKind::kTooSmall);
  // Index gap leaves vertex 2 isolated.
  EXPECT_EQ(parse_error_kind("0 1\n1 3"), GraphErrorKind::kDisconnected);
}

TEST(ParseEdgeListTest, ErrorNamesLine) {
  try {
    parse_edge_list("0 1\n# comment\n1 2\n2 1\n");
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(ParseDimacsTest, PathAndCycle) {
  Graph p3 = parse_dimacs("c path\np edge 3 2\ne 1 2\ne 2 3");
  EXPECT_EQ(p3.order(), 3);
  EXPECT_EQ(p3.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));

  Graph c4 = parse_dimacs("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1");
  EXPECT_EQ(c4.size(), 4);
  EXPECT_TRUE(c4.is_regular());
  EXPECT_EQ(c4.min_degree(), 2);
}

TEST(ParseDimacsTest, Errors) {
  EXPECT_EQ(parse_error_kind("p edge 3 3\ne 1 2\ne 2 3", true), GraphErrorKind::kHeaderMismatch);
  EXPECT_EQ(parse_error_kind("p edge 3 2\ne 1 2\ne 2 4", true), GraphErrorKind::kOutOfRange);
  EXPECT_EQ(parse_error_kind("p edge 3 2\ne 0 2\ne 2 3", true), GraphErrorKind::kOutOfRange);
  EXPECT_EQ(parse_error_kind("e 1 2", true), GraphErrorKind::kMalformed);
  EXPECT_EQ(parse_error_kind("p edge 3 2\ne 1 2\ne 2 1", true), GraphErrorKind::kDuplicateEdge);
  EXPECT_EQ(parse_error_kind("p edge 4 2\ne 1 2\ne 3 4", true), GraphErrorKind::kDisconnected);
}

TEST(GenerateTest, Families) {
  Graph star = generate(GraphFamily::kStar, 4);
  auto degrees = star.degrees();
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<int>{1, 1, 1, 3}));

  Graph c4 = generate(GraphFamily::kCycle, 4);
  EXPECT_EQ(c4.degrees(), (std::vector<int>{2, 2, 2, 2}));

  Graph k5 = generate(GraphFamily::kComplete, 5);
  EXPECT_EQ(k5.size(), 10);

  Graph p5 = generate(GraphFamily::kPath, 5);
  EXPECT_EQ(distance_matrix(p5).max(), 4);
}

TEST(GenerateTest, Petersen) {
  Graph g = generate(GraphFamily::kPetersen, 10);
  EXPECT_TRUE(g.is_regular());
  EXPECT_EQ(g.min_degree(), 3);
  EXPECT_EQ(g.size(), 15);
  DistanceMatrix d = distance_matrix(g);
  EXPECT_EQ(d.max(), 2);
  for (int u = 0; u < 10; ++u) {
    for (int v = 0; v < 10; ++v) {
      if (u != v) {
        EXPECT_GE(d(u, v), 1);
        EXPECT_LE(d(u, v), 2);
      }
    }
  }
  // Girth 5: no triangles and no 4-cycles means adjacent vertices share no
  // neighbour and non-adjacent ones share exactly one.
  for (int u = 0; u < 10; ++u) {
    for (int v = u + 1; v < 10; ++v) {
      int common = 0;
      for (int w = 0; w < 10; ++w) common += g.adjacent(u, w) && g.adjacent(v, w);
      EXPECT_EQ(common, g.adjacent(u, v) ? 0 : 1);
    }
  }
}

TEST(GenerateTest, TooSmall) {
  EXPECT_THROW(generate(GraphFamily::kCycle, 2), InputError);
  EXPECT_THROW(generate(GraphFamily::kPath, 1), InputError);
  EXPECT_THROW(generate(GraphFamily::kPetersen, 9), InputError);
  EXPECT_THROW(generate(GraphFamily::kRandomConnected, 1, 7), InputError);
}

TEST(GenerateTest, RandomIsSeedDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph a = generate(GraphFamily::kRandomConnected, 11, seed);
    Graph b = generate(GraphFamily::kRandomConnected, 11, seed);
    EXPECT_EQ(a.edges(), b.edges());
  }
  EXPECT_NE(generate(GraphFamily::kRandomConnected, 11, 1).edges(),
            generate(GraphFamily::kRandomConnected, 11, 2).edges());
}

TEST(GenerateTest, ZeroProbabilityGivesTree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph t = generate(GraphFamily::kRandomConnected, 9, seed, 0.0);
    EXPECT_EQ(t.size(), 8);
  }
}

// Handshake, connectivity, symmetry and the triangle inequality on random
// graphs.
TEST(GraphPropertyTest, RandomGraphInvariants) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    Graph g = generate(GraphFamily::kRandomConnected, n, seed, 0.1 * (seed % 6));
    const auto& deg = g.degrees();
    EXPECT_EQ(std::accumulate(deg.begin(), deg.end(), 0), 2 * g.size());
    for (int v = 0; v < n; ++v) {
      EXPECT_GE(g.degree(v), g.min_degree());
      EXPECT_LE(g.degree(v), g.max_degree());
      for (int w : g.neighbors(v)) {
        EXPECT_NE(w, v);
        EXPECT_TRUE(g.adjacent(w, v));
      }
    }
    DistanceMatrix d = distance_matrix(g);
    for (int u = 0; u < n; ++u) {
      EXPECT_EQ(d(u, u), 0);
      for (int v = 0; v < n; ++v) {
        EXPECT_GE(d(u, v), 0);
        EXPECT_EQ(d(u, v), d(v, u));
        EXPECT_EQ(d(u, v) == 1, g.adjacent(u, v));
        for (int w = 0; w < n; ++w) EXPECT_LE(d(u, w), d(u, v) + d(v, w));
      }
    }
  }
}

TEST(DistanceTest, SmallGraphs) {
  EXPECT_EQ(distance_matrix(generate(GraphFamily::kCycle, 4)).max(), 2);
  DistanceMatrix p3 = distance_matrix(parse_edge_list("0 1\n1 2"));
  EXPECT_EQ(p3(0, 2), 2);
}

TEST(SetDistanceTest, Examples) {
  Graph p4 = generate(GraphFamily::kPath, 4);
  DistanceMatrix dp = distance_matrix(p4);
  EXPECT_EQ(set_distance(dp, VertexSet(p4, {2}), VertexSet(p4, {2})), 0);
  EXPECT_EQ(set_distance(dp, VertexSet(p4, {0}), VertexSet(p4, {3})), 3);

  Graph c6 = generate(GraphFamily::kCycle, 6);
  DistanceMatrix dc = distance_matrix(c6);
  EXPECT_EQ(set_distance(dc, VertexSet(c6, {0, 1}), VertexSet(c6, {3, 4})), 2);
  EXPECT_EQ(set_distance(dc, VertexSet(c6, {0, 1}), VertexSet(c6, {1, 4})), 0);

  EXPECT_THROW(set_distance(dc, VertexSet(c6, {}), VertexSet(c6, {1})), InputError);
}

TEST(SetDistanceTest, MatchesDoubleLoop) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = generate(GraphFamily::kRandomConnected, 10, seed, 0.15);
    DistanceMatrix d = distance_matrix(g);
    std::vector<int> all(10);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> s(all.begin(), all.begin() + 3);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> t(all.begin(), all.begin() + 2);
    int expected = 1 << 30;
    for (int u : s) {
      for (int v : t) expected = std::min(expected, d(u, v));
    }
    EXPECT_EQ(set_distance(d, VertexSet(g, s), VertexSet(g, t)), expected);
  }
}

TEST(VertexSetTest, Profile) {
  Graph star = generate(GraphFamily::kStar, 4);
  VertexSet s(star, {3, 0});
  EXPECT_EQ(s.vertices()[0], 0);
  EXPECT_EQ(s.min_degree(), 1);
  EXPECT_NEAR(s.rho(), std::pow(std::sqrt(3.0) + 1.0, 2), 1e-12);
  EXPECT_GE(s.rho(), s.size() * s.size() * s.min_degree());

  EXPECT_THROW(VertexSet(star, {1, 1}), InputError);
  EXPECT_THROW(VertexSet(star, {4}), InputError);
}

TEST(VertexSetTest, RegularRhoIsExact) {
  Graph petersen = generate(GraphFamily::kPetersen, 10);
  for (int size = 1; size <= 10; ++size) {
    std::vector<int> vs(size);
    std::iota(vs.begin(), vs.end(), 0);
    EXPECT_NEAR(VertexSet(petersen, vs).rho(), size * size * 3.0, 1e-9);
  }
}

TEST(UnicyclicTest, Examples) {
  EXPECT_TRUE(is_unicyclic(generate(GraphFamily::kCycle, 4)));
  EXPECT_FALSE(is_unicyclic(parse_edge_list("0 1\n1 2")));
  EXPECT_FALSE(is_unicyclic(generate(GraphFamily::kComplete, 4)));
}

}  // namespace
}  // namespace condiam
