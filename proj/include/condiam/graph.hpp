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

#ifndef CONDIAM_GRAPH_HPP_
#define CONDIAM_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "condiam/error.hpp"

namespace condiam {

enum class GraphErrorKind {
  kMalformed,
  kSelfLoop,
  kDuplicateEdge,
  kDisconnected,
  kTooSmall,
  kHeaderMismatch,
  kOutOfRange,
};

// Raised by the parsers and by Graph::from_edges. `line()` is the 1-based
// input line that triggered the error, or 0 when the problem is global.
class GraphError : public InputError {
 public:
  GraphError(GraphErrorKind kind, int line, const std::string& what);

  GraphErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  GraphErrorKind kind_;
  int line_;
};

using Edge = std::pair<int, int>;

// Finite, undirected, simple and connected graph on vertices 0..n-1.
// Immutable once built.
class Graph {
 public:
  // Validates simplicity and connectivity. `lines`, when non-empty, gives
  // the source line of each edge for error messages.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          std::span<const int> lines = {});

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return edge_count_; }

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }
  bool is_regular() const { return min_degree_ == max_degree_; }
  bool adjacent(int u, int v) const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  // Sorted distinct degree values present in the graph.
  std::vector<int> realized_degrees() const;

 private:
  Graph() = default;

  std::vector<std::vector<int>> adjacency_;
  std::vector<int> degrees_;
  int edge_count_ = 0;
  int min_degree_ = 0;
  int max_degree_ = 0;
};

// One edge per line as two base-10 integers; '#' starts a comment.
Graph parse_edge_list(std::string_view text);

// "c" comments, one "p edge N M" header, M "e u v" lines, 1-based vertices.
Graph parse_dimacs(std::string_view text);

enum class GraphFamily { kCycle, kPath, kComplete, kStar, kPetersen, kRandomConnected };

GraphFamily parse_family(std::string_view name);

inline constexpr double kDefaultExtraEdgeProbability = 0.3;

// Deterministic in (family, n, seed). random_connected draws a uniform
// labelled spanning tree and then adds every other pair independently with
// probability `extra_edge_probability`.
Graph generate(GraphFamily family, int n, std::uint64_t seed = 0,
               double extra_edge_probability = kDefaultExtraEdgeProbability);

class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> entries);

  int order() const { return n_; }
  int operator()(int u, int v) const { return entries_[static_cast<std::size_t>(u) * n_ + v]; }
  // Largest entry, i.e. the diameter.
  int max() const;

 private:
  int n_;
  std::vector<int> entries_;
};

// BFS from every source.
DistanceMatrix distance_matrix(const Graph& g);

// Distinct sorted vertex indices together with the degree profile used by
// the set-based bounds: min degree and rho = (sum of sqrt(degree))^2.
class VertexSet {
 public:
  VertexSet(const Graph& g, std::vector<int> vertices);

  std::span<const int> vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  int min_degree() const { return min_degree_; }
  double rho() const { return rho_; }

 private:
  std::vector<int> vertices_;
  int min_degree_ = 0;
  double rho_ = 0.0;
};

// Minimum pairwise distance; 0 when the sets intersect.
int set_distance(const DistanceMatrix& d, const VertexSet& s, const VertexSet& t);

// Connected graph with exactly one cycle.
bool is_unicyclic(const Graph& g);

}  // namespace condiam

#endif  // CONDIAM_GRAPH_HPP_
