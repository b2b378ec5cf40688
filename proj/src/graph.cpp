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
#include <charconv>
#include <cmath>
#include <queue>
#include <random>
#include <set>

namespace condiam {

namespace {

std::string at_line(int line) {
  return line > 0 ? "line " + std::to_string(line) + ": " : std::string();
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

int parse_index(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw GraphError(GraphErrorKind::kMalformed, line,
                     at_line(line) + "expected a nonnegative integer, got '" +
                         std::string(token) + "'");
  }
  return value;
}

}  // namespace

GraphError::GraphError(GraphErrorKind kind, int line, const std::string& what)
    : InputError(what), kind_(kind), line_(line) {}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::span<const int> lines) {
  auto line_of = [&](std::size_t i) { return i < lines.size() ? lines[i] : 0; };
  if (n < 2) {
    throw GraphError(GraphErrorKind::kTooSmall, 0,
                     "graph must have at least 2 vertices, got " + std::to_string(n));
  }
  Graph g;
  g.adjacency_.assign(n, {});
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(GraphErrorKind::kOutOfRange, line_of(i),
                       at_line(line_of(i)) + "vertex out of range in edge " +
                           std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) {
      throw GraphError(GraphErrorKind::kSelfLoop, line_of(i),
                       at_line(line_of(i)) + "self-loop at vertex " + std::to_string(u));
    }
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw GraphError(GraphErrorKind::kDuplicateEdge, line_of(i),
                       at_line(line_of(i)) + "duplicate edge " + std::to_string(u) + " " +
                           std::to_string(v));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.edge_count_ = static_cast<int>(seen.size());

  std::vector<char> reached(n, 0);
  std::queue<int> frontier;
  reached[0] = 1;
  frontier.push(0);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int w : g.adjacency_[u]) {
      if (!reached[w]) {
        reached[w] = 1;
        frontier.push(w);
      }
    }
  }
  auto missing = std::find(reached.begin(), reached.end(), 0);
  if (missing != reached.end()) {
    throw GraphError(GraphErrorKind::kDisconnected, 0,
                     "graph is disconnected: vertex " +
                         std::to_string(missing - reached.begin()) +
                         " is unreachable from vertex 0");
  }

  g.degrees_.resize(n);
  for (int v = 0; v < n; ++v) g.degrees_[v] = static_cast<int>(g.adjacency_[v].size());
  g.min_degree_ = *std::min_element(g.degrees_.begin(), g.degrees_.end());
  g.max_degree_ = *std::max_element(g.degrees_.begin(), g.degrees_.end());
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::realized_degrees() const {
  std::vector<int> out(degrees_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<int> lines;
  int max_index = -1;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw GraphError(GraphErrorKind::kMalformed, line_no,
                       at_line(line_no) + "expected two vertex indices, got " +
                           std::to_string(tokens.size()) + " tokens");
    }
    int u = parse_index(tokens[0], line_no);
    int v = parse_index(tokens[1], line_no);
    max_index = std::max({max_index, u, v});
    edges.emplace_back(u, v);
    lines.push_back(line_no);
  }
  return Graph::from_edges(max_index + 1, edges, lines);
}

Graph parse_dimacs(std::string_view text) {
  int declared_n = -1;
  int declared_m = -1;
  std::vector<Edge> edges;
  std::vector<int> lines;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (declared_n >= 0) {
        throw GraphError(GraphErrorKind::kMalformed, line_no,
                         at_line(line_no) + "second problem line");
      }
      if (tokens.size() != 4 || tokens[1] != "edge") {
        throw GraphError(GraphErrorKind::kMalformed, line_no,
                         at_line(line_no) + "expected 'p edge N M'");
      }
      declared_n = parse_index(tokens[2], line_no);
      declared_m = parse_index(tokens[3], line_no);
      continue;
    }
    if (tokens[0] == "e") {
      if (declared_n < 0) {
        throw GraphError(GraphErrorKind::kMalformed, line_no,
                         at_line(line_no) + "edge line before problem line");
      }
      if (tokens.size() != 3) {
        throw GraphError(GraphErrorKind::kMalformed, line_no,
                         at_line(line_no) + "expected 'e u v'");
      }
      int u = parse_index(tokens[1], line_no);
      int v = parse_index(tokens[2], line_no);
      if (u < 1 || v < 1 || u > declared_n || v > declared_n) {
        throw GraphError(GraphErrorKind::kOutOfRange, line_no,
                         at_line(line_no) + "vertex out of range 1.." +
                             std::to_string(declared_n));
      }
      edges.emplace_back(u - 1, v - 1);
      lines.push_back(line_no);
      continue;
    }
    throw GraphError(GraphErrorKind::kMalformed, line_no,
                     at_line(line_no) + "unknown line type '" + std::string(tokens[0]) + "'");
  }
  if (declared_n < 0) {
    throw GraphError(GraphErrorKind::kMalformed, 0, "missing 'p edge N M' line");
  }
  if (static_cast<int>(edges.size()) != declared_m) {
    throw GraphError(GraphErrorKind::kHeaderMismatch, 0,
                     "header declares " + std::to_string(declared_m) + " edges but " +
                         std::to_string(edges.size()) + " were listed");
  }
  return Graph::from_edges(declared_n, edges, lines);
}

GraphFamily parse_family(std::string_view name) {
  if (name == "cycle") return GraphFamily::kCycle;
  if (name == "path") return GraphFamily::kPath;
  if (name == "complete") return GraphFamily::kComplete;
  if (name == "star") return GraphFamily::kStar;
  if (name == "petersen") return GraphFamily::kPetersen;
  if (name == "random_connected" || name == "random") return GraphFamily::kRandomConnected;
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

namespace {

// Decodes a uniformly random Pruefer sequence into a labelled tree.
std::vector<Edge> random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
    return edges;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> remaining(n, 1);
  for (int c : code) ++remaining[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (remaining[v] == 1) leaves.push(v);
  }
  for (int c : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--remaining[c] == 1) leaves.push(c);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return edges;
}

void require_order(bool ok, std::string_view family, int n, std::string_view need) {
  if (!ok) {
    throw InputError(std::string(family) + " needs " + std::string(need) + ", got n=" +
                     std::to_string(n));
  }
}

}  // namespace

Graph generate(GraphFamily family, int n, std::uint64_t seed, double extra_edge_probability) {
  std::vector<Edge> edges;
  switch (family) {
    case GraphFamily::kCycle:
      require_order(n >= 3, "cycle", n, "n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case GraphFamily::kPath:
      require_order(n >= 2, "path", n, "n >= 2");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case GraphFamily::kComplete:
      require_order(n >= 2, "complete", n, "n >= 2");
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      }
      break;
    case GraphFamily::kStar:
      require_order(n >= 2, "star", n, "n >= 2");
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case GraphFamily::kPetersen:
      require_order(n == 10, "petersen", n, "n = 10");
      // Outer 5-cycle, spokes, inner pentagram.
      for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      }
      break;
    case GraphFamily::kRandomConnected: {
      require_order(n >= 2, "random_connected", n, "n >= 2");
      if (!(extra_edge_probability >= 0.0 && extra_edge_probability <= 1.0)) {
        throw InputError("extra edge probability must lie in [0, 1]");
      }
      std::mt19937_64 rng(seed);
      edges = random_tree(n, rng);
      std::set<Edge> tree(edges.begin(), edges.end());
      std::bernoulli_distribution coin(extra_edge_probability);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (!tree.count({i, j}) && coin(rng)) edges.emplace_back(i, j);
        }
      }
      break;
    }
  }
  return Graph::from_edges(n, edges);
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {}

int DistanceMatrix::max() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> entries(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> queue(n);
  for (int source = 0; source < n; ++source) {
    int* row = entries.data() + static_cast<std::size_t>(source) * n;
    row[source] = 0;
    int head = 0;
    int tail = 0;
    queue[tail++] = source;
    while (head < tail) {
      int u = queue[head++];
      for (int w : g.neighbors(u)) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

VertexSet::VertexSet(const Graph& g, std::vector<int> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("vertex set contains a repeated vertex");
  }
  if (!vertices_.empty() && (vertices_.front() < 0 || vertices_.back() >= g.order())) {
    throw InputError("vertex set index out of range");
  }
  double root_sum = 0.0;
  min_degree_ = vertices_.empty() ? 0 : g.max_degree();
  for (int v : vertices_) {
    min_degree_ = std::min(min_degree_, g.degree(v));
    root_sum += std::sqrt(static_cast<double>(g.degree(v)));
  }
  rho_ = root_sum * root_sum;
}

int set_distance(const DistanceMatrix& d, const VertexSet& s, const VertexSet& t) {
  if (s.empty() || t.empty()) throw InputError("set distance of an empty vertex set");
  int best = d(s.vertices().front(), t.vertices().front());
  for (int u : s.vertices()) {
    for (int v : t.vertices()) best = std::min(best, d(u, v));
  }
  return best;
}

bool is_unicyclic(const Graph& g) { return g.size() == g.order(); }

}  // namespace condiam
