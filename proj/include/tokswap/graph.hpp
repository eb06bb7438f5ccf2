// Copyright 2026 The tokswap Authors
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

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tokswap {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class FamilyKind { kNone, kPath, kCycle, kComplete, kLollipop, kStarPath };

/// Which parametrized family a graph was generated from. For lollipop and
/// star-path graphs vertex id `v` carries the signed label `v - m`; for paths
/// vertex id `v` carries the label `v + 1`.
struct Family {
  FamilyKind kind = FamilyKind::kNone;
  int m = 0;
  int n = 0;

  friend bool operator==(const Family&, const Family&) = default;
};

std::string family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(const std::string& name);

/// Simple undirected graph on vertices 0..n-1 with an optional label per
/// vertex. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on self-loops, duplicates or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {},
        Family family = {});

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  /// Index of {a,b} in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;
  const Family& family() const { return family_; }

  int max_degree() const;
  bool is_connected() const;
  /// Connected components as sorted vertex lists.
  std::vector<std::vector<Vertex>> components() const;
  bool is_bipartite() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  Family family_;
};

/// All-pairs BFS distances. Throws InputError listing the components when
/// the graph is disconnected.
std::vector<std::vector<int>> distances(const Graph& g);

/// BFS distances from one source; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
/// Complete graph on {-m..0} joined to the path 0-1-...-n.
Graph make_lollipop(int m, int n);
/// Star with centre 0 and leaves -1..-m joined to the path 0-1-...-n.
Graph make_starpath(int m, int n);
/// Dispatches on kind; `n` is the vertex count for path/cycle/complete.
Graph make_family(FamilyKind kind, int m, int n);

}  // namespace tokswap
