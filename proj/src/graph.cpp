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

#include "tokswap/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "tokswap/error.hpp"

namespace tokswap {

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPath:
      return "path";
    case FamilyKind::kCycle:
      return "cycle";
    case FamilyKind::kComplete:
      return "complete";
    case FamilyKind::kLollipop:
      return "lollipop";
    case FamilyKind::kStarPath:
      return "starpath";
    case FamilyKind::kNone:
      break;
  }
  return "none";
}

std::optional<FamilyKind> family_from_name(const std::string& name) {
  for (auto kind : {FamilyKind::kNone, FamilyKind::kPath, FamilyKind::kCycle,
                    FamilyKind::kComplete, FamilyKind::kLollipop,
                    FamilyKind::kStarPath}) {
    if (family_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels,
             Family family)
    : n_(n),
      edges_(std::move(edges)),
      labels_(std::move(labels)),
      family_(family) {
  if (n < 0) throw InputError("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw InputError("label count does not match vertex count");
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) {
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= n) {
      throw InputError("edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} out of range");
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw InputError("duplicate edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "}");
    }
  }
  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::string Graph::label(Vertex v) const {
  if (!labels_.empty()) return labels_[v];
  return std::to_string(v);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adjacency_) {
    best = std::max(best, static_cast<int>(nb.size()));
  }
  return best;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (Vertex y : adjacency_[x]) {
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

bool Graph::is_bipartite() const {
  std::vector<int> side(n_, -1);
  for (Vertex s = 0; s < n_; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      for (Vertex y : adjacency_[x]) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> distances(const Graph& g) {
  auto comps = g.components();
  if (comps.size() > 1) {
    std::ostringstream msg;
    msg << "graph is disconnected; components:";
    for (const auto& c : comps) {
      msg << " {";
      for (std::size_t i = 0; i < c.size(); ++i) {
        msg << (i ? "," : "") << c[i];
      }
      msg << "}";
    }
    throw InputError(msg.str());
  }
  std::vector<std::vector<int>> all;
  all.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all.push_back(bfs_distances(g, v));
  return all;
}

namespace {

std::vector<std::string> signed_labels(int m, int n) {
  std::vector<std::string> labels;
  for (int s = -m; s <= n; ++s) labels.push_back(std::to_string(s));
  return labels;
}

}  // namespace

Graph make_path(int n) {
  if (n < 1) throw InputError("path needs at least one vertex");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) {
    labels.push_back(std::to_string(v + 1));
    if (v + 1 < n) edges.emplace_back(v, v + 1);
  }
  return Graph(n, std::move(edges), std::move(labels),
               Family{FamilyKind::kPath, 0, n});
}

Graph make_cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) {
    labels.push_back(std::to_string(v + 1));
    edges.emplace_back(v, (v + 1) % n);
  }
  return Graph(n, std::move(edges), std::move(labels),
               Family{FamilyKind::kCycle, 0, n});
}

Graph make_complete(int n) {
  if (n < 1) throw InputError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges), {}, Family{FamilyKind::kComplete, 0, n});
}

Graph make_lollipop(int m, int n) {
  if (m < 1 || n < 0) throw InputError("lollipop needs m >= 1 and n >= 0");
  // Signed vertex s lives at id s + m; the clique is {-m..0}.
  std::vector<Edge> edges;
  for (int i = -m; i <= 0; ++i) {
    for (int j = i + 1; j <= 0; ++j) edges.emplace_back(i + m, j + m);
  }
  for (int i = 0; i < n; ++i) edges.emplace_back(i + m, i + 1 + m);
  return Graph(m + n + 1, std::move(edges), signed_labels(m, n),
               Family{FamilyKind::kLollipop, m, n});
}

Graph make_starpath(int m, int n) {
  if (m < 1 || n < 0) throw InputError("star-path needs m >= 1 and n >= 0");
  std::vector<Edge> edges;
  for (int i = -m; i < 0; ++i) edges.emplace_back(i + m, m);
  for (int i = 0; i < n; ++i) edges.emplace_back(i + m, i + 1 + m);
  return Graph(m + n + 1, std::move(edges), signed_labels(m, n),
               Family{FamilyKind::kStarPath, m, n});
}

Graph make_family(FamilyKind kind, int m, int n) {
  switch (kind) {
    case FamilyKind::kPath:
      return make_path(n);
    case FamilyKind::kCycle:
      return make_cycle(n);
    case FamilyKind::kComplete:
      return make_complete(n);
    case FamilyKind::kLollipop:
      return make_lollipop(m, n);
    case FamilyKind::kStarPath:
      return make_starpath(m, n);
    case FamilyKind::kNone:
      break;
  }
  throw InputError("unknown graph family");
}

}  // namespace tokswap
