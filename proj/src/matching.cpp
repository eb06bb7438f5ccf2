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

#include "tokswap/matching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <queue>

namespace tokswap {

std::vector<int> maximum_matching(
    int n, const std::vector<std::pair<int, int>>& edges) {
  using BGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using BVertex = boost::graph_traits<BGraph>::vertex_descriptor;
  BGraph bg(n);
  for (const auto& [a, b] : edges) boost::add_edge(a, b, bg);
  std::vector<BVertex> mate(n);
  boost::edmonds_maximum_cardinality_matching(bg, mate.data());
  std::vector<int> out(n, -1);
  const BVertex none = boost::graph_traits<BGraph>::null_vertex();
  for (int v = 0; v < n; ++v) {
    if (mate[v] != none) out[v] = static_cast<int>(mate[v]);
  }
  return out;
}

namespace {

struct Arc {
  int to;
  int cap;
  int rev;
  bool forward;
};

class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : adj_(nodes) {}

  void add(int a, int b) {
    adj_[a].push_back({b, 1, static_cast<int>(adj_[b].size()), true});
    adj_[b].push_back({a, 0, static_cast<int>(adj_[a].size()) - 1, false});
  }

  // One BFS augmentation; false when no augmenting path remains.
  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> from(adj_.size(), {-1, -1});
    std::queue<int> queue;
    queue.push(s);
    from[s] = {s, -1};
    while (!queue.empty() && from[t].first < 0) {
      const int x = queue.front();
      queue.pop();
      for (int i = 0; i < static_cast<int>(adj_[x].size()); ++i) {
        const Arc& a = adj_[x][i];
        if (a.cap > 0 && from[a.to].first < 0) {
          from[a.to] = {x, i};
          queue.push(a.to);
        }
      }
    }
    if (from[t].first < 0) return false;
    for (int y = t; y != s;) {
      const auto [x, i] = from[y];
      Arc& a = adj_[x][i];
      --a.cap;
      ++adj_[y][a.rev].cap;
      y = x;
    }
    return true;
  }

  // Heads of forward arcs out of x that carry flow.
  std::vector<int> flow_heads(int x) const {
    std::vector<int> out;
    for (const Arc& a : adj_[x]) {
      if (a.forward && a.cap == 0) out.push_back(a.to);
    }
    return out;
  }

 private:
  std::vector<std::vector<Arc>> adj_;
};

}  // namespace

std::vector<std::vector<int>> vertex_disjoint_paths(
    int n, const std::vector<std::pair<int, int>>& arcs, int s, int t) {
  // Vertex v becomes 2v -> 2v+1; s and t keep a single node each.
  auto in = [&](int v) { return 2 * v; };
  auto out = [&](int v) { return v == s || v == t ? 2 * v : 2 * v + 1; };
  UnitFlow flow(2 * n);
  for (int v = 0; v < n; ++v) {
    if (v != s && v != t) flow.add(in(v), out(v));
  }
  for (const auto& [a, b] : arcs) {
    if (a == t || b == s || a == b) continue;
    flow.add(out(a), in(b));
  }
  while (flow.augment(out(s), in(t))) {
  }
  std::vector<std::vector<int>> paths;
  for (int head : flow.flow_heads(out(s))) {
    std::vector<int> path;
    int node = head;
    while (node != in(t)) {
      const int v = node / 2;
      path.push_back(v);
      const auto next = flow.flow_heads(out(v));
      node = next.front();
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace tokswap
