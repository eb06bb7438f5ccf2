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

#include "tokswap/twostep.hpp"

#include <algorithm>

#include "tokswap/error.hpp"
#include "tokswap/matching.hpp"

namespace tokswap {

namespace {

// Records the pair {x,y} in a partner map; x == y means x stays put.
bool assign(const Graph& g, std::vector<int>& partner, Vertex x, Vertex y) {
  if (x != y && !g.has_edge(x, y)) return false;
  if (partner[x] != -1 && partner[x] != y) return false;
  if (partner[y] != -1 && partner[y] != x) return false;
  partner[x] = y;
  partner[y] = x;
  return true;
}

Matching to_matching(const std::vector<int>& partner,
                     const std::vector<Vertex>& support) {
  Matching out;
  for (Vertex x : support) {
    if (partner[x] > x) out.emplace_back(x, partner[x]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void append(Matching& dst, const Matching& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

std::optional<OrbitAlignment> orbit_pair_feasible(
    const Graph& g, const Configuration& f, const std::vector<Vertex>& orbit_a,
    const std::vector<Vertex>& orbit_b) {
  if (orbit_a.empty() || orbit_b.empty()) {
    throw InputError("orbits must be nonempty");
  }
  for (const auto* orbit : {&orbit_a, &orbit_b}) {
    const int len = static_cast<int>(orbit->size());
    for (int i = 0; i < len; ++i) {
      if (f.token_on((*orbit)[i]) != (*orbit)[(i + 1) % len]) {
        throw InputError("not an orbit of the configuration");
      }
    }
  }
  const bool same = std::find(orbit_b.begin(), orbit_b.end(), orbit_a[0]) !=
                    orbit_b.end();
  if (same && orbit_a.size() != orbit_b.size()) {
    throw InputError("not an orbit of the configuration");
  }
  if (orbit_a.size() == 1 && orbit_b.size() == 1) {
    return OrbitAlignment{orbit_a[0], orbit_b[0], {}, {}};
  }
  // Distinct orbits can only be interleaved when they have equal length.
  if (orbit_a.size() != orbit_b.size()) return std::nullopt;
  const int len = static_cast<int>(orbit_a.size());
  const std::vector<Vertex>& a = orbit_a;
  // When the orbits coincide, index b through a's listing.
  const std::vector<Vertex>& b = same ? orbit_a : orbit_b;

  std::vector<Vertex> support = a;
  if (!same) support.insert(support.end(), b.begin(), b.end());

  std::vector<int> sp(g.order(), -1), tp(g.order(), -1);
  for (int ib = 0; ib < len; ++ib) {
    for (Vertex x : support) sp[x] = tp[x] = -1;
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      const Vertex back = b[((ib - i) % len + len) % len];
      ok = assign(g, sp, a[i], back) && assign(g, tp, a[(i + 1) % len], back);
    }
    for (Vertex x : support) {
      if (!ok) break;
      if (sp[x] == -1 || tp[x] == -1) ok = false;
    }
    for (Vertex x : support) {
      if (!ok) break;
      if (f.token_on(sp[tp[x]]) != x) ok = false;
    }
    if (ok) {
      return OrbitAlignment{a[0], b[ib], to_matching(sp, support),
                            to_matching(tp, support)};
    }
  }
  return std::nullopt;
}

OrbitPairGraph build_orbit_pair_graph(const Graph& g, const Configuration& f) {
  if (f.size() != g.order()) {
    throw InputError("configuration size does not match graph");
  }
  OrbitPairGraph out;
  for (auto& orbit : orbits(f)) {
    if (orbit.size() > 1) out.nodes.push_back(std::move(orbit));
  }
  const int n = static_cast<int>(out.nodes.size());
  for (int i = 0; i < n; ++i) {
    out.self_witness.push_back(
        orbit_pair_feasible(g, f, out.nodes[i], out.nodes[i]));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (auto w = orbit_pair_feasible(g, f, out.nodes[i], out.nodes[j])) {
        out.edges.emplace_back(i, j);
        out.edge_witness.push_back(std::move(*w));
      }
    }
  }
  return out;
}

TwoStepAnswer decide_rt2(const Graph& g, const Configuration& f) {
  const OrbitPairGraph pg = build_orbit_pair_graph(g, f);
  const int n = static_cast<int>(pg.nodes.size());
  // Orbit nodes 0..n-1, then one auxiliary node per self-feasible orbit,
  // all auxiliaries mutually adjacent, plus a dummy auxiliary when needed
  // to make the node count even. A perfect matching then picks a partner
  // or "alone" for every orbit.
  std::vector<std::pair<int, int>> edges = pg.edges;
  std::vector<int> aux_of(n, -1);
  int next = n;
  for (int i = 0; i < n; ++i) {
    if (pg.self_witness[i]) {
      aux_of[i] = next++;
      edges.emplace_back(i, aux_of[i]);
    }
  }
  const int first_aux = n;
  if ((next - first_aux + n) % 2 == 1) ++next;
  for (int x = first_aux; x < next; ++x) {
    for (int y = x + 1; y < next; ++y) edges.emplace_back(x, y);
  }
  const std::vector<int> mate = maximum_matching(next, edges);
  TwoStepAnswer answer;
  for (int v = 0; v < next; ++v) {
    if (mate[v] < 0) return answer;
  }
  answer.yes = true;
  for (int i = 0; i < n; ++i) {
    const int j = mate[i];
    const OrbitAlignment* w = nullptr;
    if (j >= n) {
      w = &*pg.self_witness[i];
    } else if (i < j) {
      const auto it = std::find(pg.edges.begin(), pg.edges.end(),
                                std::make_pair(i, j));
      w = &pg.edge_witness[it - pg.edges.begin()];
    }
    if (w) {
      append(answer.first, w->s);
      append(answer.second, w->t);
    }
  }
  std::sort(answer.first.begin(), answer.first.end());
  std::sort(answer.second.begin(), answer.second.end());
  return answer;
}

FlowNetwork build_flow_network(const Graph& g, const Coloring& f,
                               const Coloring& goal) {
  if (f.size() != g.order() || goal.size() != g.order()) {
    throw InputError("coloring size does not match graph");
  }
  if (f.num_colors() > 2 || goal.num_colors() > 2) {
    throw InputError("colorings must use colours 1 and 2 only");
  }
  if (!consistent(f, goal)) throw InputError("colorings are not consistent");
  FlowNetwork net;
  net.n = g.order();
  // 0 = V_s, 1 = V_t, 2 = V_1, 3 = V_2
  std::vector<int> cls(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const int a = f.color_on(v), b = goal.color_on(v);
    if (a == 1 && b == 2) {
      cls[v] = 0;
      net.v_s.push_back(v);
    } else if (a == 2 && b == 1) {
      cls[v] = 1;
      net.v_t.push_back(v);
    } else if (a == 1) {
      cls[v] = 2;
      net.v_1.push_back(v);
    } else {
      cls[v] = 3;
      net.v_2.push_back(v);
    }
  }
  auto allowed = [&](Vertex x, Vertex y) {
    const int a = cls[x], b = cls[y];
    if (a == 0) return b != 0;           // V_s -> V_t, V_1, V_2
    if (b == 1) return a == 2 || a == 3;  // V_1, V_2 -> V_t
    return (a == 2 && b == 3) || (a == 3 && b == 2);
  };
  for (const Edge& e : g.edges()) {
    if (allowed(e.u, e.v)) net.arcs.emplace_back(e.u, e.v);
    if (allowed(e.v, e.u)) net.arcs.emplace_back(e.v, e.u);
  }
  for (Vertex v : net.v_s) net.arcs.emplace_back(net.source(), v);
  for (Vertex v : net.v_t) net.arcs.emplace_back(v, net.sink());
  return net;
}

ColoredTwoStepAnswer decide_rt2_2colored(const Graph& g, const Coloring& f,
                                         const Coloring& goal) {
  const FlowNetwork net = build_flow_network(g, f, goal);
  ColoredTwoStepAnswer answer;
  answer.paths =
      vertex_disjoint_paths(net.n + 2, net.arcs, net.source(), net.sink());
  if (answer.paths.size() != net.v_s.size()) {
    answer.paths.clear();
    return answer;
  }
  answer.yes = true;
  for (const auto& path : answer.paths) {
    Matching odd, even;  // {u1,u2},{u3,u4},... and the rest
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      (i % 2 == 0 ? odd : even).emplace_back(path[i], path[i + 1]);
    }
    const bool odd_first =
        path.size() < 2 || f.color_on(path[0]) != f.color_on(path[1]);
    append(answer.first, odd_first ? odd : even);
    append(answer.second, odd_first ? even : odd);
  }
  std::sort(answer.first.begin(), answer.first.end());
  std::sort(answer.second.begin(), answer.second.end());
  return answer;
}

bool path_is_two_step(const Coloring& f, const Coloring& goal,
                      const std::vector<Vertex>& path) {
  const int k = static_cast<int>(path.size());
  if (k < 2) return false;
  auto F = [&](int i) { return f.color_on(path[i - 1]); };
  auto G = [&](int i) { return goal.color_on(path[i - 1]); };
  if (!(F(1) == G(k) && G(1) == F(k) && F(1) != G(1))) return false;
  for (int i = 2; i <= k - 2; ++i) {
    if (!(F(i) == G(i) && F(i + 1) == G(i + 1) && F(i) != F(i + 1))) {
      return false;
    }
  }
  return true;
}

}  // namespace tokswap
