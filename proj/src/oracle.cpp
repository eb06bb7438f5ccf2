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

#include "tokswap/oracle.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "tokswap/error.hpp"
#include "tokswap/permutation_rank.hpp"

namespace tokswap {

namespace {

struct PermutationCodec {
  int n;
  std::uint64_t encode(const std::vector<int>& s) const {
    return permutation_rank(s);
  }
  void decode(std::uint64_t key, std::vector<int>& s) const {
    s = permutation_unrank(key, n);
  }
};

struct ColoringCodec {
  int n;
  int bits;
  std::uint64_t encode(const std::vector<int>& s) const {
    std::uint64_t key = 0;
    for (int i = n - 1; i >= 0; --i) {
      key = (key << bits) | static_cast<std::uint64_t>(s[i] - 1);
    }
    return key;
  }
  void decode(std::uint64_t key, std::vector<int>& s) const {
    s.resize(n);
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    for (int i = 0; i < n; ++i) {
      s[i] = static_cast<int>(key & mask) + 1;
      key >>= bits;
    }
  }
};

ColoringCodec make_coloring_codec(const Coloring& f) {
  int bits = 1;
  while ((1 << bits) < f.num_colors()) ++bits;
  if (f.size() * bits > 64) {
    throw InputError("colored instance too large for the oracle");
  }
  return {f.size(), bits};
}

void apply_in_place(std::vector<int>& s, const Matching& m) {
  for (const Edge& e : m) std::swap(s[e.u], s[e.v]);
}

struct Side {
  // state -> (parent state, move index); the root maps to itself with -1.
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> parent;
  std::vector<std::uint64_t> frontier;
  int depth = 0;
};

// Breadth-first search from both ends; moves must be involutions.
template <typename Codec>
std::optional<ParallelSwapSequence> bidirectional(
    const Codec& codec, std::uint64_t start, std::uint64_t goal,
    const std::vector<Matching>& moves, int max_depth, std::uint64_t cap) {
  if (start == goal) return ParallelSwapSequence{};
  Side fwd, bwd;
  fwd.parent.emplace(start, std::make_pair(start, -1));
  bwd.parent.emplace(goal, std::make_pair(goal, -1));
  fwd.frontier.push_back(start);
  bwd.frontier.push_back(goal);

  std::vector<int> buf;
  std::optional<std::uint64_t> meet;
  while (!meet) {
    if (max_depth >= 0 && fwd.depth + bwd.depth >= max_depth) {
      return std::nullopt;
    }
    Side& side = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
    const Side& other = &side == &fwd ? bwd : fwd;
    if (side.frontier.empty()) {
      if (max_depth >= 0) return std::nullopt;
      throw InputError("goal is unreachable from the start state");
    }
    std::vector<std::uint64_t> next;
    for (std::uint64_t key : side.frontier) {
      codec.decode(key, buf);
      for (int mi = 0; mi < static_cast<int>(moves.size()) && !meet; ++mi) {
        apply_in_place(buf, moves[mi]);
        const std::uint64_t k = codec.encode(buf);
        apply_in_place(buf, moves[mi]);
        if (!side.parent.emplace(k, std::make_pair(key, mi)).second) continue;
        if (other.parent.count(k)) meet = k;
        next.push_back(k);
      }
      if (meet) break;
      if (fwd.parent.size() + bwd.parent.size() > cap) {
        throw BudgetExceeded("oracle exceeded node cap of " +
                             std::to_string(cap) + " states");
      }
    }
    side.frontier = std::move(next);
    ++side.depth;
  }

  ParallelSwapSequence path;
  for (std::uint64_t x = *meet; x != start;) {
    const auto& [p, m] = fwd.parent.at(x);
    path.push_back(moves[m]);
    x = p;
  }
  std::reverse(path.begin(), path.end());
  for (std::uint64_t x = *meet; x != goal;) {
    const auto& [p, m] = bwd.parent.at(x);
    path.push_back(moves[m]);
    x = p;
  }
  return path;
}

std::vector<Matching> single_edge_moves(const Graph& g) {
  std::vector<Matching> moves;
  for (const Edge& e : g.edges()) moves.push_back({e});
  return moves;
}

void collect_matchings(const Graph& g, std::size_t i, std::vector<char>& used,
                       Matching& cur, std::vector<Matching>& out) {
  if (i == g.edges().size()) {
    out.push_back(cur);
    return;
  }
  collect_matchings(g, i + 1, used, cur, out);
  const Edge& e = g.edges()[i];
  if (used[e.u] || used[e.v]) return;
  used[e.u] = used[e.v] = 1;
  cur.push_back(e);
  collect_matchings(g, i + 1, used, cur, out);
  cur.pop_back();
  used[e.u] = used[e.v] = 0;
}

void require_oracle_size(const Graph& g, const Configuration& f) {
  if (f.size() != g.order()) {
    throw InputError("configuration size does not match graph");
  }
  if (g.order() > 20) throw InputError("graph too large for the oracle");
}

std::vector<std::uint8_t> distance_table(const Graph& g,
                                         const std::vector<Matching>& moves,
                                         const OracleOptions& options) {
  const int n = g.order();
  if (n > 12) throw InputError("distance table needs at most 12 vertices");
  const std::uint64_t total = factorial(n);
  if (total > options.node_cap) {
    throw BudgetExceeded("distance table of " + std::to_string(total) +
                         " states exceeds node cap");
  }
  std::vector<std::uint8_t> dist(total, 255);
  dist[0] = 0;
  std::vector<std::uint64_t> frontier{0};
  const PermutationCodec codec{n};
  const int threads = std::max(1, options.threads);
  for (int d = 0; !frontier.empty(); ++d) {
    if (d >= 254) throw Error("distance exceeds table range");
    // Expansion only reads `dist`; the merge below is sequential and in
    // chunk order, so the table is independent of the thread count.
    const std::size_t chunk = (frontier.size() + threads - 1) / threads;
    std::vector<std::vector<std::uint64_t>> found(threads);
    auto work = [&](int t) {
      std::vector<int> buf;
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(frontier.size(), lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        codec.decode(frontier[i], buf);
        for (const Matching& m : moves) {
          apply_in_place(buf, m);
          const std::uint64_t k = codec.encode(buf);
          apply_in_place(buf, m);
          if (dist[k] == 255) found[t].push_back(k);
        }
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    std::vector<std::uint64_t> next;
    for (const auto& part : found) {
      for (std::uint64_t k : part) {
        if (dist[k] != 255) continue;
        dist[k] = static_cast<std::uint8_t>(d + 1);
        next.push_back(k);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

std::vector<Matching> all_matchings(const Graph& g, bool include_empty) {
  std::vector<Matching> out;
  std::vector<char> used(g.order(), 0);
  Matching cur;
  collect_matchings(g, 0, used, cur, out);
  if (!include_empty) {
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Matching& m) { return m.empty(); }),
              out.end());
  }
  return out;
}

TsResult ts_oracle(const Graph& g, const Configuration& f,
                   const OracleOptions& options) {
  require_oracle_size(g, f);
  const PermutationCodec codec{g.order()};
  auto path = bidirectional(codec, codec.encode(f.tokens()), 0,
                            single_edge_moves(g), -1, options.node_cap);
  TsResult result;
  for (const Matching& m : *path) result.witness.push_back(m.front());
  result.length = static_cast<int>(result.witness.size());
  return result;
}

std::optional<RtResult> rt_oracle_bounded(const Graph& g,
                                          const Configuration& f,
                                          int max_depth,
                                          const OracleOptions& options) {
  require_oracle_size(g, f);
  const PermutationCodec codec{g.order()};
  auto path = bidirectional(codec, codec.encode(f.tokens()), 0,
                            all_matchings(g, false), max_depth,
                            options.node_cap);
  if (!path) return std::nullopt;
  return RtResult{static_cast<int>(path->size()), std::move(*path)};
}

RtResult rt_oracle(const Graph& g, const Configuration& f,
                   const OracleOptions& options) {
  return *rt_oracle_bounded(g, f, -1, options);
}

std::optional<RtResult> rt_colored_oracle_bounded(
    const Graph& g, const Coloring& f, const Coloring& goal, int max_depth,
    const OracleOptions& options) {
  if (f.size() != g.order() || goal.size() != g.order()) {
    throw InputError("coloring size does not match graph");
  }
  if (!consistent(f, goal)) throw InputError("colorings are not consistent");
  const ColoringCodec codec = make_coloring_codec(f);
  auto path = bidirectional(codec, codec.encode(f.colors()),
                            codec.encode(goal.colors()),
                            all_matchings(g, false), max_depth,
                            options.node_cap);
  if (!path) return std::nullopt;
  return RtResult{static_cast<int>(path->size()), std::move(*path)};
}

RtResult rt_colored_oracle(const Graph& g, const Coloring& f,
                           const Coloring& goal, const OracleOptions& options) {
  return *rt_colored_oracle_bounded(g, f, goal, -1, options);
}

std::vector<std::pair<Matching, Matching>> two_step_solutions(
    const Graph& g, const Configuration& f, const OracleOptions& options) {
  if (f.size() != g.order()) {
    throw InputError("configuration size does not match graph");
  }
  const auto matchings = all_matchings(g, true);
  if (matchings.size() > options.node_cap) {
    throw BudgetExceeded("too many matchings to enumerate");
  }
  std::vector<std::pair<Matching, Matching>> out;
  std::vector<int> h;
  for (const Matching& s : matchings) {
    h = f.tokens();
    apply_in_place(h, s);
    // fST = id forces T to pair each v with h(v); that is legal iff h is an
    // involution whose 2-cycles are edges.
    Matching t;
    bool ok = true;
    for (Vertex v = 0; v < g.order() && ok; ++v) {
      const Vertex w = h[v];
      if (w == v) continue;
      if (h[w] != v || !g.has_edge(v, w)) ok = false;
      if (v < w) t.emplace_back(v, w);
    }
    if (ok) out.emplace_back(s, std::move(t));
  }
  return out;
}

std::uint64_t count_two_step(const Graph& g, const Configuration& f,
                             const OracleOptions& options) {
  return two_step_solutions(g, f, options).size();
}

std::vector<std::uint8_t> ts_distance_table(const Graph& g,
                                            const OracleOptions& options) {
  return distance_table(g, single_edge_moves(g), options);
}

std::vector<std::uint8_t> rt_distance_table(const Graph& g,
                                            const OracleOptions& options) {
  return distance_table(g, all_matchings(g, false), options);
}

}  // namespace tokswap
