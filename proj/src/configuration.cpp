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

#include "tokswap/configuration.hpp"

#include <algorithm>
#include <string>

#include "tokswap/error.hpp"

namespace tokswap {

namespace {

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Configuration::Configuration(std::vector<Token> token_on)
    : token_on_(std::move(token_on)), vertex_of_(token_on_.size(), -1) {
  const int n = size();
  for (Vertex v = 0; v < n; ++v) {
    const Token t = token_on_[v];
    if (t < 0 || t >= n || vertex_of_[t] != -1) {
      throw InputError("configuration is not a permutation of 0.." +
                       std::to_string(n - 1));
    }
    vertex_of_[t] = v;
  }
}

Configuration Configuration::identity(int n) {
  std::vector<Token> tokens(n);
  for (int i = 0; i < n; ++i) tokens[i] = i;
  return Configuration(std::move(tokens));
}

bool Configuration::is_identity() const {
  for (int v = 0; v < size(); ++v) {
    if (token_on_[v] != v) return false;
  }
  return true;
}

Configuration Configuration::swapped(Vertex a, Vertex b) const {
  Configuration out = *this;
  std::swap(out.token_on_[a], out.token_on_[b]);
  out.vertex_of_[out.token_on_[a]] = a;
  out.vertex_of_[out.token_on_[b]] = b;
  return out;
}

Coloring::Coloring(std::vector<int> color_on) : color_on_(std::move(color_on)) {
  for (int c : color_on_) {
    if (c < 1) throw InputError("colours must be >= 1");
  }
}

int Coloring::num_colors() const {
  int c = 0;
  for (int x : color_on_) c = std::max(c, x);
  return c;
}

Coloring Coloring::swapped(Vertex a, Vertex b) const {
  Coloring out = *this;
  std::swap(out.color_on_[a], out.color_on_[b]);
  return out;
}

bool consistent(const Coloring& f, const Coloring& g) {
  auto a = f.colors();
  auto b = g.colors();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void check_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e.u, e.v)) throw InputError("not an edge: " + edge_text(e));
}

void check_matching(const Graph& g, const Matching& s) {
  std::vector<char> used(g.order(), 0);
  for (const Edge& e : s) {
    check_edge(g, e);
    if (used[e.u] || used[e.v]) {
      throw InputError("not a matching: " + edge_text(e) +
                       " shares an endpoint");
    }
    used[e.u] = used[e.v] = 1;
  }
}

Configuration apply_swap(const Graph& g, const Configuration& f,
                         const Edge& e) {
  check_edge(g, e);
  return f.swapped(e.u, e.v);
}

Configuration apply_swaps(const Graph& g, const Configuration& f,
                          const SwapSequence& seq) {
  Configuration cur = f;
  for (const Edge& e : seq) cur = apply_swap(g, cur, e);
  return cur;
}

Configuration apply_parallel_swap(const Graph& g, const Configuration& f,
                                  const Matching& s) {
  check_matching(g, s);
  std::vector<Token> tokens = f.tokens();
  for (const Edge& e : s) std::swap(tokens[e.u], tokens[e.v]);
  return Configuration(std::move(tokens));
}

Configuration apply_parallel_swaps(const Graph& g, const Configuration& f,
                                   const ParallelSwapSequence& seq) {
  Configuration cur = f;
  for (const Matching& s : seq) cur = apply_parallel_swap(g, cur, s);
  return cur;
}

Coloring apply_parallel_swap(const Graph& g, const Coloring& f,
                             const Matching& s) {
  check_matching(g, s);
  std::vector<int> colors = f.colors();
  for (const Edge& e : s) std::swap(colors[e.u], colors[e.v]);
  return Coloring(std::move(colors));
}

Coloring apply_parallel_swaps(const Graph& g, const Coloring& f,
                              const ParallelSwapSequence& seq) {
  Coloring cur = f;
  for (const Matching& s : seq) cur = apply_parallel_swap(g, cur, s);
  return cur;
}

std::vector<int> move_counts(const Configuration& f, const SwapSequence& seq) {
  std::vector<int> counts(f.size(), 0);
  std::vector<Token> tokens = f.tokens();
  for (const Edge& e : seq) {
    if (e.u < 0 || e.v >= f.size() || e.u == e.v) {
      throw InputError("invalid swap " + edge_text(e));
    }
    ++counts[tokens[e.u]];
    ++counts[tokens[e.v]];
    std::swap(tokens[e.u], tokens[e.v]);
  }
  return counts;
}

int move_count(const Configuration& f, const SwapSequence& seq, Token token) {
  if (token < 0 || token >= f.size()) {
    throw InputError("unknown token " + std::to_string(token));
  }
  return move_counts(f, seq)[token];
}

std::vector<std::vector<Vertex>> orbits(const Configuration& f) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(f.size(), 0);
  for (Vertex s = 0; s < f.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> cycle;
    for (Vertex x = s; !seen[x]; x = f.token_on(x)) {
      seen[x] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

ParallelSwapSequence as_parallel(const SwapSequence& seq) {
  ParallelSwapSequence out;
  out.reserve(seq.size());
  for (const Edge& e : seq) out.push_back({e});
  return out;
}

}  // namespace tokswap
