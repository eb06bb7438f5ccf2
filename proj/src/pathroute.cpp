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

#include "tokswap/pathroute.hpp"

#include <algorithm>
#include <string>

#include "tokswap/error.hpp"

namespace tokswap {

namespace {

bool parity_ok(const Edge& e, int step) { return (e.u + 1 + step) % 2 == 0; }

// Adds {a,b} (1-based) unless already present.
void add_edge_1based(Matching& s, int a, int b) {
  const Edge e(a - 1, b - 1);
  if (std::find(s.begin(), s.end(), e) == s.end()) s.push_back(e);
}

}  // namespace

void require_path(const Graph& g) {
  if (g.order() < 1 || !(g == make_path(g.order()))) {
    throw InputError("graph is not a path");
  }
}

std::vector<Configuration> ap_trace(const Graph& g, const Configuration& f) {
  require_path(g);
  const int n = g.order();
  if (f.size() != n) throw InputError("configuration size does not match graph");
  std::vector<Configuration> trace{f};
  const int cap = n * (n - 1) / 2 + 1;
  for (int j = 1; !trace.back().is_identity(); ++j) {
    if (j > cap + 1) throw Error("odd-even routing did not terminate");
    std::vector<Token> tokens = trace.back().tokens();
    for (int v = (j + 1) % 2; v + 1 < n; v += 2) {
      if (tokens[v] > tokens[v + 1]) std::swap(tokens[v], tokens[v + 1]);
    }
    trace.emplace_back(std::move(tokens));
  }
  return trace;
}

ParallelSwapSequence ap_solve(const Graph& g, const Configuration& f) {
  const auto trace = ap_trace(g, f);
  ParallelSwapSequence out;
  for (std::size_t j = 1; j < trace.size(); ++j) {
    Matching s;
    for (Vertex v = 0; v + 1 < g.order(); ++v) {
      if (trace[j - 1].token_on(v) != trace[j].token_on(v)) {
        s.emplace_back(v, v + 1);
        ++v;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

ParallelSwapSequence oe_transform(const ParallelSwapSequence& seq) {
  for (std::size_t j = 0; j < seq.size(); ++j) {
    for (const Edge& e : seq[j]) {
      if (e.v != e.u + 1) {
        throw InputError("edge {" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + "} is not a path edge");
      }
      if (j + 1 < seq.size() &&
          std::find(seq[j + 1].begin(), seq[j + 1].end(), e) !=
              seq[j + 1].end()) {
        throw InputError("consecutive steps " + std::to_string(j + 1) +
                         " and " + std::to_string(j + 2) + " share an edge");
      }
    }
  }
  const int m = static_cast<int>(seq.size());
  ParallelSwapSequence out(m + 1);
  for (int j = 1; j <= m + 1; ++j) {
    for (int src : {j - 1, j}) {
      if (src < 1 || src > m) continue;
      for (const Edge& e : seq[src - 1]) {
        if (parity_ok(e, j)) out[j - 1].push_back(e);
      }
    }
    std::sort(out[j - 1].begin(), out[j - 1].end());
  }
  return out;
}

bool is_odd_even(const ParallelSwapSequence& seq) {
  for (std::size_t j = 0; j < seq.size(); ++j) {
    for (const Edge& e : seq[j]) {
      if (e.v != e.u + 1 || !parity_ok(e, static_cast<int>(j) + 1)) {
        return false;
      }
    }
  }
  return true;
}

bool is_reasonable(const Configuration& f, const ParallelSwapSequence& seq) {
  std::vector<Token> tokens = f.tokens();
  for (const Matching& s : seq) {
    for (const Edge& e : s) {
      if (e.v >= static_cast<int>(tokens.size())) return false;
      if (tokens[e.u] < tokens[e.v]) return false;
    }
    for (const Edge& e : s) std::swap(tokens[e.u], tokens[e.v]);
  }
  return true;
}

Configuration endpoint_configuration(int n) {
  if (n < 1) throw InputError("path needs at least one vertex");
  std::vector<Token> tokens(n);
  for (int v = 0; v < n; ++v) tokens[v] = v;
  std::swap(tokens.front(), tokens.back());
  return Configuration(std::move(tokens));
}

ParallelSwapSequence endpoint_schedule(int n) {
  if (n < 2) throw InputError("endpoint schedule needs n >= 2");
  ParallelSwapSequence out;
  if (n % 2 == 0) {
    for (int i = 1; i <= n - 1; ++i) {
      Matching s;
      add_edge_1based(s, i, i + 1);
      add_edge_1based(s, n - i, n - i + 1);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
    return out;
  }
  out.push_back({Edge(0, 1)});
  for (int i = 2; i <= n - 1; ++i) {
    Matching s;
    add_edge_1based(s, i, i + 1);
    add_edge_1based(s, n - i + 1, n - i + 2);
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  out.push_back({Edge(0, 1)});
  return out;
}

}  // namespace tokswap
