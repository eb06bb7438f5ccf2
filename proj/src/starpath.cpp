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

#include "tokswap/starpath.hpp"

#include <algorithm>

#include "tokswap/error.hpp"

namespace tokswap {

void require_starpath(const Graph& g) {
  const Family& fam = g.family();
  if (fam.kind != FamilyKind::kStarPath ||
      !(g == make_starpath(fam.m, fam.n))) {
    throw InputError("graph is not a labelled star-path Q_{m,n}");
  }
}

int mu(const Graph& g, const Configuration& f) {
  require_starpath(g);
  const int m = g.family().m;
  int misplaced = 0;
  for (int t = -m; t < 0; ++t) {
    if (signed_vertex_of(g, f, t) != t) ++misplaced;
  }
  int cycles = 0;
  for (const auto& orbit : orbits(f)) {
    if (orbit.size() < 2) continue;
    const bool negative = std::all_of(orbit.begin(), orbit.end(),
                                      [m](Vertex v) { return v < m; });
    if (negative) ++cycles;
  }
  return misplaced + cycles;
}

int delta(const PseudoConfiguration& pc) {
  std::vector<int> iv = pc.i_vec;
  std::vector<int> jv = pc.j_vec;
  const int m = static_cast<int>(iv.size());
  int acc = 0;
  std::size_t pos = 0;
  // Each round shortens jv or fixes a slot of iv, so this bound is loose.
  for (std::size_t guard = 0; guard <= 2 * (iv.size() + jv.size()) + 2;
       ++guard) {
    auto c = std::max_element(iv.begin(), iv.end());
    if (c == iv.end() || *c < 0 || pos == jv.size()) return acc;
    const int j1 = jv[pos];
    if (j1 > *c) {
      ++pos;
    } else if (j1 >= 0) {
      *c = j1;
      ++pos;
    } else {
      if (-j1 > m) throw InputError("malformed pseudo configuration");
      int& slot = iv[-j1 - 1];
      const int displaced = slot;
      if (displaced == *c) --acc;
      slot = j1;
      jv[pos] = displaced;
    }
  }
  throw InputError("malformed pseudo configuration");
}

std::pair<std::vector<int>, int> resolve_gamma(std::vector<int> i_vec, int a) {
  const int m = static_cast<int>(i_vec.size());
  for (int steps = 0; a < 0; ++steps) {
    if (steps > m || -a > m) throw InputError("malformed pseudo configuration");
    std::swap(i_vec[-a - 1], a);
  }
  return {std::move(i_vec), a};
}

int psi(const Graph& g, const Configuration& f) {
  require_starpath(g);
  return pi(g, f) + mu(g, f) + delta(pseudo_configuration(g, f));
}

SwapSequence solve_starpath(const Graph& g, const Configuration& f) {
  require_starpath(g);
  if (f.size() != g.order()) {
    throw InputError("configuration size does not match graph");
  }
  const int m = g.family().m;
  const int n = g.family().n;
  SwapSequence out;
  Configuration cur = f;
  auto swap = [&](int a, int b) {
    out.emplace_back(a + m, b + m);
    cur = cur.swapped(a + m, b + m);
  };
  for (int k = n; k >= -m; --k) {
    for (int t = signed_token_on(g, cur, 0); t < 0;
         t = signed_token_on(g, cur, 0)) {
      swap(0, t);
    }
    int p = signed_vertex_of(g, cur, k);
    if (p == k) continue;
    if (p < 0) {
      swap(p, 0);
      p = 0;
    }
    if (k < 0) {
      swap(0, k);
      continue;
    }
    for (; p < k; ++p) swap(p, p + 1);
  }
  return out;
}

}  // namespace tokswap
