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

#include "tokswap/lollipop.hpp"

#include <algorithm>
#include <string>

#include "tokswap/error.hpp"

namespace tokswap {

namespace {

bool signed_family(const Graph& g) {
  const auto kind = g.family().kind;
  return kind == FamilyKind::kLollipop || kind == FamilyKind::kStarPath;
}

void require_signed_family(const Graph& g) {
  if (!signed_family(g)) {
    throw InputError("graph is not labelled as a lollipop or star-path");
  }
}

// Number of cycles of v -> iv[-v-1] on {-1..-m}; throws if iv is not a
// permutation of the negatives.
int negative_cycles(const std::vector<int>& iv) {
  const int m = static_cast<int>(iv.size());
  std::vector<char> seen(m, 0);
  for (int t : iv) {
    if (t >= 0 || -t - 1 >= m || seen[-t - 1]) {
      throw InputError("malformed pseudo configuration");
    }
    seen[-t - 1] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  int cycles = 0;
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int x = s; !seen[x]; x = -iv[x] - 1) seen[x] = 1;
  }
  return cycles;
}

}  // namespace

int signed_token_on(const Graph& g, const Configuration& f, int s) {
  const int m = g.family().m;
  return f.token_on(s + m) - m;
}

int signed_vertex_of(const Graph& g, const Configuration& f, int t) {
  const int m = g.family().m;
  return f.vertex_of(t + m) - m;
}

void require_lollipop(const Graph& g) {
  const Family& fam = g.family();
  if (fam.kind != FamilyKind::kLollipop ||
      !(g == make_lollipop(fam.m, fam.n))) {
    throw InputError("graph is not a labelled lollipop L_{m,n}");
  }
}

PseudoConfiguration pseudo_configuration(const Graph& g,
                                         const Configuration& f) {
  require_signed_family(g);
  const Family& fam = g.family();
  if (f.size() != g.order()) {
    throw InputError("configuration size does not match graph");
  }
  PseudoConfiguration pc;
  for (int s = -1; s >= -fam.m; --s) pc.i_vec.push_back(signed_token_on(g, f, s));
  for (int s = 0; s <= fam.n; ++s) pc.j_vec.push_back(signed_token_on(g, f, s));
  return pc;
}

int pi(const Graph& g, const Configuration& f) {
  require_signed_family(g);
  const Family& fam = g.family();
  int total = 0;
  for (int j = 0; j <= fam.n; ++j) {
    const int pos = signed_vertex_of(g, f, j);
    if (pos < 0) {
      total += j + 1;
      continue;
    }
    int inv = 0;
    for (int i = -fam.m; i < j; ++i) {
      if (signed_vertex_of(g, f, i) > pos) ++inv;
    }
    total += std::min(j + 1, inv);
  }
  return total;
}

int nu(const PseudoConfiguration& pc) {
  std::vector<int> iv = pc.i_vec;
  const int m = static_cast<int>(iv.size());
  for (int head : pc.j_vec) {
    auto c = std::max_element(iv.begin(), iv.end());
    if (c == iv.end()) break;
    if (*c > head) *c = head;
  }
  return m - negative_cycles(iv);
}

int phi(const Graph& g, const Configuration& f) {
  require_lollipop(g);
  return pi(g, f) + nu(pseudo_configuration(g, f));
}

SwapSequence solve_lollipop(const Graph& g, const Configuration& f) {
  require_lollipop(g);
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
    int p = signed_vertex_of(g, cur, k);
    if (p == k) continue;
    if (k < 0) {
      swap(p, k);
      continue;
    }
    if (p < 0) {
      swap(p, 0);
      p = 0;
    }
    for (; p < k; ++p) swap(p, p + 1);
  }
  return out;
}

}  // namespace tokswap
