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

#include "tokswap/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <tuple>

#include "tokswap/error.hpp"
#include "tokswap/pathroute.hpp"

namespace tokswap {

namespace {

std::string name(const std::string& base, int a) {
  return base + "_" + std::to_string(a);
}

std::string name(const std::string& base, int a, int b) {
  return base + "_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

std::string name(const std::string& base, int a, int b, int c) {
  return base + "_{" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + "}";
}

class Builder {
 public:
  Vertex add(const std::string& label) {
    const Vertex v = static_cast<Vertex>(labels_.size());
    if (!ids_.emplace(label, v).second) {
      throw Error("duplicate vertex label " + label);
    }
    labels_.push_back(label);
    return v;
  }

  Vertex operator[](const std::string& label) const { return ids_.at(label); }

  // Paths may share edges; the graph is their union.
  void path(const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      edges_.emplace(vs[i], vs[i + 1]);
    }
  }

  int order() const { return static_cast<int>(labels_.size()); }

  ReductionOutput finish(InstanceKind kind, int optimum) {
    ReductionOutput out;
    out.instance.kind = kind;
    out.instance.graph =
        Graph(order(), {edges_.begin(), edges_.end()}, labels_);
    out.instance.budget = optimum;
    out.label_map = ids_;
    out.certificate.bipartite = out.instance.graph.is_bipartite();
    out.certificate.max_degree = out.instance.graph.max_degree();
    out.certificate.expected_optimum = optimum;
    return out;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, Vertex> ids_;
  std::set<Edge> edges_;
};

// The two inner vertices (k1,k2) of the variable route for phi(x_i).
std::pair<int, int> route(bool value) {
  return value ? std::pair{3, 4} : std::pair{1, 2};
}

// psi(C_j): lowest-index variable whose literal phi makes true.
std::vector<int> witnesses(const SepSatInstance& inst, const Assignment& phi) {
  validate_sepsat(inst);
  const int bad = first_violated(inst.cnf(), phi);
  if (bad >= 0) {
    throw InputError("assignment does not satisfy clause C" +
                     std::to_string(bad + 1));
  }
  std::vector<int> psi;
  for (const Clause& c : inst.clauses) {
    int best = 0;
    for (Literal lit : c) {
      const int i = std::abs(lit);
      if (phi[i - 1] == (lit > 0) && (best == 0 || i < best)) best = i;
    }
    psi.push_back(best);
  }
  return psi;
}

// Adds `schedule` for the path `vs` (1-based path positions) from step
// `offset` on.
void place(ParallelSwapSequence& steps, const std::vector<Vertex>& vs,
           const ParallelSwapSequence& schedule, int offset) {
  for (std::size_t t = 0; t < schedule.size(); ++t) {
    for (const Edge& e : schedule[t]) {
      steps[offset + t].emplace_back(vs[e.u], vs[e.v]);
    }
  }
}

void sort_steps(ParallelSwapSequence& steps) {
  for (Matching& s : steps) std::sort(s.begin(), s.end());
}

// Swap the tokens of a and b in token_on.
void exchange(std::vector<Token>& token_on, Vertex a, Vertex b) {
  std::swap(token_on[a], token_on[b]);
}

std::vector<Token> identity_tokens(int n) {
  std::vector<Token> t(n);
  for (int v = 0; v < n; ++v) t[v] = v;
  return t;
}

// Vertices of G_F shared by the uncoloured and coloured variants.
void add_variable_gadgets(Builder& b, int vars) {
  for (int i = 1; i <= vars; ++i) {
    const Vertex u = b.add(name("u", i));
    std::array<Vertex, 5> inner{};
    for (int k = 1; k <= 4; ++k) inner[k] = b.add(name("u", i, k));
    const Vertex up = b.add(name("u'", i));
    b.path({u, inner[1], inner[2], up});
    b.path({u, inner[3], inner[4], up});
  }
}

}  // namespace

Vertex ReductionOutput::id(const std::string& label) const {
  const auto it = label_map.find(label);
  if (it == label_map.end()) throw InputError("unknown vertex label " + label);
  return it->second;
}

void validate_3dm(const ThreeDMInstance& inst) {
  if (inst.n < 1) throw InputError("3DM needs n >= 1");
  if (inst.triples.empty()) throw InputError("3DM needs at least one triple");
  for (std::size_t j = 0; j < inst.triples.size(); ++j) {
    for (int c : inst.triples[j]) {
      if (c < 1 || c > inst.n) {
        throw InputError("triple " + std::to_string(j + 1) +
                         " has a coordinate outside 1.." + std::to_string(inst.n));
      }
    }
  }
}

bool is_3dm_solution(const ThreeDMInstance& inst, const std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) != inst.n) return false;
  std::vector<std::vector<bool>> hit(3, std::vector<bool>(inst.n, false));
  for (int j : chosen) {
    if (j < 0 || j >= static_cast<int>(inst.triples.size())) return false;
    for (int k = 0; k < 3; ++k) {
      const int c = inst.triples[j][k] - 1;
      if (hit[k][c]) return false;
      hit[k][c] = true;
    }
  }
  return true;
}

ReductionOutput reduce_3dm_ts(const ThreeDMInstance& inst) {
  validate_3dm(inst);
  Builder b;
  for (int k = 1; k <= 3; ++k) {
    for (int i = 1; i <= inst.n; ++i) {
      b.add(name("u", k, i));
      b.add(name("u'", k, i));
    }
  }
  const int m = static_cast<int>(inst.triples.size());
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= 3; ++k) {
      b.add(name("v", j, k));
      b.add(name("v'", j, k));
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= 3; ++k) {
      const int i = inst.triples[j - 1][k - 1];
      b.path({b[name("u", k, i)], b[name("v'", j, k)]});
      b.path({b[name("u'", k, i)], b[name("v", j, k)]});
      for (int l = 1; l <= 3; ++l) {
        if (l != k) b.path({b[name("v", j, k)], b[name("v'", j, l)]});
      }
    }
  }
  std::vector<Token> tokens = identity_tokens(b.order());
  for (int k = 1; k <= 3; ++k) {
    for (int i = 1; i <= inst.n; ++i) {
      exchange(tokens, b[name("u", k, i)], b[name("u'", k, i)]);
    }
  }
  ReductionOutput out = b.finish(InstanceKind::kTs, 21 * inst.n);
  out.instance.tokens = Configuration(std::move(tokens));
  return out;
}

SwapSequence map_3dm_solution(const ThreeDMInstance& inst,
                              const std::vector<int>& chosen) {
  validate_3dm(inst);
  if (!is_3dm_solution(inst, chosen)) {
    throw InputError("chosen triples are not a 3DM solution");
  }
  const ReductionOutput red = reduce_3dm_ts(inst);
  SwapSequence seq;
  std::vector<int> order = chosen;
  std::sort(order.begin(), order.end());
  for (int j0 : order) {
    const int j = j0 + 1;
    auto id = [&](const std::string& base, int a, int c) {
      return red.id(name(base, a, c));
    };
    SwapSequence boundary;
    for (int k = 1; k <= 3; ++k) {
      const int i = inst.triples[j0][k - 1];
      boundary.emplace_back(id("u", k, i), id("v'", j, k));
      boundary.emplace_back(id("u'", k, i), id("v", j, k));
    }
    const SwapSequence a{{id("v", j, 1), id("v'", j, 2)},
                         {id("v", j, 3), id("v'", j, 1)},
                         {id("v", j, 2), id("v'", j, 3)}};
    const SwapSequence c{{id("v'", j, 2), id("v", j, 3)},
                         {id("v'", j, 1), id("v", j, 2)},
                         {id("v'", j, 3), id("v", j, 1)}};
    for (const SwapSequence* part :
         std::initializer_list<const SwapSequence*>{&boundary, &a, &c, &a, &boundary}) {
      seq.insert(seq.end(), part->begin(), part->end());
    }
  }
  return seq;
}

int three_dm_lower_bound(const Graph& g, const Configuration& f) {
  int total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Token t = f.token_on(v);
    if (t == v) continue;
    const int d = bfs_distances(g, v)[t];
    if (d < 0) throw InputError("token " + std::to_string(t) + " cannot reach its goal");
    total += d + 2;
  }
  return total / 2;
}

ReductionOutput reduce_sepsat_rvm(const SepSatInstance& inst, int p) {
  validate_sepsat(inst);
  if (p < 3) throw InputError("step budget must be at least 3");
  const int h = p - 3;
  Builder b;
  add_variable_gadgets(b, inst.vars);
  for (int i = 1; i <= inst.vars; ++i) {
    for (int t = 1; t <= h; ++t) b.add(name("uhat", i, t));
    for (int t = 1; t <= h; ++t) b.add(name("uhat'", i, t));
  }
  const int n = static_cast<int>(inst.clauses.size());
  for (int j = 1; j <= n; ++j) {
    b.add(name("v", j));
    b.add(name("v'", j));
    for (Literal lit : inst.clauses[j - 1]) {
      for (int t = 1; t <= h; ++t) b.add(name("vhat", j, std::abs(lit), t));
    }
  }
  std::vector<Token> tokens = identity_tokens(b.order());
  for (int i = 1; i <= inst.vars; ++i) {
    for (const auto& [end, hat, other] :
         {std::tuple{"u", "uhat", "u'"}, std::tuple{"u'", "uhat'", "u"}}) {
      std::vector<Vertex> chain{b[name(end, i)]};
      for (int t = 1; t <= h; ++t) chain.push_back(b[name(hat, i, t)]);
      b.path(chain);
      for (int t = 0; t < h; ++t) tokens[chain[t]] = chain[t + 1];
      tokens[chain[h]] = b[name(other, i)];
    }
  }
  for (int j = 1; j <= n; ++j) {
    const Vertex v = b[name("v", j)], vp = b[name("v'", j)];
    for (Literal lit : inst.clauses[j - 1]) {
      const int i = std::abs(lit);
      std::vector<Vertex> link{v};
      for (int t = 1; t <= h; ++t) link.push_back(b[name("vhat", j, i, t)]);
      link.push_back(b[name("u", i, inst.part[j - 1])]);
      link.push_back(vp);
      b.path(link);
    }
    exchange(tokens, v, vp);
  }
  ReductionOutput out = b.finish(InstanceKind::kRvm, p);
  out.instance.tokens = Configuration(std::move(tokens));
  return out;
}

ParallelSwapSequence map_assignment_rvm(const SepSatInstance& inst,
                                        const Assignment& phi, int p) {
  const std::vector<int> psi = witnesses(inst, phi);
  const ReductionOutput red = reduce_sepsat_rvm(inst, p);
  const int h = p - 3;
  ParallelSwapSequence steps(p);
  for (int i = 1; i <= inst.vars; ++i) {
    for (const auto& [end, hat] :
         {std::pair{"u", "uhat"}, std::pair{"u'", "uhat'"}}) {
      std::vector<Vertex> chain{red.id(name(end, i))};
      for (int t = 1; t <= h; ++t) chain.push_back(red.id(name(hat, i, t)));
      // the token bound for the far side walks down the chain to its end
      for (int t = 1; t <= h; ++t) {
        steps[t - 1].emplace_back(chain[h - t], chain[h - t + 1]);
      }
    }
    const auto [k1, k2] = route(phi[i - 1]);
    place(steps,
          {red.id(name("u", i)), red.id(name("u", i, k1)),
           red.id(name("u", i, k2)), red.id(name("u'", i))},
          endpoint_schedule(4), h);
  }
  for (std::size_t j0 = 0; j0 < inst.clauses.size(); ++j0) {
    const int j = static_cast<int>(j0) + 1, i = psi[j0];
    std::vector<Vertex> link{red.id(name("v", j))};
    for (int t = 1; t <= h; ++t) link.push_back(red.id(name("vhat", j, i, t)));
    link.push_back(red.id(name("u", i, inst.part[j0])));
    link.push_back(red.id(name("v'", j)));
    place(steps, link, endpoint_schedule(static_cast<int>(link.size())), 0);
  }
  sort_steps(steps);
  return steps;
}

ReductionOutput reduce_sepsat_rvm_deg3(const SepSatInstance& inst) {
  validate_sepsat(inst);
  Builder b;
  for (int i = 1; i <= inst.vars; ++i) {
    const Vertex u = b.add(name("u", i));
    std::array<Vertex, 5> in{}, inp{};
    for (int k = 1; k <= 4; ++k) {
      inp[k] = b.add(name("u'", i, k));
      in[k] = b.add(name("u", i, k));
    }
    const Vertex up = b.add(name("u'", i));
    b.path({u, inp[1], in[1], inp[2], in[2], up});
    b.path({u, inp[3], in[3], inp[4], in[4], up});
  }
  const int n = static_cast<int>(inst.clauses.size());
  for (int j = 1; j <= n; ++j) {
    b.add(name("v", j));
    b.add(name("v'", j));
    for (Literal lit : inst.clauses[j - 1]) b.add(name("v", j, std::abs(lit)));
  }
  std::vector<Token> tokens = identity_tokens(b.order());
  for (int i = 1; i <= inst.vars; ++i) {
    exchange(tokens, b[name("u", i)], b[name("u'", i)]);
  }
  for (int j = 1; j <= n; ++j) {
    const int k = inst.part[j - 1];
    for (Literal lit : inst.clauses[j - 1]) {
      const int i = std::abs(lit);
      b.path({b[name("v", j)], b[name("u", i, k)], b[name("u'", i, k)],
              b[name("v", j, i)], b[name("v'", j)]});
    }
    exchange(tokens, b[name("v", j)], b[name("v'", j)]);
  }
  ReductionOutput out = b.finish(InstanceKind::kRvm, 5);
  out.instance.tokens = Configuration(std::move(tokens));
  return out;
}

ParallelSwapSequence map_assignment_rvm_deg3(const SepSatInstance& inst,
                                             const Assignment& phi) {
  const std::vector<int> psi = witnesses(inst, phi);
  const ReductionOutput red = reduce_sepsat_rvm_deg3(inst);
  ParallelSwapSequence steps(5);
  for (int i = 1; i <= inst.vars; ++i) {
    const auto [k1, k2] = route(phi[i - 1]);
    place(steps,
          {red.id(name("u", i)), red.id(name("u'", i, k1)),
           red.id(name("u", i, k1)), red.id(name("u'", i, k2)),
           red.id(name("u", i, k2)), red.id(name("u'", i))},
          endpoint_schedule(6), 0);
  }
  for (std::size_t j0 = 0; j0 < inst.clauses.size(); ++j0) {
    const int j = static_cast<int>(j0) + 1, i = psi[j0], k = inst.part[j0];
    place(steps,
          {red.id(name("v", j)), red.id(name("u", i, k)), red.id(name("u'", i, k)),
           red.id(name("v", j, i)), red.id(name("v'", j))},
          endpoint_schedule(5), 0);
  }
  sort_steps(steps);
  return steps;
}

ReductionOutput reduce_sepsat_2c3(const SepSatInstance& inst) {
  validate_sepsat(inst);
  Builder b;
  add_variable_gadgets(b, inst.vars);
  const int n = static_cast<int>(inst.clauses.size());
  for (int j = 1; j <= n; ++j) {
    b.add(name("v", j));
    b.add(name("v'", j));
    for (Literal lit : inst.clauses[j - 1]) b.add(name("v", j, std::abs(lit)));
  }
  std::vector<int> f(b.order(), 1), g(b.order(), 1);
  for (int i = 1; i <= inst.vars; ++i) {
    f[b[name("u", i)]] = 2;
    g[b[name("u'", i)]] = 2;
  }
  for (int j = 1; j <= n; ++j) {
    const int k = inst.part[j - 1];
    const Vertex v = b[name("v", j)], vp = b[name("v'", j)];
    for (Literal lit : inst.clauses[j - 1]) {
      const int i = std::abs(lit);
      b.path({v, b[name("v", j, i)], b[name("u", i, k)], vp});
    }
    if (k == 2) {
      f[vp] = g[v] = 2;
    } else {
      f[v] = g[vp] = 2;
    }
  }
  ReductionOutput out = b.finish(InstanceKind::kColored, 3);
  out.instance.colors = Coloring(std::move(f));
  out.instance.goal = Coloring(std::move(g));
  return out;
}

ParallelSwapSequence map_assignment_2c3(const SepSatInstance& inst,
                                        const Assignment& phi) {
  const std::vector<int> psi = witnesses(inst, phi);
  const ReductionOutput red = reduce_sepsat_2c3(inst);
  ParallelSwapSequence steps(3);
  auto walk = [&](const std::vector<Vertex>& vs) {
    for (int t = 0; t < 3; ++t) steps[t].emplace_back(vs[t], vs[t + 1]);
  };
  for (int i = 1; i <= inst.vars; ++i) {
    const auto [k1, k2] = route(phi[i - 1]);
    walk({red.id(name("u", i)), red.id(name("u", i, k1)),
          red.id(name("u", i, k2)), red.id(name("u'", i))});
  }
  for (std::size_t j0 = 0; j0 < inst.clauses.size(); ++j0) {
    const int j = static_cast<int>(j0) + 1, i = psi[j0], k = inst.part[j0];
    std::vector<Vertex> link{red.id(name("v", j)), red.id(name("v", j, i)),
                             red.id(name("u", i, k)), red.id(name("v'", j))};
    if (k == 2) std::reverse(link.begin(), link.end());
    walk(link);
  }
  sort_steps(steps);
  return steps;
}

ReductionOutput reduce_sepsat_3c2(const SepSatInstance& inst) {
  validate_sepsat(inst);
  Builder b;
  add_variable_gadgets(b, inst.vars);
  const int n = static_cast<int>(inst.clauses.size());
  for (int j = 1; j <= n; ++j) {
    b.add(name("v", j));
    b.add(name("v'", j));
  }
  std::vector<int> f(b.order(), 1), g(b.order(), 1);
  for (int i = 1; i <= inst.vars; ++i) {
    f[b[name("u", i)]] = 2;
    g[b[name("u'", i)]] = 2;
    for (int k : {2, 4}) f[b[name("u", i, k)]] = g[b[name("u", i, k)]] = 2;
  }
  for (int j = 1; j <= n; ++j) {
    const int k = inst.part[j - 1];
    const Vertex v = b[name("v", j)], vp = b[name("v'", j)];
    for (Literal lit : inst.clauses[j - 1]) {
      b.path({v, b[name("u", std::abs(lit), k)], vp});
    }
    f[v] = g[vp] = 3;
    f[vp] = g[v] = k == 2 ? 2 : 1;
  }
  ReductionOutput out = b.finish(InstanceKind::kColored, 2);
  out.instance.colors = Coloring(std::move(f));
  out.instance.goal = Coloring(std::move(g));
  return out;
}

ParallelSwapSequence map_assignment_3c2(const SepSatInstance& inst,
                                        const Assignment& phi) {
  ParallelSwapSequence steps = map_assignment_rvm(inst, phi, 3);
  steps.pop_back();
  return steps;
}

ReductionOutput build_counting_gadget(const Graph& h) {
  Builder b;
  for (Vertex u = 0; u < h.order(); ++u) {
    b.add(h.label(u) + "_1");
    b.add(h.label(u) + "_2");
  }
  std::vector<Token> tokens = identity_tokens(b.order());
  for (Vertex u = 0; u < h.order(); ++u) exchange(tokens, 2 * u, 2 * u + 1);
  for (const Edge& e : h.edges()) {
    for (int a = 0; a < 2; ++a) {
      for (int c = 0; c < 2; ++c) b.path({2 * e.u + a, 2 * e.v + c});
    }
  }
  ReductionOutput out = b.finish(InstanceKind::kRvm, 2);
  out.instance.tokens = Configuration(std::move(tokens));
  return out;
}

}  // namespace tokswap
