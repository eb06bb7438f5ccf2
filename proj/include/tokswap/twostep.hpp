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

#include <optional>
#include <utility>
#include <vector>

#include "tokswap/configuration.hpp"
#include "tokswap/graph.hpp"

namespace tokswap {

/// Steps <S,T> solving two orbits (or one orbit with itself) together.
struct OrbitAlignment {
  Vertex u = 0;  // anchor in the first orbit
  Vertex v = 0;  // anchor in the second orbit
  Matching s;
  Matching t;
};

/// Non-fixed orbits as nodes; edges join orbits that can be solved together
/// in two steps, and self-feasible orbits can be solved alone.
struct OrbitPairGraph {
  std::vector<std::vector<Vertex>> nodes;
  std::vector<std::pair<int, int>> edges;
  std::vector<OrbitAlignment> edge_witness;
  std::vector<std::optional<OrbitAlignment>> self_witness;
};

/// Searches anchors u in orbit_a (fixed to its first element) and v in
/// orbit_b such that {f^i(u), f^-i(v)} lie in S and {f^(i+1)(u), f^-i(v)}
/// lie in T for all i, where coincident entries stand for untouched
/// vertices. Returns the first alignment in scan order.
std::optional<OrbitAlignment> orbit_pair_feasible(
    const Graph& g, const Configuration& f, const std::vector<Vertex>& orbit_a,
    const std::vector<Vertex>& orbit_b);

OrbitPairGraph build_orbit_pair_graph(const Graph& g, const Configuration& f);

struct TwoStepAnswer {
  bool yes = false;
  Matching first;
  Matching second;
};

/// Decides rt(G,f) <= 2 and returns a witness <S,T> when it holds.
TwoStepAnswer decide_rt2(const Graph& g, const Configuration& f);

/// Directed network of the two-colour reduction over V plus s = n, t = n+1.
struct FlowNetwork {
  int n = 0;
  std::vector<Vertex> v_s;  // f = 1, g = 2
  std::vector<Vertex> v_t;  // f = 2, g = 1
  std::vector<Vertex> v_1;  // f = g = 1
  std::vector<Vertex> v_2;  // f = g = 2
  std::vector<std::pair<int, int>> arcs;
  int source() const { return n; }
  int sink() const { return n + 1; }
};

/// Throws InputError unless f and g are consistent colourings with colours
/// in {1,2}.
FlowNetwork build_flow_network(const Graph& g, const Coloring& f,
                               const Coloring& goal);

struct ColoredTwoStepAnswer {
  bool yes = false;
  Matching first;
  Matching second;
  /// Vertex sequences u_1..u_k of the disjoint paths used by the witness.
  std::vector<std::vector<Vertex>> paths;
};

/// Decides rt(G,f,g) <= 2 for consistent 2-colourings.
ColoredTwoStepAnswer decide_rt2_2colored(const Graph& g, const Coloring& f,
                                         const Coloring& goal);

/// True iff the path u_1..u_k satisfies the endpoint/interior conditions
/// that make it solvable in two steps on its own.
bool path_is_two_step(const Coloring& f, const Coloring& goal,
                      const std::vector<Vertex>& path);

}  // namespace tokswap
