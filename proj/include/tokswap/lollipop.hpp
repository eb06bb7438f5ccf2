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

#include <vector>

#include "tokswap/configuration.hpp"
#include "tokswap/graph.hpp"

namespace tokswap {

/// (i-vector; j-vector) form of a configuration on L_{m,n} or Q_{m,n}, in
/// signed labels: i_vec = <f(-1),...,f(-m)>, j_vec = <f(0),...,f(k)>.
struct PseudoConfiguration {
  std::vector<int> i_vec;
  std::vector<int> j_vec;
};

/// Signed token on signed vertex s, for a lollipop or star-path family.
int signed_token_on(const Graph& g, const Configuration& f, int s);
/// Signed vertex holding signed token t.
int signed_vertex_of(const Graph& g, const Configuration& f, int t);

/// Throws InputError unless g is exactly L_{m,n} with family labels.
void require_lollipop(const Graph& g);

PseudoConfiguration pseudo_configuration(const Graph& g,
                                         const Configuration& f);

/// Sum over path tokens j of the moves needed to bring j home; shared by
/// the lollipop and star-path potentials.
int pi(const Graph& g, const Configuration& f);

/// Clique swaps still needed once every path token is home.
int nu(const PseudoConfiguration& pc);

/// pi + nu; equals ts on lollipop graphs.
int phi(const Graph& g, const Configuration& f);

/// Places tokens n, ..., 0, -1, ..., -m in turn, each along a shortest
/// route. The result has exactly phi(f) swaps.
SwapSequence solve_lollipop(const Graph& g, const Configuration& f);

}  // namespace tokswap
