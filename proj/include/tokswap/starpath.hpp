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

#include <utility>
#include <vector>

#include "tokswap/configuration.hpp"
#include "tokswap/graph.hpp"
#include "tokswap/lollipop.hpp"

namespace tokswap {

/// Throws InputError unless g is exactly Q_{m,n} with family labels.
void require_starpath(const Graph& g);

/// |N_f| + |Delta_f|: misplaced negative tokens plus the orbits made up
/// entirely of them.
int mu(const Graph& g, const Configuration& f);

/// Discount term; always <= 0.
int delta(const PseudoConfiguration& pc);

/// Replays the inner while loop of the star-path algorithm on (i_vec; a):
/// while a < 0, a goes to slot -a and the displaced token is carried on.
std::pair<std::vector<int>, int> resolve_gamma(std::vector<int> i_vec, int a);

/// pi + mu + delta; equals ts on star-path graphs.
int psi(const Graph& g, const Configuration& f);

/// The two-loop star-path algorithm. The result has exactly psi(f) swaps.
SwapSequence solve_starpath(const Graph& g, const Configuration& f);

}  // namespace tokswap
