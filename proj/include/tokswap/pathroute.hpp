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

// Paths use vertex ids 0..n-1 for the labels 1..n. Step j (1-based) of an
// odd-even sequence may only use edges {v, v+1} with (v + 1) + j even, so
// step 1 swaps {1,2}, {3,4}, ... in 1-based terms.

/// Throws InputError unless g is the path 0-1-...-(n-1).
void require_path(const Graph& g);

/// Greedy odd-even routing: step j swaps every adjacent inversion of the
/// matching parity until the identity is reached.
ParallelSwapSequence ap_solve(const Graph& g, const Configuration& f);

/// f_0, f_1, ..., f_m visited by ap_solve.
std::vector<Configuration> ap_trace(const Graph& g, const Configuration& f);

/// Delays every swap whose parity does not match its step by one step.
/// The result is one step longer, odd-even, and has the same effect.
/// Throws InputError if two consecutive steps share an edge or an edge is
/// not of the form {v, v+1}.
ParallelSwapSequence oe_transform(const ParallelSwapSequence& seq);

/// True iff every step of seq respects the odd-even parity.
bool is_odd_even(const ParallelSwapSequence& seq);

/// True iff every swap exchanges an inversion (larger token on the left)
/// at the moment it is applied.
bool is_reasonable(const Configuration& f, const ParallelSwapSequence& seq);

/// Configuration on P_n with the two end tokens exchanged.
Configuration endpoint_configuration(int n);

/// Explicit solution for endpoint_configuration(n): n-1 steps for even n,
/// n steps for odd n.
ParallelSwapSequence endpoint_schedule(int n);

}  // namespace tokswap
