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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tokswap/configuration.hpp"
#include "tokswap/graph.hpp"

namespace tokswap {

struct OracleOptions {
  /// Maximum number of stored states before BudgetExceeded is thrown.
  std::uint64_t node_cap = 10'000'000;
  /// Worker threads for distance-table sweeps. Results do not depend on it.
  int threads = 1;
};

struct TsResult {
  int length = 0;
  SwapSequence witness;
};

struct RtResult {
  int length = 0;
  ParallelSwapSequence witness;
};

/// Exact ts(G,f) by bidirectional breadth-first search over configurations.
TsResult ts_oracle(const Graph& g, const Configuration& f,
                   const OracleOptions& options = {});

/// Exact rt(G,f); moves are the nonempty matchings of G.
RtResult rt_oracle(const Graph& g, const Configuration& f,
                   const OracleOptions& options = {});

/// rt(G,f) if it is at most `max_depth`, otherwise nullopt.
std::optional<RtResult> rt_oracle_bounded(const Graph& g,
                                          const Configuration& f,
                                          int max_depth,
                                          const OracleOptions& options = {});

/// Exact rt(G,f,g) between two consistent colourings.
RtResult rt_colored_oracle(const Graph& g, const Coloring& f,
                           const Coloring& goal,
                           const OracleOptions& options = {});

std::optional<RtResult> rt_colored_oracle_bounded(
    const Graph& g, const Coloring& f, const Coloring& goal, int max_depth,
    const OracleOptions& options = {});

/// All matchings of G in a fixed recursive order over edges.
std::vector<Matching> all_matchings(const Graph& g, bool include_empty);

/// Ordered pairs <S,T> of matchings (either may be empty) with fST the
/// identity.
std::vector<std::pair<Matching, Matching>> two_step_solutions(
    const Graph& g, const Configuration& f, const OracleOptions& options = {});

std::uint64_t count_two_step(const Graph& g, const Configuration& f,
                             const OracleOptions& options = {});

/// Distance from the identity for every configuration, indexed by
/// permutation_rank. Since every move is an involution this is also the
/// distance to the identity. 255 marks unreachable configurations.
std::vector<std::uint8_t> ts_distance_table(const Graph& g,
                                            const OracleOptions& options = {});
std::vector<std::uint8_t> rt_distance_table(const Graph& g,
                                            const OracleOptions& options = {});

}  // namespace tokswap
