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
#include <string>

#include "tokswap/configuration.hpp"
#include "tokswap/graph.hpp"

namespace tokswap {

enum class InstanceKind { kTs, kRvm, kColored };

std::string kind_name(InstanceKind kind);

/// One problem instance. `tokens` is used for ts/rvm, `colors` and `goal`
/// for the coloured variant.
struct Instance {
  InstanceKind kind = InstanceKind::kTs;
  Graph graph;
  Configuration tokens;
  Coloring colors;
  Coloring goal;
  std::optional<int> budget;
};

/// Solution file payload. Token swapping solutions use one-edge steps.
struct Solution {
  ParallelSwapSequence steps;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct VerifyReport {
  bool ok = true;
  /// Index of the offending step, or -1 for whole-solution problems.
  int step = -1;
  std::string message;
};

/// Replays the solution and reports the first violation.
/// Throws InputError when a ts instance is given a multi-edge step.
VerifyReport verify(const Instance& instance, const Solution& solution);

VerifyReport verify_swaps(const Graph& g, const Configuration& f,
                          const SwapSequence& seq);
VerifyReport verify_parallel(const Graph& g, const Configuration& f,
                             const ParallelSwapSequence& seq);
VerifyReport verify_colored(const Graph& g, const Coloring& f,
                            const Coloring& goal,
                            const ParallelSwapSequence& seq);

}  // namespace tokswap
