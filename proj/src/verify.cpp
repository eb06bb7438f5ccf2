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

#include "tokswap/verify.hpp"

#include "tokswap/error.hpp"

namespace tokswap {

std::string kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kTs:
      return "ts";
    case InstanceKind::kRvm:
      return "rvm";
    case InstanceKind::kColored:
      return "crvm";
  }
  return "ts";
}

namespace {

// Applies each step to `state`, stopping at the first illegal one.
template <typename State>
VerifyReport replay(const Graph& g, State& state,
                    const ParallelSwapSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    try {
      state = apply_parallel_swap(g, state, seq[i]);
    } catch (const InputError& e) {
      return {false, static_cast<int>(i), e.what()};
    }
  }
  return {};
}

}  // namespace

VerifyReport verify_parallel(const Graph& g, const Configuration& f,
                             const ParallelSwapSequence& seq) {
  if (f.size() != g.order()) {
    return {false, -1, "configuration size does not match graph"};
  }
  Configuration cur = f;
  VerifyReport report = replay(g, cur, seq);
  if (!report.ok) return report;
  if (!cur.is_identity()) return {false, -1, "final configuration not identity"};
  return {};
}

VerifyReport verify_swaps(const Graph& g, const Configuration& f,
                          const SwapSequence& seq) {
  return verify_parallel(g, f, as_parallel(seq));
}

VerifyReport verify_colored(const Graph& g, const Coloring& f,
                            const Coloring& goal,
                            const ParallelSwapSequence& seq) {
  if (f.size() != g.order() || goal.size() != g.order()) {
    return {false, -1, "coloring size does not match graph"};
  }
  Coloring cur = f;
  VerifyReport report = replay(g, cur, seq);
  if (!report.ok) return report;
  if (!(cur == goal)) return {false, -1, "final coloring differs from goal"};
  return {};
}

VerifyReport verify(const Instance& instance, const Solution& solution) {
  const auto& steps = solution.steps;
  VerifyReport report;
  switch (instance.kind) {
    case InstanceKind::kTs:
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].size() != 1) {
          throw InputError("token swapping solution has a step with " +
                           std::to_string(steps[i].size()) +
                           " swaps at index " + std::to_string(i));
        }
      }
      report = verify_parallel(instance.graph, instance.tokens, steps);
      break;
    case InstanceKind::kRvm:
      report = verify_parallel(instance.graph, instance.tokens, steps);
      break;
    case InstanceKind::kColored:
      report = verify_colored(instance.graph, instance.colors, instance.goal,
                              steps);
      break;
  }
  if (report.ok && instance.budget &&
      static_cast<int>(steps.size()) > *instance.budget) {
    return {false, -1,
            "solution has " + std::to_string(steps.size()) +
                " steps, budget is " + std::to_string(*instance.budget)};
  }
  return report;
}

}  // namespace tokswap
