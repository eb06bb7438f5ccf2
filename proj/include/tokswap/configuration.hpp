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
#include <vector>

#include "tokswap/graph.hpp"

namespace tokswap {

using Token = int;
using Matching = std::vector<Edge>;
using SwapSequence = std::vector<Edge>;
using ParallelSwapSequence = std::vector<Matching>;

/// Placement of tokens on vertices: token_on(v) is the token currently on v.
/// The goal placement is the identity. The inverse map is kept alongside so
/// vertex_of() is O(1).
class Configuration {
 public:
  Configuration() = default;
  /// Throws InputError unless `token_on` is a permutation of 0..n-1.
  explicit Configuration(std::vector<Token> token_on);

  static Configuration identity(int n);

  int size() const { return static_cast<int>(token_on_.size()); }
  Token token_on(Vertex v) const { return token_on_[v]; }
  Vertex vertex_of(Token t) const { return vertex_of_[t]; }
  const std::vector<Token>& tokens() const { return token_on_; }
  bool is_identity() const;

  /// Exchanges the tokens on a and b without consulting any graph.
  Configuration swapped(Vertex a, Vertex b) const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.token_on_ == b.token_on_;
  }

 private:
  std::vector<Token> token_on_;
  std::vector<Vertex> vertex_of_;
};

/// Vertex colouring with colours 1..c.
class Coloring {
 public:
  Coloring() = default;
  /// Throws InputError if any colour is < 1.
  explicit Coloring(std::vector<int> color_on);

  int size() const { return static_cast<int>(color_on_.size()); }
  int color_on(Vertex v) const { return color_on_[v]; }
  const std::vector<int>& colors() const { return color_on_; }
  int num_colors() const;
  Coloring swapped(Vertex a, Vertex b) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> color_on_;
};

/// Equal colour multisets.
bool consistent(const Coloring& f, const Coloring& g);

/// Throws InputError("not an edge") if e is not an edge of g.
void check_edge(const Graph& g, const Edge& e);
/// Throws InputError("not a matching" / "not an edge").
void check_matching(const Graph& g, const Matching& s);

Configuration apply_swap(const Graph& g, const Configuration& f, const Edge& e);
Configuration apply_swaps(const Graph& g, const Configuration& f,
                          const SwapSequence& seq);
Configuration apply_parallel_swap(const Graph& g, const Configuration& f,
                                  const Matching& s);
Configuration apply_parallel_swaps(const Graph& g, const Configuration& f,
                                   const ParallelSwapSequence& seq);
Coloring apply_parallel_swap(const Graph& g, const Coloring& f,
                             const Matching& s);
Coloring apply_parallel_swaps(const Graph& g, const Coloring& f,
                              const ParallelSwapSequence& seq);

/// Number of steps of `seq` that move `token`.
int move_count(const Configuration& f, const SwapSequence& seq, Token token);
/// move_count for every token at once.
std::vector<int> move_counts(const Configuration& f, const SwapSequence& seq);

/// Cycle decomposition of f viewed as a map on vertex ids. Each orbit is
/// listed as u, f(u), f(f(u)), ... starting from its smallest element;
/// orbits are sorted by that element.
std::vector<std::vector<Vertex>> orbits(const Configuration& f);

/// Every step as a one-edge matching.
ParallelSwapSequence as_parallel(const SwapSequence& seq);

}  // namespace tokswap
