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

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace tokswap {

/// Signed 1-based variable index: +i is x_i, -i is the negation of x_i.
using Literal = int;
using Clause = std::vector<Literal>;
using Assignment = std::vector<bool>;  // entry i-1 holds x_i

struct Cnf {
  int vars = 0;
  std::vector<Clause> clauses;
};

/// Throws InputError on literals outside 1..vars.
void validate_cnf(const Cnf& cnf);

bool satisfies(const Cnf& cnf, const Assignment& phi);

/// Index of the first clause not satisfied by phi, or -1.
int first_violated(const Cnf& cnf, const Assignment& phi);

/// Exhaustive search; throws InputError above 24 variables.
std::optional<Assignment> brute_force_sat(const Cnf& cnf);

Cnf read_dimacs(std::istream& in);
std::string write_dimacs(const Cnf& cnf);

/// A CNF whose clauses are split into F_1, F_2 (positive literals only) and
/// F_3 (negative literals only) so that every variable occurs positively
/// once in F_1 and once in F_2 and negatively once in F_3.
struct SepSatInstance {
  int vars = 0;
  std::vector<Clause> clauses;
  std::vector<int> part;  // 1, 2 or 3 for each clause

  Cnf cnf() const { return Cnf{vars, clauses}; }
};

/// Throws InputError describing the first violated condition.
void validate_sepsat(const SepSatInstance& inst);

/// Recovers F_1/F_2/F_3 from a plain clause list: clauses with a negative
/// literal form F_3, and the positive clauses are 2-coloured along the
/// variables they share.
SepSatInstance partition_sepsat(const Cnf& cnf);

struct SepSatReduction {
  SepSatInstance sepsat;
  int original_vars = 0;
  /// The input after balancing positive and negative occurrences.
  Cnf balanced;
  /// x_copy[i][j] and xbar_copy[i][j] are the new variables x_{i+1,j+1}
  /// and xbar_{i+1,j+1}.
  std::vector<std::vector<int>> x_copy;
  std::vector<std::vector<int>> xbar_copy;
  std::vector<std::string> names;  // names[v-1] for Sep-SAT variable v
};

/// Throws InputError on clauses with more than three literals.
SepSatReduction reduce_3sat_sepsat(const Cnf& cnf);

/// Sends a model of the original formula to a model of the Sep-SAT instance.
Assignment lift_assignment(const SepSatReduction& red, const Assignment& phi);

/// Reads a model of the original formula off a Sep-SAT model.
Assignment lower_assignment(const SepSatReduction& red, const Assignment& phi);

}  // namespace tokswap
