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

#include "tokswap/sat.hpp"

#include <cstdlib>
#include <sstream>

#include "tokswap/error.hpp"

namespace tokswap {

namespace {

bool literal_true(Literal lit, const Assignment& phi) {
  const bool value = phi[std::abs(lit) - 1];
  return lit > 0 ? value : !value;
}

std::string clause_name(int j) { return "C" + std::to_string(j + 1); }

}  // namespace

void validate_cnf(const Cnf& cnf) {
  if (cnf.vars < 0) throw InputError("negative variable count");
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    for (Literal lit : cnf.clauses[j]) {
      if (lit == 0 || std::abs(lit) > cnf.vars) {
        throw InputError("literal " + std::to_string(lit) + " in " +
                         clause_name(static_cast<int>(j)) + " out of range");
      }
    }
  }
}

int first_violated(const Cnf& cnf, const Assignment& phi) {
  if (static_cast<int>(phi.size()) != cnf.vars) {
    throw InputError("assignment size does not match variable count");
  }
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    bool sat = false;
    for (Literal lit : cnf.clauses[j]) sat = sat || literal_true(lit, phi);
    if (!sat) return static_cast<int>(j);
  }
  return -1;
}

bool satisfies(const Cnf& cnf, const Assignment& phi) {
  return first_violated(cnf, phi) < 0;
}

std::optional<Assignment> brute_force_sat(const Cnf& cnf) {
  validate_cnf(cnf);
  if (cnf.vars > 24) throw InputError("too many variables for brute force");
  Assignment phi(cnf.vars);
  for (unsigned long mask = 0; mask < (1UL << cnf.vars); ++mask) {
    for (int i = 0; i < cnf.vars; ++i) phi[i] = (mask >> i) & 1U;
    if (satisfies(cnf, phi)) return phi;
  }
  return std::nullopt;
}

Cnf read_dimacs(std::istream& in) {
  Cnf cnf;
  bool header = false;
  int declared = 0;
  Clause current;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == 'c' || first == "%") {
      continue;
    }
    if (first == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> cnf.vars >> declared) || fmt != "cnf") {
        throw InputError("bad DIMACS header: " + line);
      }
      header = true;
      continue;
    }
    if (!header) throw InputError("DIMACS clause before header");
    std::istringstream tokens(line);
    long lit = 0;
    std::string tok;
    while (tokens >> tok) {
      char* end = nullptr;
      lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw InputError("bad DIMACS literal: " + tok);
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(static_cast<Literal>(lit));
      }
    }
  }
  if (!header) throw InputError("missing DIMACS header");
  if (!current.empty()) cnf.clauses.push_back(std::move(current));
  if (static_cast<int>(cnf.clauses.size()) != declared) {
    throw InputError("DIMACS header declares " + std::to_string(declared) +
                     " clauses, found " + std::to_string(cnf.clauses.size()));
  }
  validate_cnf(cnf);
  return cnf;
}

std::string write_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.vars << ' ' << cnf.clauses.size() << '\n';
  for (const Clause& c : cnf.clauses) {
    for (Literal lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

void validate_sepsat(const SepSatInstance& inst) {
  validate_cnf(inst.cnf());
  if (inst.part.size() != inst.clauses.size()) {
    throw InputError("partition size does not match clause count");
  }
  // count[k][i]: occurrences of x_{i+1} in F_{k+1}, with F_3 counting negations
  std::vector<std::vector<int>> count(3, std::vector<int>(inst.vars, 0));
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    const int k = inst.part[j];
    if (k < 1 || k > 3) throw InputError("partition entries must be 1, 2 or 3");
    if (inst.clauses[j].size() > 3) {
      throw InputError(clause_name(static_cast<int>(j)) + " has more than 3 literals");
    }
    for (Literal lit : inst.clauses[j]) {
      if ((k == 3) != (lit < 0)) {
        throw InputError("literal " + std::to_string(lit) + " of " +
                         clause_name(static_cast<int>(j)) + " has the wrong sign for F" +
                         std::to_string(k));
      }
      ++count[k - 1][std::abs(lit) - 1];
    }
  }
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < inst.vars; ++i) {
      if (count[k][i] != 1) {
        throw InputError("x" + std::to_string(i + 1) + " occurs " +
                         std::to_string(count[k][i]) + " times in F" +
                         std::to_string(k + 1));
      }
    }
  }
}

SepSatInstance partition_sepsat(const Cnf& cnf) {
  validate_cnf(cnf);
  SepSatInstance inst;
  inst.vars = cnf.vars;
  inst.clauses = cnf.clauses;
  inst.part.assign(cnf.clauses.size(), 0);
  std::vector<std::vector<int>> positive_in(cnf.vars);
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    bool negative = false;
    for (Literal lit : cnf.clauses[j]) negative = negative || lit < 0;
    if (negative) {
      inst.part[j] = 3;
    } else {
      for (Literal lit : cnf.clauses[j]) {
        positive_in[lit - 1].push_back(static_cast<int>(j));
      }
    }
  }
  // Each variable links the two positive clauses containing it; those two
  // clauses must land in different parts.
  std::vector<std::vector<int>> adj(cnf.clauses.size());
  for (int i = 0; i < cnf.vars; ++i) {
    if (positive_in[i].size() != 2) {
      throw InputError("x" + std::to_string(i + 1) + " occurs " +
                       std::to_string(positive_in[i].size()) +
                       " times positively, expected 2");
    }
    adj[positive_in[i][0]].push_back(positive_in[i][1]);
    adj[positive_in[i][1]].push_back(positive_in[i][0]);
  }
  for (std::size_t root = 0; root < cnf.clauses.size(); ++root) {
    if (inst.part[root] != 0) continue;
    inst.part[root] = 1;
    std::vector<int> stack{static_cast<int>(root)};
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int d : adj[c]) {
        if (inst.part[d] == 0) {
          inst.part[d] = 3 - inst.part[c];
          stack.push_back(d);
        } else if (inst.part[d] == inst.part[c]) {
          throw InputError("positive clauses cannot be split into F1 and F2");
        }
      }
    }
  }
  validate_sepsat(inst);
  return inst;
}

SepSatReduction reduce_3sat_sepsat(const Cnf& cnf) {
  validate_cnf(cnf);
  SepSatReduction red;
  red.original_vars = cnf.vars;
  red.balanced = cnf;
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    if (cnf.clauses[j].size() > 3) {
      throw InputError(clause_name(static_cast<int>(j)) + " has more than 3 literals");
    }
  }
  std::vector<int> excess(cnf.vars, 0);  // positive minus negative occurrences
  for (const Clause& c : cnf.clauses) {
    for (Literal lit : c) excess[std::abs(lit) - 1] += lit > 0 ? 1 : -1;
  }
  for (int i = 0; i < cnf.vars; ++i) {
    const Literal x = excess[i] > 0 ? -(i + 1) : i + 1;
    for (int r = 0; r < std::abs(excess[i]); ++r) {
      const int y = ++red.balanced.vars;
      red.balanced.clauses.push_back({x, y, -y});
    }
  }

  const Cnf& b = red.balanced;
  std::vector<int> occurrences(b.vars, 0);
  for (const Clause& c : b.clauses) {
    for (Literal lit : c) {
      if (lit > 0) ++occurrences[lit - 1];
    }
  }
  SepSatInstance& out = red.sepsat;
  red.x_copy.resize(b.vars);
  red.xbar_copy.resize(b.vars);
  for (int i = 0; i < b.vars; ++i) {
    for (int j = 0; j < occurrences[i]; ++j) {
      const std::string idx = std::to_string(i + 1) + "," + std::to_string(j + 1);
      red.x_copy[i].push_back(++out.vars);
      red.names.push_back("x" + idx);
      red.xbar_copy[i].push_back(++out.vars);
      red.names.push_back("xbar" + idx);
    }
  }
  std::vector<int> seen_pos(b.vars, 0), seen_neg(b.vars, 0);
  for (const Clause& c : b.clauses) {
    Clause renamed;
    for (Literal lit : c) {
      const int i = std::abs(lit) - 1;
      renamed.push_back(lit > 0 ? red.x_copy[i][seen_pos[i]++]
                                : red.xbar_copy[i][seen_neg[i]++]);
    }
    out.clauses.push_back(std::move(renamed));
    out.part.push_back(1);
  }
  for (int i = 0; i < b.vars; ++i) {
    for (int j = 0; j < occurrences[i]; ++j) {
      out.clauses.push_back({red.x_copy[i][j], red.xbar_copy[i][j]});
      out.part.push_back(2);
    }
  }
  for (int i = 0; i < b.vars; ++i) {
    const int n = occurrences[i];
    for (int j = 0; j < n; ++j) {
      out.clauses.push_back({-red.x_copy[i][j], -red.xbar_copy[i][(j + 1) % n]});
      out.part.push_back(3);
    }
  }
  validate_sepsat(out);
  return red;
}

Assignment lift_assignment(const SepSatReduction& red, const Assignment& phi) {
  if (static_cast<int>(phi.size()) != red.original_vars) {
    throw InputError("assignment size does not match variable count");
  }
  Assignment out(red.sepsat.vars);
  for (int i = 0; i < red.balanced.vars; ++i) {
    // balancing variables only appear in clauses {l, y, -y}
    const bool value = i < red.original_vars ? phi[i] : false;
    for (int v : red.x_copy[i]) out[v - 1] = value;
    for (int v : red.xbar_copy[i]) out[v - 1] = !value;
  }
  return out;
}

Assignment lower_assignment(const SepSatReduction& red, const Assignment& phi) {
  if (static_cast<int>(phi.size()) != red.sepsat.vars) {
    throw InputError("assignment size does not match variable count");
  }
  Assignment out(red.original_vars, false);
  for (int i = 0; i < red.original_vars; ++i) {
    if (!red.x_copy[i].empty()) out[i] = phi[red.x_copy[i][0] - 1];
  }
  return out;
}

}  // namespace tokswap
