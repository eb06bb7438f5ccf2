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

#include "tokswap/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tokswap/error.hpp"

namespace tokswap {

namespace {

using json = nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

// One key per line, values compact; nlohmann keeps object keys sorted.
std::string canonical(const json& j) {
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(key).dump() + ": " + value.dump();
  }
  return out + "\n}\n";
}

json steps_json(const ParallelSwapSequence& steps) {
  json out = json::array();
  for (const Matching& s : steps) {
    json step = json::array();
    for (const Edge& e : s) step.push_back({e.u, e.v});
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  const json j = parse_json(text);
  const auto kind_str = field<std::string>(j, "kind");
  InstanceFile file;
  Instance& inst = file.instance;
  if (kind_str == "ts") {
    inst.kind = InstanceKind::kTs;
  } else if (kind_str == "rvm") {
    inst.kind = InstanceKind::kRvm;
  } else if (kind_str == "crvm") {
    inst.kind = InstanceKind::kColored;
  } else {
    throw InputError("unknown instance kind \"" + kind_str + "\"");
  }
  const int n = field<int>(j, "n");
  std::vector<Edge> edges;
  for (const auto& pair : field<std::vector<std::vector<int>>>(j, "edges")) {
    if (pair.size() != 2) throw InputError("edges must be pairs");
    edges.emplace_back(pair[0], pair[1]);
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels");
  Family family;
  if (j.contains("family")) {
    const json& fam = j.at("family");
    const auto kind = family_from_name(field<std::string>(fam, "kind"));
    if (!kind) throw InputError("unknown graph family");
    family = Family{*kind, field<int>(fam, "m"), field<int>(fam, "n")};
  }
  inst.graph = Graph(n, std::move(edges), std::move(labels), family);
  if (family.kind != FamilyKind::kNone &&
      !(inst.graph == make_family(family.kind, family.m, family.n))) {
    throw InputError("graph does not match its declared family");
  }
  if (inst.kind == InstanceKind::kColored) {
    inst.colors = Coloring(field<std::vector<int>>(j, "colors"));
    inst.goal = Coloring(field<std::vector<int>>(j, "goal_colors"));
    if (inst.colors.size() != n || inst.goal.size() != n) {
      throw InputError("coloring size does not match graph");
    }
  } else {
    inst.tokens = Configuration(field<std::vector<int>>(j, "tokens"));
    if (inst.tokens.size() != n) {
      throw InputError("configuration size does not match graph");
    }
  }
  if (j.contains("budget")) inst.budget = field<int>(j, "budget");
  if (j.contains("seed")) file.seed = field<std::uint64_t>(j, "seed");
  return file;
}

std::string write_instance(const InstanceFile& file) {
  const Instance& inst = file.instance;
  json j;
  j["kind"] = kind_name(inst.kind);
  j["n"] = inst.graph.order();
  json edges = json::array();
  for (const Edge& e : inst.graph.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (!inst.graph.labels().empty()) j["labels"] = inst.graph.labels();
  const Family& fam = inst.graph.family();
  if (fam.kind != FamilyKind::kNone) {
    j["family"] = {{"kind", family_name(fam.kind)}, {"m", fam.m}, {"n", fam.n}};
  }
  if (inst.kind == InstanceKind::kColored) {
    j["colors"] = inst.colors.colors();
    j["goal_colors"] = inst.goal.colors();
  } else {
    j["tokens"] = inst.tokens.tokens();
  }
  if (inst.budget) j["budget"] = *inst.budget;
  if (file.seed) j["seed"] = *file.seed;
  return canonical(j);
}

std::string write_instance(const Instance& instance) {
  return write_instance(InstanceFile{instance, std::nullopt});
}

Solution parse_solution(const std::string& text) {
  const json j = parse_json(text);
  Solution sol;
  for (const auto& step :
       field<std::vector<std::vector<std::vector<int>>>>(j, "steps")) {
    Matching s;
    for (const auto& pair : step) {
      if (pair.size() != 2) throw InputError("swaps must be pairs");
      s.emplace_back(pair[0], pair[1]);
    }
    sol.steps.push_back(std::move(s));
  }
  return sol;
}

std::string write_solution(const Solution& solution) {
  json j;
  j["steps"] = steps_json(solution.steps);
  return canonical(j);
}

ThreeDMInstance parse_3dm(const std::string& text) {
  const json j = parse_json(text);
  ThreeDMInstance inst;
  inst.n = field<int>(j, "n");
  for (const auto& t : field<std::vector<std::vector<int>>>(j, "triples")) {
    if (t.size() != 3) throw InputError("triples must have three entries");
    inst.triples.push_back({t[0], t[1], t[2]});
  }
  validate_3dm(inst);
  return inst;
}

std::string write_3dm(const ThreeDMInstance& inst) {
  json j;
  j["n"] = inst.n;
  j["triples"] = inst.triples;
  return canonical(j);
}

SepSatInstance parse_sepsat(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos || text[start] != '{') {
    std::istringstream in(text);
    return partition_sepsat(read_dimacs(in));
  }
  const json j = parse_json(text);
  SepSatInstance inst;
  inst.vars = field<int>(j, "vars");
  inst.clauses = field<std::vector<Clause>>(j, "clauses");
  if (j.contains("part")) {
    inst.part = field<std::vector<int>>(j, "part");
  } else {
    return partition_sepsat(inst.cnf());
  }
  validate_sepsat(inst);
  return inst;
}

std::string write_sepsat(const SepSatInstance& inst) {
  json j;
  j["vars"] = inst.vars;
  j["clauses"] = inst.clauses;
  j["part"] = inst.part;
  return canonical(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace tokswap
