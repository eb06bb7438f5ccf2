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

#include "tokswap/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <random>
#include <sstream>

#include "tokswap/error.hpp"
#include "tokswap/io.hpp"
#include "tokswap/lollipop.hpp"
#include "tokswap/oracle.hpp"
#include "tokswap/pathroute.hpp"
#include "tokswap/reductions.hpp"
#include "tokswap/starpath.hpp"
#include "tokswap/twostep.hpp"

namespace tokswap {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Common {
  bool json_out = false;
  std::uint64_t node_cap = OracleOptions{}.node_cap;
  int threads = 1;

  OracleOptions oracle() const { return OracleOptions{node_cap, threads}; }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json_out, "Machine-readable output");
  sub->add_option("--node-cap", c.node_cap, "Oracle state budget");
  sub->add_option("--parallel", c.threads, "Oracle worker threads")
      ->check(CLI::Range(1, 256));
}

Solution to_solution(const SwapSequence& seq) {
  return Solution{as_parallel(seq)};
}

double millis(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string input, output, algo = "auto";
};

int do_solve(const SolveArgs& a, const Common& c, std::ostream& out,
             std::ostream& err) {
  const Instance inst = parse_instance(read_file(a.input)).instance;
  const Graph& g = inst.graph;
  std::string algo = a.algo;
  if (algo == "auto") {
    const FamilyKind fam = g.family().kind;
    algo = "oracle";
    if (inst.kind == InstanceKind::kTs && fam == FamilyKind::kLollipop) {
      algo = "lollipop";
    } else if (inst.kind == InstanceKind::kTs && fam == FamilyKind::kStarPath) {
      algo = "starpath";
    } else if (inst.kind == InstanceKind::kRvm && fam == FamilyKind::kPath) {
      algo = "path-oe";
    }
  }
  Solution sol;
  if (algo == "lollipop" || algo == "starpath") {
    if (inst.kind != InstanceKind::kTs) {
      throw InputError(algo + " solves token swapping instances only");
    }
    sol = to_solution(algo == "lollipop" ? solve_lollipop(g, inst.tokens)
                                         : solve_starpath(g, inst.tokens));
  } else if (algo == "path-oe") {
    if (inst.kind != InstanceKind::kRvm) {
      throw InputError("path-oe solves routing instances only");
    }
    sol.steps = ap_solve(g, inst.tokens);
  } else if (algo == "oracle") {
    if (inst.kind == InstanceKind::kTs) {
      sol = to_solution(ts_oracle(g, inst.tokens, c.oracle()).witness);
    } else if (inst.kind == InstanceKind::kRvm) {
      sol.steps = rt_oracle(g, inst.tokens, c.oracle()).witness;
    } else {
      sol.steps = rt_colored_oracle(g, inst.colors, inst.goal, c.oracle()).witness;
    }
  } else {
    throw InputError("unknown algorithm " + algo);
  }
  Instance unbounded = inst;
  unbounded.budget.reset();
  const VerifyReport rep = verify(unbounded, sol);
  if (!rep.ok) throw Error("solver produced an invalid solution: " + rep.message);
  const int length = static_cast<int>(sol.steps.size());
  const bool over = inst.budget && length > *inst.budget;
  if (c.json_out) {
    json j{{"algo", algo}, {"length", length}, {"within_budget", !over}};
    if (a.output.empty()) j["steps"] = json::parse(write_solution(sol))["steps"];
    out << j.dump() << '\n';
  } else {
    (a.output.empty() ? err : out) << "length " << length << " (" << algo << ")\n";
  }
  if (!a.output.empty()) {
    write_file(a.output, write_solution(sol));
  } else if (!c.json_out) {
    out << write_solution(sol);
  }
  return over ? kExitNo : kExitOk;
}

// ---- decide2 ---------------------------------------------------------------

int do_decide2(const std::string& input, const std::string& output,
               const Common& c, std::ostream& out) {
  const Instance inst = parse_instance(read_file(input)).instance;
  bool yes = false;
  Solution sol;
  if (inst.kind == InstanceKind::kColored) {
    const auto ans = decide_rt2_2colored(inst.graph, inst.colors, inst.goal);
    yes = ans.yes;
    sol.steps = {ans.first, ans.second};
  } else {
    const auto ans = decide_rt2(inst.graph, inst.tokens);
    yes = ans.yes;
    sol.steps = {ans.first, ans.second};
  }
  if (yes) {
    // drop empty trailing steps so the witness length is rt itself
    while (!sol.steps.empty() && sol.steps.back().empty()) sol.steps.pop_back();
  }
  if (c.json_out) {
    json j{{"answer", yes ? "yes" : "no"}};
    if (yes) j["steps"] = json::parse(write_solution(sol))["steps"];
    out << j.dump() << '\n';
  } else {
    out << (yes ? "yes" : "no") << '\n';
    if (yes && output.empty()) out << write_solution(sol);
  }
  if (yes && !output.empty()) write_file(output, write_solution(sol));
  return yes ? kExitOk : kExitNo;
}

// ---- verify ----------------------------------------------------------------

int do_verify(const std::string& input, const std::string& solution,
              const Common& c, std::ostream& out) {
  const Instance inst = parse_instance(read_file(input)).instance;
  const Solution sol = parse_solution(read_file(solution));
  const VerifyReport rep = verify(inst, sol);
  if (c.json_out) {
    json j{{"ok", rep.ok}, {"length", sol.steps.size()}};
    if (!rep.ok) {
      j["step"] = rep.step;
      j["message"] = rep.message;
    }
    out << j.dump() << '\n';
  } else if (rep.ok) {
    out << "ok, length " << sol.steps.size() << '\n';
  } else {
    out << "invalid";
    if (rep.step >= 0) out << " at step " << rep.step + 1;
    out << ": " << rep.message << '\n';
  }
  return rep.ok ? kExitOk : kExitNo;
}

// ---- reduce / map-solution ---------------------------------------------------

struct ReduceArgs {
  std::string from, to, input, output;
  int budget = 3;
  bool emit_map = false;
};

json sepsat_json(const SepSatInstance& s) {
  return json::parse(write_sepsat(s));
}

// The Sep-SAT instance behind a "3sat" or "sepsat" source.
SepSatInstance sepsat_of(const std::string& from, const json& source) {
  if (from == "sepsat") return parse_sepsat(source.dump());
  Cnf cnf{source.at("vars").get<int>(),
          source.at("clauses").get<std::vector<Clause>>()};
  return reduce_3sat_sepsat(cnf).sepsat;
}

ReductionOutput build_reduction(const std::string& from, const std::string& to,
                                const json& source, int budget) {
  if (from == "3dm") {
    if (to != "ts") throw InputError("3dm reduces to ts only");
    return reduce_3dm_ts(parse_3dm(source.dump()));
  }
  const SepSatInstance s = sepsat_of(from, source);
  if (to == "rvm") return reduce_sepsat_rvm(s, budget);
  if (to == "rvm3") return reduce_sepsat_rvm_deg3(s);
  if (to == "c2rvm") return reduce_sepsat_2c3(s);
  if (to == "c3rvm") return reduce_sepsat_3c2(s);
  throw InputError("cannot reduce " + from + " to " + to);
}

int do_reduce(const ReduceArgs& a, const Common& c, std::ostream& out) {
  const std::string text = read_file(a.input);
  json source;
  if (a.from == "3dm") {
    source = json::parse(write_3dm(parse_3dm(text)));
  } else if (a.from == "3sat") {
    std::istringstream in(text);
    const Cnf cnf = read_dimacs(in);
    source = {{"vars", cnf.vars}, {"clauses", cnf.clauses}};
  } else if (a.from == "sepsat") {
    source = sepsat_json(parse_sepsat(text));
  } else {
    throw InputError("unknown source problem " + a.from);
  }
  if (a.to != "rvm" && a.budget != 3) {
    throw InputError("--budget applies to --to rvm only");
  }
  const ReductionOutput red = build_reduction(a.from, a.to, source, a.budget);
  write_file(a.output, write_instance(red.instance));
  if (a.emit_map) {
    json meta{{"from", a.from}, {"to", a.to}, {"budget", a.budget},
              {"source", source}};
    write_file(a.output + ".meta", meta.dump(2) + "\n");
  }
  const Certificate& cert = red.certificate;
  const Graph& g = red.instance.graph;
  if (c.json_out) {
    out << json{{"vertices", g.order()},
                {"edges", g.size()},
                {"bipartite", cert.bipartite},
                {"max_degree", cert.max_degree},
                {"expected_optimum", cert.expected_optimum}}
               .dump()
        << '\n';
  } else {
    out << "vertices " << g.order() << ", edges " << g.size() << ", bipartite "
        << (cert.bipartite ? "yes" : "no") << ", max degree " << cert.max_degree
        << ", expected optimum " << cert.expected_optimum << '\n';
  }
  return kExitOk;
}

int do_map_solution(const std::string& meta_path, const std::string& witness,
                    const std::string& output, const Common& c,
                    std::ostream& out) {
  const json meta = json::parse(read_file(meta_path));
  const json w = json::parse(read_file(witness));
  const auto from = meta.at("from").get<std::string>();
  const auto to = meta.at("to").get<std::string>();
  const int budget = meta.at("budget").get<int>();
  const json& source = meta.at("source");
  Solution sol;
  if (from == "3dm") {
    std::vector<int> chosen;
    for (int t : w.at("triples").get<std::vector<int>>()) chosen.push_back(t - 1);
    sol = to_solution(map_3dm_solution(parse_3dm(source.dump()), chosen));
  } else {
    Assignment phi;
    for (int v : w.at("assignment").get<std::vector<int>>()) phi.push_back(v != 0);
    SepSatInstance s;
    if (from == "3sat") {
      Cnf cnf{source.at("vars").get<int>(),
              source.at("clauses").get<std::vector<Clause>>()};
      const SepSatReduction r = reduce_3sat_sepsat(cnf);
      const int bad = first_violated(cnf, phi);
      if (bad >= 0) {
        throw InputError("assignment does not satisfy clause C" +
                         std::to_string(bad + 1));
      }
      phi = lift_assignment(r, phi);
      s = r.sepsat;
    } else {
      s = parse_sepsat(source.dump());
    }
    if (to == "rvm") {
      sol.steps = map_assignment_rvm(s, phi, budget);
    } else if (to == "rvm3") {
      sol.steps = map_assignment_rvm_deg3(s, phi);
    } else if (to == "c2rvm") {
      sol.steps = map_assignment_2c3(s, phi);
    } else if (to == "c3rvm") {
      sol.steps = map_assignment_3c2(s, phi);
    } else {
      throw InputError("unknown reduction target " + to);
    }
  }
  const ReductionOutput red = build_reduction(from, to, source, budget);
  const VerifyReport rep = verify(red.instance, sol);
  if (!rep.ok) throw Error("mapped solution does not verify: " + rep.message);
  write_file(output, write_solution(sol));
  if (c.json_out) {
    out << json{{"length", sol.steps.size()}, {"verified", true}}.dump() << '\n';
  } else {
    out << "length " << sol.steps.size() << ", verified\n";
  }
  return kExitOk;
}

// ---- count2 ------------------------------------------------------------------

int do_count2(const std::string& input, const Common& c, std::ostream& out) {
  const Instance inst = parse_instance(read_file(input)).instance;
  if (inst.kind == InstanceKind::kColored) {
    throw InputError("count2 takes uncoloured instances");
  }
  const std::uint64_t count = count_two_step(inst.graph, inst.tokens, c.oracle());
  if (c.json_out) {
    out << json{{"count", count}}.dump() << '\n';
  } else {
    out << count << '\n';
  }
  return kExitOk;
}

// ---- gen -----------------------------------------------------------------------

struct GenArgs {
  std::string family, kind = "ts", output;
  int m = 0, n = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
};

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::bernoulli_distribution extra(p);
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Edge e(a, b);
      if (std::find(edges.begin(), edges.end(), e) == edges.end() && extra(rng)) {
        edges.push_back(e);
      }
    }
  }
  return Graph(n, std::move(edges));
}

int do_gen(const GenArgs& a, std::ostream& out) {
  std::mt19937_64 rng(a.seed);
  InstanceFile file;
  file.seed = a.seed;
  Instance& inst = file.instance;
  if (a.family == "random") {
    if (a.n < 1) throw InputError("--n must be positive");
    inst.graph = random_connected(a.n, a.p, rng);
  } else {
    const auto kind = family_from_name(a.family);
    if (!kind || *kind == FamilyKind::kNone) {
      throw InputError("unknown family " + a.family);
    }
    inst.graph = make_family(*kind, a.m, a.n);
  }
  const int n = inst.graph.order();
  if (a.kind == "crvm") {
    inst.kind = InstanceKind::kColored;
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = 1 + (v % 2);
    std::shuffle(colors.begin(), colors.end(), rng);
    std::vector<int> goal = colors;
    std::shuffle(goal.begin(), goal.end(), rng);
    inst.colors = Coloring(std::move(colors));
    inst.goal = Coloring(std::move(goal));
  } else {
    if (a.kind == "ts") {
      inst.kind = InstanceKind::kTs;
    } else if (a.kind == "rvm") {
      inst.kind = InstanceKind::kRvm;
    } else {
      throw InputError("unknown instance kind " + a.kind);
    }
    std::vector<Token> tokens(n);
    for (int v = 0; v < n; ++v) tokens[v] = v;
    std::shuffle(tokens.begin(), tokens.end(), rng);
    inst.tokens = Configuration(std::move(tokens));
  }
  if (a.output.empty()) {
    out << write_instance(file);
  } else {
    write_file(a.output, write_instance(file));
  }
  return kExitOk;
}

// ---- bench -----------------------------------------------------------------------

struct BenchArgs {
  std::string suite;
  int max_size = 8;
  int samples = 20;
  std::uint64_t seed = 1;
};

int do_bench(const BenchArgs& a, const Common& c, std::ostream& out) {
  if (a.suite != "lollipop" && a.suite != "starpath" && a.suite != "path-oe") {
    throw InputError("unknown suite " + a.suite);
  }
  std::mt19937_64 rng(a.seed);
  json rows = json::array();
  bool all_agree = true;
  const int oracle_limit = a.suite == "path-oe" ? 9 : 10;
  if (!c.json_out) out << "size samples solver_ms oracle_ms agree\n";
  for (int size = 3; size <= a.max_size; ++size) {
    const int m = std::max(2, size / 2);
    const int len = size - m - 1;
    Graph g;
    if (a.suite == "lollipop") {
      g = make_lollipop(m, len);
    } else if (a.suite == "starpath") {
      g = make_starpath(m, len);
    } else {
      g = make_path(size);
    }
    double solver_ms = 0, oracle_ms = 0;
    bool agree = true;
    const bool check = size <= oracle_limit;
    for (int s = 0; s < a.samples; ++s) {
      std::vector<Token> tokens(g.order());
      for (int v = 0; v < g.order(); ++v) tokens[v] = v;
      std::shuffle(tokens.begin(), tokens.end(), rng);
      const Configuration f(std::move(tokens));
      auto t0 = Clock::now();
      int got = 0;
      if (a.suite == "lollipop") {
        got = static_cast<int>(solve_lollipop(g, f).size());
      } else if (a.suite == "starpath") {
        got = static_cast<int>(solve_starpath(g, f).size());
      } else {
        got = static_cast<int>(ap_solve(g, f).size());
      }
      solver_ms += millis(t0);
      if (!check) continue;
      t0 = Clock::now();
      if (a.suite == "path-oe") {
        const int rt = rt_oracle(g, f, c.oracle()).length;
        agree = agree && rt <= got && got <= rt + 1;
      } else {
        agree = agree && ts_oracle(g, f, c.oracle()).length == got;
      }
      oracle_ms += millis(t0);
    }
    all_agree = all_agree && agree;
    const double sm = solver_ms / a.samples;
    const double om = check ? oracle_ms / a.samples : 0.0;
    if (c.json_out) {
      json row{{"size", size}, {"samples", a.samples}, {"solver_ms", sm}};
      if (check) {
        row["oracle_ms"] = om;
        row["agree"] = agree;
      }
      rows.push_back(std::move(row));
    } else {
      out << size << ' ' << a.samples << ' ' << sm << ' ';
      if (check) {
        out << om << ' ' << (agree ? "yes" : "NO") << '\n';
      } else {
        out << "- -\n";
      }
    }
  }
  if (c.json_out) {
    out << json{{"suite", a.suite}, {"seed", a.seed}, {"rows", rows}}.dump()
        << '\n';
  }
  return all_agree ? kExitOk : kExitNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Token swapping and permutation routing via matchings"};
  app.name("tokswap");
  app.require_subcommand(1);
  Common common;

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("-i,--input", solve_args.input, "Instance file")->required();
  solve->add_option("-o,--output", solve_args.output, "Solution file");
  solve->add_option("--algo", solve_args.algo, "Algorithm")
      ->check(CLI::IsMember({"auto", "oracle", "lollipop", "starpath", "path-oe"}));
  add_common(solve, common);

  std::string d2_in, d2_out;
  auto* decide2 = app.add_subcommand("decide2", "Decide whether two steps suffice");
  decide2->add_option("-i,--input", d2_in, "Instance file")->required();
  decide2->add_option("-o,--output", d2_out, "Witness solution file");
  add_common(decide2, common);

  std::string v_in, v_sol;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution");
  verify_cmd->add_option("-i,--input", v_in, "Instance file")->required();
  verify_cmd->add_option("-s,--solution", v_sol, "Solution file")->required();
  add_common(verify_cmd, common);

  ReduceArgs red_args;
  auto* reduce = app.add_subcommand("reduce", "Build a hardness instance");
  reduce->add_option("--from", red_args.from, "Source problem")
      ->required()
      ->check(CLI::IsMember({"3dm", "3sat", "sepsat"}));
  reduce->add_option("--to", red_args.to, "Target problem")
      ->required()
      ->check(CLI::IsMember({"ts", "rvm", "rvm3", "c2rvm", "c3rvm"}));
  reduce->add_option("-i,--input", red_args.input, "Source instance")->required();
  reduce->add_option("-o,--output", red_args.output, "Instance file")->required();
  reduce->add_option("--budget", red_args.budget, "Step budget p >= 3 for rvm");
  reduce->add_flag("--emit-map", red_args.emit_map, "Also write OUT.meta");
  add_common(reduce, common);

  std::string ms_meta, ms_witness, ms_out;
  auto* map_sol = app.add_subcommand("map-solution", "Map a witness to a solution");
  map_sol->add_option("--reduction", ms_meta, "OUT.meta from reduce")->required();
  map_sol->add_option("--witness", ms_witness, "Witness JSON")->required();
  map_sol->add_option("-o,--output", ms_out, "Solution file")->required();
  add_common(map_sol, common);

  std::string c2_in;
  auto* count2 = app.add_subcommand("count2", "Count two-step solutions");
  count2->add_option("-i,--input", c2_in, "Instance file")->required();
  add_common(count2, common);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", gen_args.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "lollipop", "starpath",
                             "random"}));
  gen->add_option("--m", gen_args.m, "Clique or star size");
  gen->add_option("--n", gen_args.n, "Path length or vertex count");
  gen->add_option("--p", gen_args.p, "Extra edge probability (random)");
  gen->add_option("--seed", gen_args.seed, "RNG seed");
  gen->add_option("--kind", gen_args.kind, "ts, rvm or crvm");
  gen->add_option("-o,--output", gen_args.output, "Instance file");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time solvers against the oracle");
  bench->add_option("--suite", bench_args.suite, "lollipop, starpath or path-oe")
      ->required();
  bench->add_option("--max-size", bench_args.max_size, "Largest vertex count");
  bench->add_option("--samples", bench_args.samples, "Samples per size")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed, "RNG seed");
  add_common(bench, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) return do_solve(solve_args, common, out, err);
    if (*decide2) return do_decide2(d2_in, d2_out, common, out);
    if (*verify_cmd) return do_verify(v_in, v_sol, common, out);
    if (*reduce) return do_reduce(red_args, common, out);
    if (*map_sol) return do_map_solution(ms_meta, ms_witness, ms_out, common, out);
    if (*count2) return do_count2(c2_in, common, out);
    if (*gen) return do_gen(gen_args, out);
    if (*bench) return do_bench(bench_args, common, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace tokswap
