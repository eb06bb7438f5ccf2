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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tokswap/cli.hpp"
#include "tokswap/error.hpp"
#include "tokswap/io.hpp"
#include "tokswap/lollipop.hpp"
#include "tokswap/oracle.hpp"
#include "tokswap/pathroute.hpp"
#include "tokswap/reductions.hpp"
#include "tokswap/starpath.hpp"
#include "tokswap/twostep.hpp"
#include "tokswap/verify.hpp"

namespace py = pybind11;
using namespace tokswap;

namespace {

using PyEdge = std::pair<int, int>;
using PyMatching = std::vector<PyEdge>;

PyMatching to_py(const Matching& s) {
  PyMatching out;
  for (const Edge& e : s) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<PyMatching> to_py(const ParallelSwapSequence& seq) {
  std::vector<PyMatching> out;
  for (const Matching& s : seq) out.push_back(to_py(s));
  return out;
}

Matching from_py(const PyMatching& s) {
  Matching out;
  for (const auto& [u, v] : s) out.emplace_back(u, v);
  return out;
}

ParallelSwapSequence from_py(const std::vector<PyMatching>& seq) {
  ParallelSwapSequence out;
  for (const PyMatching& s : seq) out.push_back(from_py(s));
  return out;
}

py::dict report(const VerifyReport& r) {
  py::dict d;
  d["ok"] = r.ok;
  d["step"] = r.step;
  d["message"] = r.message;
  return d;
}

py::dict reduction(const ReductionOutput& red) {
  py::dict d;
  d["instance"] = write_instance(red.instance);
  d["labels"] = red.label_map;
  d["bipartite"] = red.certificate.bipartite;
  d["max_degree"] = red.certificate.max_degree;
  d["expected_optimum"] = red.certificate.expected_optimum;
  return d;
}

SepSatInstance sepsat(int vars, const std::vector<Clause>& clauses,
                      const std::vector<int>& part) {
  SepSatInstance s{vars, clauses, part};
  if (part.empty()) return partition_sepsat(s.cnf());
  validate_sepsat(s);
  return s;
}

}  // namespace

PYBIND11_MODULE(_tokswap, m) {
  m.doc() = "Token swapping and permutation routing via matchings";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const PyMatching& edges,
                       std::vector<std::string> labels) {
             return Graph(n, from_py(edges), std::move(labels));
           }),
           py::arg("n"), py::arg("edges"), py::arg("labels") = std::vector<std::string>{})
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("edges", [](const Graph& g) { return to_py(g.edges()); })
      .def("labels", &Graph::labels)
      .def("degree", &Graph::degree)
      .def("max_degree", &Graph::max_degree)
      .def("is_connected", &Graph::is_connected)
      .def("is_bipartite", &Graph::is_bipartite)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) +
               " m=" + std::to_string(g.size()) + ">";
      });

  m.def("make_path", &make_path);
  m.def("make_cycle", &make_cycle);
  m.def("make_complete", &make_complete);
  m.def("make_lollipop", &make_lollipop);
  m.def("make_starpath", &make_starpath);

  py::class_<Configuration>(m, "Configuration")
      .def(py::init<std::vector<Token>>())
      .def_static("identity", &Configuration::identity)
      .def("tokens", &Configuration::tokens)
      .def("is_identity", &Configuration::is_identity)
      .def("__len__", &Configuration::size);

  py::class_<Coloring>(m, "Coloring")
      .def(py::init<std::vector<int>>())
      .def("colors", &Coloring::colors)
      .def("__len__", &Coloring::size);

  m.def(
      "ts_oracle",
      [](const Graph& g, const Configuration& f, std::uint64_t node_cap, int threads) {
        const TsResult r = ts_oracle(g, f, OracleOptions{node_cap, threads});
        return py::make_tuple(r.length, to_py(r.witness));
      },
      py::arg("g"), py::arg("f"), py::arg("node_cap") = OracleOptions{}.node_cap,
      py::arg("threads") = 1);
  m.def(
      "rt_oracle",
      [](const Graph& g, const Configuration& f, std::uint64_t node_cap, int threads) {
        const RtResult r = rt_oracle(g, f, OracleOptions{node_cap, threads});
        return py::make_tuple(r.length, to_py(r.witness));
      },
      py::arg("g"), py::arg("f"), py::arg("node_cap") = OracleOptions{}.node_cap,
      py::arg("threads") = 1);
  m.def(
      "rt_colored_oracle",
      [](const Graph& g, const Coloring& f, const Coloring& goal,
         std::uint64_t node_cap) {
        const RtResult r = rt_colored_oracle(g, f, goal, OracleOptions{node_cap, 1});
        return py::make_tuple(r.length, to_py(r.witness));
      },
      py::arg("g"), py::arg("f"), py::arg("goal"),
      py::arg("node_cap") = OracleOptions{}.node_cap);
  m.def("count_two_step", [](const Graph& g, const Configuration& f) {
    return count_two_step(g, f);
  });

  m.def("phi", &phi);
  m.def("psi", &psi);
  m.def("solve_lollipop", [](const Graph& g, const Configuration& f) {
    return to_py(solve_lollipop(g, f));
  });
  m.def("solve_starpath", [](const Graph& g, const Configuration& f) {
    return to_py(solve_starpath(g, f));
  });
  m.def("ap_solve", [](const Graph& g, const Configuration& f) {
    return to_py(ap_solve(g, f));
  });
  m.def("oe_transform", [](const std::vector<PyMatching>& seq) {
    return to_py(oe_transform(from_py(seq)));
  });
  m.def("endpoint_schedule", [](int n) { return to_py(endpoint_schedule(n)); });

  m.def("decide_rt2", [](const Graph& g, const Configuration& f) {
    const TwoStepAnswer a = decide_rt2(g, f);
    return py::make_tuple(a.yes, to_py(ParallelSwapSequence{a.first, a.second}));
  });
  m.def("decide_rt2_2colored",
        [](const Graph& g, const Coloring& f, const Coloring& goal) {
          const ColoredTwoStepAnswer a = decide_rt2_2colored(g, f, goal);
          return py::make_tuple(a.yes,
                                to_py(ParallelSwapSequence{a.first, a.second}));
        });

  m.def("verify_swaps", [](const Graph& g, const Configuration& f,
                           const PyMatching& seq) {
    return report(verify_swaps(g, f, from_py(seq)));
  });
  m.def("verify_parallel", [](const Graph& g, const Configuration& f,
                              const std::vector<PyMatching>& seq) {
    return report(verify_parallel(g, f, from_py(seq)));
  });
  m.def("verify_colored", [](const Graph& g, const Coloring& f, const Coloring& goal,
                             const std::vector<PyMatching>& seq) {
    return report(verify_colored(g, f, goal, from_py(seq)));
  });
  m.def("verify_json", [](const std::string& instance, const std::string& solution) {
    return report(verify(parse_instance(instance).instance, parse_solution(solution)));
  });

  m.def("reduce_3dm_ts", [](int n, const std::vector<std::array<int, 3>>& triples) {
    return reduction(reduce_3dm_ts(ThreeDMInstance{n, triples}));
  });
  m.def("map_3dm_solution", [](int n, const std::vector<std::array<int, 3>>& triples,
                               const std::vector<int>& chosen) {
    return to_py(map_3dm_solution(ThreeDMInstance{n, triples}, chosen));
  });
  m.def(
      "reduce_sepsat",
      [](int vars, const std::vector<Clause>& clauses, const std::vector<int>& part,
         const std::string& target, int p) {
        const SepSatInstance s = sepsat(vars, clauses, part);
        if (target == "rvm") return reduction(reduce_sepsat_rvm(s, p));
        if (target == "rvm3") return reduction(reduce_sepsat_rvm_deg3(s));
        if (target == "c2rvm") return reduction(reduce_sepsat_2c3(s));
        if (target == "c3rvm") return reduction(reduce_sepsat_3c2(s));
        throw InputError("unknown target " + target);
      },
      py::arg("vars"), py::arg("clauses"), py::arg("part") = std::vector<int>{},
      py::arg("target") = "rvm", py::arg("p") = 3);
  m.def(
      "map_assignment",
      [](int vars, const std::vector<Clause>& clauses, const std::vector<int>& part,
         const Assignment& phi, const std::string& target, int p) {
        const SepSatInstance s = sepsat(vars, clauses, part);
        if (target == "rvm") return to_py(map_assignment_rvm(s, phi, p));
        if (target == "rvm3") return to_py(map_assignment_rvm_deg3(s, phi));
        if (target == "c2rvm") return to_py(map_assignment_2c3(s, phi));
        if (target == "c3rvm") return to_py(map_assignment_3c2(s, phi));
        throw InputError("unknown target " + target);
      },
      py::arg("vars"), py::arg("clauses"), py::arg("part"), py::arg("phi"),
      py::arg("target") = "rvm", py::arg("p") = 3);
  m.def("reduce_3sat_sepsat", [](int vars, const std::vector<Clause>& clauses) {
    const SepSatReduction r = reduce_3sat_sepsat(Cnf{vars, clauses});
    return py::make_tuple(r.sepsat.vars, r.sepsat.clauses, r.sepsat.part);
  });
  m.def("brute_force_sat", [](int vars, const std::vector<Clause>& clauses) {
    return brute_force_sat(Cnf{vars, clauses});
  });
  m.def("build_counting_gadget", [](const Graph& h) {
    return reduction(build_counting_gadget(h));
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
