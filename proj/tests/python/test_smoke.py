# Copyright 2026 The tokswap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json

import pytest

import tokswap


def test_version():
    assert tokswap.__version__ == "0.1.0"


def test_lollipop_solver_matches_oracle():
    g = tokswap.make_lollipop(3, 2)
    f = tokswap.Configuration([5, 1, 2, 4, 3, 0])
    length, witness = tokswap.ts_oracle(g, f)
    sol = tokswap.solve_lollipop(g, f)
    assert len(sol) == tokswap.phi(g, f) == length
    assert tokswap.verify_swaps(g, f, sol)["ok"]
    assert tokswap.verify_swaps(g, f, witness)["ok"]


def test_path_approximation_example():
    g = tokswap.make_path(7)
    f = tokswap.Configuration([2, 1, 4, 0, 6, 5, 3])
    ap = tokswap.ap_solve(g, f)
    assert len(ap) == 4
    assert tokswap.rt_oracle(g, f)[0] == 3
    assert tokswap.verify_parallel(g, f, ap)["ok"]


def test_two_step_decision():
    g = tokswap.Graph(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
    yes, steps = tokswap.decide_rt2(g, tokswap.Configuration([3, 2, 1, 0]))
    assert yes
    assert tokswap.verify_parallel(g, tokswap.Configuration([3, 2, 1, 0]), steps)["ok"]
    assert tokswap.count_two_step(g, tokswap.Configuration.identity(4)) >= 1


def test_reduction_round_trip():
    clauses = [[1, 2], [3], [1], [2, 3], [-1, -2, -3]]
    part = [1, 1, 2, 2, 3]
    red = tokswap.reduce_sepsat(3, clauses, part, target="rvm")
    assert red["bipartite"] and red["max_degree"] == 4 and red["expected_optimum"] == 3
    steps = tokswap.map_assignment(3, clauses, part, [True, False, True])
    solution = json.dumps({"steps": steps})
    assert tokswap.verify_json(red["instance"], solution)["ok"]
    with pytest.raises(ValueError, match="C1"):
        tokswap.map_assignment(3, clauses, part, [False, False, False])


def test_counting_gadget():
    red = tokswap.build_counting_gadget(tokswap.make_path(2))
    assert red["expected_optimum"] == 2
    inst = json.loads(red["instance"])
    assert inst["n"] == 4 and len(inst["edges"]) == 4


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError):
        tokswap.Configuration([0, 0])


def test_cli_entry_point():
    code, out, _ = tokswap.run_cli(["gen", "--family", "path", "--n", "4", "--seed", "1"])
    assert code == 0
    assert json.loads(out)["n"] == 4
    assert tokswap.run_cli([])[0] == 2
