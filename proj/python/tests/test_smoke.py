# Copyright 2026 The ltfair Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
import pathlib

import pytest

import ltfair

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


@pytest.fixture
def rand2():
    return ltfair.load(DATA / "rand2.json")


@pytest.fixture
def toy3():
    return ltfair.load(DATA / "toy3.json")


def test_problem_properties(toy3):
    assert toy3.item_count == 3
    assert toy3.budget == 2
    assert toy3.group_names == ["V1", "V2"]
    again = ltfair.loads(toy3.to_json())
    assert again.to_json() == toy3.to_json()


def test_solve_rand_rand2(rand2):
    result = ltfair.solve_rand(rand2, oracle_mode="exact")
    assert result["value"] == pytest.approx(1.0, abs=1e-4)
    assert result["expected_group_counts"] == pytest.approx([0.5, 0.5], abs=1e-6)
    assert ltfair.check(rand2, result)["feasible"]


def test_deterministic_solvers(toy3):
    det = ltfair.solve_det(toy3)
    assert det["set"] == [0, 2]
    assert det["value"] == 3.0
    greedy = ltfair.solve_greedy(toy3)
    assert greedy["set"] == [0, 2]


def test_oracle_and_check(toy3, rand2):
    assert ltfair.oracle(toy3)["optimum"] == pytest.approx(3.0)
    bad = {"distribution": [{"set": [0], "prob": 1.0}], "residual": 0.0}
    assert not ltfair.check(rand2, bad)["feasible"]


def test_sample_is_deterministic(rand2):
    result = ltfair.solve_rand(rand2)
    a = ltfair.sample(result, 42, 10000)
    assert a == ltfair.sample(result, 42, 10000)
    share = sum(1 for s in a if s == [0]) / len(a)
    assert abs(share - 0.5) <= 0.02


def test_extension_and_evaluate(toy3):
    value, err = ltfair.extension(toy3, [0.5, 0.5, 0.0])
    assert value == pytest.approx(1.75)
    assert err == 0.0
    assert ltfair.evaluate(toy3, [0, 1]) == 3.0


def test_errors(tmp_path):
    with pytest.raises(ltfair.IoError):
        ltfair.load(tmp_path / "missing.json")
    with pytest.raises(ltfair.ParseError):
        ltfair.loads("{")
    infeasible = ltfair.load(DATA / "infeasible.json")
    with pytest.raises(ltfair.InfeasibleRelaxation):
        ltfair.solve_det(infeasible)
    with pytest.raises(ltfair.InfeasibleInstance):
        ltfair.solve_rand(infeasible)
    assert issubclass(ltfair.InfeasibleInstance, ltfair.LtfairError)
    assert math.isfinite(ltfair.oracle(ltfair.load(DATA / "rand2.json"))["optimum"])
