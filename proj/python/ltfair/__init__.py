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

"""Fair selection under long-term expected group constraints."""

import json as _json

from . import _core
from ._core import (
    EmptyPolytope,
    EnumerationBudgetExceeded,
    InfeasibleInstance,
    InfeasibleRelaxation,
    InvalidArgument,
    InvalidInstance,
    IoError,
    LtfairError,
    ParseError,
    PreconditionError,
    Problem,
)

__all__ = [
    "EmptyPolytope",
    "EnumerationBudgetExceeded",
    "InfeasibleInstance",
    "InfeasibleRelaxation",
    "InvalidArgument",
    "InvalidInstance",
    "IoError",
    "LtfairError",
    "ParseError",
    "PreconditionError",
    "Problem",
    "load",
    "loads",
    "solve_det",
    "solve_greedy",
    "solve_rand",
    "oracle",
    "check",
    "sample",
    "extension",
    "evaluate",
]


def load(path):
    return Problem.from_file(str(path))


def loads(text):
    if not isinstance(text, str):
        text = _json.dumps(text)
    return Problem.from_json(text)


def solve_det(problem, delta=0, seed=0, samples=10000, trace=False):
    """Continuous greedy followed by pipage rounding; returns a dict."""
    return _json.loads(_core.solve_det(problem, delta, seed, samples, trace))


def solve_greedy(problem):
    return _json.loads(_core.solve_greedy(problem))


def solve_rand(problem, oracle_mode="auto", epsilon_l=0.0, enum_budget=1_000_000):
    """Optimal distribution over selections; returns a dict."""
    return _json.loads(_core.solve_rand(problem, oracle_mode, epsilon_l, enum_budget))


def oracle(problem, enum_budget=1_000_000):
    return _json.loads(_core.oracle(problem, enum_budget))


def check(problem, result):
    """Audits a result dict (or JSON text) against the problem."""
    if not isinstance(result, str):
        result = _json.dumps(result)
    return _json.loads(_core.check(problem, result))


def sample(result, seed, count):
    if not isinstance(result, str):
        result = _json.dumps(result)
    return _core.sample(result, seed, count)


def extension(problem, y, exact=False, seed=0, samples=10000):
    """Returns (value, standard error) of the multilinear extension at y."""
    return _core.extension(problem, list(y), exact, seed, samples)


def evaluate(problem, items):
    return _core.evaluate(problem, list(items))
