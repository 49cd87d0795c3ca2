# Copyright 2026 The tspdqes Authors
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
"""Ising encodings of TSP instances, MUB landscapes and VQE experiments.

Exact values (costs, penalties, energies) are returned as ``Fraction``.
Documents produced by the C++ serializers are returned as parsed JSON.
"""

import csv
import io
import json
from fractions import Fraction

from ._tspdqes import (
    Instance,
    ParseError,
    SizeCapError,
    ValidationError,
    load_instance,
    mub_state,
    parse_instance,
)
from . import _tspdqes

__all__ = [
    "Instance",
    "ParseError",
    "SizeCapError",
    "ValidationError",
    "audit",
    "encode",
    "exact",
    "landscape",
    "load_instance",
    "make_instance",
    "mub_state",
    "parse_instance",
    "run_experiment",
    "solve",
    "spectrum",
    "suggest_penalties",
    "validate",
    "with_penalties",
]


def _text(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def exact(value):
    """Fraction from a JSON integer or a "p/q" string."""
    return Fraction(value)


def make_instance(nodes, edges, *, directed=False, variant="tsp", penalty_a=1, penalty_b=1):
    """Instance from (u, v, cost) triples; costs may be int, str or Fraction."""
    return Instance(
        nodes,
        directed,
        variant,
        [(u, v, _text(c)) for u, v, c in edges],
        _text(penalty_a),
        _text(penalty_b),
    )


def with_penalties(instance, penalty_a, penalty_b):
    return instance.with_penalties(_text(penalty_a), _text(penalty_b))


def suggest_penalties(instance, mode="lucas"):
    a, b = _tspdqes.suggest_penalties(instance, mode)
    return Fraction(a), Fraction(b)


def encode(instance, layout="efficient", form="ising"):
    return json.loads(_tspdqes.encode_json(instance, layout, form))


def solve(instance):
    return json.loads(_tspdqes.solve_json(instance))


def audit(instance, cap=24, threads=1):
    return json.loads(_tspdqes.audit_json(instance, cap, threads))


def spectrum(instance, layout="efficient", cap=24, threads=1):
    """(bitstring, energy) pairs, lowest energy first."""
    rows = csv.DictReader(io.StringIO(_tspdqes.spectrum_csv(instance, layout, cap, threads)))
    return [(row["bitstring"], Fraction(row["energy"])) for row in rows]


def landscape(instance, threads=1):
    rows = csv.DictReader(io.StringIO(_tspdqes.landscape_csv(instance, threads)))
    return [
        {
            "positions": tuple(int(p) for p in row["positions"].split("-")),
            "basis": int(row["basis"]),
            "element": int(row["element"]),
            "energy": float(row["energy"]),
        }
        for row in rows
    ]


def run_experiment(instance, mode="zeros", runs=10, seed=0, layers=2, entangler="linear",
                   max_evaluations=2000, rho_start=0.5, rho_end=1e-4, threads=1):
    return json.loads(
        _tspdqes.experiment_json(instance, mode, runs, seed, layers, entangler,
                                 max_evaluations, rho_start, rho_end, threads))


def validate(instance, layout, bitstring):
    """(tour, violations): tour is (order, cost, path) or None."""
    tour, violations = _tspdqes.validate(instance, layout, bitstring)
    if tour is not None:
        order, cost, path = tour
        tour = (order, Fraction(cost), path)
    return tour, violations
