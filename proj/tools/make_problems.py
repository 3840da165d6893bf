#!/usr/bin/env python3
# Copyright 2026 The qoc Authors
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
"""Regenerates the bundled problem files in problems/."""

import argparse
import json
import math
import pathlib

import numpy as np


def cpx(z):
    return [float(np.real(z)), float(np.imag(z))]


def matrix(m):
    return [[cpx(z) for z in row] for row in m]


def diag_density(probs):
    n = len(probs)
    return {
        "eigenvalues": probs,
        "eigenvectors": [[cpx(1.0 if i == j else 0.0) for i in range(n)] for j in range(n)],
    }


def ginibre_density(n, rng):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def problem(dimension, rho0, rho1, p_h1, qubit_setup=None):
    doc = {"schema": 1, "dimension": dimension}
    if rho0 is not None:
        doc["rho0"] = rho0
        doc["rho1"] = rho1
    doc["priors"] = {"p_h1": p_h1}
    if qubit_setup is not None:
        doc["qubit_setup"] = qubit_setup
    return doc


def build():
    out = {}
    out["triangle8.json"] = problem(
        8, diag_density([1 / 8] * 8), diag_density([x / 36 for x in (2, 4, 6, 8, 7, 5, 3, 1)]), 0.5)
    out["orthogonal.json"] = problem(2, diag_density([1.0, 0.0]), diag_density([0.0, 1.0]), 0.5)
    half = 0.5
    out["zero_plus.json"] = problem(
        2, {"matrix": matrix([[1, 0], [0, 0]])}, {"matrix": matrix([[half, half], [half, half]])}, 0.5)
    mixed = {"matrix": matrix([[0.6, 0.1 + 0.2j], [0.1 - 0.2j, 0.4]])}
    out["identical.json"] = problem(2, mixed, mixed, 0.3)

    a0 = 1 / 15
    for tag, alpha in (("pi4", math.pi / 4), ("pi2", math.pi / 2), ("3pi4", 3 * math.pi / 4),
                       ("7pi8", 7 * math.pi / 8)):
        out[f"qmoc_a_alpha_{tag}.json"] = problem(
            2, None, None, 0.5, {"alpha": alpha, "a0": a0, "b0": 7 / 8})
    for tag, b0 in (("7_8", 7 / 8), ("3_4", 3 / 4), ("5_8", 5 / 8), ("9_16", 9 / 16)):
        out[f"qmoc_b_b0_{tag}.json"] = problem(
            2, None, None, 0.5, {"alpha": math.pi / 5, "a0": a0, "b0": b0})
    out["qmoc_mixed_rho0.json"] = problem(2, None, None, 0.5, {"alpha": 1.0, "a0": 0.5, "b0": 0.8})

    rng = np.random.default_rng(20190501)
    out["random8.json"] = problem(
        8, {"matrix": matrix(ginibre_density(8, rng))}, {"matrix": matrix(ginibre_density(8, rng))}, 0.5)
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "problems"))
    args = parser.parse_args()
    dest = pathlib.Path(args.out)
    dest.mkdir(parents=True, exist_ok=True)
    for name, doc in build().items():
        (dest / name).write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
