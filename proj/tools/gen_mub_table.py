#!/usr/bin/env python3
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
"""Regenerates data/mub3_classes.txt.

Partitions the 63 non-identity 3-qubit Pauli operators into 9 maximal
commuting classes. Class 0 is {Z-type}; the other 8 are graphs of symmetric
binary matrices M, {X^a Z^(M a)}, whose pairwise differences are invertible.
"""
import itertools
import sys


def det2(m):
    # determinant over GF(2) of a 3x3 matrix given as rows of bits
    a = [row[:] for row in m]
    rank = 0
    for col in range(3):
        piv = next((r for r in range(rank, 3) if a[r][col]), None)
        if piv is None:
            return 0
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(3):
            if r != rank and a[r][col]:
                a[r] = [x ^ y for x, y in zip(a[r], a[rank])]
        rank += 1
    return 1


def symmetric_matrices():
    out = []
    for bits in itertools.product((0, 1), repeat=6):
        d0, d1, d2, o01, o02, o12 = bits
        out.append([[d0, o01, o02], [o01, d1, o12], [o02, o12, d2]])
    return out


def diff(m1, m2):
    return [[x ^ y for x, y in zip(r1, r2)] for r1, r2 in zip(m1, m2)]


def search(candidates, chosen):
    if len(chosen) == 8:
        return chosen
    for i, m in enumerate(candidates):
        if all(det2(diff(m, c)) for c in chosen):
            found = search(candidates[i + 1:], chosen + [m])
            if found:
                return found
    return None


def pauli_string(x, z):
    chars = []
    for q in range(3):
        xb, zb = (x >> q) & 1, (z >> q) & 1
        chars.append("IXZY"[xb | (zb << 1)])
    return "".join(chars)


def main():
    mats = search(symmetric_matrices(), [])
    classes = [[(0, 1 << q) for q in range(3)]]
    for m in mats:
        gens = []
        for q in range(3):
            z = sum(m[r][q] << r for r in range(3))
            gens.append((1 << q, z))
        classes.append(gens)

    lines = ["# tspdqes 3-qubit MUB stabilizer classes, format version 1",
             "# one basis per line: 3 generators | 7 class members",
             "# character j of a Pauli string acts on qubit j"]
    for gens in classes:
        members = []
        for mask in range(1, 8):
            x = z = 0
            for j in range(3):
                if (mask >> j) & 1:
                    x ^= gens[j][0]
                    z ^= gens[j][1]
            members.append(pauli_string(x, z))
        lines.append(" ".join(pauli_string(*g) for g in gens) + " | " +
                     " ".join(members))
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
