#!/usr/bin/env python3
# Copyright 2026 The qwalk Authors
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
"""Independent dense numpy model used to produce the frozen constants in
tests/unit. It assembles the full two-particle operator explicitly, so it
shares no code path with the blockwise C++ kernel.

Run: python3 tests/support/reference_model.py
"""
import itertools

import numpy as np


def graph_from_edges(n, edges):
    nb = [[] for _ in range(n)]
    for u, v in edges:
        nb[u].append(v)
        if u != v:
            nb[v].append(u)
    return [sorted(x) for x in nb]


def k8():
    return graph_from_edges(8, list(itertools.combinations(range(8), 2)))


def q3():
    return graph_from_edges(
        8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def arcs_of(nb):
    return [(v, w) for v in range(len(nb)) for w in nb[v]]


def single_operators(nb):
    arcs = arcs_of(nb)
    a = len(arcs)
    index = {arc: i for i, arc in enumerate(arcs)}
    coin = np.zeros((a, a))
    for i, (v, w) in enumerate(arcs):
        for j, (v2, w2) in enumerate(arcs):
            if v == v2:
                d = len(nb[v])
                coin[i, j] = 2.0 / d - (1.0 if i == j else 0.0)
    shift = np.zeros((a, a))
    for i, (v, w) in enumerate(arcs):
        shift[index[(w, v)], i] = 1.0
    return arcs, coin, shift


def two_particle_operator(nb, phi):
    arcs, coin, shift = single_operators(nb)
    c2 = np.kron(coin, coin).astype(complex)
    a = len(arcs)
    for i, (v1, _) in enumerate(arcs):
        for k, (v2, _) in enumerate(arcs):
            if v1 == v2:
                c2[i * a + k, :] *= np.exp(1j * phi)
    return np.kron(shift, shift) @ c2


def equal_state(nb):
    arcs = arcs_of(nb)
    n = len(nb)
    amp = np.array([1.0 / np.sqrt(len(nb[v])) for v, _ in arcs])
    return np.kron(amp, amp).astype(complex) / n


def entropy(psi, a):
    m = psi.reshape(a, a)
    rho = m @ m.conj().T
    ev = np.linalg.eigvalsh(rho)
    ev = ev[ev > 0]
    return float(-(ev * np.log2(ev)).sum())


def main():
    h = np.array([[2.0, 1 - 1j, 0.5j, 0.0],
                  [1 + 1j, -1.0, 0.25, 2j],
                  [-0.5j, 0.25, 0.5, 1 + 0.5j],
                  [0.0, -2j, 1 - 0.5j, 3.0]])
    print("eig4", repr(np.linalg.eigvalsh(h).tolist()))

    for name, nb, phi, steps in [("k8", k8(), 0.5 * np.pi, 1),
                                 ("k8", k8(), 0.3 * np.pi, 10),
                                 ("q3", q3(), 0.3 * np.pi, 10),
                                 ("q3", q3(), 0.99 * np.pi, 25)]:
        a = len(arcs_of(nb))
        u = two_particle_operator(nb, phi)
        psi = equal_state(nb)
        for _ in range(steps):
            psi = u @ psi
        print(name, phi / np.pi, steps, repr(entropy(psi, a)))


if __name__ == "__main__":
    main()
