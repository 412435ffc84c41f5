#!/usr/bin/python3
# coding=utf-8

#   Copyright 2024 stablereg authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.

"""
    Shared test instances
"""

from fractions import Fraction

from stablereg.generators import generate
from stablereg.tools.bits import list_to_bits
from stablereg.models.graph import BipartiteGraph, Side
from stablereg.models.measure import Measure


def half_graph(k):
    """ H_k """
    return generate({"family": "half_graph", "k": k})


def complete(n_left, n_right):
    """ K(n, m) """
    return generate({"family": "complete_bipartite", "n_left": n_left, "n_right": n_right})


def empty(n_left, n_right):
    """ Edgeless graph """
    return generate({"family": "empty_bipartite", "n_left": n_left, "n_right": n_right})


def two_blocks(size=8):
    """ V_a x W_a and V_b x W_b on consecutive labels, V_a = W_a = 0 .. size-1 """
    edges = [(a, b) for a in range(size) for b in range(size)]
    edges += [(a, b) for a in range(size, 2 * size) for b in range(size, 2 * size)]
    return BipartiteGraph.from_edges(2 * size, 2 * size, edges)


def weighted(side, values):
    """ Measure from rational literals """
    return Measure(side, tuple(Fraction(value) for value in values))


def merge_instance():
    """
        Three blocks V_t x W_t ({0,1}, {2,3}, {4,5} on both sides) plus a left
        vertex 6 of weight 0 adjacent to the second and third right blocks.
        Refinement isolates vertex 6 and merges it into the first left part.
    """
    edges = [(a, b) for start in (0, 2, 4) for a in (start, start + 1) for b in (start, start + 1)]
    edges += [(6, b) for b in (2, 3, 4, 5)]
    graph = BipartiteGraph.from_edges(7, 6, edges)
    mu = weighted(Side.LEFT, ["1/6"] * 6 + ["0"])
    nu = weighted(Side.RIGHT, ["1/6"] * 6)
    return graph, mu, nu


def random_graph(rng, n_left, n_right, density=0.5):
    """ Graph with independent edges from a numpy generator """
    rows = [
        list_to_bits(index for index in range(n_right) if rng.random() < density)
        for _ in range(n_left)
    ]
    return BipartiteGraph.from_rows(n_left, n_right, rows)


def random_weights(rng, size, zero_share=0.2):
    """ Random rational weights summing to 1, some of them zero, at least one positive """
    raw = [0 if rng.random() < zero_share else int(rng.integers(1, 6)) for _ in range(size)]
    if not any(raw):
        raw[int(rng.integers(0, size))] = 1
    total = sum(raw)
    return tuple(Fraction(item, total) for item in raw)


def random_subset(rng, size):
    """ Nonempty random index list """
    members = [index for index in range(size) if rng.random() < 0.6]
    return members or [int(rng.integers(0, size))]
