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
    Graph, vertex set and measure tests
"""

from fractions import Fraction

import pytest

from stablereg.tools.bits import bits_to_list, list_to_bits, lowest_index, popcount, full_mask
from stablereg.tools.rational import parse_rational, format_rational, sqrt_upper
from stablereg.models.graph import BipartiteGraph, Side, VertexSet
from stablereg.models.measure import counting_measure, measure_of, pair_mass
from stablereg.models.error import EmptySide, IndexOutOfRange, InvalidMeasure, \
    ParseError, SideMismatch

from tests.common import half_graph, complete, empty, weighted


def test_bits_helpers():
    assert list_to_bits([0, 3, 5]) == 0b101001
    assert bits_to_list(0b101001) == [0, 3, 5]
    assert popcount(0b101001) == 3
    assert lowest_index(0b101000) == 3
    assert full_mask(4) == 0b1111


def test_from_edges_collapses_duplicates():
    graph = BipartiteGraph.from_edges(2, 3, [(0, 1), (0, 1), (1, 2)])
    assert graph.edge_count() == 2
    assert graph.rows == (0b010, 0b100)
    assert graph.cols == (0b00, 0b01, 0b10)
    assert graph.is_consistent()


def test_singleton_graph_without_edges():
    graph = BipartiteGraph.from_edges(1, 1, [])
    assert not graph.has_edge(0, 0)
    assert graph.edges() == []


def test_bad_graphs():
    with pytest.raises(EmptySide):
        BipartiteGraph.from_edges(0, 3, [])
    with pytest.raises(IndexOutOfRange):
        BipartiteGraph.from_edges(2, 2, [(2, 0)])
    with pytest.raises(IndexOutOfRange):
        BipartiteGraph.from_rows(1, 2, [0b100])
    with pytest.raises(IndexOutOfRange):
        half_graph(3).has_edge(0, 3)


def test_half_graph_rows():
    graph = half_graph(3)
    assert graph.rows == (0b111, 0b110, 0b100)
    assert graph.neighborhood(Side.RIGHT, 1).members() == [0, 1]
    assert graph.complement().edge_count() == 3


def test_vertex_set_algebra():
    first = VertexSet.of(Side.LEFT, 5, [0, 1, 2])
    second = VertexSet.of(Side.LEFT, 5, [2, 3])
    assert first.union(second).members() == [0, 1, 2, 3]
    assert first.intersection(second).members() == [2]
    assert first.difference(second).members() == [0, 1]
    assert first.complement().members() == [3, 4]
    assert first.intersection(second).is_subset(first)
    assert first.difference(second).is_disjoint(second)
    assert 2 in first and 4 not in first
    assert len(first) == 3
    with pytest.raises(SideMismatch):
        first.union(VertexSet.of(Side.RIGHT, 5, [0]))
    with pytest.raises(IndexOutOfRange):
        VertexSet.of(Side.LEFT, 5, [5])


def test_counting_measure():
    graph = complete(4, 7)
    mu = counting_measure(graph, Side.LEFT)
    nu = counting_measure(graph, Side.RIGHT)
    assert mu.weights == (Fraction(1, 4),) * 4
    assert nu.uniform
    assert measure_of(nu, graph.vertex_set(Side.RIGHT, [0, 2, 4])) == Fraction(3, 7)
    assert measure_of(mu, graph.full(Side.LEFT)) == 1
    assert measure_of(mu, graph.empty(Side.LEFT)) == 0
    with pytest.raises(SideMismatch):
        measure_of(mu, graph.full(Side.RIGHT))


def test_weighted_measure_mass():
    measure = weighted(Side.LEFT, ["1/2", "1/3", "1/6", "0"])
    assert not measure.uniform
    assert measure.denominator == 6
    assert measure.int_mass(0b0110) == 3
    assert measure.zero_bits() == 0b1000


@pytest.mark.parametrize("values", [
    ["1/2", "1/3"],
    ["3/2", "-1/2"],
    [],
])
def test_invalid_measures(values):
    with pytest.raises(InvalidMeasure):
        weighted(Side.LEFT, values)


def test_measure_count_mismatch():
    measure = weighted(Side.LEFT, ["1/2", "1/2"])
    with pytest.raises(InvalidMeasure):
        measure.check_graph(complete(3, 3))


def test_pair_mass():
    graph = half_graph(3)
    mu = counting_measure(graph, Side.LEFT)
    nu = counting_measure(graph, Side.RIGHT)
    left = graph.full(Side.LEFT)
    right = graph.full(Side.RIGHT)
    assert pair_mass(mu, nu, left, right, graph) == Fraction(2, 3)
    assert pair_mass(mu, nu, left, right, graph, edges=False) == Fraction(1, 3)
    full = complete(2, 2)
    assert pair_mass(
        counting_measure(full, Side.LEFT), counting_measure(full, Side.RIGHT),
        full.full(Side.LEFT), full.full(Side.RIGHT), full
    ) == 1
    none = empty(2, 2)
    assert pair_mass(
        counting_measure(none, Side.LEFT), counting_measure(none, Side.RIGHT),
        none.full(Side.LEFT), none.full(Side.RIGHT), none
    ) == 0
    with pytest.raises(SideMismatch):
        pair_mass(nu, mu, right, left, graph)


def test_rationals():
    assert parse_rational("3/10") == Fraction(3, 10)
    assert parse_rational(" 2 ") == 2
    assert parse_rational(1) == 1
    assert format_rational(Fraction(0)) == "0/1"
    assert format_rational(Fraction(6, 4)) == "3/2"
    for bad in ["1/0", "0.5", "a/b", None, True]:
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_sqrt_upper():
    assert sqrt_upper(Fraction(1, 4), 10 ** 9) == Fraction(1, 2)
    assert sqrt_upper(0, 10) == 0
    root = sqrt_upper(Fraction(1, 5), 10 ** 9)
    assert root * root >= Fraction(1, 5)
    assert (root - Fraction(1, 10 ** 9)) ** 2 < Fraction(1, 5)
