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
    Formula evaluation and type partition tests
"""

import numpy as np
import pytest

from stablereg.models.graph import BipartiteGraph, Side
from stablereg.models.formula import And, EdgeAtom, EqualsAtom, Not, Or, TrueFormula, \
    formula_from_dict
from stablereg.models.parameters import ParameterSet
from stablereg.models.error import IndexOutOfRange, ParseError
from stablereg.engine.definability import evaluate, type_partition, type_of

from tests.common import half_graph, random_graph, two_blocks


def test_evaluate_atoms():
    graph = half_graph(3)
    # b2 is adjacent to every a, b0 only to a0
    assert evaluate(EdgeAtom(2), graph, Side.LEFT).members() == [0, 1, 2]
    assert evaluate(EdgeAtom(0), graph, Side.LEFT).members() == [0]
    assert evaluate(EdgeAtom(0), graph, Side.RIGHT).members() == [0, 1, 2]
    assert evaluate(EqualsAtom(1), graph, Side.RIGHT).members() == [1]
    assert evaluate(TrueFormula(), graph, Side.LEFT).members() == [0, 1, 2]


def test_evaluate_connectives():
    graph = half_graph(3)
    contradiction = And((EdgeAtom(0), Not(EdgeAtom(0))))
    assert evaluate(contradiction, graph, Side.LEFT).is_empty()
    assert evaluate(Or(()), graph, Side.LEFT).is_empty()
    assert evaluate(And(()), graph, Side.LEFT).members() == [0, 1, 2]
    either = Or((EdgeAtom(0), Not(EdgeAtom(1))))
    assert evaluate(either, graph, Side.LEFT).members() == [0, 2]


def test_evaluate_rejects_foreign_parameters():
    graph = half_graph(3)
    with pytest.raises(IndexOutOfRange):
        evaluate(EdgeAtom(3), graph, Side.LEFT)
    with pytest.raises(IndexOutOfRange):
        evaluate(Not(EqualsAtom(7)), graph, Side.RIGHT)


def test_formula_serialization():
    formula = Or((And((EdgeAtom(1), Not(EqualsAtom(0)))), TrueFormula()))
    assert formula_from_dict(formula.to_dict()) == formula
    for bad in [{"kind": "xor"}, {"kind": "edge"}, {"kind": "and"}, [], {"kind": "edge", "param": True}]:
        with pytest.raises(ParseError):
            formula_from_dict(bad)


def test_type_partition_without_parameters():
    graph = half_graph(4)
    classes = type_partition(graph, ParameterSet.empty(graph), Side.LEFT)
    assert len(classes) == 1
    assert classes[0].members.members() == [0, 1, 2, 3]
    assert classes[0].formula == TrueFormula()
    assert classes[0].trace == ()


def test_type_partition_over_one_right_parameter():
    graph = half_graph(3)
    classes = type_partition(graph, ParameterSet.of(graph, right=[0]), Side.LEFT)
    assert [item.members.members() for item in classes] == [[1, 2], [0]]
    assert [item.trace for item in classes] == [(False,), (True,)]
    for item in classes:
        assert evaluate(item.formula, graph, Side.LEFT) == item.members


def test_type_partition_with_equality_parameter():
    graph = half_graph(3)
    classes = type_partition(graph, ParameterSet.of(graph, left=[1]), Side.LEFT)
    assert [item.members.members() for item in classes] == [[0, 2], [1]]
    assert classes[1].formula == And((EqualsAtom(1),))


def test_type_partition_is_a_partition():
    graph = two_blocks(4)
    parameters = ParameterSet.of(graph, left=[0, 5], right=[1, 6])
    for side in (Side.LEFT, Side.RIGHT):
        classes = type_partition(graph, parameters, side)
        covered = 0
        for item in classes:
            assert not item.members.is_empty()
            assert covered & item.members.bits == 0
            covered |= item.members.bits
        assert covered == graph.full(side).bits


def test_type_of():
    graph = half_graph(3)
    parameters = ParameterSet.of(graph, right=[0])
    assert type_of(graph, parameters, 2, Side.LEFT).members.members() == [1, 2]
    assert type_of(graph, parameters, 0, Side.LEFT).trace == (True,)
    with pytest.raises(IndexOutOfRange):
        type_of(graph, parameters, 3, Side.LEFT)


def random_parameters(rng, graph):
    left = [index for index in range(graph.n_left) if rng.random() < 0.3]
    right = [index for index in range(graph.n_right) if rng.random() < 0.3]
    return left, right


def test_more_parameters_refine_classes():
    rng = np.random.default_rng(3)
    for _ in range(30):
        graph = random_graph(rng, int(rng.integers(2, 12)), int(rng.integers(2, 12)))
        left, right = random_parameters(rng, graph)
        larger = ParameterSet.of(graph, left, right)
        smaller = ParameterSet.of(
            graph,
            [index for index in left if rng.random() < 0.5],
            [index for index in right if rng.random() < 0.5],
        )
        for side in (Side.LEFT, Side.RIGHT):
            coarse = type_partition(graph, smaller, side)
            for item in type_partition(graph, larger, side):
                containing = [
                    other for other in coarse
                    if item.members.bits & ~other.members.bits == 0
                ]
                assert len(containing) == 1


def test_type_partition_is_deterministic():
    rng = np.random.default_rng(5)
    for _ in range(20):
        graph = random_graph(rng, int(rng.integers(1, 10)), int(rng.integers(1, 10)))
        copy = BipartiteGraph.from_rows(graph.n_left, graph.n_right, list(graph.rows))
        left, right = random_parameters(rng, graph)
        for side in (Side.LEFT, Side.RIGHT):
            first = type_partition(graph, ParameterSet.of(graph, left, right), side)
            second = type_partition(
                copy, ParameterSet.of(copy, list(reversed(left)), list(reversed(right))), side
            )
            assert first == second
            assert [item.trace for item in first] == sorted(item.trace for item in first)
