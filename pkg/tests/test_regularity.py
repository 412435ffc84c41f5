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
    Pair classification and refinement loop tests
"""

from fractions import Fraction

import pytest

from stablereg import constants
from stablereg.models.graph import BipartiteGraph, Side
from stablereg.models.measure import counting_measure
from stablereg.models.formula import Or
from stablereg.models.parameters import TypeClass
from stablereg.models.error import InvalidEpsilon, IterationCapExceeded, NoSplitter, \
    ParseError, SideMismatch, ZeroMeasurePart, EmptyInput
from stablereg.engine.definability import evaluate
from stablereg.engine.regularity import check_epsilon, classify_pair, find_witness, \
    merge_zero_mass, decompose
from stablereg.engine.verify import check_theorem

from tests.common import complete, empty, two_blocks, weighted, merge_instance


def counting(graph):
    return counting_measure(graph, Side.LEFT), counting_measure(graph, Side.RIGHT)


def whole_pair(graph, eps):
    mu, nu = counting(graph)
    return classify_pair(graph, mu, nu, graph.full(Side.LEFT), graph.full(Side.RIGHT), eps)


def test_check_epsilon():
    assert check_epsilon("1/10") == Fraction(1, 10)
    assert check_epsilon(Fraction(29, 100)) == Fraction(29, 100)
    assert check_epsilon(Fraction(3, 10), constants.EPS_POLICY_PERMISSIVE) == Fraction(3, 10)
    for eps, policy in [
            (Fraction(3, 10), constants.EPS_POLICY_STRICT),
            (Fraction(3, 5), constants.EPS_POLICY_PERMISSIVE),
            (Fraction(1, 2), constants.EPS_POLICY_PERMISSIVE),
            (0, constants.EPS_POLICY_STRICT),
            (Fraction(-1, 10), constants.EPS_POLICY_STRICT),
    ]:
        with pytest.raises(InvalidEpsilon):
            check_epsilon(eps, policy)
    with pytest.raises(ParseError):
        check_epsilon(Fraction(1, 10), "lenient")


def test_complete_and_empty_pairs():
    dense = whole_pair(complete(4, 5), Fraction(1, 10))
    assert dense.case == constants.CASE_DENSE
    assert dense.exc_left_mass == 0 and dense.exc_right_mass == 0
    assert dense.exc_left.is_empty() and dense.exc_right.is_empty()
    sparse = whole_pair(empty(4, 5), Fraction(1, 10))
    assert sparse.case == constants.CASE_SPARSE
    assert not sparse.both_hold


def test_one_missing_edge_is_dense():
    edges = [(a, b) for a in range(4) for b in range(4) if (a, b) != (0, 0)]
    verdict = whole_pair(BipartiteGraph.from_edges(4, 4, edges), Fraction(3, 10))
    assert verdict.case == constants.CASE_DENSE
    assert verdict.exc_left.is_empty() and verdict.exc_right.is_empty()


def test_one_missing_edge_at_small_epsilon():
    edges = [(a, b) for a in range(4) for b in range(4) if (a, b) != (0, 0)]
    verdict = whole_pair(BipartiteGraph.from_edges(4, 4, edges), Fraction(1, 5))
    # a0 and b0 each miss 1/4 > 1/5 of the other side, 1/4 > 1/5 of mass too
    assert verdict is None


def test_two_blocks_pair_is_unresolved():
    graph = two_blocks(8)
    assert whole_pair(graph, Fraction(1, 10)) is None
    mu, nu = counting(graph)
    side, vertex = find_witness(graph, mu, nu, graph.full(Side.LEFT), graph.full(Side.RIGHT))
    assert (side, vertex) == (Side.LEFT, 0)


def test_witness_from_right_side():
    # b0 ~ a0, a1 halves V, an a splits W at best 1 : 2
    edges = [(0, 0), (1, 0)] + [(a, b) for a in range(4) for b in (1, 2)]
    graph = BipartiteGraph.from_edges(4, 3, edges)
    mu, nu = counting(graph)
    assert find_witness(graph, mu, nu, graph.full(Side.LEFT), graph.full(Side.RIGHT)) == \
        (Side.RIGHT, 0)


def test_witness_compares_absolute_masses():
    # a0 halves W_j = {b0, b1} but each half weighs 1/10, b0 cuts V into 3/4 and 1/4
    graph = BipartiteGraph.from_edges(4, 10, [(0, 0), (1, 0), (2, 0)])
    mu, nu = counting(graph)
    vi = graph.full(Side.LEFT)
    wj = graph.vertex_set(Side.RIGHT, [0, 1])
    assert classify_pair(graph, mu, nu, vi, wj, Fraction(1, 10)) is None
    assert find_witness(graph, mu, nu, vi, wj) == (Side.RIGHT, 0)


def test_witness_tie_goes_to_smaller_gap():
    # a0 leaves pieces 1/4 and 3/4 of W, b0 halves V_i = {a0, a1} into 1/4 and 1/4
    graph = BipartiteGraph.from_edges(4, 4, [(0, 0)])
    mu, nu = counting(graph)
    vi = graph.vertex_set(Side.LEFT, [0, 1])
    assert find_witness(graph, mu, nu, vi, graph.full(Side.RIGHT)) == (Side.RIGHT, 0)


def test_no_splitter():
    graph = complete(3, 3)
    mu, nu = counting(graph)
    with pytest.raises(NoSplitter):
        find_witness(graph, mu, nu, graph.full(Side.LEFT), graph.full(Side.RIGHT))


def test_classify_rejects_bad_parts():
    graph = complete(3, 3)
    mu, nu = counting(graph)
    with pytest.raises(SideMismatch):
        classify_pair(graph, nu, mu, graph.full(Side.LEFT), graph.full(Side.RIGHT), "1/10")
    with pytest.raises(EmptyInput):
        classify_pair(graph, mu, nu, graph.empty(Side.LEFT), graph.full(Side.RIGHT), "1/10")
    zero = weighted(Side.LEFT, ["1", "0", "0"])
    with pytest.raises(ZeroMeasurePart):
        classify_pair(
            graph, zero, nu, graph.vertex_set(Side.LEFT, [1, 2]), graph.full(Side.RIGHT), "1/10"
        )
    with pytest.raises(InvalidEpsilon):
        classify_pair(graph, mu, nu, graph.full(Side.LEFT), graph.full(Side.RIGHT), 0)


def test_merge_zero_mass_classes():
    graph = complete(4, 1)
    measure = weighted(Side.LEFT, ["1/4", "3/4", "0", "0"])
    classes = [
        TypeClass(Side.LEFT, graph.vertex_set(Side.LEFT, [index]), (index,), None)
        for index in range(4)
    ]
    parts, merged = merge_zero_mass(classes, measure)
    assert merged == 2
    assert [part.members.members() for part in parts] == [[0], [1, 2, 3]]
    assert isinstance(parts[1].formula, Or)


def test_decompose_complete_graph():
    graph = complete(4, 4)
    mu, nu = counting(graph)
    partition = decompose(graph, mu, nu, Fraction(1, 10))
    assert partition.shape == (1, 1)
    assert partition.iterations == 0
    assert partition.verdict(0, 0).case == constants.CASE_DENSE
    assert partition.verdict(0, 0).exc_left_mass == 0
    assert len(partition.parameters) == 0


def test_decompose_two_blocks():
    graph = two_blocks(8)
    mu, nu = counting(graph)
    partition = decompose(graph, mu, nu, Fraction(1, 10))
    assert partition.shape == (2, 2)
    assert partition.iterations == 2
    assert partition.parameters.m_left.members() == [0]
    assert partition.parameters.m_right.members() == [8]
    assert [part.members.members() for part in partition.parts_left] == \
        [list(range(8)), list(range(8, 16))]
    assert [part.members.members() for part in partition.parts_right] == \
        [list(range(8, 16)), list(range(8))]
    cases = [[verdict.case for verdict in row] for row in partition.verdicts]
    assert cases == [
        [constants.CASE_SPARSE, constants.CASE_DENSE],
        [constants.CASE_DENSE, constants.CASE_SPARSE],
    ]
    for side in (Side.LEFT, Side.RIGHT):
        for part in partition.parts(side):
            assert evaluate(part.formula, graph, side) == part.members
    assert check_theorem(graph, mu, nu, partition).all_pass


def test_decompose_merges_zero_mass_class():
    graph, mu, nu = merge_instance()
    partition = decompose(graph, mu, nu, Fraction(1, 10))
    assert partition.iterations == 4
    assert partition.merged_classes == 1
    assert partition.parameters.m_left.members() == [0, 2]
    assert partition.parameters.m_right.members() == [2, 4]
    assert [part.members.members() for part in partition.parts_left] == [[0, 1, 6], [4, 5], [2, 3]]
    assert [part.members.members() for part in partition.parts_right] == [[4, 5], [2, 3], [0, 1]]
    assert isinstance(partition.parts_left[0].formula, Or)
    assert evaluate(partition.parts_left[0].formula, graph, Side.LEFT).members() == [0, 1, 6]
    assert all(verdict is not None for row in partition.verdicts for verdict in row)
    assert partition.verdict(0, 2).case == constants.CASE_DENSE
    assert partition.verdict(0, 2).exc_left.members() == [6]
    assert partition.verdict(0, 0).case == constants.CASE_SPARSE
    assert check_theorem(graph, mu, nu, partition).all_pass


def test_decompose_with_peeling():
    graph = complete(12, 12)
    mu = weighted(Side.LEFT, ["1/2"] + ["1/22"] * 11)
    nu = counting_measure(graph, Side.RIGHT)
    partition = decompose(graph, mu, nu, Fraction(1, 10), {"peel_singletons": True})
    assert partition.peeled.m_left.members() == [0]
    assert partition.peeled.m_right.is_empty()
    assert [part.members.members() for part in partition.parts_left] == [list(range(1, 12)), [0]]
    assert partition.shape == (2, 1)
    assert partition.iterations == 0
    assert check_theorem(graph, mu, nu, partition).all_pass
    plain = decompose(graph, mu, nu, Fraction(1, 10))
    assert plain.shape == (1, 1)
    assert plain.peeled.m_left.is_empty()


def test_decompose_iteration_cap():
    graph = two_blocks(4)
    mu, nu = counting(graph)
    for cap in (0, 1):
        with pytest.raises(IterationCapExceeded):
            decompose(graph, mu, nu, Fraction(1, 10), {"max_iterations": cap})
    assert decompose(graph, mu, nu, Fraction(1, 10), {"max_iterations": 2}).iterations == 2


def test_decompose_rejects_bad_input():
    graph = two_blocks(2)
    mu, nu = counting(graph)
    with pytest.raises(InvalidEpsilon):
        decompose(graph, mu, nu, Fraction(3, 5))
    with pytest.raises(SideMismatch):
        decompose(graph, nu, mu, Fraction(1, 10))


def test_decompose_permissive_epsilon():
    graph = two_blocks(3)
    mu, nu = counting(graph)
    partition = decompose(
        graph, mu, nu, Fraction(2, 5), {"eps_policy": constants.EPS_POLICY_PERMISSIVE}
    )
    assert partition.eps_policy == constants.EPS_POLICY_PERMISSIVE
    assert check_theorem(graph, mu, nu, partition).all_pass


def test_decompose_threads_do_not_change_result():
    graph, mu, nu = merge_instance()
    single = decompose(graph, mu, nu, Fraction(1, 10), {"threads": 1})
    threaded = decompose(graph, mu, nu, Fraction(1, 10), {"threads": 4})
    assert single == threaded
