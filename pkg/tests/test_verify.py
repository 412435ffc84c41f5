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
    Verifier tests
"""

import dataclasses
from fractions import Fraction

import numpy as np
import pytest

from stablereg import constants
from stablereg.tools.bits import list_to_bits
from stablereg.models.graph import BipartiteGraph, Side
from stablereg.models.measure import Measure, counting_measure
from stablereg.models.formula import TrueFormula
from stablereg.models.parameters import ParameterSet
from stablereg.models.partition import PairVerdict, Part, RegularityPartition
from stablereg.models.error import PartTooLarge, ShapeMismatch
from stablereg.engine.regularity import classify_pair, decompose
from stablereg.engine.verify import oracle_goodness, check_theorem, check_delta_regularity, \
    delta_for, subset_violations

from tests.common import complete, two_blocks, merge_instance, random_graph, random_weights, \
    random_subset

EPSILONS = [Fraction(1, 10), Fraction(1, 5), Fraction(1, 4), Fraction(29, 100), Fraction(1, 3)]


def counting(graph):
    return counting_measure(graph, Side.LEFT), counting_measure(graph, Side.RIGHT)


def counting_partition(graph, eps=Fraction(1, 10)):
    mu, nu = counting(graph)
    return decompose(graph, mu, nu, eps), mu, nu


def cross_check(rng, rounds):
    checked = 0
    for _ in range(rounds):
        n_left = int(rng.integers(1, 8))
        n_right = int(rng.integers(1, 8))
        graph = random_graph(rng, n_left, n_right, density=float(rng.uniform(0.1, 0.9)))
        mu = Measure(Side.LEFT, random_weights(rng, n_left))
        nu = Measure(Side.RIGHT, random_weights(rng, n_right))
        vi = graph.vertex_set(Side.LEFT, random_subset(rng, n_left))
        wj = graph.vertex_set(Side.RIGHT, random_subset(rng, n_right))
        if mu.mass(vi) == 0 or nu.mass(wj) == 0:
            continue
        eps = EPSILONS[int(rng.integers(0, len(EPSILONS)))]
        assert classify_pair(graph, mu, nu, vi, wj, eps) == \
            oracle_goodness(graph, mu, nu, vi, wj, eps)
        checked += 1
    return checked


def test_oracle_matches_classifier():
    assert cross_check(np.random.default_rng(2024), 400) > 100


def test_oracle_on_simple_pairs():
    graph = complete(3, 3)
    mu, nu = counting(graph)
    verdict = oracle_goodness(
        graph, mu, nu, graph.full(Side.LEFT), graph.full(Side.RIGHT), Fraction(1, 10)
    )
    assert verdict.case == constants.CASE_DENSE
    blocks = two_blocks(3)
    mu, nu = counting(blocks)
    assert oracle_goodness(
        blocks, mu, nu, blocks.full(Side.LEFT), blocks.full(Side.RIGHT), Fraction(1, 10)
    ) is None


def test_check_theorem_accepts_decompose_output():
    for graph in (complete(4, 4), two_blocks(5)):
        partition, mu, nu = counting_partition(graph)
        report = check_theorem(graph, mu, nu, partition)
        assert report.all_pass
        assert len(report.pairs) == partition.shape[0] * partition.shape[1]
    graph, mu, nu = merge_instance()
    assert check_theorem(graph, mu, nu, decompose(graph, mu, nu, Fraction(1, 10))).all_pass


def test_check_theorem_catches_moved_vertex():
    graph = two_blocks(4)
    partition, mu, nu = counting_partition(graph)
    first, second = partition.parts_left
    moved = dataclasses.replace(partition, parts_left=(
        Part(first.members.difference(graph.vertex_set(Side.LEFT, [0])), first.formula),
        Part(second.members.union(graph.vertex_set(Side.LEFT, [0])), second.formula),
    ))
    report = check_theorem(graph, mu, nu, moved)
    assert not report.all_pass
    assert report.partition_laws
    assert not report.formulas_faithful
    assert {(item.side, item.part) for item in report.part_failures} == {("left", 0), ("left", 1)}


def test_check_theorem_catches_flipped_case():
    graph = complete(4, 4)
    partition, mu, nu = counting_partition(graph)
    verdict = dataclasses.replace(partition.verdict(0, 0), case=constants.CASE_SPARSE)
    report = check_theorem(graph, mu, nu, dataclasses.replace(partition, verdicts=((verdict,),)))
    assert not report.all_pass
    assert report.failed_pairs[0].reason == "stored case sparse, recomputed dense"
    assert report.to_dict()["pairs"][0]["stored_case"] == constants.CASE_SPARSE


def test_check_theorem_catches_broken_partition_laws():
    graph = two_blocks(4)
    partition, mu, nu = counting_partition(graph)
    first, _ = partition.parts_left
    report = check_theorem(
        graph, mu, nu, dataclasses.replace(partition, parts_left=(first, first))
    )
    assert not report.partition_laws
    reasons = [item.reason for item in report.part_failures]
    assert "part overlaps an earlier part" in reasons
    assert any(item.part is None for item in report.part_failures)


def test_check_shape():
    partition, _, _ = counting_partition(complete(4, 4))
    bigger = complete(5, 4)
    mu, nu = counting(bigger)
    with pytest.raises(ShapeMismatch):
        check_theorem(bigger, mu, nu, partition)
    small_mu, _ = counting(complete(4, 4))
    with pytest.raises(ShapeMismatch):
        check_theorem(bigger, small_mu, nu, partition)


def test_delta_for():
    assert delta_for(Fraction(1, 8)) == Fraction(1, 2)
    delta = delta_for(Fraction(1, 10))
    assert delta * delta >= Fraction(1, 5)
    assert (delta - Fraction(1, 10 ** 9)) ** 2 < Fraction(1, 5)


def test_exhaustive_delta_check_passes():
    for graph in (complete(6, 6), two_blocks(8)):
        partition, mu, nu = counting_partition(graph)
        report = check_delta_regularity(graph, mu, nu, partition)
        assert report.mode == constants.DELTA_MODE_EXHAUSTIVE
        assert report.passed
        assert report.pairs_checked == partition.shape[0] * partition.shape[1]
        assert report.subset_pairs_tested > 0
        assert "seed" not in report.to_dict()
    graph, mu, nu = merge_instance()
    partition = decompose(graph, mu, nu, Fraction(1, 10))
    assert check_delta_regularity(graph, mu, nu, partition, mode="exhaustive").passed


def test_exhaustive_refuses_large_parts():
    graph = complete(20, 20)
    partition, mu, nu = counting_partition(graph)
    with pytest.raises(PartTooLarge):
        check_delta_regularity(graph, mu, nu, partition, mode=constants.DELTA_MODE_EXHAUSTIVE)


def test_sampled_delta_check():
    graph = complete(20, 20)
    partition, mu, nu = counting_partition(graph)
    report = check_delta_regularity(graph, mu, nu, partition, budget=200)
    assert report.mode == constants.DELTA_MODE_SAMPLED
    assert report.passed
    assert report.subset_pairs_tested == 200
    assert (report.seed, report.prng, report.budget) == (0, "PCG64", 200)
    again = check_delta_regularity(graph, mu, nu, partition, budget=200)
    assert again.to_dict() == report.to_dict()


def planted_partition():
    """ Half of V sees nothing, half sees everything, stored as one dense pair """
    graph = BipartiteGraph.from_edges(6, 6, [(a, b) for a in range(3, 6) for b in range(6)])
    verdict = PairVerdict(
        constants.CASE_DENSE, Fraction(0), Fraction(0),
        graph.empty(Side.LEFT), graph.empty(Side.RIGHT),
    )
    partition = RegularityPartition(
        epsilon=Fraction(1, 8),
        parts_left=(Part(graph.full(Side.LEFT), TrueFormula()),),
        parts_right=(Part(graph.full(Side.RIGHT), TrueFormula()),),
        parameters=ParameterSet.empty(graph),
        verdicts=((verdict,),),
        iterations=0,
    )
    return graph, partition


@pytest.mark.parametrize("mode", [constants.DELTA_MODE_EXHAUSTIVE, constants.DELTA_MODE_SAMPLED])
def test_delta_check_reports_planted_violations(mode):
    graph, partition = planted_partition()
    mu, nu = counting(graph)
    report = check_delta_regularity(graph, mu, nu, partition, mode=mode, budget=500)
    assert not report.passed
    assert report.violation_count >= len(report.violations) > 0
    delta = delta_for(partition.epsilon)
    for violation in report.violations:
        directions = subset_violations(
            graph, mu, nu, list_to_bits(violation.a), list_to_bits(violation.b), True, delta
        )
        assert violation.direction in directions


def test_delta_violation_list_is_capped():
    graph, partition = planted_partition()
    mu, nu = counting(graph)
    report = check_delta_regularity(
        graph, mu, nu, partition, mode=constants.DELTA_MODE_EXHAUSTIVE,
        config={"max_violations": 1}
    )
    assert len(report.violations) == 1
    assert report.violation_count > 1


def test_subset_violations_on_planted_pair():
    graph, _ = planted_partition()
    mu, nu = counting(graph)
    delta = Fraction(1, 2)
    assert subset_violations(graph, mu, nu, 0b000111, 0b111111, True, delta) == ["left", "right"]
    assert subset_violations(graph, mu, nu, 0b111000, 0b111111, True, delta) == []
    assert subset_violations(graph, mu, nu, 0b000111, 0b111111, False, delta) == []
