#!/usr/bin/python3
# coding=utf-8
# pylint: disable=I0011,R0913,R0914

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
    Regularity decomposition

    Parts are the complete type classes of V over the right witnesses and of
    W over the left witnesses, with zero-mass classes folded into a sibling.
    While some pair of parts is neither dense nor sparse, a vertex of that
    pair splitting the other part into two pieces of positive mass is added
    to the witnesses. Every such witness splits one positive-mass class, so
    the loop ends after at most n_left + n_right - 2 rounds.
"""

from fractions import Fraction

from stablereg import constants
from stablereg.tools import log
from stablereg.tools.bits import iter_bits
from stablereg.tools.dict import recursive_merge
from stablereg.tools.parallel import map_ordered
from stablereg.models.graph import Side
from stablereg.models.formula import Or
from stablereg.models.parameters import ParameterSet
from stablereg.models.partition import PairVerdict, Part, RegularityPartition
from stablereg.models.error import InvalidEpsilon, IterationCapExceeded, NoSplitter, \
    EmptyInput, SideMismatch, ZeroMeasurePart, ParseError
from stablereg.engine.definability import type_partition


def check_epsilon(eps, eps_policy=constants.EPS_POLICY_STRICT):
    """ Return eps as Fraction, raise InvalidEpsilon outside the policy range """
    if eps_policy not in constants.EPS_POLICIES:
        raise ParseError(f"Unknown epsilon policy: {eps_policy}")
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidEpsilon(f"Epsilon must be positive, got {eps}")
    if eps_policy == constants.EPS_POLICY_STRICT and eps > constants.STRICT_EPSILON_BOUND:
        raise InvalidEpsilon(
            f"Epsilon {eps} exceeds {constants.STRICT_EPSILON_BOUND} under strict policy"
        )
    if eps >= constants.PERMISSIVE_EPSILON_BOUND:
        raise InvalidEpsilon(f"Epsilon must be below {constants.PERMISSIVE_EPSILON_BOUND}")
    return eps


def _check_pair(mu, nu, vi, wj):
    if mu.side is not Side.LEFT or vi.side is not Side.LEFT:
        raise SideMismatch("Left part and mu must live on the left side")
    if nu.side is not Side.RIGHT or wj.side is not Side.RIGHT:
        raise SideMismatch("Right part and nu must live on the right side")
    if vi.is_empty() or wj.is_empty():
        raise EmptyInput("Pair parts must be nonempty")
    mu_total = mu.int_mass(vi.bits)
    nu_total = nu.int_mass(wj.bits)
    if mu_total == 0 or nu_total == 0:
        raise ZeroMeasurePart("Pair parts must have positive measure")
    return mu_total, nu_total


def _exceptional(adjacency, own_bits, other_bits, other_measure, other_total, eps, edges):
    """ Vertices of own_bits whose bad share of other_bits exceeds eps """
    result = 0
    for vertex in iter_bits(own_bits):
        hits = other_bits & adjacency[vertex]
        bad = other_bits ^ hits if edges else hits
        if other_measure.int_mass(bad) * eps.denominator > eps.numerator * other_total:
            result |= 1 << vertex
    return result


def _clause(graph, mu, nu, vi, wj, eps, totals, edges):
    mu_total, nu_total = totals
    exc_left = _exceptional(graph.rows, vi.bits, wj.bits, nu, nu_total, eps, edges)
    exc_right = _exceptional(graph.cols, wj.bits, vi.bits, mu, mu_total, eps, edges)
    left_mass = mu.int_mass(exc_left)
    right_mass = nu.int_mass(exc_right)
    holds = left_mass * eps.denominator <= eps.numerator * mu_total and \
        right_mass * eps.denominator <= eps.numerator * nu_total
    return holds, (
        Fraction(left_mass, mu_total), Fraction(right_mass, nu_total),
        vi.with_bits(exc_left), wj.with_bits(exc_right),
    )


def classify_pair(graph, mu, nu, vi, wj, eps):
    """ Dense verdict if clause (i) holds, else sparse if (ii) holds, else None """
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidEpsilon(f"Epsilon must be positive, got {eps}")
    totals = _check_pair(mu, nu, vi, wj)
    dense, dense_data = _clause(graph, mu, nu, vi, wj, eps, totals, edges=True)
    sparse, sparse_data = _clause(graph, mu, nu, vi, wj, eps, totals, edges=False)
    if dense:
        return PairVerdict(constants.CASE_DENSE, *dense_data, both_hold=sparse)
    if sparse:
        return PairVerdict(constants.CASE_SPARSE, *sparse_data, both_hold=False)
    return None


def _best_split(adjacency, own_bits, other_bits, other_measure, other_total):
    """ (low mass, gap, vertex) of the most balanced positive-mass split, or None """
    best = None
    for vertex in iter_bits(own_bits):
        hit = other_bits & adjacency[vertex]
        if not hit or hit == other_bits:
            continue
        hit_mass = other_measure.int_mass(hit)
        low = min(hit_mass, other_total - hit_mass)
        if low == 0:
            continue
        gap = other_total - 2 * low
        if best is None or low > best[0] or (low == best[0] and gap < best[1]):
            best = (low, gap, vertex)
    if best is None:
        return None
    low, gap, vertex = best
    return Fraction(low, other_measure.denominator), Fraction(gap, other_measure.denominator), vertex


def find_witness(graph, mu, nu, vi, wj):
    """
        (side, vertex) whose neighborhood splits the opposite part most evenly

        Candidates are scored by the absolute mass of the lighter piece. Ties go
        to the smaller gap between the pieces, then to the left side, then to
        the lowest index.
    """
    mu_total, nu_total = _check_pair(mu, nu, vi, wj)
    left = _best_split(graph.rows, vi.bits, wj.bits, nu, nu_total)
    right = _best_split(graph.cols, wj.bits, vi.bits, mu, mu_total)
    if left is None and right is None:
        raise NoSplitter("No vertex of the pair splits the other part")
    if right is None or (left is not None and (left[0], -left[1]) >= (right[0], -right[1])):
        log.debug("Witness a%d splits right part, lighter piece %s", left[2], left[0])
        return Side.LEFT, left[2]
    log.debug("Witness b%d splits left part, lighter piece %s", right[2], right[0])
    return Side.RIGHT, right[2]


def merge_zero_mass(classes, measure):
    """ Parts from type classes, zero-mass classes joined to the heaviest one """
    masses = [measure.int_mass(item.members.bits) for item in classes]
    positive = [index for index, mass in enumerate(masses) if mass > 0]
    zero = [index for index, mass in enumerate(masses) if mass == 0]
    if not zero:
        return [Part(item.members, item.formula) for item in classes], 0
    target = max(positive, key=lambda index: (masses[index], -index))
    parts = list()
    for index in positive:
        item = classes[index]
        if index != target:
            parts.append(Part(item.members, item.formula))
            continue
        members = item.members
        formulas = [item.formula]
        for other in zero:
            members = members.union(classes[other].members)
            formulas.append(classes[other].formula)
        parts.append(Part(members, Or(tuple(formulas))))
    log.debug("Merged %d zero-mass classes on %s side", len(zero), classes[0].side.value)
    return parts, len(zero)


def peeled_parameters(graph, mu, nu, eps):
    """ Vertices whose own weight exceeds eps, as equality parameters """
    left = [index for index, weight in enumerate(mu.weights) if weight > eps]
    right = [index for index, weight in enumerate(nu.weights) if weight > eps]
    if left or right:
        log.info("Peeling %d left and %d right heavy vertices", len(left), len(right))
    return ParameterSet.of(graph, left, right)


def decompose(graph, mu, nu, eps, config=None):
    """
        Stable regularity partition of graph under mu, nu

        config keys (see constants.DEFAULT_SETTINGS): max_iterations, eps_policy,
        peel_singletons, threads.
    """
    config = recursive_merge(constants.DEFAULT_SETTINGS, config or dict())
    eps = check_epsilon(eps, config["eps_policy"])
    if mu.side is not Side.LEFT or nu.side is not Side.RIGHT:
        raise SideMismatch("mu must live on the left side and nu on the right side")
    mu.check_graph(graph)
    nu.check_graph(graph)
    bound = graph.n_left + graph.n_right
    cap = config["max_iterations"] if config["max_iterations"] is not None else bound
    witnesses = ParameterSet.empty(graph)
    peeled = ParameterSet.empty(graph)
    if config["peel_singletons"]:
        peeled = peeled_parameters(graph, mu, nu, eps)
    cache = dict()
    iterations = 0
    previous_parts = 0
    while True:
        with log.stage("refinement round %d", iterations):
            left_classes = type_partition(
                graph, ParameterSet(peeled.m_left, witnesses.m_right), Side.LEFT
            )
            right_classes = type_partition(
                graph, ParameterSet(witnesses.m_left, peeled.m_right), Side.RIGHT
            )
            parts_left, merged_left = merge_zero_mass(left_classes, mu)
            parts_right, merged_right = merge_zero_mass(right_classes, nu)
            total_parts = len(parts_left) + len(parts_right)
            if total_parts <= previous_parts:
                raise RuntimeError("Refinement round did not increase the number of parts")
            previous_parts = total_parts
            verdicts = _classify_all(graph, mu, nu, eps, parts_left, parts_right, cache, config)
        unresolved = [
            (i, j)
            for i in range(len(parts_left)) for j in range(len(parts_right))
            if verdicts[i][j] is None
        ]
        log.debug(
            "Round %d: %d x %d parts, %d unresolved pairs",
            iterations, len(parts_left), len(parts_right), len(unresolved)
        )
        if not unresolved:
            break
        if iterations >= cap:
            raise IterationCapExceeded(
                f"{len(unresolved)} pairs unresolved after {iterations} rounds (cap {cap})"
            )
        i, j = max(
            unresolved,
            key=lambda pair: (
                mu.int_mass(parts_left[pair[0]].members.bits) *
                nu.int_mass(parts_right[pair[1]].members.bits),
                -pair[0], -pair[1],
            )
        )
        side, vertex = find_witness(
            graph, mu, nu, parts_left[i].members, parts_right[j].members
        )
        witnesses = witnesses.with_vertex(side, vertex)
        iterations += 1
        if iterations >= bound:
            raise RuntimeError(f"Refinement exceeded the structural bound of {bound} rounds")
    if eps <= constants.STRICT_EPSILON_BOUND and \
            any(verdict.both_hold for row in verdicts for verdict in row):
        raise RuntimeError("Both clauses hold for a pair below the exclusivity threshold")
    log.info(
        "Partition: %d x %d parts after %d rounds, %d witnesses",
        len(parts_left), len(parts_right), iterations, len(witnesses)
    )
    return RegularityPartition(
        epsilon=eps,
        parts_left=tuple(parts_left),
        parts_right=tuple(parts_right),
        parameters=witnesses,
        verdicts=tuple(tuple(row) for row in verdicts),
        iterations=iterations,
        peeled=peeled,
        merged_classes=merged_left + merged_right,
        eps_policy=config["eps_policy"],
    )


def _classify_all(graph, mu, nu, eps, parts_left, parts_right, cache, config):
    """ Verdict matrix, reusing verdicts of pairs unchanged since the last round """
    pairs = [(i, j) for i in range(len(parts_left)) for j in range(len(parts_right))]
    keys = {
        (i, j): (parts_left[i].members.bits, parts_right[j].members.bits) for i, j in pairs
    }
    missing = [pair for pair in pairs if keys[pair] not in cache]

    def _classify(pair):
        return classify_pair(
            graph, mu, nu, parts_left[pair[0]].members, parts_right[pair[1]].members, eps
        )

    threads = config["threads"]
    for pair, verdict in zip(missing, map_ordered(_classify, missing, threads)):
        cache[keys[pair]] = verdict
    return [[cache[keys[(i, j)]] for j in range(len(parts_right))] for i in range(len(parts_left))]
