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
    Independent partition checks

    Nothing here calls into the regularity engine: pair verdicts are
    recomputed by unfolding the definitions over Fraction weights, and the
    delta checks work on subsets of every classified pair.
"""

from fractions import Fraction

import numpy as np

from stablereg import constants
from stablereg.tools import log
from stablereg.tools.bits import full_mask, iter_bits, list_to_bits
from stablereg.tools.dict import recursive_merge
from stablereg.tools.rational import sqrt_upper
from stablereg.models.graph import Side, VertexSet
from stablereg.models.partition import PairVerdict
from stablereg.models.report import PairCheck, PartFailure, VerificationReport, \
    DeltaViolation, DeltaRegularityReport
from stablereg.models.error import StableRegError, ShapeMismatch, PartTooLarge, \
    InvalidEpsilon, SideMismatch, EmptyInput, ZeroMeasurePart, ParseError

SAMPLE_ATTEMPTS = 64
SUBSET_CHUNK = 256


def _adjacent(graph, left, right):
    return graph.has_edge(left, right)


def _weight_sum(measure, members):
    return sum((measure.weights[vertex] for vertex in members), Fraction(0))


def oracle_goodness(graph, mu, nu, vi, wj, eps):
    """ Verdict for (vi, wj) computed straight from the clause definitions """
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidEpsilon(f"Epsilon must be positive, got {eps}")
    if mu.side is not Side.LEFT or vi.side is not Side.LEFT or \
            nu.side is not Side.RIGHT or wj.side is not Side.RIGHT:
        raise SideMismatch("Expected a left part under mu and a right part under nu")
    left = vi.members()
    right = wj.members()
    if not left or not right:
        raise EmptyInput("Pair parts must be nonempty")
    mu_total = _weight_sum(mu, left)
    nu_total = _weight_sum(nu, right)
    if mu_total == 0 or nu_total == 0:
        raise ZeroMeasurePart("Pair parts must have positive measure")
    outcomes = dict()
    for case, wanted in ((constants.CASE_DENSE, True), (constants.CASE_SPARSE, False)):
        exc_left = [
            a for a in left
            if _weight_sum(nu, [b for b in right if _adjacent(graph, a, b) != wanted])
            > eps * nu_total
        ]
        exc_right = [
            b for b in right
            if _weight_sum(mu, [a for a in left if _adjacent(graph, a, b) != wanted])
            > eps * mu_total
        ]
        left_mass = _weight_sum(mu, exc_left) / mu_total
        right_mass = _weight_sum(nu, exc_right) / nu_total
        outcomes[case] = (
            left_mass <= eps and right_mass <= eps,
            left_mass, right_mass,
            VertexSet.of(Side.LEFT, graph.n_left, exc_left),
            VertexSet.of(Side.RIGHT, graph.n_right, exc_right),
        )
    dense = outcomes[constants.CASE_DENSE]
    sparse = outcomes[constants.CASE_SPARSE]
    if dense[0]:
        return PairVerdict(constants.CASE_DENSE, *dense[1:], both_hold=sparse[0])
    if sparse[0]:
        return PairVerdict(constants.CASE_SPARSE, *sparse[1:], both_hold=False)
    return None


def check_shape(graph, mu, nu, partition):
    """ Raise ShapeMismatch unless partition, verdicts and measures fit graph """
    if mu.side is not Side.LEFT or nu.side is not Side.RIGHT:
        raise ShapeMismatch("Measures must be given as (left, right)")
    for measure in (mu, nu):
        if measure.size != graph.size(measure.side):
            raise ShapeMismatch(
                f"{measure.side.value} measure has {measure.size} weights, "
                f"graph side has {graph.size(measure.side)} vertices"
            )
    rows, cols = partition.shape
    if rows == 0 or cols == 0:
        raise ShapeMismatch("Partition has no parts on one side")
    for side in (Side.LEFT, Side.RIGHT):
        for index, part in enumerate(partition.parts(side)):
            if part.members.side is not side or part.members.size != graph.size(side):
                raise ShapeMismatch(
                    f"{side.value} part {index} does not fit a side of {graph.size(side)} vertices"
                )
    if len(partition.verdicts) != rows or any(len(row) != cols for row in partition.verdicts):
        raise ShapeMismatch(f"Verdict matrix is not {rows} x {cols}")


def _check_laws(graph, side, measure, parts, report):
    covered = 0
    for index, part in enumerate(parts):
        bits = part.members.bits
        if not bits:
            report.part_failures.append(PartFailure(side.value, index, "part is empty"))
            report.partition_laws = False
            continue
        if covered & bits:
            report.part_failures.append(
                PartFailure(side.value, index, "part overlaps an earlier part")
            )
            report.partition_laws = False
        if _weight_sum(measure, part.members.members()) == 0:
            report.part_failures.append(PartFailure(side.value, index, "part has zero measure"))
            report.partition_laws = False
        covered |= bits
    missing = full_mask(graph.size(side)) & ~covered
    if missing:
        report.part_failures.append(
            PartFailure(side.value, None, f"vertices {list(iter_bits(missing))} are in no part")
        )
        report.partition_laws = False


def _check_formulas(graph, side, parts, report):
    for index, part in enumerate(parts):
        try:
            part.formula.check(graph, side)
            bits = part.formula.bits(graph, side)
        except StableRegError as exc:
            report.part_failures.append(PartFailure(side.value, index, f"formula: {exc}"))
            report.formulas_faithful = False
            continue
        if bits != part.members.bits:
            report.part_failures.append(PartFailure(
                side.value, index,
                f"formula defines {list(iter_bits(bits))}, part is {part.members.members()}"
            ))
            report.formulas_faithful = False


def _check_pair(graph, mu, nu, partition, left_index, right_index):
    stored = partition.verdict(left_index, right_index)
    check = PairCheck(
        left_index, right_index, stored.case if stored is not None else None, None
    )
    try:
        verdict = oracle_goodness(
            graph, mu, nu,
            partition.parts_left[left_index].members,
            partition.parts_right[right_index].members,
            partition.epsilon,
        )
    except (EmptyInput, ZeroMeasurePart) as exc:
        check.reason = str(exc)
        return check
    if verdict is None:
        check.reason = "neither clause holds"
        return check
    check.case = verdict.case
    check.exc_left_mass = verdict.exc_left_mass
    check.exc_right_mass = verdict.exc_right_mass
    if stored is None:
        check.reason = "no stored verdict"
    elif stored.case != verdict.case:
        check.reason = f"stored case {stored.case}, recomputed {verdict.case}"
    elif (stored.exc_left_mass, stored.exc_right_mass) != \
            (verdict.exc_left_mass, verdict.exc_right_mass):
        check.reason = "stored exceptional masses differ"
    elif (stored.exc_left, stored.exc_right) != (verdict.exc_left, verdict.exc_right):
        check.reason = "stored exceptional sets differ"
    elif stored.both_hold != verdict.both_hold:
        check.reason = "stored both_hold flag differs"
    else:
        check.passed = True
    return check


def check_theorem(graph, mu, nu, partition):
    """ Recheck partition laws, formulas and every pair verdict """
    check_shape(graph, mu, nu, partition)
    report = VerificationReport()
    for side, measure in ((Side.LEFT, mu), (Side.RIGHT, nu)):
        _check_laws(graph, side, measure, partition.parts(side), report)
        _check_formulas(graph, side, partition.parts(side), report)
    rows, cols = partition.shape
    for left_index in range(rows):
        for right_index in range(cols):
            report.pairs.append(_check_pair(graph, mu, nu, partition, left_index, right_index))
    log.info(
        "Checked %d pairs: %d failed, %d part failures",
        len(report.pairs), len(report.failed_pairs), len(report.part_failures)
    )
    return report


def delta_for(epsilon, precision=constants.DEFAULT_SETTINGS["sqrt_precision"]):
    """ Rational upper bound of sqrt(2 epsilon) """
    return sqrt_upper(2 * Fraction(epsilon), precision)


def _subsets(size, dtype):
    """ Row s is the indicator vector of subset mask s """
    masks = np.arange(1 << size)[:, None]
    return ((masks >> np.arange(size)[None, :]) & 1).astype(dtype)


def _violations(bad, own_weights, other_weights, own_subsets, other_subsets, delta):
    """
        result[s, t]: inside own subset s, the vertices with bad mass above
        delta * mass(t) in other subset t weigh more than delta * mass(s)
    """
    num, den = delta.numerator, delta.denominator
    bad_mass = other_subsets @ (bad * other_weights[None, :]).T
    other_mass = other_subsets @ other_weights
    heavy = (bad_mass * den > num * other_mass[:, None]).astype(own_weights.dtype)
    heavy_weights = (heavy * own_weights[None, :]).T
    own_mass = own_subsets @ own_weights
    blocks = list()
    for start in range(0, own_subsets.shape[0], SUBSET_CHUNK):
        stop = start + SUBSET_CHUNK
        exc = own_subsets[start:stop] @ heavy_weights
        blocks.append((exc * den > num * own_mass[start:stop, None]).astype(bool))
    return np.concatenate(blocks, axis=0)


def _dtype_for(mu, nu, delta):
    bound = max(mu.denominator, nu.denominator) * max(delta.numerator, delta.denominator)
    return np.int64 if bound < 2 ** 62 else object


def _exhaustive_pair(graph, mu, nu, left, right, dense, delta, dtype):
    """ (qualified subset pairs, [(a_mask, b_mask, direction)]) for one pair """
    adjacency = np.array(
        [[int(graph.rows[a] >> b & 1) for b in right] for a in left], dtype=dtype
    )
    bad = 1 - adjacency if dense else adjacency
    left_weights = np.array([mu.numerators[a] for a in left], dtype=dtype)
    right_weights = np.array([nu.numerators[b] for b in right], dtype=dtype)
    left_subsets = _subsets(len(left), dtype)
    right_subsets = _subsets(len(right), dtype)
    num, den = delta.numerator, delta.denominator
    left_ok = ((left_subsets @ left_weights) * den >= num * sum(mu.numerators[a] for a in left))
    right_ok = ((right_subsets @ right_weights) * den >= num * sum(nu.numerators[b] for b in right))
    left_ok = np.asarray(left_ok, dtype=bool)
    right_ok = np.asarray(right_ok, dtype=bool)
    qualified = left_ok[:, None] & right_ok[None, :]
    found = list()
    by_left = _violations(bad, left_weights, right_weights, left_subsets, right_subsets, delta)
    by_right = _violations(
        bad.T, right_weights, left_weights, right_subsets, left_subsets, delta
    ).T
    for direction, violations in ((Side.LEFT.value, by_left), (Side.RIGHT.value, by_right)):
        for a_mask, b_mask in np.argwhere(violations & qualified):
            found.append((int(a_mask), int(b_mask), direction))
    return int(left_ok.sum()) * int(right_ok.sum()), found


def _mask_members(mask, members):
    return [vertex for index, vertex in enumerate(members) if mask >> index & 1]


def subset_violations(graph, mu, nu, a_bits, b_bits, dense, delta):
    """ Directions in which (A, B) breaks the delta version of its clause """
    result = list()
    a_total = mu.int_mass(a_bits)
    b_total = nu.int_mass(b_bits)
    for direction, own_bits, other_bits, adjacency, own, other, own_total, other_total in (
            (Side.LEFT.value, a_bits, b_bits, graph.rows, mu, nu, a_total, b_total),
            (Side.RIGHT.value, b_bits, a_bits, graph.cols, nu, mu, b_total, a_total),
    ):
        exceptional = 0
        for vertex in iter_bits(own_bits):
            hits = other_bits & adjacency[vertex]
            bad = other_bits ^ hits if dense else hits
            if other.int_mass(bad) * delta.denominator > delta.numerator * other_total:
                exceptional |= 1 << vertex
        if own.int_mass(exceptional) * delta.denominator > delta.numerator * own_total:
            result.append(direction)
    return result


def _draw_subset(rng, members, measure, delta):
    """ Random subset of members with mass >= delta * mass(members) """
    total = measure.int_mass(list_to_bits(members))
    for _ in range(SAMPLE_ATTEMPTS):
        rate = rng.uniform(float(delta), 1.0)
        chosen = rng.random(len(members)) < rate
        bits = list_to_bits(vertex for vertex, keep in zip(members, chosen) if keep)
        if measure.int_mass(bits) * delta.denominator >= delta.numerator * total:
            return bits
    return list_to_bits(members)


def check_delta_regularity(graph, mu, nu, partition, mode=None, budget=None, config=None):
    """ Check every classified pair against delta = sqrt(2 epsilon), rounded up """
    config = recursive_merge(constants.DEFAULT_SETTINGS, config or dict())
    mode = mode or config["delta_mode"]
    if mode not in constants.DELTA_MODES:
        raise ParseError(f"Unknown delta mode: {mode}")
    budget = config["delta_budget"] if budget is None else budget
    check_shape(graph, mu, nu, partition)
    delta = delta_for(partition.epsilon, config["sqrt_precision"])
    rows, cols = partition.shape
    pairs = [
        (i, j, partition.verdict(i, j).dense)
        for i in range(rows) for j in range(cols)
        if partition.verdict(i, j) is not None
    ]
    largest = max(
        [len(part.members) for part in partition.parts_left + partition.parts_right]
    )
    if mode == constants.DELTA_MODE_AUTO:
        mode = constants.DELTA_MODE_EXHAUSTIVE \
            if largest <= constants.EXHAUSTIVE_PART_LIMIT else constants.DELTA_MODE_SAMPLED
    if mode == constants.DELTA_MODE_EXHAUSTIVE and largest > constants.EXHAUSTIVE_PART_LIMIT:
        raise PartTooLarge(
            f"Exhaustive mode needs parts of at most {constants.EXHAUSTIVE_PART_LIMIT} "
            f"vertices, largest part has {largest}"
        )
    report = DeltaRegularityReport(delta=delta, mode=mode, pairs_checked=len(pairs))
    limit = config["max_violations"]

    def _record(i, j, a_members, b_members, direction):
        report.violation_count += 1
        if len(report.violations) < limit:
            report.violations.append(DeltaViolation(i, j, a_members, b_members, direction))

    with log.stage("delta regularity (%s) at delta %s", mode, delta):
        if mode == constants.DELTA_MODE_EXHAUSTIVE:
            dtype = _dtype_for(mu, nu, delta)
            for i, j, dense in pairs:
                left = partition.parts_left[i].members.members()
                right = partition.parts_right[j].members.members()
                tested, found = _exhaustive_pair(graph, mu, nu, left, right, dense, delta, dtype)
                report.subset_pairs_tested += tested
                for a_mask, b_mask, direction in found:
                    _record(
                        i, j, _mask_members(a_mask, left), _mask_members(b_mask, right), direction
                    )
        else:
            report.seed = config["delta_seed"]
            report.prng = constants.PRNG_NAME
            report.budget = budget
            rng = np.random.Generator(np.random.PCG64(report.seed))
            for draw in range(budget if pairs else 0):
                i, j, dense = pairs[draw % len(pairs)]
                left = partition.parts_left[i].members.members()
                right = partition.parts_right[j].members.members()
                a_bits = _draw_subset(rng, left, mu, delta)
                b_bits = _draw_subset(rng, right, nu, delta)
                report.subset_pairs_tested += 1
                for direction in subset_violations(graph, mu, nu, a_bits, b_bits, dense, delta):
                    _record(i, j, list(iter_bits(a_bits)), list(iter_bits(b_bits)), direction)
    log.info(
        "Delta check: %d pairs, %d subset pairs, %d violations",
        report.pairs_checked, report.subset_pairs_tested, report.violation_count
    )
    return report
