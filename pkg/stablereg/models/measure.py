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
    Vertex measures

    A Measure is a probability distribution on one side of a graph with exact
    rational weights. Internally the weights are also kept as integer
    numerators over a common denominator, so that masses of bitsets can be
    compared without building Fractions in hot loops.
"""

import math
from fractions import Fraction
from dataclasses import dataclass, field

from stablereg.tools.bits import iter_bits, popcount
from stablereg.models.graph import Side
from stablereg.models.error import InvalidMeasure, SideMismatch


@dataclass(frozen=True)
class Measure:
    """ Nonnegative rational vertex weights summing to exactly 1 """

    side: Side
    weights: tuple
    denominator: int = field(init=False, repr=False, compare=False)
    numerators: tuple = field(init=False, repr=False, compare=False)
    uniform: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        weights = tuple(Fraction(item) for item in self.weights)
        if not weights:
            raise InvalidMeasure("Measure needs at least one weight")
        if any(item < 0 for item in weights):
            raise InvalidMeasure("Measure weights must be nonnegative")
        if sum(weights) != 1:
            raise InvalidMeasure(f"Measure weights sum to {sum(weights)}, expected 1")
        denominator = math.lcm(*[item.denominator for item in weights])
        numerators = tuple(item.numerator * (denominator // item.denominator) for item in weights)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "denominator", denominator)
        object.__setattr__(self, "numerators", numerators)
        object.__setattr__(self, "uniform", len(set(numerators)) == 1)

    @property
    def size(self):
        """ Number of weighted vertices """
        return len(self.weights)

    def check_graph(self, graph):
        """ Raise InvalidMeasure unless weight count matches the side """
        if self.size != graph.size(self.side):
            raise InvalidMeasure(
                f"Measure on {self.side.value} side has {self.size} weights, "
                f"graph side has {graph.size(self.side)} vertices"
            )

    def int_mass(self, bits):
        """ Mass of a bitset as numerator over self.denominator """
        if self.uniform:
            return popcount(bits) * self.numerators[0]
        numerators = self.numerators
        return sum(numerators[index] for index in iter_bits(bits))

    def mass(self, vertex_set):
        """ Measure of a VertexSet, exact """
        if vertex_set.side is not self.side:
            raise SideMismatch(
                f"Measure on {self.side.value} side applied to {vertex_set.side.value} set"
            )
        return Fraction(self.int_mass(vertex_set.bits), self.denominator)

    def zero_bits(self):
        """ Bitset of zero-weight vertices """
        bits = 0
        for index, numerator in enumerate(self.numerators):
            if numerator == 0:
                bits |= 1 << index
        return bits


def counting_measure(graph, side):
    """ Uniform measure 1/n on a side """
    size = graph.size(side)
    return Measure(side, tuple(Fraction(1, size) for _ in range(size)))


def measure_of(measure, vertex_set):
    """ Sum of weights of members """
    return measure.mass(vertex_set)


def pair_mass(mu, nu, left_set, right_set, graph, edges=True):
    """ Sum of mu(a) nu(b) over a in left_set, b in right_set with R(a, b) == edges """
    if mu.side is not Side.LEFT or left_set.side is not Side.LEFT:
        raise SideMismatch("pair_mass expects mu and the first set on the left side")
    if nu.side is not Side.RIGHT or right_set.side is not Side.RIGHT:
        raise SideMismatch("pair_mass expects nu and the second set on the right side")
    total = 0
    for left in left_set:
        row = graph.rows[left]
        hits = right_set.bits & row if edges else right_set.bits & ~row
        total += mu.numerators[left] * nu.int_mass(hits)
    return Fraction(total, mu.denominator * nu.denominator)
