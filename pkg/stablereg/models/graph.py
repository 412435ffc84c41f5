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
    Bipartite graph models

    Both sides are indexed from 0. Adjacency is held twice, as rows (per left
    vertex, a bitset over the right side) and cols (per right vertex, a bitset
    over the left side), so that N(a) and N(b) are single lookups.
"""

from enum import Enum
from dataclasses import dataclass

from stablereg.tools.bits import full_mask, iter_bits, list_to_bits, popcount
from stablereg.models.error import IndexOutOfRange, EmptySide, SideMismatch


class Side(str, Enum):
    """ Graph side: V (left) or W (right) """

    LEFT = "left"
    RIGHT = "right"

    @property
    def opposite(self):
        """ The other side """
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@dataclass(frozen=True)
class VertexSet:
    """ Subset of one side of a graph """

    side: Side
    bits: int
    size: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.size:
            raise IndexOutOfRange(
                f"Vertex set exceeds {self.side.value} side of size {self.size}"
            )

    @classmethod
    def empty(cls, side, size):
        """ Empty set """
        return cls(side, 0, size)

    @classmethod
    def full(cls, side, size):
        """ Whole side """
        return cls(side, full_mask(size), size)

    @classmethod
    def of(cls, side, size, indices):
        """ Set of given indices """
        indices = list(indices)
        for index in indices:
            if not 0 <= index < size:
                raise IndexOutOfRange(
                    f"Vertex {index} out of range for {side.value} side of size {size}"
                )
        return cls(side, list_to_bits(indices), size)

    def members(self):
        """ Sorted member indices """
        return list(iter_bits(self.bits))

    def __iter__(self):
        return iter_bits(self.bits)

    def __len__(self):
        return popcount(self.bits)

    def __contains__(self, index):
        return 0 <= index < self.size and bool(self.bits >> index & 1)

    def is_empty(self):
        """ True if no members """
        return self.bits == 0

    def _other_bits(self, other):
        if other.side is not self.side or other.size != self.size:
            raise SideMismatch(
                f"Vertex sets on {self.side.value}/{self.size} and {other.side.value}/{other.size}"
            )
        return other.bits

    def with_bits(self, bits):
        """ Set on the same side with other bits """
        return VertexSet(self.side, bits, self.size)

    def union(self, other):
        """ Set union """
        return self.with_bits(self.bits | self._other_bits(other))

    def intersection(self, other):
        """ Set intersection """
        return self.with_bits(self.bits & self._other_bits(other))

    def difference(self, other):
        """ Set difference """
        return self.with_bits(self.bits & ~self._other_bits(other))

    def complement(self):
        """ Side minus this set """
        return self.with_bits(full_mask(self.size) & ~self.bits)

    def is_subset(self, other):
        """ True if contained in other """
        return self.bits & ~self._other_bits(other) == 0

    def is_disjoint(self, other):
        """ True if no common members """
        return self.bits & self._other_bits(other) == 0


@dataclass(frozen=True)
class BipartiteGraph:
    """ Finite bipartite graph (V, W, R) with two-sided bitset adjacency """

    n_left: int
    n_right: int
    rows: tuple
    cols: tuple

    @classmethod
    def from_edges(cls, n_left, n_right, edges):
        """ Make graph from (v-index, w-index) pairs, duplicates collapse """
        if n_left < 1 or n_right < 1:
            raise EmptySide(f"Both sides must be nonempty, got {n_left} x {n_right}")
        rows = [0] * n_left
        cols = [0] * n_right
        for left, right in edges:
            if not 0 <= left < n_left:
                raise IndexOutOfRange(f"Left vertex {left} out of range (n_left = {n_left})")
            if not 0 <= right < n_right:
                raise IndexOutOfRange(f"Right vertex {right} out of range (n_right = {n_right})")
            rows[left] |= 1 << right
            cols[right] |= 1 << left
        return cls(n_left, n_right, tuple(rows), tuple(cols))

    @classmethod
    def from_rows(cls, n_left, n_right, rows):
        """ Make graph from per-left-vertex bitsets over the right side """
        if n_left < 1 or n_right < 1:
            raise EmptySide(f"Both sides must be nonempty, got {n_left} x {n_right}")
        if len(rows) != n_left:
            raise IndexOutOfRange(f"Expected {n_left} rows, got {len(rows)}")
        limit = full_mask(n_right)
        cols = [0] * n_right
        for left, row in enumerate(rows):
            if row < 0 or row & ~limit:
                raise IndexOutOfRange(f"Row {left} exceeds right side of size {n_right}")
            for right in iter_bits(row):
                cols[right] |= 1 << left
        return cls(n_left, n_right, tuple(rows), tuple(cols))

    def size(self, side):
        """ Number of vertices on side """
        return self.n_left if side is Side.LEFT else self.n_right

    def check_vertex(self, side, vertex):
        """ Raise IndexOutOfRange unless vertex indexes side """
        if not 0 <= vertex < self.size(side):
            raise IndexOutOfRange(
                f"Vertex {vertex} out of range for {side.value} side of size {self.size(side)}"
            )

    def adjacency(self, side):
        """ Neighborhood bitsets of the vertices of side """
        return self.rows if side is Side.LEFT else self.cols

    def neighbors(self, side, vertex):
        """ N(vertex) as a bitset over the opposite side """
        self.check_vertex(side, vertex)
        return self.adjacency(side)[vertex]

    def neighborhood(self, side, vertex):
        """ N(vertex) as a VertexSet on the opposite side """
        opposite = side.opposite
        return VertexSet(opposite, self.neighbors(side, vertex), self.size(opposite))

    def has_edge(self, left, right):
        """ R(left, right) """
        self.check_vertex(Side.LEFT, left)
        self.check_vertex(Side.RIGHT, right)
        return bool(self.rows[left] >> right & 1)

    def full(self, side):
        """ Whole side as VertexSet """
        return VertexSet.full(side, self.size(side))

    def empty(self, side):
        """ Empty VertexSet on side """
        return VertexSet.empty(side, self.size(side))

    def vertex_set(self, side, indices):
        """ VertexSet of indices on side """
        return VertexSet.of(side, self.size(side), indices)

    def edges(self):
        """ Sorted (left, right) edge list """
        return [(left, right) for left, row in enumerate(self.rows) for right in iter_bits(row)]

    def edge_count(self):
        """ Number of edges """
        return sum(popcount(row) for row in self.rows)

    def complement(self):
        """ Same vertex sets, complemented edge relation """
        limit = full_mask(self.n_right)
        return BipartiteGraph.from_rows(
            self.n_left, self.n_right, [limit & ~row for row in self.rows]
        )

    def is_consistent(self):
        """ rows and cols encode the same relation """
        if len(self.rows) != self.n_left or len(self.cols) != self.n_right:
            return False
        for left, row in enumerate(self.rows):
            for right in range(self.n_right):
                if bool(row >> right & 1) != bool(self.cols[right] >> left & 1):
                    return False
        return True
