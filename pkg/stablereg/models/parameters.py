#!/usr/bin/python3
# coding=utf-8
# pylint: disable=I0011,R0903

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
    Parameter set and type class models
"""

from dataclasses import dataclass

from stablereg.models.graph import Side, VertexSet
from stablereg.models.formula import FormulaModel


@dataclass(frozen=True)
class ParameterSet:
    """ Finite parameter set M: a subset of V and a subset of W """

    m_left: VertexSet
    m_right: VertexSet

    @classmethod
    def empty(cls, graph):
        """ M with no parameters """
        return cls(graph.empty(Side.LEFT), graph.empty(Side.RIGHT))

    @classmethod
    def of(cls, graph, left=(), right=()):
        """ M from index lists """
        return cls(graph.vertex_set(Side.LEFT, left), graph.vertex_set(Side.RIGHT, right))

    def on(self, side):
        """ Parameters lying on side """
        return self.m_left if side is Side.LEFT else self.m_right

    def with_vertex(self, side, vertex):
        """ M plus one vertex """
        if side is Side.LEFT:
            return ParameterSet(self.m_left.with_bits(self.m_left.bits | 1 << vertex), self.m_right)
        return ParameterSet(self.m_left, self.m_right.with_bits(self.m_right.bits | 1 << vertex))

    def __len__(self):
        return len(self.m_left) + len(self.m_right)


@dataclass(frozen=True)
class TypeClass:
    """ Vertices of one side sharing a trace over M, with a defining formula """

    side: Side
    members: VertexSet
    trace: tuple
    formula: FormulaModel
