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
    Stability certificate models
"""

from typing import Optional
from dataclasses import dataclass

from stablereg.models.graph import Side
from stablereg.models.error import CertificateError


@dataclass(frozen=True)
class LadderCertificate:
    """
        Half-graph pattern of length k

        a_seq[i], b_seq[j] satisfy R(a_i, b_j) iff i <= j (0-based here,
        same order as 1-based).
    """

    a_seq: tuple
    b_seq: tuple

    @classmethod
    def checked(cls, graph, a_seq, b_seq):
        """ Build and verify against graph, raise CertificateError if it fails """
        certificate = cls(tuple(a_seq), tuple(b_seq))
        problem = certificate.problem(graph)
        if problem:
            raise CertificateError(problem)
        return certificate

    @property
    def k(self):
        """ Ladder length """
        return len(self.a_seq)

    def problem(self, graph):
        """ Description of the first violated condition, None if valid """
        if len(self.a_seq) != len(self.b_seq):
            return "Sequences differ in length"
        if len(set(self.a_seq)) != len(self.a_seq) or len(set(self.b_seq)) != len(self.b_seq):
            return "Sequence entries are not distinct"
        for left in self.a_seq:
            if not 0 <= left < graph.n_left:
                return f"Left vertex {left} out of range"
        for right in self.b_seq:
            if not 0 <= right < graph.n_right:
                return f"Right vertex {right} out of range"
        for i, left in enumerate(self.a_seq):
            for j, right in enumerate(self.b_seq):
                if graph.has_edge(left, right) != (i <= j):
                    return f"R(a_{i + 1}, b_{j + 1}) should be {i <= j}"
        return None

    def verify(self, graph):
        """ True if the pattern holds in graph """
        return self.problem(graph) is None

    def to_dict(self):
        """ Serializable form """
        return {"a": list(self.a_seq), "b": list(self.b_seq)}


@dataclass(frozen=True)
class RankNode:
    """ Splitting tree node: param splits the set into hit (N(param)) and miss """

    param: int
    hit: Optional["RankNode"]
    miss: Optional["RankNode"]

    def depth(self):
        """ Depth of the complete tree rooted here """
        return 1 + min(
            self.hit.depth() if self.hit else 0,
            self.miss.depth() if self.miss else 0,
        )

    def to_dict(self):
        """ Serializable form """
        return {
            "param": self.param,
            "hit": self.hit.to_dict() if self.hit else None,
            "miss": self.miss.to_dict() if self.miss else None,
        }


@dataclass(frozen=True)
class RankResult:
    """ Splitting rank with a realizing tree """

    value: int
    witness_tree: Optional[RankNode]
    side: Side

    def replay(self, graph, start):
        """ True if the tree splits start as claimed, to depth value """
        return _replay(graph, start.side, start.bits, self.witness_tree, self.value)

    def to_dict(self):
        """ Serializable form """
        return {
            "side": self.side.value,
            "value": self.value,
            "witness_tree": self.witness_tree.to_dict() if self.witness_tree else None,
        }


def _replay(graph, side, bits, node, depth):
    if depth == 0:
        return True
    if node is None:
        return False
    if not 0 <= node.param < graph.size(side.opposite):
        return False
    splitter = graph.neighbors(side.opposite, node.param)
    hit = bits & splitter
    miss = bits & ~splitter
    if not hit or not miss:
        return False
    return _replay(graph, side, hit, node.hit, depth - 1) and \
        _replay(graph, side, miss, node.miss, depth - 1)


@dataclass(frozen=True)
class LadderIndex:
    """ Largest ladder found up to a cap """

    k: int
    certificate: Optional[LadderCertificate]
    capped: bool

    def to_dict(self):
        """ Serializable form """
        return {
            "k": self.k,
            "capped": self.capped,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }
