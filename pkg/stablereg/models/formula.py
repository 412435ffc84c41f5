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
    Formula models

    Boolean combinations of neighborhood atoms R(x, p) and equality atoms
    x = q in one free variable. The subject side (V for formulas in x, W for
    formulas in y) is supplied at evaluation time: an EdgeAtom parameter
    indexes the opposite side, an EqualsAtom parameter the subject side.

    Serialized form: {"kind": "edge", "param": 3}, {"kind": "equals", "param": 0},
    {"kind": "not", "child": {...}}, {"kind": "and", "children": [...]},
    {"kind": "or", "children": [...]}, {"kind": "true"}.
"""

from dataclasses import dataclass

from stablereg.tools.bits import full_mask
from stablereg.models.error import ParseError


class FormulaModel:
    """ Formula node base class """

    kind = None

    def bits(self, graph, side):
        """ Satisfying vertices of side as a bitset """
        raise NotImplementedError()

    def to_dict(self):
        """ Serializable form """
        raise NotImplementedError()

    def check(self, graph, side):
        """ Raise IndexOutOfRange for parameters outside the graph """
        raise NotImplementedError()


@dataclass(frozen=True)
class EdgeAtom(FormulaModel):
    """ R(x, param) with param on the opposite side """

    param: int
    kind = "edge"

    def bits(self, graph, side):
        return graph.neighbors(side.opposite, self.param)

    def to_dict(self):
        return {"kind": self.kind, "param": self.param}

    def check(self, graph, side):
        graph.check_vertex(side.opposite, self.param)


@dataclass(frozen=True)
class EqualsAtom(FormulaModel):
    """ x = param with param on the subject side """

    param: int
    kind = "equals"

    def bits(self, graph, side):
        graph.check_vertex(side, self.param)
        return 1 << self.param

    def to_dict(self):
        return {"kind": self.kind, "param": self.param}

    def check(self, graph, side):
        graph.check_vertex(side, self.param)


@dataclass(frozen=True)
class Not(FormulaModel):
    """ Negation """

    child: FormulaModel
    kind = "not"

    def bits(self, graph, side):
        return full_mask(graph.size(side)) & ~self.child.bits(graph, side)

    def to_dict(self):
        return {"kind": self.kind, "child": self.child.to_dict()}

    def check(self, graph, side):
        self.child.check(graph, side)


@dataclass(frozen=True)
class And(FormulaModel):
    """ Conjunction, empty conjunction is true """

    children: tuple
    kind = "and"

    def bits(self, graph, side):
        result = full_mask(graph.size(side))
        for child in self.children:
            result &= child.bits(graph, side)
        return result

    def to_dict(self):
        return {"kind": self.kind, "children": [child.to_dict() for child in self.children]}

    def check(self, graph, side):
        for child in self.children:
            child.check(graph, side)


@dataclass(frozen=True)
class Or(FormulaModel):
    """ Disjunction, empty disjunction is false """

    children: tuple
    kind = "or"

    def bits(self, graph, side):
        result = 0
        for child in self.children:
            result |= child.bits(graph, side)
        return result

    def to_dict(self):
        return {"kind": self.kind, "children": [child.to_dict() for child in self.children]}

    def check(self, graph, side):
        for child in self.children:
            child.check(graph, side)


@dataclass(frozen=True)
class TrueFormula(FormulaModel):
    """ Always true """

    kind = "true"

    def bits(self, graph, side):
        return full_mask(graph.size(side))

    def to_dict(self):
        return {"kind": self.kind}

    def check(self, graph, side):
        pass


def literal(atom, positive):
    """ atom or its negation """
    return atom if positive else Not(atom)


def formula_from_dict(data):
    """ Parse serialized formula """
    if not isinstance(data, dict) or "kind" not in data:
        raise ParseError(f"Formula node must be an object with a kind: {data!r}")
    kind = data["kind"]
    if kind in (EdgeAtom.kind, EqualsAtom.kind):
        param = data.get("param")
        if not isinstance(param, int) or isinstance(param, bool):
            raise ParseError(f"Formula atom needs an integer param: {data!r}")
        return EdgeAtom(param) if kind == EdgeAtom.kind else EqualsAtom(param)
    if kind == Not.kind:
        return Not(formula_from_dict(data.get("child")))
    if kind in (And.kind, Or.kind):
        children = data.get("children")
        if not isinstance(children, list):
            raise ParseError(f"Formula connective needs a children list: {data!r}")
        nodes = tuple(formula_from_dict(child) for child in children)
        return And(nodes) if kind == And.kind else Or(nodes)
    if kind == TrueFormula.kind:
        return TrueFormula()
    raise ParseError(f"Unknown formula kind: {kind!r}")
