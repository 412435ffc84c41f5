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
    Definability: formula evaluation and complete type classes over M

    Type classes are found by bucketing vertices on their trace, the tuple of
    memberships in N(p) for every opposite-side parameter p (ascending),
    followed by equality flags against every same-side parameter (ascending).
    Each class gets a signed conjunction with one literal per parameter, which
    is evaluated back and compared with the bucket.
"""

from stablereg.tools import log
from stablereg.models.graph import VertexSet
from stablereg.models.formula import And, EdgeAtom, EqualsAtom, TrueFormula, literal
from stablereg.models.parameters import TypeClass
from stablereg.models.error import DefinabilityError


def evaluate(formula, graph, side):
    """ Vertices of side satisfying formula """
    formula.check(graph, side)
    return VertexSet(side, formula.bits(graph, side), graph.size(side))


def trace_formula(edge_params, equals_params, trace):
    """ Signed conjunction for a trace, True when there are no parameters """
    literals = [
        literal(EdgeAtom(param), positive)
        for param, positive in zip(edge_params, trace[:len(edge_params)])
    ]
    literals.extend(
        literal(EqualsAtom(param), positive)
        for param, positive in zip(equals_params, trace[len(edge_params):])
    )
    if not literals:
        return TrueFormula()
    return And(tuple(literals))


def _split(buckets, splitter):
    result = dict()
    for trace, bits in buckets.items():
        inside = bits & splitter
        outside = bits & ~splitter
        if outside:
            result[trace + (False,)] = outside
        if inside:
            result[trace + (True,)] = inside
    return result


def type_partition(graph, parameters, side):
    """ Complete type classes of side over parameters, ordered by trace """
    edge_params = parameters.on(side.opposite).members()
    equals_params = parameters.on(side).members()
    buckets = {(): graph.full(side).bits}
    for param in edge_params:
        buckets = _split(buckets, graph.neighbors(side.opposite, param))
    for param in equals_params:
        buckets = _split(buckets, 1 << param)
    classes = list()
    for trace in sorted(buckets):
        members = VertexSet(side, buckets[trace], graph.size(side))
        formula = trace_formula(edge_params, equals_params, trace)
        if formula.bits(graph, side) != members.bits:
            raise DefinabilityError(f"Formula for trace {trace} does not define its class")
        classes.append(TypeClass(side, members, trace, formula))
    log.debug(
        "Type partition of %s side over %d parameters: %d classes",
        side.value, len(edge_params) + len(equals_params), len(classes)
    )
    return classes


def type_of(graph, parameters, vertex, side):
    """ Type class containing vertex """
    graph.check_vertex(side, vertex)
    edge_params = parameters.on(side.opposite).members()
    equals_params = parameters.on(side).members()
    trace = tuple(
        bool(graph.neighbors(side.opposite, param) >> vertex & 1) for param in edge_params
    ) + tuple(param == vertex for param in equals_params)
    formula = trace_formula(edge_params, equals_params, trace)
    members = VertexSet(side, formula.bits(graph, side), graph.size(side))
    return TypeClass(side, members, trace, formula)
