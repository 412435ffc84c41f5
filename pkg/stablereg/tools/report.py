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
    Partition report (de)serialization

    Reports are canonical JSON: sorted keys, sorted member lists, rationals as
    "p/q" strings, no timestamps.
"""

from stablereg import constants
from stablereg.tools.rational import format_rational, parse_rational
from stablereg.tools.graphio import canonical_json, validate_json, load_json_text, \
    measure_to_json, COUNTING
from stablereg.models.graph import Side
from stablereg.models.measure import Measure, counting_measure
from stablereg.models.formula import formula_from_dict
from stablereg.models.parameters import ParameterSet
from stablereg.models.partition import PairVerdict, Part, RegularityPartition
from stablereg.models.error import ShapeMismatch, IndexOutOfRange

RATIONAL = {"type": "string", "pattern": r"^-?\d+/\d+$"}
INDEX_LIST = {"type": "array", "items": {"type": "integer", "minimum": 0}}
SIDES = {
    "type": "object",
    "properties": {"left": INDEX_LIST, "right": INDEX_LIST},
    "required": ["left", "right"],
}
PART = {
    "type": "object",
    "properties": {"members": INDEX_LIST, "formula": {"type": "object"}},
    "required": ["members", "formula"],
}
VERDICT = {
    "oneOf": [
        {"type": "null"},
        {
            "type": "object",
            "properties": {
                "case": {"enum": [constants.CASE_DENSE, constants.CASE_SPARSE]},
                "exc_left_mass": RATIONAL,
                "exc_right_mass": RATIONAL,
                "exc_left": INDEX_LIST,
                "exc_right": INDEX_LIST,
                "both_hold": {"type": "boolean"},
            },
            "required": [
                "case", "exc_left_mass", "exc_right_mass", "exc_left", "exc_right", "both_hold"
            ],
        },
    ]
}
MEASURE = {
    "oneOf": [
        {"type": "string", "enum": [COUNTING]},
        {"type": "array", "items": RATIONAL},
    ]
}
REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "epsilon": RATIONAL,
        "eps_policy": {"enum": constants.EPS_POLICIES},
        "parameters": SIDES,
        "peeled": SIDES,
        "parts_left": {"type": "array", "items": PART},
        "parts_right": {"type": "array", "items": PART},
        "verdicts": {"type": "array", "items": {"type": "array", "items": VERDICT}},
        "iterations": {"type": "integer", "minimum": 0},
        "merged_classes": {"type": "integer", "minimum": 0},
        "measures": {
            "type": "object",
            "properties": {"left": MEASURE, "right": MEASURE},
            "required": ["left", "right"],
        },
        "tool_version": {"type": "string"},
    },
    "required": [
        "epsilon", "parameters", "parts_left", "parts_right", "verdicts", "iterations",
        "tool_version",
    ],
}


def _sides(parameters):
    return {"left": parameters.m_left.members(), "right": parameters.m_right.members()}


def verdict_to_dict(verdict):
    """ Serializable verdict, None stays None """
    if verdict is None:
        return None
    return {
        "case": verdict.case,
        "exc_left_mass": format_rational(verdict.exc_left_mass),
        "exc_right_mass": format_rational(verdict.exc_right_mass),
        "exc_left": verdict.exc_left.members(),
        "exc_right": verdict.exc_right.members(),
        "both_hold": verdict.both_hold,
    }


def partition_to_dict(partition, mu, nu, tool_version=constants.TOOL_VERSION):
    """ Report object of a partition computed under mu, nu """
    result = {
        "epsilon": format_rational(partition.epsilon),
        "eps_policy": partition.eps_policy,
        "parameters": _sides(partition.parameters),
        "parts_left": [
            {"members": part.members.members(), "formula": part.formula.to_dict()}
            for part in partition.parts_left
        ],
        "parts_right": [
            {"members": part.members.members(), "formula": part.formula.to_dict()}
            for part in partition.parts_right
        ],
        "verdicts": [[verdict_to_dict(verdict) for verdict in row] for row in partition.verdicts],
        "iterations": partition.iterations,
        "merged_classes": partition.merged_classes,
        "measures": {"left": measure_to_json(mu), "right": measure_to_json(nu)},
        "tool_version": tool_version,
    }
    if partition.peeled is not None:
        result["peeled"] = _sides(partition.peeled)
    return result


def serialize_report(partition, mu, nu, tool_version=constants.TOOL_VERSION):
    """ Canonical report text """
    return canonical_json(partition_to_dict(partition, mu, nu, tool_version))


def _vertex_set(graph, side, indices, what):
    try:
        return graph.vertex_set(side, indices)
    except IndexOutOfRange as exc:
        raise ShapeMismatch(f"{what}: {exc}") from exc


def _measure(graph, side, data):
    if data == COUNTING:
        return counting_measure(graph, side)
    return Measure(side, tuple(parse_rational(item) for item in data))


def _verdict(graph, data, where):
    if data is None:
        return None
    return PairVerdict(
        case=data["case"],
        exc_left_mass=parse_rational(data["exc_left_mass"]),
        exc_right_mass=parse_rational(data["exc_right_mass"]),
        exc_left=_vertex_set(graph, Side.LEFT, data["exc_left"], where),
        exc_right=_vertex_set(graph, Side.RIGHT, data["exc_right"], where),
        both_hold=data["both_hold"],
    )


def partition_from_dict(data, graph):
    """ (partition, mu, nu) from a report object, ShapeMismatch if it does not fit graph """
    validate_json(data, REPORT_SCHEMA, "partition report")
    parts = dict()
    for side, key in ((Side.LEFT, "parts_left"), (Side.RIGHT, "parts_right")):
        parts[side] = tuple(
            Part(
                _vertex_set(graph, side, item["members"], f"{side.value} part {index}"),
                formula_from_dict(item["formula"]),
            )
            for index, item in enumerate(data[key])
        )
    verdicts = tuple(
        tuple(
            _verdict(graph, item, f"verdict ({i}, {j})") for j, item in enumerate(row)
        )
        for i, row in enumerate(data["verdicts"])
    )
    measures = data.get("measures", {"left": COUNTING, "right": COUNTING})
    mu = _measure(graph, Side.LEFT, measures["left"])
    nu = _measure(graph, Side.RIGHT, measures["right"])
    parameters = ParameterSet(
        _vertex_set(graph, Side.LEFT, data["parameters"]["left"], "parameters"),
        _vertex_set(graph, Side.RIGHT, data["parameters"]["right"], "parameters"),
    )
    peeled = None
    if "peeled" in data:
        peeled = ParameterSet(
            _vertex_set(graph, Side.LEFT, data["peeled"]["left"], "peeled"),
            _vertex_set(graph, Side.RIGHT, data["peeled"]["right"], "peeled"),
        )
    partition = RegularityPartition(
        epsilon=parse_rational(data["epsilon"]),
        parts_left=parts[Side.LEFT],
        parts_right=parts[Side.RIGHT],
        parameters=parameters,
        verdicts=verdicts,
        iterations=data["iterations"],
        peeled=peeled,
        merged_classes=data.get("merged_classes", 0),
        eps_policy=data.get("eps_policy", constants.EPS_POLICY_STRICT),
    )
    return partition, mu, nu


def parse_report(text, graph):
    """ (partition, mu, nu) from report text """
    return partition_from_dict(load_json_text(text, "report"), graph)
