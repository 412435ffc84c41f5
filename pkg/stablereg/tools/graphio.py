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
    Graph and measure file I/O

    Graph files are JSON {"num_left", "num_right", "edges", optional "meta"}
    or dense text ("n m" then n lines of m characters from {0, 1}). Measure
    files are JSON arrays of "p/q" strings, or the string "counting".
"""

import sys
import json
from typing import Optional
from dataclasses import dataclass

import jsonschema

from stablereg.tools import log
from stablereg.tools.rational import parse_rational, format_rational
from stablereg.models.graph import BipartiteGraph
from stablereg.models.measure import Measure, counting_measure
from stablereg.models.error import ParseError

COUNTING = "counting"

GRAPH_SCHEMA = {
    "type": "object",
    "properties": {
        "num_left": {"type": "integer", "minimum": 0},
        "num_right": {"type": "integer", "minimum": 0},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "meta": {"type": "object"},
    },
    "required": ["num_left", "num_right", "edges"],
    "additionalProperties": False,
}

MEASURE_SCHEMA = {
    "oneOf": [
        {"type": "string", "enum": [COUNTING]},
        {"type": "array", "items": {"type": ["string", "integer"]}},
    ]
}


@dataclass(frozen=True)
class GraphFile:
    """ Parsed graph with optional generator metadata """

    graph: BipartiteGraph
    meta: Optional[dict] = None


def canonical_json(obj):
    """ Sorted-key, indented JSON with trailing newline """
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def validate_json(obj, schema, what):
    """ Raise ParseError unless obj matches schema """
    try:
        jsonschema.validate(instance=obj, schema=schema)
    except jsonschema.ValidationError as exc:
        raise ParseError(f"Invalid {what}: {exc.message}") from exc


def load_json_text(text, what):
    """ json.loads with ParseError """
    try:
        return json.loads(text)
    except ValueError as exc:
        raise ParseError(f"Invalid {what} JSON: {exc}") from exc


def read_text(path):
    """ File contents, ParseError if unreadable """
    try:
        with open(path, "r", encoding="utf-8") as file_:
            return file_.read()
    except OSError as exc:
        raise ParseError(f"Can not read {path}: {exc}") from exc


def write_text(text, path=None):
    """ Write to path, or to stdout if path is not set """
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8") as file_:
        file_.write(text)
    log.info("Written %s", path)


def _parse_dense(text):
    lines = [line.strip() for line in text.strip().splitlines()]
    if not lines:
        raise ParseError("Empty graph file")
    header = lines[0].split()
    if len(header) != 2 or not all(item.isdigit() for item in header):
        raise ParseError(f"Dense graph header must be 'n m', got {lines[0]!r}")
    n_left, n_right = int(header[0]), int(header[1])
    body = lines[1:]
    if len(body) != n_left:
        raise ParseError(f"Expected {n_left} adjacency lines, got {len(body)}")
    rows = list()
    for index, line in enumerate(body):
        if len(line) != n_right or set(line) - {"0", "1"}:
            raise ParseError(f"Line {index + 2} must hold {n_right} characters from 0/1")
        rows.append(sum(1 << column for column, char in enumerate(line) if char == "1"))
    return GraphFile(BipartiteGraph.from_rows(n_left, n_right, rows))


def parse_graph(text):
    """ GraphFile from JSON or dense text """
    if text.lstrip().startswith("{"):
        data = load_json_text(text, "graph")
        validate_json(data, GRAPH_SCHEMA, "graph file")
        graph = BipartiteGraph.from_edges(
            data["num_left"], data["num_right"], [tuple(edge) for edge in data["edges"]]
        )
        return GraphFile(graph, data.get("meta"))
    return _parse_dense(text)


def load_graph(path):
    """ GraphFile from path """
    graph_file = parse_graph(read_text(path))
    log.info(
        "Loaded %d x %d graph with %d edges from %s",
        graph_file.graph.n_left, graph_file.graph.n_right, graph_file.graph.edge_count(), path
    )
    return graph_file


def graph_to_dict(graph_file):
    """ Canonical JSON object of a GraphFile """
    graph = graph_file.graph
    result = {
        "num_left": graph.n_left,
        "num_right": graph.n_right,
        "edges": [list(edge) for edge in graph.edges()],
    }
    if graph_file.meta is not None:
        result["meta"] = graph_file.meta
    return result


def serialize_graph(graph_file):
    """ Canonical JSON text of a GraphFile """
    return canonical_json(graph_to_dict(graph_file))


def serialize_dense(graph):
    """ Dense text form """
    lines = [f"{graph.n_left} {graph.n_right}"]
    for row in graph.rows:
        lines.append("".join("1" if row >> column & 1 else "0" for column in range(graph.n_right)))
    return "\n".join(lines) + "\n"


def measure_from_json(data, graph, side):
    """ Measure on side from "counting" or a list of rationals """
    validate_json(data, MEASURE_SCHEMA, f"{side.value} measure")
    if data == COUNTING:
        return counting_measure(graph, side)
    measure = Measure(side, tuple(parse_rational(item) for item in data))
    measure.check_graph(graph)
    return measure


def load_measure(path, graph, side):
    """ Measure from a JSON file, counting measure if path is not set """
    if path is None:
        return counting_measure(graph, side)
    log.debug("Loading %s measure from %s", side.value, path)
    return measure_from_json(load_json_text(read_text(path), "measure"), graph, side)


def measure_to_json(measure):
    """ "counting" for the uniform measure, else a list of "p/q" strings """
    if measure.uniform:
        return COUNTING
    return [format_rational(weight) for weight in measure.weights]
