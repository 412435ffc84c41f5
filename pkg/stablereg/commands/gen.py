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
    Command: gen
"""

import os

from stablereg import constants
from stablereg.tools import log
from stablereg.tools.graphio import GraphFile, load_json_text, read_text, write_text, \
    serialize_graph, serialize_dense
from stablereg.models.module import ModuleModel
from stablereg.models.command import CommandModel
from stablereg.models.generator import GeneratorSpec
from stablereg.generators import generate, list_families


class Command(ModuleModel, CommandModel):
    """ Generate an instance graph """

    def __init__(self, argparser):
        """ Initialize command instance, add arguments """
        super().__init__()
        argparser.add_argument(
            "--spec", dest="spec",
            help=f"generator spec, inline JSON or path (families: {', '.join(list_families())})",
            type=str, required=True
        )
        argparser.add_argument(
            "--format", dest="format",
            help="graph file format",
            choices=["json", "dense"], default="json"
        )
        self.add_output_argument(argparser)

    def execute(self, args):
        """ Run the command """
        text = args.spec
        if not text.lstrip().startswith("{") and os.path.exists(text):
            text = read_text(text)
        spec = GeneratorSpec.from_dict(load_json_text(text, "generator spec"))
        graph = generate(spec)
        log.info(
            "Generated %s: %d x %d with %d edges",
            spec.family, graph.n_left, graph.n_right, graph.edge_count()
        )
        if args.format == "dense":
            write_text(serialize_dense(graph), args.output)
        else:
            meta = {"family": spec.family, "spec": spec.to_dict(), "prng": constants.PRNG_NAME}
            write_text(serialize_graph(GraphFile(graph, meta)), args.output)
        return constants.EXIT_OK

    @staticmethod
    def get_name():
        """ Command name """
        return "gen"

    @staticmethod
    def get_description():
        """ Command help message (description) """
        return "generate a seeded instance graph"
