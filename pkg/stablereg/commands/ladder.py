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
    Command: ladder
"""

from stablereg import constants
from stablereg.tools import log
from stablereg.tools.graphio import load_graph, write_text, canonical_json
from stablereg.models.module import ModuleModel
from stablereg.models.command import CommandModel
from stablereg.models.error import ParseError
from stablereg.engine.stability import ladder_index


class Command(ModuleModel, CommandModel):
    """ Ladder index with certificate """

    def __init__(self, argparser):
        """ Initialize command instance, add arguments """
        super().__init__()
        self.add_input_argument(argparser)
        argparser.add_argument(
            "--max-k", dest="max_k",
            help="largest ladder length searched",
            type=int, default=None
        )
        self.add_output_argument(argparser)
        self.add_config_arguments(argparser)

    def execute(self, args):
        """ Run the command """
        context = self.load_context(args)
        max_k = context.setting("max_k", args.max_k)
        if max_k < 1:
            raise ParseError("--max-k must be positive")
        graph = load_graph(args.input).graph
        result = ladder_index(graph, max_k)
        log.info("Ladder index %d%s", result.k, " (capped)" if result.capped else "")
        write_text(canonical_json(result.to_dict()), args.output)
        return constants.EXIT_OK

    @staticmethod
    def get_name():
        """ Command name """
        return "ladder"

    @staticmethod
    def get_description():
        """ Command help message (description) """
        return "find the largest half-graph pattern up to a cap"
