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
    Command: rank
"""

from stablereg import constants
from stablereg.tools import log
from stablereg.tools.graphio import load_graph, write_text, canonical_json
from stablereg.models.graph import Side
from stablereg.models.module import ModuleModel
from stablereg.models.command import CommandModel
from stablereg.engine.stability import splitting_rank


class Command(ModuleModel, CommandModel):
    """ Splitting rank of a full side """

    def __init__(self, argparser):
        """ Initialize command instance, add arguments """
        super().__init__()
        self.add_input_argument(argparser)
        argparser.add_argument(
            "--side", dest="side",
            help="side whose vertices are split",
            choices=[item.value for item in Side], default=Side.LEFT.value
        )
        self.add_output_argument(argparser)
        self.add_config_arguments(argparser)

    def execute(self, args):
        """ Run the command """
        context = self.load_context(args)
        graph = load_graph(args.input).graph
        side = Side(args.side)
        result = splitting_rank(graph, graph.full(side), context.setting("rank_memo_limit"))
        log.info("Splitting rank of %s side: %d", side.value, result.value)
        write_text(canonical_json(result.to_dict()), args.output)
        return constants.EXIT_OK

    @staticmethod
    def get_name():
        """ Command name """
        return "rank"

    @staticmethod
    def get_description():
        """ Command help message (description) """
        return "compute the splitting rank of a side with a witness tree"
