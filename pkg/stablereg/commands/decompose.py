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
    Command: decompose
"""

from stablereg import constants
from stablereg.tools import log
from stablereg.tools.rational import parse_rational
from stablereg.tools.graphio import load_graph, load_measure, write_text
from stablereg.tools.report import serialize_report
from stablereg.models.graph import Side
from stablereg.models.module import ModuleModel
from stablereg.models.command import CommandModel
from stablereg.engine.regularity import decompose


class Command(ModuleModel, CommandModel):
    """ Compute a stable regularity partition """

    def __init__(self, argparser):
        """ Initialize command instance, add arguments """
        super().__init__()
        self.add_input_argument(argparser)
        argparser.add_argument(
            "--epsilon", dest="epsilon",
            help="epsilon as exact rational p/q",
            type=str, required=True
        )
        argparser.add_argument(
            "--mu", dest="mu",
            help="left measure file (JSON list of p/q weights), counting measure if not set",
            type=str, default=None
        )
        argparser.add_argument(
            "--nu", dest="nu",
            help="right measure file (JSON list of p/q weights), counting measure if not set",
            type=str, default=None
        )
        argparser.add_argument(
            "--max-iterations", dest="max_iterations",
            help="refinement round cap (default: n_left + n_right)",
            type=int, default=None
        )
        argparser.add_argument(
            "--eps-policy", dest="eps_policy",
            help="epsilon range policy",
            choices=constants.EPS_POLICIES, default=None
        )
        argparser.add_argument(
            "--peel-singletons", dest="peel_singletons",
            help="split off vertices whose own weight exceeds epsilon",
            action="store_true", default=None
        )
        argparser.add_argument(
            "--threads", dest="threads",
            help="worker threads for pair classification",
            type=int, default=None
        )
        self.add_output_argument(argparser)
        self.add_config_arguments(argparser)

    def execute(self, args):
        """ Run the command """
        log.debug("Starting")
        context = self.load_context(args)
        graph = load_graph(args.input).graph
        epsilon = parse_rational(args.epsilon)
        mu = load_measure(args.mu, graph, Side.LEFT)
        nu = load_measure(args.nu, graph, Side.RIGHT)
        config = {
            key: context.setting(key, getattr(args, key))
            for key in ["max_iterations", "eps_policy", "peel_singletons", "threads"]
        }
        partition = decompose(graph, mu, nu, epsilon, config)
        write_text(serialize_report(partition, mu, nu), args.output)
        return constants.EXIT_OK

    @staticmethod
    def get_name():
        """ Command name """
        return "decompose"

    @staticmethod
    def get_description():
        """ Command help message (description) """
        return "compute a stable regularity partition and write its report"
