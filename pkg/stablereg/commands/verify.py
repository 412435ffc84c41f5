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
    Command: verify
"""

from stablereg import constants
from stablereg.tools import log
from stablereg.tools.graphio import load_graph, read_text, write_text, canonical_json
from stablereg.tools.report import parse_report
from stablereg.models.module import ModuleModel
from stablereg.models.command import CommandModel
from stablereg.engine.verify import check_theorem, check_delta_regularity


class Command(ModuleModel, CommandModel):
    """ Re-check a partition report against its graph """

    def __init__(self, argparser):
        """ Initialize command instance, add arguments """
        super().__init__()
        self.add_input_argument(argparser)
        argparser.add_argument(
            "-r", "--report", dest="report",
            help="partition report made by decompose",
            type=str, required=True
        )
        argparser.add_argument(
            "--delta-mode", dest="delta_mode",
            help="subset checking mode",
            choices=constants.DELTA_MODES, default=None
        )
        argparser.add_argument(
            "--budget", dest="budget",
            help="subset pairs drawn in sampled mode",
            type=int, default=None
        )
        argparser.add_argument(
            "--seed", dest="seed",
            help="seed for sampled mode",
            type=int, default=None
        )
        self.add_output_argument(argparser)
        self.add_config_arguments(argparser)

    def execute(self, args):
        """ Run the command """
        log.debug("Starting")
        context = self.load_context(args)
        graph = load_graph(args.input).graph
        partition, mu, nu = parse_report(read_text(args.report), graph)
        theorem = check_theorem(graph, mu, nu, partition)
        config = dict(context.settings)
        config["delta_seed"] = context.setting("delta_seed", args.seed)
        delta = check_delta_regularity(
            graph, mu, nu, partition,
            mode=context.setting("delta_mode", args.delta_mode),
            budget=context.setting("delta_budget", args.budget),
            config=config,
        )
        passed = theorem.all_pass and delta.passed
        write_text(canonical_json({
            "theorem": theorem.to_dict(),
            "delta_regularity": delta.to_dict(),
            "passed": passed,
            "tool_version": constants.TOOL_VERSION,
        }), args.output)
        if not passed:
            log.warning("Verification failed")
            return constants.EXIT_FAILED
        return constants.EXIT_OK

    @staticmethod
    def get_name():
        """ Command name """
        return "verify"

    @staticmethod
    def get_description():
        """ Command help message (description) """
        return "re-check a partition report from scratch"
