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
    Command model
"""

from stablereg import constants
from stablereg.models.config import ConfigModel
from stablereg.models.context import RunContext


class CommandModel:
    """ Command base class """

    def execute(self, args):
        """ Run the command, return process exit code """
        raise NotImplementedError()

    @staticmethod
    def add_config_arguments(argparser):
        """ Add config source arguments shared by library-backed commands """
        argparser.add_argument(
            "-c", "--config-file", dest="config_file",
            help="path to YAML config file (used if present)",
            type=str, default=constants.DEFAULT_CONFIG_PATH
        )
        argparser.add_argument(
            "-e", "--config-variable", dest="config_variable",
            help="name of environment variable with YAML config",
            type=str, default=constants.DEFAULT_CONFIG_ENV_KEY
        )

    @staticmethod
    def add_input_argument(argparser):
        """ Add graph input argument """
        argparser.add_argument(
            "-i", "--input", dest="input",
            help="graph file (JSON or dense text)",
            type=str, required=True
        )

    @staticmethod
    def add_output_argument(argparser):
        """ Add payload output argument """
        argparser.add_argument(
            "-o", "--output", dest="output",
            help="path to output file (use '-' for stdout)",
            type=str, default="-"
        )

    @staticmethod
    def load_context(args):
        """ Make run context with settings loaded from config sources """
        context = RunContext(args)
        ConfigModel(context).load(
            getattr(args, "config_variable", None), getattr(args, "config_file", None)
        )
        return context
