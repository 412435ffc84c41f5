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
    Command: generate-config
"""

import sys
import ruamel.yaml

from ruamel.yaml.comments import CommentedMap

from stablereg import constants
from stablereg.tools import log
from stablereg.models.module import ModuleModel
from stablereg.models.command import CommandModel
from stablereg.models.config import ConfigModel


class Command(ModuleModel, CommandModel):
    """ Generate sample config """

    def __init__(self, argparser):
        """ Initialize command instance, add arguments """
        super().__init__()
        self.add_output_argument(argparser)

    def execute(self, args):
        """ Run the command """
        log.debug("Starting")
        data = CommentedMap()
        ConfigModel.fill_config(data)
        yaml = ruamel.yaml.YAML()
        if args.output == "-":
            yaml.dump(data, sys.stdout)
            return constants.EXIT_OK
        with open(args.output, "wb") as output:
            yaml.dump(data, output)
        log.info("Made sample config: %s", args.output)
        return constants.EXIT_OK

    @staticmethod
    def get_name():
        """ Command name """
        return "generate-config"

    @staticmethod
    def get_description():
        """ Command help message (description) """
        return "generate sample config"
