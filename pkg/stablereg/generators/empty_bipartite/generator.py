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
    Generator: empty bipartite graph
"""

from stablereg.models.module import ModuleModel
from stablereg.models.generator import GeneratorModel
from stablereg.models.graph import BipartiteGraph
from stablereg.generators.complete_bipartite.generator import side_sizes_schema


class Generator(ModuleModel, GeneratorModel):
    """ Generator class """

    def generate(self):
        """ Build the graph """
        return BipartiteGraph.from_edges(self.options["n_left"], self.options["n_right"], [])

    @staticmethod
    def get_schema():
        """ JSON schema of the options """
        return side_sizes_schema()

    @staticmethod
    def get_name():
        """ Module name """
        return "empty_bipartite"

    @staticmethod
    def get_description():
        """ Module description or help message """
        return "Edgeless bipartite graph on n + m vertices"
