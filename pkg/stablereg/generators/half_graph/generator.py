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
    Generator: half graph
"""

from stablereg.tools.bits import full_mask
from stablereg.models.module import ModuleModel
from stablereg.models.generator import GeneratorModel
from stablereg.models.graph import BipartiteGraph


class Generator(ModuleModel, GeneratorModel):
    """ k x k graph with R(a_i, b_j) iff i <= j """

    def generate(self):
        """ Build the graph """
        k = self.options["k"]
        # Row i holds b_i .. b_{k-1}
        rows = [full_mask(k) & ~full_mask(index) for index in range(k)]
        return BipartiteGraph.from_rows(k, k, rows)

    @staticmethod
    def get_schema():
        """ JSON schema of the options """
        return {
            "type": "object",
            "properties": {
                "k": {"type": "integer", "minimum": 1},
                "seed": GeneratorModel.seed_schema(),
            },
            "required": ["k"],
            "additionalProperties": False,
        }

    @staticmethod
    def get_name():
        """ Module name """
        return "half_graph"

    @staticmethod
    def get_description():
        """ Module description or help message """
        return "Half graph H_k, the canonical k-ladder"
