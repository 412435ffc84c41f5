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
    Generator: random bipartite graph
"""

from stablereg.tools.bits import list_to_bits
from stablereg.tools.rational import parse_rational
from stablereg.models.module import ModuleModel
from stablereg.models.generator import GeneratorModel
from stablereg.models.graph import BipartiteGraph
from stablereg.models.error import InvalidSpec, ParseError


class Generator(ModuleModel, GeneratorModel):
    """ Each edge present independently with probability density """

    def generate(self):
        """ Build the graph """
        density = density_of(self.options)
        n_left = self.options["n_left"]
        n_right = self.options["n_right"]
        # Exact p/q trials: an integer draw below p out of q
        draws = self.random().integers(0, density.denominator, size=(n_left, n_right))
        hits = draws < density.numerator
        rows = [
            list_to_bits(index for index, hit in enumerate(row) if hit) for row in hits
        ]
        return BipartiteGraph.from_rows(n_left, n_right, rows)

    @staticmethod
    def validate_config(config):
        """ Validate config """
        density = density_of(config)
        if not 0 <= density <= 1:
            raise InvalidSpec(f"Density must lie in [0, 1], got {density}")

    @staticmethod
    def get_schema():
        """ JSON schema of the options """
        return {
            "type": "object",
            "properties": {
                "n_left": {"type": "integer", "minimum": 1},
                "n_right": {"type": "integer", "minimum": 1},
                "density": {"type": ["string", "integer"]},
                "seed": GeneratorModel.seed_schema(),
            },
            "required": ["n_left", "n_right", "density"],
            "additionalProperties": False,
        }

    @staticmethod
    def get_name():
        """ Module name """
        return "random_bipartite"

    @staticmethod
    def get_description():
        """ Module description or help message """
        return "Seeded random bipartite graph with exact rational edge density"


def density_of(options):
    """ Edge density as Fraction """
    try:
        return parse_rational(options["density"])
    except ParseError as exc:
        raise InvalidSpec(str(exc)) from exc
