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
    Generator: rectangle union

    Disjoint complete blocks V_t x W_t covering both sides. Vertex labels are
    shuffled with the seed. With noise_vertices = s, the rows of s seeded left
    vertices get each adjacency flipped with probability 1/2, which can raise
    the ladder index by at most s.
"""

from stablereg.tools import log
from stablereg.tools.bits import list_to_bits
from stablereg.models.module import ModuleModel
from stablereg.models.generator import GeneratorModel
from stablereg.models.graph import BipartiteGraph
from stablereg.models.error import InvalidSpec


class Generator(ModuleModel, GeneratorModel):
    """ Generator class """

    def generate(self):
        """ Build the graph """
        left_sizes, right_sizes = block_sizes(self.options)
        n_left = sum(left_sizes)
        n_right = sum(right_sizes)
        rng = self.random()
        left_labels = rng.permutation(n_left)
        right_labels = rng.permutation(n_right)
        rows = [0] * n_left
        left_start = 0
        right_start = 0
        for left_size, right_size in zip(left_sizes, right_sizes):
            block = list_to_bits(
                int(label) for label in right_labels[right_start:right_start + right_size]
            )
            for label in left_labels[left_start:left_start + left_size]:
                rows[int(label)] = block
            left_start += left_size
            right_start += right_size
        noise = self.options.get("noise_vertices", 0)
        if noise:
            noisy = rng.choice(n_left, size=noise, replace=False)
            for vertex in sorted(int(item) for item in noisy):
                flips = rng.integers(0, 2, size=n_right)
                rows[vertex] ^= list_to_bits(
                    index for index, flip in enumerate(flips) if flip
                )
            log.debug("Perturbed rows of %d left vertices", noise)
        return BipartiteGraph.from_rows(n_left, n_right, rows)

    @staticmethod
    def validate_config(config):
        """ Validate config """
        left_sizes, _ = block_sizes(config)
        if config.get("noise_vertices", 0) > sum(left_sizes):
            raise InvalidSpec("noise_vertices exceeds the number of left vertices")

    @staticmethod
    def get_schema():
        """ JSON schema of the options """
        sizes = {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1}
        return {
            "type": "object",
            "properties": {
                "left_sizes": sizes,
                "right_sizes": sizes,
                "r": {"type": "integer", "minimum": 1},
                "size": {"type": "integer", "minimum": 1},
                "noise_vertices": {"type": "integer", "minimum": 0},
                "seed": GeneratorModel.seed_schema(),
            },
            "additionalProperties": False,
        }

    @staticmethod
    def get_name():
        """ Module name """
        return "rectangle_union"

    @staticmethod
    def get_description():
        """ Module description or help message """
        return "Union of r disjoint complete blocks"


def _even_split(total, parts):
    base, extra = divmod(total, parts)
    return [base + 1 if index < extra else base for index in range(parts)]


def block_sizes(options):
    """
        Left and right block sizes

        Either explicit left_sizes/right_sizes of equal length, or r blocks
        sharing size vertices per side as evenly as possible.
    """
    explicit = "left_sizes" in options or "right_sizes" in options
    implicit = "r" in options or "size" in options
    if explicit == implicit:
        raise InvalidSpec("Give either left_sizes and right_sizes, or r and size")
    if explicit:
        left_sizes = options.get("left_sizes")
        right_sizes = options.get("right_sizes")
        if left_sizes is None or right_sizes is None or len(left_sizes) != len(right_sizes):
            raise InvalidSpec("left_sizes and right_sizes must list the same number of blocks")
        return list(left_sizes), list(right_sizes)
    if "r" not in options or "size" not in options:
        raise InvalidSpec("Both r and size are required")
    if options["size"] < options["r"]:
        raise InvalidSpec("Every block needs at least one vertex per side")
    sizes = _even_split(options["size"], options["r"])
    return sizes, list(sizes)
