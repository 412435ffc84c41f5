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
    Generator models
"""

from dataclasses import dataclass, field

import numpy as np

from stablereg.models.error import InvalidSpec


@dataclass(frozen=True)
class GeneratorSpec:
    """ Instance family name with its options (seed included) """

    family: str
    options: dict = field(default_factory=dict)

    @property
    def seed(self):
        """ PRNG seed, 0 if not given """
        return self.options.get("seed", 0)

    def to_dict(self):
        """ Serializable form """
        result = {"family": self.family}
        result.update(self.options)
        return result

    @classmethod
    def from_dict(cls, data):
        """ Split a serialized spec into family and options """
        if not isinstance(data, dict) or not isinstance(data.get("family"), str):
            raise InvalidSpec("Generator spec must be an object with a family name")
        options = {key: value for key, value in data.items() if key != "family"}
        return cls(data["family"], options)


class GeneratorModel:
    """ Generator base class """

    def __init__(self, spec):
        self.spec = spec
        self.options = spec.options

    def random(self):
        """ Seeded PRNG for this spec """
        return np.random.Generator(np.random.PCG64(self.spec.seed))

    def generate(self):
        """ Build the graph """
        raise NotImplementedError()

    @staticmethod
    def get_schema():
        """ JSON schema of the options """
        return {"type": "object"}

    @staticmethod
    def seed_schema():
        """ Schema of the shared seed option """
        return {"type": "integer", "minimum": 0, "maximum": 2 ** 64 - 1}
