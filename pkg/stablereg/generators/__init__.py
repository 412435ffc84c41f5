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
    Instance generators

    Each family is a subpackage with a generator.py defining class Generator.
"""

import pkgutil
import importlib

import jsonschema

from stablereg.tools import log
from stablereg.models.generator import GeneratorSpec
from stablereg.models.error import InvalidSpec


def list_families():
    """ Names of available families """
    return sorted(
        name for _, name, is_package in pkgutil.iter_modules(__path__) if is_package
    )


def load_generator(family):
    """ Generator class of a family """
    if family not in list_families():
        raise InvalidSpec(
            f"Unknown generator family: {family} (available: {', '.join(list_families())})"
        )
    return importlib.import_module(f"{__name__}.{family}.generator").Generator


def generate(spec):
    """ Graph for a GeneratorSpec or its serialized form """
    if not isinstance(spec, GeneratorSpec):
        spec = GeneratorSpec.from_dict(spec)
    generator_class = load_generator(spec.family)
    try:
        jsonschema.validate(instance=spec.options, schema=generator_class.get_schema())
    except jsonschema.ValidationError as exc:
        raise InvalidSpec(f"Invalid {spec.family} spec: {exc.message}") from exc
    generator_class.validate_config(spec.options)
    log.debug("Generating %s with %s", spec.family, spec.options)
    return generator_class(spec).generate()
