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
    Error models
"""

from stablereg import constants


class StableRegError(Exception):
    """ Base error, carries process exit code """

    exit_code = constants.EXIT_FAILED


class ParseError(StableRegError):
    """ Input file or argument can not be parsed """

    exit_code = constants.EXIT_PARSE_ERROR


class IndexOutOfRange(StableRegError):
    """ Vertex index outside of its side """

    exit_code = constants.EXIT_PARSE_ERROR


class EmptySide(StableRegError):
    """ Graph side with no vertices """

    exit_code = constants.EXIT_PARSE_ERROR


class InvalidSpec(StableRegError):
    """ Generator spec is malformed """

    exit_code = constants.EXIT_PARSE_ERROR


class InvalidEpsilon(StableRegError):
    """ Epsilon outside of the allowed range """

    exit_code = constants.EXIT_INVALID_EPSILON


class InvalidMeasure(StableRegError):
    """ Weights negative, not summing to one or of wrong count """

    exit_code = constants.EXIT_INVALID_MEASURE


class IterationCapExceeded(StableRegError):
    """ Refinement loop hit the configured iteration cap """

    exit_code = constants.EXIT_ITERATION_CAP


class ShapeMismatch(StableRegError):
    """ Partition does not fit the graph """

    exit_code = constants.EXIT_SHAPE_MISMATCH


class PartTooLarge(StableRegError):
    """ Exhaustive subset enumeration requested on a large part """

    exit_code = constants.EXIT_PART_TOO_LARGE


class SideMismatch(StableRegError):
    """ Operands live on different sides """


class ZeroMeasurePart(StableRegError):
    """ Pair classification on a part of zero measure """


class NoSplitter(StableRegError):
    """ No vertex splits an unclassified pair """


class EmptyInput(StableRegError):
    """ Empty vertex set where a nonempty one is required """


class CertificateError(StableRegError):
    """ Certificate does not hold in the graph """


class DefinabilityError(StableRegError):
    """ Synthesized formula does not define its class """
