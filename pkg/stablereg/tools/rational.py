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
    Rational tools
"""

import re
import math
from fractions import Fraction

from stablereg.models.error import ParseError


RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text):
    """ Parse "p/q" or "p" into Fraction, ParseError otherwise """
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ParseError(f"Expected rational string, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    match = RATIONAL_RE.match(text)
    if match is None:
        raise ParseError(f"Invalid rational: {text!r}")
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"Zero denominator in rational: {text!r}")
    return Fraction(int(match.group(1)), denominator)


def format_rational(value):
    """ Exact "p/q" string, always with a denominator ("0/1", "1/1") """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def sqrt_upper(value, precision):
    """ Smallest k/precision with (k/precision)^2 >= value """
    value = Fraction(value)
    if value < 0:
        raise ValueError("Square root of a negative rational")
    scaled = math.ceil(value * precision * precision)
    root = math.isqrt(scaled)
    if root * root < scaled:
        root += 1
    return Fraction(root, precision)
