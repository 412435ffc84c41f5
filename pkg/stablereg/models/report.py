#!/usr/bin/python3
# coding=utf-8
# pylint: disable=I0011,R0902,R0903

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
    Verification report models
"""

from typing import List, Optional
from fractions import Fraction
from dataclasses import dataclass, field

from stablereg.tools.rational import format_rational


@dataclass
class PartFailure:
    """ Partition law or formula failure of one part """

    side: str
    part: int
    reason: str

    def to_dict(self):
        """ Serializable form """
        return {"side": self.side, "part": self.part, "reason": self.reason}


@dataclass
class PairCheck:
    """ Recomputed verdict for one pair of parts """

    left_part: int
    right_part: int
    stored_case: Optional[str]
    case: Optional[str]
    exc_left_mass: Optional[Fraction] = None
    exc_right_mass: Optional[Fraction] = None
    passed: bool = False
    reason: Optional[str] = None

    def to_dict(self):
        """ Serializable form """
        return {
            "left_part": self.left_part,
            "right_part": self.right_part,
            "stored_case": self.stored_case,
            "case": self.case,
            "exc_left_mass": format_rational(self.exc_left_mass)
                             if self.exc_left_mass is not None else None,
            "exc_right_mass": format_rational(self.exc_right_mass)
                              if self.exc_right_mass is not None else None,
            "passed": self.passed,
            "reason": self.reason,
        }


@dataclass
class VerificationReport:
    """ Outcome of re-checking a partition from raw adjacency and measures """

    pairs: List[PairCheck] = field(default_factory=list)
    part_failures: List[PartFailure] = field(default_factory=list)
    partition_laws: bool = True
    formulas_faithful: bool = True

    @property
    def failed_pairs(self):
        """ Pair checks that did not pass """
        return [item for item in self.pairs if not item.passed]

    @property
    def all_pass(self):
        """ True if laws, formulas and every pair check hold """
        return self.partition_laws and self.formulas_faithful and not self.failed_pairs

    def to_dict(self):
        """ Serializable form """
        return {
            "all_pass": self.all_pass,
            "partition_laws": self.partition_laws,
            "formulas_faithful": self.formulas_faithful,
            "part_failures": [item.to_dict() for item in self.part_failures],
            "pairs": [item.to_dict() for item in self.pairs],
        }


@dataclass
class DeltaViolation:
    """ Subset pair (A, B) where the inherited goodness fails """

    left_part: int
    right_part: int
    a: list
    b: list
    direction: str

    def to_dict(self):
        """ Serializable form """
        return {
            "left_part": self.left_part,
            "right_part": self.right_part,
            "a": list(self.a),
            "b": list(self.b),
            "direction": self.direction,
        }


@dataclass
class DeltaRegularityReport:
    """ Outcome of subset-level checks at delta >= sqrt(2 epsilon) """

    delta: Fraction
    mode: str
    pairs_checked: int = 0
    subset_pairs_tested: int = 0
    violation_count: int = 0
    violations: List[DeltaViolation] = field(default_factory=list)
    seed: Optional[int] = None
    prng: Optional[str] = None
    budget: Optional[int] = None

    @property
    def passed(self):
        """ True if no violation was found """
        return self.violation_count == 0

    def to_dict(self):
        """ Serializable form """
        result = {
            "delta": format_rational(self.delta),
            "mode": self.mode,
            "pairs_checked": self.pairs_checked,
            "subset_pairs_tested": self.subset_pairs_tested,
            "violation_count": self.violation_count,
            "violations": [item.to_dict() for item in self.violations],
            "passed": self.passed,
        }
        if self.seed is not None:
            result["seed"] = self.seed
            result["prng"] = self.prng
            result["budget"] = self.budget
        return result
