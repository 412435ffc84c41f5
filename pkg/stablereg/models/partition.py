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
    Regularity partition models
"""

from fractions import Fraction
from dataclasses import dataclass

from stablereg import constants
from stablereg.models.graph import Side, VertexSet
from stablereg.models.formula import FormulaModel
from stablereg.models.parameters import ParameterSet


@dataclass(frozen=True)
class PairVerdict:
    """
        Dense or sparse verdict for a pair (V_i, W_j)

        exc_left are the a in V_i missing (dense) or hitting (sparse) more than
        eps of W_j by nu-mass, exc_right dually; the masses are relative to
        mu(V_i) and nu(W_j).
    """

    case: str
    exc_left_mass: Fraction
    exc_right_mass: Fraction
    exc_left: VertexSet
    exc_right: VertexSet
    both_hold: bool = False

    @property
    def dense(self):
        """ True for clause (i) """
        return self.case == constants.CASE_DENSE


@dataclass(frozen=True)
class Part:
    """ Partition part with its defining formula """

    members: VertexSet
    formula: FormulaModel

    @property
    def side(self):
        """ Side of the part """
        return self.members.side


@dataclass(frozen=True)
class RegularityPartition:
    """ Partitions of V and W with a verdict for every pair of parts """

    epsilon: Fraction
    parts_left: tuple
    parts_right: tuple
    parameters: ParameterSet
    verdicts: tuple
    iterations: int
    peeled: ParameterSet = None
    merged_classes: int = 0
    eps_policy: str = constants.EPS_POLICY_STRICT

    def parts(self, side):
        """ Parts of one side """
        return self.parts_left if side is Side.LEFT else self.parts_right

    def verdict(self, left_index, right_index):
        """ Verdict for (V_i, W_j) """
        return self.verdicts[left_index][right_index]

    @property
    def shape(self):
        """ (m, n) part counts """
        return len(self.parts_left), len(self.parts_right)
