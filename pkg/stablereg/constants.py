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
    Constants
"""

from fractions import Fraction


TOOL_NAME = "stablereg"
TOOL_VERSION = "1.0"

LOG_FORMAT = "%(asctime)s - %(levelname)8s - %(name)s - %(message)s"
LOG_DATE_FORMAT = "%Y.%m.%d %H:%M:%S %Z"

DEFAULT_CONFIG_PATH = "stablereg.yaml"
DEFAULT_CONFIG_ENV_KEY = "STABLEREG_CONFIG"
THREADS_ENV_KEY = "STABLEREG_THREADS"

CONFIG_VERSION_KEY = "config_version"
CURRENT_CONFIG_VERSION = 1

# Exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_INVALID_EPSILON = 3
EXIT_INVALID_MEASURE = 4
EXIT_ITERATION_CAP = 5
EXIT_SHAPE_MISMATCH = 6
EXIT_PART_TOO_LARGE = 7

# Epsilon policies
EPS_POLICY_STRICT = "strict"
EPS_POLICY_PERMISSIVE = "permissive"
EPS_POLICIES = [EPS_POLICY_STRICT, EPS_POLICY_PERMISSIVE]
# Above this bound both clauses of a pair may hold at once
STRICT_EPSILON_BOUND = Fraction(29, 100)
PERMISSIVE_EPSILON_BOUND = Fraction(1, 2)

# Verdict cases
CASE_DENSE = "dense"
CASE_SPARSE = "sparse"

# Delta-regularity modes
DELTA_MODE_EXHAUSTIVE = "exhaustive"
DELTA_MODE_SAMPLED = "sampled"
DELTA_MODE_AUTO = "auto"
DELTA_MODES = [DELTA_MODE_AUTO, DELTA_MODE_EXHAUSTIVE, DELTA_MODE_SAMPLED]
EXHAUSTIVE_PART_LIMIT = 12

# Seeded generator identifier
PRNG_NAME = "PCG64"

DEFAULT_SETTINGS = {
    "max_iterations": None,
    "eps_policy": EPS_POLICY_STRICT,
    "peel_singletons": False,
    "threads": 1,
    "rank_memo_limit": 100000,
    "sqrt_precision": 10 ** 9,
    "delta_mode": DELTA_MODE_AUTO,
    "delta_budget": 100000,
    "delta_seed": 0,
    "max_violations": 100,
    "max_k": 8,
}
