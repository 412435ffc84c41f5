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
    Context helper
"""

import os

from stablereg import constants
from stablereg.tools import log
from stablereg.models.error import ParseError


class RunContext:
    """ Holds invocation context: arguments and resolved settings """

    def __init__(self, args=None):
        """ Initialize context instance """
        super().__init__()
        log.debug("Initializing context")
        self.args = args
        self.config = dict()
        self.settings = dict(constants.DEFAULT_SETTINGS)

    def setting(self, name, override=None):
        """ Flag value if given, else configured value """
        if override is not None:
            return override
        if name == "threads":
            return self.threads()
        return self.settings.get(name, constants.DEFAULT_SETTINGS.get(name))

    def threads(self):
        """ Worker thread count: environment beats config """
        value = os.environ.get(constants.THREADS_ENV_KEY, None)
        if value is None or not value.strip():
            return self.settings.get("threads", 1)
        try:
            threads = int(value)
        except ValueError:
            threads = 0
        if threads < 1:
            raise ParseError(f"{constants.THREADS_ENV_KEY} must be a positive integer")
        return threads
