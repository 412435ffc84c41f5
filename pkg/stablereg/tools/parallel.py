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
    Thread pool tools
"""

import concurrent.futures

from stablereg.tools import log


def map_ordered(func, items, threads=1):
    """ [func(item) for item in items], on a thread pool if threads > 1 """
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [func(item) for item in items]
    workers = min(threads, len(items))
    log.debug("Mapping %d items on %d threads", len(items), workers)
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
