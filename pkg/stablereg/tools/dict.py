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
    Dict tools
"""

from collections import OrderedDict


class BoundedMemo(OrderedDict):
    """ Memo table keeping at most `limit` most recently used items """

    def __init__(self, limit):
        super().__init__()
        self.limit = limit
        self.evictions = 0

    def __getitem__(self, key):
        value = super().__getitem__(key)
        super().move_to_end(key)
        return value

    def get(self, key, default=None):
        if key in self:
            return self[key]
        return default

    def __setitem__(self, key, value):
        super().__setitem__(key, value)
        super().move_to_end(key)
        if self.limit is not None:
            while len(self) > self.limit:
                self.popitem(last=False)
                self.evictions += 1


def recursive_merge(dict_a, dict_b):
    """ Merge dictionaries recursively, values from dict_b win """
    result = dict()
    for key in set(list(dict_a.keys()) + list(dict_b.keys())):
        if key not in dict_a:
            result[key] = dict_b[key]
        elif key not in dict_b:
            result[key] = dict_a[key]
        elif isinstance(dict_a[key], dict) and isinstance(dict_b[key], dict):
            result[key] = recursive_merge(dict_a[key], dict_b[key])
        else:
            result[key] = dict_b[key]
    return result
