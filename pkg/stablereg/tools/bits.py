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
    Bitset tools (Python integers as bitsets, bit i = vertex i)
"""


def full_mask(size):
    """ Bitset with the first size bits set """
    return (1 << size) - 1


def lowest_index(bits):
    """ Index of the lowest set bit, -1 for empty """
    return (bits & -bits).bit_length() - 1


def iter_bits(bits):
    """ Yield set bit indices in ascending order """
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_to_list(bits):
    """ Sorted list of set bit indices """
    return list(iter_bits(bits))


def list_to_bits(indices):
    """ Bitset from index iterable """
    bits = 0
    for index in indices:
        bits |= 1 << index
    return bits


def popcount(bits):
    """ Number of set bits """
    return bits.bit_count()
