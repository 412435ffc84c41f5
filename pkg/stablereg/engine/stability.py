#!/usr/bin/python3
# coding=utf-8
# pylint: disable=I0011,R0903,R0913

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
    Stability diagnostics: ladder index and splitting rank
"""

from stablereg import constants
from stablereg.tools import log
from stablereg.tools.bits import full_mask, iter_bits, popcount
from stablereg.tools.dict import BoundedMemo
from stablereg.models.certificate import LadderCertificate, LadderIndex, RankNode, RankResult
from stablereg.models.error import EmptyInput


class LadderSearch:
    """
        Backtracking search for a k-ladder

        Choices are interleaved a_1, b_1, a_2, b_2, ... and two pools are kept:
        left vertices non-adjacent to every chosen b (candidates for the next a)
        and right vertices adjacent to every chosen a (candidates for the
        current and all later b). Distinctness follows from the pattern itself.
    """

    def __init__(self, graph, k):
        self.graph = graph
        self.k = k
        self.refuted = set()
        self.nodes = 0

    def run(self):
        """ Return (a_seq, b_seq) or None """
        a_seq = list()
        b_seq = list()
        if self._place(0, full_mask(self.graph.n_left), full_mask(self.graph.n_right), a_seq, b_seq):
            return a_seq, b_seq
        return None

    def _place(self, index, a_pool, b_pool, a_seq, b_seq):
        state = (index, a_pool, b_pool)
        if state in self.refuted:
            return False
        remaining = self.k - index
        rows = self.graph.rows
        cols = self.graph.cols
        for left in iter_bits(a_pool):
            b_next = b_pool & rows[left]
            # a_i must see b_i .. b_k
            if popcount(b_next) < remaining:
                continue
            for right in iter_bits(b_next):
                self.nodes += 1
                a_next = a_pool & ~cols[right]
                if remaining > 1 and popcount(a_next) < remaining - 1:
                    continue
                a_seq.append(left)
                b_seq.append(right)
                if remaining == 1 or self._place(index + 1, a_next, b_next, a_seq, b_seq):
                    return True
                a_seq.pop()
                b_seq.pop()
        self.refuted.add(state)
        return False


def has_ladder(graph, k):
    """ Verified k-ladder certificate or None, exhaustive """
    if k < 1:
        raise ValueError("Ladder length must be positive")
    search = LadderSearch(graph, k)
    found = search.run()
    log.debug("Ladder search k=%d: %s after %d nodes", k, "found" if found else "refuted", search.nodes)
    if found is None:
        return None
    return LadderCertificate.checked(graph, *found)


def ladder_index(graph, max_k=constants.DEFAULT_SETTINGS["max_k"]):
    """ Largest k <= max_k admitting a ladder """
    if max_k < 1:
        raise ValueError("Ladder cap must be positive")
    best = None
    for k in range(1, max_k + 1):
        certificate = has_ladder(graph, k)
        if certificate is None:
            return LadderIndex(k - 1, best, False)
        best = certificate
    return LadderIndex(max_k, best, True)


class RankSearch:
    """
        Splitting rank of subsets of one side

        rank(A) is 0 if no opposite vertex splits A, otherwise the maximum over
        splitting b of 1 + min(rank(A & N(b)), rank(A - N(b))). Values are
        memoized on the exact bitset; rank(A) >= n needs |A| >= 2^n.
    """

    def __init__(self, graph, side, memo_limit=constants.DEFAULT_SETTINGS["rank_memo_limit"]):
        self.graph = graph
        self.side = side
        self.splitters = graph.adjacency(side.opposite)
        self.memo = BoundedMemo(memo_limit)

    def solve(self, bits):
        """ (rank, splitting parameter or None) """
        cached = self.memo.get(bits)
        if cached is not None:
            return cached
        ceiling = popcount(bits).bit_length() - 1
        best = 0
        best_param = None
        seen = set()
        for param, splitter in enumerate(self.splitters):
            if best >= ceiling:
                break
            hit = bits & splitter
            if not hit or hit == bits:
                continue
            miss = bits ^ hit
            key = min(hit, miss)
            if key in seen:
                continue
            seen.add(key)
            need = 1 << best
            if popcount(hit) < need or popcount(miss) < need:
                continue
            hit_rank = self.solve(hit)[0]
            if hit_rank < best:
                continue
            value = 1 + min(hit_rank, self.solve(miss)[0])
            if value > best:
                best = value
                best_param = param
        result = (best, best_param)
        self.memo[bits] = result
        return result

    def tree(self, bits, depth):
        """ Complete splitting tree of given depth, depth <= rank(bits) """
        if depth == 0:
            return None
        _, param = self.solve(bits)
        splitter = self.splitters[param]
        return RankNode(
            param,
            self.tree(bits & splitter, depth - 1),
            self.tree(bits & ~splitter, depth - 1),
        )


def splitting_rank(graph, start, memo_limit=constants.DEFAULT_SETTINGS["rank_memo_limit"]):
    """ Splitting rank of a nonempty vertex set with a witness tree """
    if start.is_empty():
        raise EmptyInput("Splitting rank needs a nonempty start set")
    search = RankSearch(graph, start.side, memo_limit)
    with log.stage("splitting rank of %d %s vertices", len(start), start.side.value):
        value, _ = search.solve(start.bits)
        tree = search.tree(start.bits, value)
    log.debug("Rank memo: %d entries, %d evictions", len(search.memo), search.memo.evictions)
    return RankResult(value, tree, start.side)
