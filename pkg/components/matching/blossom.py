"""
Edmonds' blossom algorithm for maximum-cardinality matching in general graphs.

Blossoms are contracted implicitly through the ``base`` array instead of
building contracted graph copies, giving O(V^3) time overall.
"""
from collections import deque
from typing import Deque, List, Sequence

UNMATCHED = -1


class BlossomMatcher:

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        self._adjacency = adjacency
        self._n = len(adjacency)
        self.mate: List[int] = [UNMATCHED] * self._n

    def run(self) -> List[int]:
        self._greedy_start()
        for root in range(self._n):
            if self.mate[root] == UNMATCHED:
                end = self._find_augmenting_path(root)
                if end != UNMATCHED:
                    self._augment(end)
        return self.mate

    def _greedy_start(self) -> None:
        for u in range(self._n):
            if self.mate[u] != UNMATCHED:
                continue
            for v in self._adjacency[u]:
                if self.mate[v] == UNMATCHED:
                    self.mate[u] = v
                    self.mate[v] = u
                    break

    def _augment(self, end: int) -> None:
        v = end
        while v != UNMATCHED:
            pv = self._parent[v]
            ppv = self.mate[pv]
            self.mate[v] = pv
            self.mate[pv] = v
            v = ppv

    def _lowest_common_ancestor(self, a: int, b: int) -> int:
        seen = [False] * self._n
        while True:
            a = self._base[a]
            seen[a] = True
            if self.mate[a] == UNMATCHED:
                break
            a = self._parent[self.mate[a]]
        while True:
            b = self._base[b]
            if seen[b]:
                return b
            b = self._parent[self.mate[b]]

    def _mark_path(self, v: int, base: int, child: int) -> None:
        while self._base[v] != base:
            self._in_blossom[self._base[v]] = True
            self._in_blossom[self._base[self.mate[v]]] = True
            self._parent[v] = child
            child = self.mate[v]
            v = self._parent[self.mate[v]]

    def _find_augmenting_path(self, root: int) -> int:
        n = self._n
        self._parent = [UNMATCHED] * n
        self._base = list(range(n))
        used = [False] * n
        used[root] = True
        queue: Deque[int] = deque([root])
        while queue:
            v = queue.popleft()
            for to in self._adjacency[v]:
                if self._base[v] == self._base[to] or self.mate[v] == to:
                    continue
                if to == root or (self.mate[to] != UNMATCHED and self._parent[self.mate[to]] != UNMATCHED):
                    # Odd cycle through v and to: contract it onto its base.
                    current_base = self._lowest_common_ancestor(v, to)
                    self._in_blossom = [False] * n
                    self._mark_path(v, current_base, to)
                    self._mark_path(to, current_base, v)
                    for i in range(n):
                        if self._in_blossom[self._base[i]]:
                            self._base[i] = current_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif self._parent[to] == UNMATCHED:
                    self._parent[to] = v
                    if self.mate[to] == UNMATCHED:
                        return to
                    used[self.mate[to]] = True
                    queue.append(self.mate[to])
        return UNMATCHED
