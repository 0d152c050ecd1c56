from collections import deque
from typing import Deque, Dict, Generic, Hashable, List, Tuple, TypeVar

THLeft = TypeVar("THLeft", bound=Hashable)
THRight = TypeVar("THRight", bound=Hashable)

INFINITY = -1


class HopcroftKarp(Generic[THLeft, THRight]):
    """Hopcroft-Karp maximum matching on a bipartite graph given as a
    mapping from left vertices to lists of right vertices.

    Iteration follows the order of the input mapping and lists, so the
    matching returned is reproducible.
    """

    def __init__(self, graph_left: Dict[THLeft, List[THRight]]):
        self._graph_left = graph_left
        self._left: List[THLeft] = list(graph_left.keys())
        self._pair_left: Dict[THLeft, THRight] = {}
        self._pair_right: Dict[THRight, THLeft] = {}
        self._dist_left: Dict[THLeft, int] = {}
        self._reference_distance = INFINITY

    def get_maximum_matching(self) -> Dict[THLeft, THRight]:
        return self.get_maximum_matching_num()[1]

    def get_maximum_matching_num(self) -> Tuple[int, Dict[THLeft, THRight]]:
        self._pair_left.clear()
        self._pair_right.clear()
        matchings = 0
        while self._bfs():
            for left in self._left:
                if left not in self._pair_left and self._dfs(left):
                    matchings += 1
        return matchings, dict(self._pair_left)

    def _bfs(self) -> bool:
        queue: Deque[THLeft] = deque()
        for left in self._left:
            if left not in self._pair_left:
                self._dist_left[left] = 0
                queue.append(left)
            else:
                self._dist_left[left] = INFINITY
        self._reference_distance = INFINITY
        while queue:
            left = queue.popleft()
            distance = self._dist_left[left]
            if self._reference_distance != INFINITY and distance >= self._reference_distance:
                continue
            for right in self._graph_left[left]:
                partner = self._pair_right.get(right)
                if partner is None:
                    if self._reference_distance == INFINITY:
                        self._reference_distance = distance + 1
                elif self._dist_left[partner] == INFINITY:
                    self._dist_left[partner] = distance + 1
                    queue.append(partner)
        return self._reference_distance != INFINITY

    def _dfs(self, left: THLeft) -> bool:
        # Iterative layered DFS; recursion depth would otherwise grow with the path length.
        stack = [(left, iter(self._graph_left[left]))]
        path: List[Tuple[THLeft, THRight]] = []
        while stack:
            vertex, candidates = stack[-1]
            advanced = False
            for right in candidates:
                partner = self._pair_right.get(right)
                if partner is None:
                    if self._dist_left[vertex] + 1 == self._reference_distance:
                        path.append((vertex, right))
                        for l, r in path:
                            self._pair_left[l] = r
                            self._pair_right[r] = l
                        return True
                elif self._dist_left[partner] == self._dist_left[vertex] + 1:
                    path.append((vertex, right))
                    stack.append((partner, iter(self._graph_left[partner])))
                    advanced = True
                    break
            if not advanced:
                self._dist_left[vertex] = INFINITY
                stack.pop()
                if path:
                    path.pop()
        return False
