"""Vertex rankings.

A ranking is a bijection from vertices to positions 1..n together with the
number k bounding how many lower-ranked neighbors any vertex can have. The
degeneracy ranking ranks vertices in reverse order of min-degree peeling, so
k is the degeneracy of the graph.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class Ranking:
    """rank[v] is the position of v; rank[0] is a sentinel below every real
    position, used for the root of the enumeration tree."""

    rank: tuple[int, ...]
    k: int
    source: str

    @property
    def n(self) -> int:
        return len(self.rank) - 1

    def rank_of(self, v: int) -> int:
        return self.rank[v]

    def order(self) -> tuple[int, ...]:
        """Vertices sorted by ascending rank."""
        return tuple(sorted(range(1, self.n + 1), key=self.rank.__getitem__))


def degeneracy_ranking(g: Graph) -> Ranking:
    """Peel a minimum-degree vertex repeatedly (smallest vertex on ties); the
    i-th vertex removed gets rank n - i + 1.

    Every vertex then has at most k lower-ranked neighbors, where k is the
    maximum degree seen at a removal (the degeneracy).
    """
    n = g.n
    deg = [0] * (n + 1)
    for v in g.vertices():
        deg[v] = g.degree(v)
    heap: list[tuple[int, int]] = [(deg[v], v) for v in g.vertices()]
    heapq.heapify(heap)
    removed = [False] * (n + 1)
    rank = [0] * (n + 1)
    k = 0
    taken = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        taken += 1
        rank[v] = n - taken + 1
        k = max(k, d)
        for u in g.neighbors(v):
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return Ranking(tuple(rank), k, "degeneracy")


def natural_ranking(g: Graph) -> Ranking:
    """Rank each vertex by its own identity; k is whatever lower-neighbor
    bound that ordering happens to give."""
    rank = tuple(range(g.n + 1))
    k = 0
    for v in g.vertices():
        k = max(k, sum(1 for u in g.neighbors(v) if u < v))
    return Ranking(rank, k, "natural")
