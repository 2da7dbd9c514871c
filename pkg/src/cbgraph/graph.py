"""Simple undirected graphs with the neighborhood operations the rest of the
package is built on: restricted neighborhoods, distance-2 balls, neighborhood
comparability, and bipartiteness with verifiable witnesses.

Vertices are the integers 1..n. Graphs are immutable once constructed.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class Comparability(Enum):
    """How N_X(u) relates to N_X(v): proper subset, proper superset, equal,
    or neither."""

    SUBSET = "subset"
    SUPERSET = "superset"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"

    def comparable(self) -> bool:
        return self is not Comparability.INCOMPARABLE


class NotBipartiteError(ValueError):
    """Raised where a bipartite graph is required. Carries an induced odd
    cycle as the witness."""

    def __init__(self, odd_cycle: Iterable[int]):
        self.odd_cycle = tuple(odd_cycle)
        cyc = " ".join(str(v) for v in self.odd_cycle)
        super().__init__(f"graph is not bipartite (odd cycle: {cyc})")


class Graph:
    """Immutable simple graph on vertices 1..n.

    Adjacency lists are kept sorted; self-loops and duplicate edges are
    rejected at construction.
    """

    __slots__ = ("n", "_adj", "_nbr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        lists: list[list[int]] = [[] for _ in range(n + 1)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            lists[u].append(v)
            lists[v].append(u)
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(a)) for a in lists
        )
        self._nbr: tuple[frozenset[int], ...] = tuple(
            frozenset(a) for a in self._adj
        )

    @property
    def m(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbors of v."""
        self._check(v)
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._nbr[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj[1:]), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._nbr[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in sorted order."""
        for u in self.vertices():
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def _check(self, v: int) -> None:
        if not (1 <= v <= self.n):
            raise ValueError(f"vertex {v} out of range 1..{self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    """Result of a bipartiteness test: a 2-coloring when bipartite, otherwise
    an induced odd cycle."""

    colors: dict[int, int] | None
    odd_cycle: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.odd_cycle is None


def neighbors_in(g: Graph, x: Iterable[int], v: int) -> tuple[int, ...]:
    """Neighbors of v that lie in X, sorted ascending."""
    xs = x if isinstance(x, (set, frozenset)) else set(x)
    return tuple(u for u in g.neighbors(v) if u in xs)


def neighbors_within_2(
    g: Graph, x: Iterable[int], v: int, closed: bool = False
) -> tuple[int, ...]:
    """Vertices of X at distance 1 or 2 from v in G[X ∪ {v}], sorted.

    v itself is included exactly when closed is True.
    """
    xs = x if isinstance(x, (set, frozenset)) else set(x)
    g._check(v)
    first = [u for u in g.neighbors(v) if u in xs]
    ball: set[int] = set(first)
    for w in first:
        for u in g.neighbors(w):
            if u in xs and u != v:
                ball.add(u)
    if closed:
        ball.add(v)
    return tuple(sorted(ball))


def neighbors_within_2_ambient(
    g: Graph, v: int, closed: bool = False
) -> set[int]:
    """Vertices at distance 1 or 2 from v in the whole graph."""
    g._check(v)
    ball = set(g.neighbors(v))
    for w in g.neighbors(v):
        ball.update(g.neighbors(w))
    if closed:
        ball.add(v)
    else:
        ball.discard(v)
    return ball


def compare_neighborhoods(
    g: Graph, x: Iterable[int], u: int, v: int
) -> Comparability:
    """Relation of N_X(u) to N_X(v)."""
    if u == v:
        raise ValueError("compare_neighborhoods needs two distinct vertices")
    xs = x if isinstance(x, (set, frozenset)) else set(x)
    nu = g.neighbor_set(u) & xs
    nv = g.neighbor_set(v) & xs
    if nu == nv:
        return Comparability.EQUAL
    if nu < nv:
        return Comparability.SUBSET
    if nu > nv:
        return Comparability.SUPERSET
    return Comparability.INCOMPARABLE


def is_bipartite(g: Graph, x: Iterable[int]) -> Bipartition:
    """2-color G[X] by BFS, one component at a time in ascending vertex
    order. On failure the witness is shrunk to an induced odd cycle."""
    xs = x if isinstance(x, (set, frozenset)) else set(x)
    colors: dict[int, int] = {}
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in sorted(xs):
        if root in colors:
            continue
        colors[root] = 0
        parent[root] = 0
        depth[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for w in g.neighbors(u):
                if w not in xs:
                    continue
                if w not in colors:
                    colors[w] = 1 - colors[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif colors[w] == colors[u]:
                    cycle = _odd_cycle_from_conflict(u, w, parent, depth)
                    return Bipartition(None, _shrink_odd_cycle(g, cycle))
    return Bipartition(colors, None)


def _odd_cycle_from_conflict(
    u: int, w: int, parent: dict[int, int], depth: dict[int, int]
) -> list[int]:
    # Walk both endpoints of the conflicting edge up the BFS tree to their
    # lowest common ancestor; the tree paths plus the edge form an odd cycle.
    pu, pw = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        pu.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        pw.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        pu.append(a)
        pw.append(b)
    return pu + pw[-2::-1]


def _shrink_odd_cycle(g: Graph, cycle: list[int]) -> tuple[int, ...]:
    # Any chord splits the cycle into a shorter odd cycle and an even one;
    # keep the odd part until no chord is left.
    while True:
        size = len(cycle)
        chord = None
        for i in range(size):
            for j in range(i + 2, size):
                if i == 0 and j == size - 1:
                    continue
                if g.has_edge(cycle[i], cycle[j]):
                    chord = (i, j)
                    break
            if chord:
                break
        if chord is None:
            return tuple(cycle)
        i, j = chord
        inner = cycle[i : j + 1]
        outer = cycle[j:] + cycle[: i + 1]
        cycle = inner if len(inner) % 2 == 1 else outer
