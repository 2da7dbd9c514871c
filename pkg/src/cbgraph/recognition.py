"""Chordal bipartite recognition.

A graph is chordal bipartite when it is bipartite and has no induced cycle of
length six or more. Recognition here works by elimination: repeatedly remove
a weak-simplicial vertex; the graph is chordal bipartite iff this empties it.
Every answer carries a certificate, either the elimination order or a cycle
that can be checked edge by edge.

The brute-force oracle decides the same property by 2-coloring plus an
exhaustive chordless-cycle search over bitmask adjacency. It shares nothing
with the elimination path and exists to cross-check it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .graph import Graph, is_bipartite
from .ordering import Ranking, natural_ranking
from .weak_simplicial import is_weak_simplicial

DEFAULT_BRUTE_LIMIT = 20


@dataclass(frozen=True)
class CbeoFound:
    """Elimination order: each vertex is weak-simplicial among the vertices
    from its own position onward."""

    order: tuple[int, ...]


@dataclass(frozen=True)
class StuckResidue:
    """Nonempty vertex set with no weak-simplicial vertex."""

    vertices: tuple[int, ...]


@dataclass(frozen=True)
class OddCycle:
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class LongInducedCycle:
    cycle: tuple[int, ...]


Certificate = Union[CbeoFound, StuckResidue, OddCycle, LongInducedCycle]


def find_cbeo(
    g: Graph, x: Iterable[int], ranking: Ranking
) -> CbeoFound | StuckResidue:
    """Greedy elimination on G[X]: each round removes the highest-ranked
    weak-simplicial vertex of the residue. Deterministic for a fixed
    ranking."""
    residual = set(x)
    order: list[int] = []
    rank = ranking.rank
    while residual:
        pick = 0
        best = -1
        for v in residual:
            if rank[v] > best and is_weak_simplicial(g, residual, v):
                pick, best = v, rank[v]
        if best < 0:
            return StuckResidue(tuple(sorted(residual)))
        residual.discard(pick)
        order.append(pick)
    return CbeoFound(tuple(order))


def verify_cbeo(g: Graph, x: Iterable[int], order: Iterable[int]) -> bool:
    """Check an elimination order against the definition: it must be a
    permutation of X, and each vertex weak-simplicial among the suffix."""
    xs = frozenset(x)
    seq = tuple(order)
    if len(seq) != len(xs) or set(seq) != xs:
        raise ValueError("order is not a permutation of the vertex set")
    residual = set(xs)
    for v in seq:
        if not is_weak_simplicial(g, residual, v):
            return False
        residual.discard(v)
    return True


def is_chordal_bipartite(
    g: Graph, x: Iterable[int]
) -> tuple[bool, Certificate]:
    """Decide whether G[X] is chordal bipartite.

    Yes answers carry the elimination order; no answers carry an induced odd
    cycle or an induced cycle of length at least six.
    """
    xs = frozenset(x)
    bip = is_bipartite(g, xs)
    if not bip:
        assert bip.odd_cycle is not None
        return False, OddCycle(bip.odd_cycle)
    result = find_cbeo(g, xs, natural_ranking(g))
    if isinstance(result, CbeoFound):
        return True, result
    hole = _find_long_hole(g, result.vertices)
    if hole is None:
        raise RuntimeError(
            "internal error: stuck residue without a long induced cycle"
        )
    return False, LongInducedCycle(hole)


def is_chordal_bipartite_bruteforce(
    g: Graph, x: Iterable[int], max_vertices: int = DEFAULT_BRUTE_LIMIT
) -> bool:
    """Oracle: 2-colorability plus absence of chordless cycles of length six
    or more, checked exhaustively. Exponential in principle; refuses sets
    larger than max_vertices."""
    xs = set(x)
    if len(xs) > max_vertices:
        raise ValueError(
            f"brute-force check limited to {max_vertices} vertices, got {len(xs)}"
        )
    adj = _adj_masks(g)
    mask = 0
    for v in xs:
        mask |= 1 << (v - 1)
    return _mask_is_solution(adj, g.n, mask)


def brute_enumerate(
    g: Graph, max_vertices: int = DEFAULT_BRUTE_LIMIT
) -> set[tuple[int, ...]]:
    """All vertex subsets whose induced subgraph passes the brute-force
    check, as sorted tuples. Walks every one of the 2^n subsets."""
    if g.n > max_vertices:
        raise ValueError(
            f"brute-force enumeration limited to {max_vertices} vertices, got {g.n}"
        )
    adj = _adj_masks(g)
    n = g.n
    out: set[tuple[int, ...]] = set()
    for mask in range(1 << n):
        if _mask_is_solution(adj, n, mask):
            out.add(tuple(_mask_bits(mask)))
    return out


def _find_long_hole(
    g: Graph, x: Iterable[int], min_len: int = 6
) -> tuple[int, ...] | None:
    """Chordless cycle of length >= min_len in G[X], or None."""
    mask = 0
    for v in x:
        mask |= 1 << (v - 1)
    return _find_hole_mask(_adj_masks(g), mask, min_len)


def _adj_masks(g: Graph) -> list[int]:
    masks = [0] * (g.n + 1)
    for v in g.vertices():
        m = 0
        for u in g.neighbors(v):
            m |= 1 << (u - 1)
        masks[v] = m
    return masks


def _mask_bits(mask: int) -> list[int]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _mask_is_solution(adj: list[int], n: int, mask: int) -> bool:
    return _mask_is_bipartite(adj, mask) and _find_hole_mask(adj, mask) is None


def _mask_is_bipartite(adj: list[int], mask: int) -> bool:
    seen = 0
    col1 = 0
    for s in _mask_bits(mask):
        sbit = 1 << (s - 1)
        if seen & sbit:
            continue
        # BFS in whole layers; odd layers get color 1.
        level = sbit
        color = 0
        while level:
            seen |= level
            if color:
                col1 |= level
            nxt = 0
            for u in _mask_bits(level):
                nxt |= adj[u] & mask
            level = nxt & ~seen
            color ^= 1
    col0 = mask & ~col1
    for u in _mask_bits(mask):
        mine = col1 if col1 & (1 << (u - 1)) else col0
        if adj[u] & mine:
            return False
    return True


def _find_hole_mask(
    adj: list[int], mask: int, min_len: int = 6
) -> tuple[int, ...] | None:
    """First chordless cycle of length >= min_len inside the masked vertex
    set, as a vertex tuple in cycle order, or None."""
    for a in _mask_bits(mask):
        abit = 1 << (a - 1)
        above = mask & ~((abit << 1) - 1)  # vertices greater than a
        if not adj[a] & above:
            continue
        found = _hole_dfs(adj, a, abit, above, min_len)
        if found is not None:
            return found
    return None


def _hole_dfs(
    adj: list[int], a: int, abit: int, allowed: int, min_len: int
) -> tuple[int, ...] | None:
    # Grow induced paths from a through vertices above it; a path closing
    # back to a with no internal chord is a hole.
    start_nbrs = _mask_bits(adj[a] & allowed)
    for b in start_nbrs:
        stack = [([a, b], abit | (1 << (b - 1)))]
        while stack:
            path, pmask = stack.pop()
            t = path[-1]
            internal = pmask & ~(1 << (t - 1)) & ~abit
            ext = adj[t] & allowed & ~pmask
            for w in _mask_bits(ext):
                wadj = adj[w]
                if wadj & internal:
                    continue
                if wadj & abit:
                    if len(path) + 1 >= min_len:
                        return tuple(path + [w])
                    continue
                stack.append((path + [w], pmask | (1 << (w - 1))))
    return None
