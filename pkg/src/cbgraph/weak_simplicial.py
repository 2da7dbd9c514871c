"""Weak-simplicial vertex tests and incremental maintenance of the sets the
enumeration walks over.

A vertex v is weak-simplicial in G[X] when N_X(v) is an independent set and
the neighborhoods N_X(u) of its neighbors form an inclusion chain. WS(X) is
the set of weak-simplicial vertices of G[X]; AWS(X) holds the vertices
outside X that become weak-simplicial the moment they are added.

Adding one vertex v to X only disturbs WS/AWS membership within distance two
of v, so both sets can be updated by local rules instead of recomputation:

* a member u adjacent to v survives unless some neighbor w of u has a
  neighborhood incomparable with v's after the addition;
* a member u at distance two survives unless u has neighbors w1 (adjacent to
  v) and w2 (not adjacent to v) with N(w1) properly contained in N(w2), since
  v then lands in w1's neighborhood only and breaks the chain.

The rules assume X induces a chordal bipartite graph and v is addable; the
callers in the enumeration guarantee that, and the bundled tests check the
updates against recomputation at every reached state.
"""
from __future__ import annotations

from bisect import bisect_left, insort
from typing import Iterable

from .graph import Graph, NotBipartiteError, is_bipartite
from .ordering import Ranking


class RankedVertexSet:
    """Immutable vertex set kept sorted by ascending rank.

    The maximum-rank member is the last entry, so taking it is O(1); edits
    produce a new set.
    """

    __slots__ = ("_rank", "_verts", "_members")

    def __init__(
        self,
        rank: tuple[int, ...],
        verts: tuple[int, ...],
        members: frozenset[int],
    ):
        self._rank = rank
        self._verts = verts
        self._members = members

    @classmethod
    def from_iterable(cls, ranking: Ranking, verts: Iterable[int]) -> RankedVertexSet:
        rank = ranking.rank
        vs = tuple(sorted(set(verts), key=rank.__getitem__))
        return cls(rank, vs, frozenset(vs))

    def __contains__(self, v: int) -> bool:
        return v in self._members

    def __iter__(self):
        return iter(self._verts)

    def __len__(self) -> int:
        return len(self._verts)

    def __bool__(self) -> bool:
        return bool(self._verts)

    def max_rank_vertex(self) -> int:
        if not self._verts:
            raise ValueError("empty set has no maximum")
        return self._verts[-1]

    def suffix_from_rank(self, floor: int) -> tuple[int, ...]:
        """Members whose rank is at least floor, ascending."""
        i = bisect_left(self._verts, floor, key=self._rank.__getitem__)
        return self._verts[i:]

    def replace(
        self, remove: Iterable[int] = (), add: int | None = None
    ) -> RankedVertexSet:
        dead = set(remove)
        vs = [u for u in self._verts if u not in dead]
        if add is not None and add not in self._members:
            insort(vs, add, key=self._rank.__getitem__)
        tup = tuple(vs)
        return RankedVertexSet(self._rank, tup, frozenset(tup))

    def ids(self) -> tuple[int, ...]:
        """Members sorted by identity (not rank)."""
        return tuple(sorted(self._members))

    def members(self) -> frozenset[int]:
        return self._members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RankedVertexSet):
            return NotImplemented
        return self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"RankedVertexSet({list(self._verts)})"


def is_weak_simplicial(g: Graph, x: Iterable[int], v: int) -> bool:
    """Whether v is weak-simplicial in G[X]. v must be a member of X."""
    xs = x if isinstance(x, (set, frozenset)) else set(x)
    if v not in xs:
        raise ValueError(f"vertex {v} is not in the induced set")
    nv = [u for u in g.neighbors(v) if u in xs]
    if len(nv) <= 1:
        return True
    nv_set = frozenset(nv)
    for u in nv:
        if g.neighbor_set(u) & nv_set:
            return False
    # A family of sets is a chain iff, sorted by size, each consecutive pair
    # is nested.
    nbhds = sorted((g.neighbor_set(u) & xs for u in nv), key=len)
    for small, large in zip(nbhds, nbhds[1:]):
        if not small <= large:
            return False
    return True


def is_bipartite_chain(g: Graph, x: Iterable[int]) -> bool:
    """Whether G[X] is a bipartite chain graph: bipartite, with the
    neighborhoods on each side of the 2-coloring totally ordered by
    inclusion.

    Raises NotBipartiteError when G[X] is not bipartite.
    """
    xs = x if isinstance(x, (set, frozenset)) else set(x)
    bip = is_bipartite(g, xs)
    if not bip:
        raise NotBipartiteError(bip.odd_cycle)
    assert bip.colors is not None
    for side in (0, 1):
        nbhds = sorted(
            (g.neighbor_set(v) & xs for v in xs if bip.colors[v] == side),
            key=len,
        )
        for small, large in zip(nbhds, nbhds[1:]):
            if not small <= large:
                return False
    return True


def is_weak_simplicial_via_chain(g: Graph, x: Iterable[int], v: int) -> bool:
    """Equivalent test to is_weak_simplicial on chordal bipartite inputs:
    v is weak-simplicial iff its closed distance-2 ball induces a bipartite
    chain graph. Propagates NotBipartiteError from the chain test."""
    xs = x if isinstance(x, (set, frozenset)) else set(x)
    if v not in xs:
        raise ValueError(f"vertex {v} is not in the induced set")
    first = [u for u in g.neighbors(v) if u in xs]
    ball: set[int] = set(first)
    for w in first:
        for u in g.neighbors(w):
            if u in xs:
                ball.add(u)
    ball.add(v)
    return is_bipartite_chain(g, ball)


def compute_ws(g: Graph, x: Iterable[int], ranking: Ranking) -> RankedVertexSet:
    """WS(X) from scratch, sorted by rank."""
    xs = x if isinstance(x, (set, frozenset)) else set(x)
    return RankedVertexSet.from_iterable(
        ranking, (v for v in xs if is_weak_simplicial(g, xs, v))
    )


def compute_aws(g: Graph, x: Iterable[int], ranking: Ranking) -> RankedVertexSet:
    """AWS(X) from scratch: vertices outside X that are weak-simplicial in
    G[X ∪ {v}], sorted by rank."""
    xs = set(x)
    out = []
    for v in g.vertices():
        if v in xs:
            continue
        xs.add(v)
        if is_weak_simplicial(g, xs, v):
            out.append(v)
        xs.discard(v)
    return RankedVertexSet.from_iterable(ranking, out)


def _size_in(g: Graph, w: int, xs, cache: dict[int, int]) -> int:
    s = cache.get(w)
    if s is None:
        s = sum(1 for z in g.neighbors(w) if z in xs)
        cache[w] = s
    return s


def delta_ws(
    g: Graph, x: Iterable[int], v: int, ws: RankedVertexSet
) -> tuple[int, ...]:
    """Members of WS(X) that stop being weak-simplicial when v joins X.

    Assumes X induces a chordal bipartite graph, v is outside X with
    X ∪ {v} still chordal bipartite, and ws == WS(X). Only vertices within
    distance two of v in G[X ∪ {v}] are examined.
    """
    xs = x if isinstance(x, (set, frozenset)) else set(x)
    ball1 = [u for u in g.neighbors(v) if u in xs]
    ball1_set = frozenset(ball1)
    nv_y = ball1_set  # N(v) within X ∪ {v}
    removed: list[int] = []
    comp_cache: dict[int, bool] = {}
    size_cache: dict[int, int] = {}

    def comparable_with_v(w: int) -> bool:
        c = comp_cache.get(w)
        if c is None:
            nw = {z for z in g.neighbors(w) if z in xs or z == v}
            c = nw <= nv_y or nv_y <= nw
            comp_cache[w] = c
        return c

    for u in ball1:
        if u in ws and any(
            not comparable_with_v(w) for w in g.neighbors(u) if w in xs
        ):
            removed.append(u)

    seen: set[int] = set()
    for w in ball1:
        for u in g.neighbors(w):
            if u not in xs or u == v or u in ball1_set or u in seen:
                continue
            seen.add(u)
            if u not in ws:
                continue
            # u keeps every neighbor it had; the chain over their
            # neighborhoods breaks iff some v-adjacent neighbor's
            # neighborhood sits properly inside a non-adjacent one's.
            min_adj = None
            max_non = None
            for w2 in g.neighbors(u):
                if w2 not in xs:
                    continue
                s = _size_in(g, w2, xs, size_cache)
                if w2 in ball1_set:
                    if min_adj is None or s < min_adj:
                        min_adj = s
                else:
                    if max_non is None or s > max_non:
                        max_non = s
            if min_adj is not None and max_non is not None and min_adj < max_non:
                removed.append(u)
    return tuple(sorted(removed))


def delta_aws(
    g: Graph, x: Iterable[int], v: int, aws: RankedVertexSet
) -> tuple[int, ...]:
    """Members of AWS(X) (other than v) that stop being addable when v joins
    X. Same preconditions as delta_ws, with aws == AWS(X); the membership
    test for u is taken in G[X ∪ {u, v}]."""
    xs = x if isinstance(x, (set, frozenset)) else set(x)
    nbrs_v = g.neighbor_set(v)
    removed: list[int] = []
    size_cache: dict[int, int] = {}

    for u in g.neighbors(v):
        if u not in aws or u == v:
            continue
        # Z = X ∪ {u, v}; u leaves when some neighbor w of u in X is
        # incomparable with v inside G[Z].
        nv_z = {z for z in g.neighbors(v) if z in xs or z == u}
        gone = False
        for w in g.neighbors(u):
            if w not in xs:
                continue
            nw_z = {z for z in g.neighbors(w) if z in xs or z == u or z == v}
            if not (nw_z <= nv_z or nv_z <= nw_z):
                gone = True
                break
        if gone:
            removed.append(u)

    ball1x = [w for w in g.neighbors(v) if w in xs]
    seen: set[int] = set()
    for w in ball1x:
        for u in g.neighbors(w):
            if u == v or u in nbrs_v or u in seen:
                continue
            seen.add(u)
            if u not in aws:
                continue
            # Distance-two rule in G[X ∪ {u, v}]; every neighbor of u gains
            # u uniformly, so proper inclusions among their X-neighborhoods
            # decide the break exactly as in delta_ws.
            min_adj = None
            max_non = None
            for w2 in g.neighbors(u):
                if w2 not in xs:
                    continue
                s = _size_in(g, w2, xs, size_cache)
                if w2 in nbrs_v:
                    if min_adj is None or s < min_adj:
                        min_adj = s
                else:
                    if max_non is None or s > max_non:
                        max_non = s
            if min_adj is not None and max_non is not None and min_adj < max_non:
                removed.append(u)
    return tuple(sorted(removed))


def update_ws(
    g: Graph,
    x: Iterable[int],
    v: int,
    ws: RankedVertexSet,
    ranking: Ranking,
) -> RankedVertexSet:
    """WS(X ∪ {v}) built from WS(X): drop the delta, insert v."""
    return ws.replace(remove=delta_ws(g, x, v, ws), add=v)


def update_aws(
    g: Graph,
    x: Iterable[int],
    v: int,
    aws: RankedVertexSet,
    ranking: Ranking,
) -> RankedVertexSet:
    """AWS(X ∪ {v}) built from AWS(X): drop the delta and v itself, which is
    now a member of the induced set."""
    dead = list(delta_aws(g, x, v, aws))
    dead.append(v)
    return aws.replace(remove=dead)
