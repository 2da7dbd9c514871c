"""Hypergraphs and beta-acyclicity.

A vertex of a hypergraph is a beta-leaf when the hyperedges containing it
form an inclusion chain. Beta-acyclicity is equivalent to the existence of
an elimination ordering by beta-leaves, and also to the incidence graph
being chordal bipartite, which lets the graph machinery decide it. A brute
search for beta-cycles is included for cross-checking on tiny inputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Hashable, Iterable, Sequence

from .graph import Graph
from .recognition import is_chordal_bipartite
from .weak_simplicial import is_weak_simplicial

Label = Hashable

DEFAULT_BRUTE_EDGE_LIMIT = 8


class Hypergraph:
    """Immutable hypergraph: an ordered universe of labels and a sequence of
    nonempty hyperedges over it. Duplicate hyperedges collapse to the first
    occurrence."""

    __slots__ = ("universe", "edges")

    def __init__(
        self,
        edges: Iterable[Iterable[Label]],
        universe: Sequence[Label] | None = None,
    ):
        dedup: list[frozenset[Label]] = []
        seen: set[frozenset[Label]] = set()
        for e in edges:
            fe = frozenset(e)
            if not fe:
                raise ValueError("empty hyperedge")
            if fe not in seen:
                seen.add(fe)
                dedup.append(fe)
        self.edges: tuple[frozenset[Label], ...] = tuple(dedup)
        if universe is None:
            found: list[Label] = []
            have: set[Label] = set()
            for fe in self.edges:
                for v in sorted(fe, key=repr):
                    if v not in have:
                        have.add(v)
                        found.append(v)
            self.universe: tuple[Label, ...] = tuple(found)
        else:
            uni = tuple(universe)
            if len(set(uni)) != len(uni):
                raise ValueError("universe contains duplicates")
            cover = set(uni)
            for fe in self.edges:
                missing = fe - cover
                if missing:
                    raise ValueError(f"hyperedge uses labels outside the universe: {missing}")
            self.universe = uni

    def edges_with(self, v: Label) -> tuple[frozenset[Label], ...]:
        """Hyperedges containing v, in edge order."""
        return tuple(e for e in self.edges if v in e)

    def without_vertex(self, v: Label) -> Hypergraph:
        """Remove v from the universe and every hyperedge; emptied and newly
        duplicate hyperedges are dropped."""
        if v not in self.universe:
            raise ValueError(f"label {v!r} is not in the universe")
        new_edges = [e - {v} for e in self.edges]
        return Hypergraph(
            (e for e in new_edges if e),
            tuple(u for u in self.universe if u != v),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.universe == other.universe and self.edges == other.edges

    def __repr__(self) -> str:
        return f"Hypergraph(|V|={len(self.universe)}, |E|={len(self.edges)})"


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite incidence graph of a hypergraph. Universe labels take the
    identities 1..|V| in universe order; hyperedges take the next |E|
    identities in edge order."""

    graph: Graph
    vertex_ids: dict[Label, int]
    edge_ids: tuple[int, ...]

    def label_of(self, vid: int) -> Label:
        for lab, i in self.vertex_ids.items():
            if i == vid:
                return lab
        raise KeyError(vid)


def incidence_graph(h: Hypergraph) -> IncidenceGraph:
    nv = len(h.universe)
    vertex_ids = {lab: i + 1 for i, lab in enumerate(h.universe)}
    edge_ids = tuple(nv + j + 1 for j in range(len(h.edges)))
    edges = []
    for j, e in enumerate(h.edges):
        ej = edge_ids[j]
        for lab in e:
            edges.append((vertex_ids[lab], ej))
    return IncidenceGraph(
        Graph(nv + len(h.edges), edges), vertex_ids, edge_ids
    )


def is_beta_leaf(h: Hypergraph, v: Label) -> bool:
    """Whether the hyperedges containing v form an inclusion chain. True for
    vertices in no hyperedge."""
    if v not in h.universe:
        raise ValueError(f"label {v!r} is not in the universe")
    chain = sorted(h.edges_with(v), key=len)
    for small, large in zip(chain, chain[1:]):
        if not small <= large:
            return False
    return True


def beta_elimination_ordering(h: Hypergraph) -> tuple[Label, ...] | None:
    """Eliminate beta-leaves until the universe empties, taking the first
    beta-leaf in universe order each round. None when no elimination exists
    (some residual has no beta-leaf)."""
    order: list[Label] = []
    cur = h
    while cur.universe:
        leaf = None
        for v in cur.universe:
            if is_beta_leaf(cur, v):
                leaf = v
                break
        if leaf is None:
            return None
        order.append(leaf)
        cur = cur.without_vertex(leaf)
    return tuple(order)


def is_beta_acyclic(
    h: Hypergraph,
    method: str = "incidence",
    max_edges: int = DEFAULT_BRUTE_EDGE_LIMIT,
) -> bool:
    """Decide beta-acyclicity.

    method "incidence" tests the incidence graph for chordal bipartiteness,
    "elimination" looks for a beta-leaf elimination ordering, and "brute"
    searches exhaustively for a beta-cycle (tiny inputs only).
    """
    if method == "incidence":
        ig = incidence_graph(h)
        verdict, _ = is_chordal_bipartite(ig.graph, ig.graph.vertices())
        return verdict
    if method == "elimination":
        return beta_elimination_ordering(h) is not None
    if method == "brute":
        if len(h.edges) > max_edges:
            raise ValueError(
                f"brute method limited to {max_edges} hyperedges, got {len(h.edges)}"
            )
        return not _has_beta_cycle(h)
    raise ValueError(f"unknown method {method!r}")


def beta_leaf_weak_simplicial_bridge(h: Hypergraph, v: Label) -> tuple[bool, bool]:
    """The beta-leaf test for v next to the weak-simplicial test for v's
    incidence vertex; the two always agree."""
    ig = incidence_graph(h)
    vid = ig.vertex_ids[v]
    every = frozenset(ig.graph.vertices())
    return is_beta_leaf(h, v), is_weak_simplicial(ig.graph, every, vid)


def _has_beta_cycle(h: Hypergraph) -> bool:
    """Exhaustive search over distinct-edge cycles of length >= 3. After
    subtracting the common intersection of the chosen edges, cyclically
    consecutive edges must intersect, every other pair must be disjoint,
    and distinct vertices must thread the consecutive intersections."""
    edges = h.edges
    idx = range(len(edges))
    for k in range(3, len(edges) + 1):
        for combo in permutations(idx, k):
            if combo[0] != min(combo):
                continue  # rotations
            if combo[1] > combo[-1]:
                continue  # reflections
            chosen = [edges[i] for i in combo]
            common = frozenset.intersection(*chosen)
            primed = [e - common for e in chosen]
            links = []
            ok = True
            for i in range(k):
                s = primed[i] & primed[(i + 1) % k]
                if not s:
                    ok = False
                    break
                links.append(s)
            if not ok:
                continue
            for i in range(k):
                for j in range(i + 2, k):
                    if i == 0 and j == k - 1:
                        continue
                    if primed[i] & primed[j]:
                        ok = False
                        break
                if not ok:
                    break
            if ok and _distinct_representatives(links):
                return True
    return False


def _distinct_representatives(sets: list[frozenset[Label]]) -> bool:
    """Whether each set can be assigned its own distinct element."""
    order = sorted(range(len(sets)), key=lambda i: len(sets[i]))
    used: set[Label] = set()

    def place(i: int) -> bool:
        if i == len(order):
            return True
        for x in sets[order[i]]:
            if x not in used:
                used.add(x)
                if place(i + 1):
                    return True
                used.discard(x)
        return False

    return place(0)
