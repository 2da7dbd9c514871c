"""Enumeration of all chordal bipartite induced subgraphs of a graph.

The solutions form a family tree: the parent of a nonempty solution X is X
minus its highest-ranked weak-simplicial vertex, and the root is the empty
set. Depth-first traversal of that tree emits every solution exactly once,
in preorder, trying candidates in ascending rank.

A child of X can only add a vertex that is addable (in AWS(X)) and either
ranked above the vertex pv(X) that X itself last added, or within distance
two of it. That candidate set is small, and each attempt is settled by the
incremental WS update: the attempt succeeds iff the added vertex ends up
highest-ranked among the new weak-simplicial set.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .graph import Graph, neighbors_within_2_ambient
from .ordering import Ranking
from .weak_simplicial import (
    RankedVertexSet,
    compute_aws,
    compute_ws,
    delta_ws,
    update_aws,
)

ROOT_PV = 0  # sentinel "previous vertex" of the empty solution, below every rank


@dataclass(slots=True, eq=False)
class EnumState:
    """One node of the family tree: the solution, its weak-simplicial set,
    its addable set, and the vertex whose addition created it."""

    x: frozenset[int]
    ws: RankedVertexSet
    aws: RankedVertexSet
    pv: int


@dataclass
class EnumStats:
    solutions: int = 0
    attempts: int = 0
    rejections: int = 0
    max_depth: int = 0
    max_waste: int = 0


@dataclass(frozen=True)
class WasteReport:
    """Per-state difference between candidates tried and children found."""

    max_waste: int
    bound: int
    wastes: tuple[int, ...]
    stats: EnumStats


def root_state(g: Graph, ranking: Ranking) -> EnumState:
    empty: frozenset[int] = frozenset()
    return EnumState(
        empty,
        compute_ws(g, empty, ranking),
        compute_aws(g, empty, ranking),
        ROOT_PV,
    )


def parent_of(
    g: Graph, x: Iterable[int], ranking: Ranking
) -> tuple[frozenset[int], int]:
    """Parent of a nonempty solution and the vertex removed to reach it."""
    xs = frozenset(x)
    if not xs:
        raise ValueError("the empty set has no parent")
    ws = compute_ws(g, xs, ranking)
    if not ws:
        raise ValueError("set has no weak-simplicial vertex; not a solution")
    p = ws.max_rank_vertex()
    return xs - {p}, p


def candidate_set(g: Graph, st: EnumState, ranking: Ranking) -> tuple[int, ...]:
    """Vertices worth trying as additions to st.x, in ascending rank: every
    addable vertex ranked at least pv, plus addable vertices within ambient
    distance two of pv. At the root, every addable vertex."""
    if st.pv == ROOT_PV:
        return tuple(st.aws)
    rank = ranking.rank
    floor = rank[st.pv]
    tail = st.aws.suffix_from_rank(floor)
    low = [
        u
        for u in neighbors_within_2_ambient(g, st.pv)
        if u in st.aws and rank[u] < floor
    ]
    low.sort(key=rank.__getitem__)
    return tuple(low) + tail


def try_child(
    g: Graph, st: EnumState, v: int, ranking: Ranking
) -> EnumState | None:
    """Attempt the child st.x ∪ {v}. Succeeds iff v is the highest-ranked
    weak-simplicial vertex there, which makes st.x its parent. st is never
    modified."""
    ws_y = st.ws.replace(remove=delta_ws(g, st.x, v, st.ws), add=v)
    if ws_y.max_rank_vertex() != v:
        return None
    aws_y = update_aws(g, st.x, v, st.aws, ranking)
    return EnumState(st.x | {v}, ws_y, aws_y, v)


class _Frame:
    __slots__ = ("state", "cands", "cand_size", "children")

    def __init__(self, state: EnumState, cands: tuple[int, ...]):
        self.state = state
        self.cands = iter(cands)
        self.cand_size = len(cands)
        self.children = 0


def enumerate_solutions(
    g: Graph,
    ranking: Ranking,
    sink: Callable[[tuple[int, ...]], None] | None = None,
    limit: int | None = None,
    waste_log: list[int] | None = None,
) -> EnumStats:
    """Walk the family tree depth-first and report statistics.

    Every solution, the empty set included, is passed to sink as a sorted
    vertex tuple, in preorder. A limit stops the walk after that many
    solutions (waste figures are then partial).
    """
    stats = EnumStats()
    if limit is not None and limit <= 0:
        return stats

    def emit(state: EnumState) -> bool:
        stats.solutions += 1
        if sink is not None:
            sink(tuple(sorted(state.x)))
        return limit is None or stats.solutions < limit

    root = root_state(g, ranking)
    go_on = emit(root)
    stack = [_Frame(root, candidate_set(g, root, ranking))]
    while stack and go_on:
        frame = stack[-1]
        v = next(frame.cands, None)
        if v is None:
            waste = frame.cand_size - frame.children
            if waste > stats.max_waste:
                stats.max_waste = waste
            if waste_log is not None:
                waste_log.append(waste)
            stack.pop()
            continue
        stats.attempts += 1
        child = try_child(g, frame.state, v, ranking)
        if child is None:
            stats.rejections += 1
            continue
        frame.children += 1
        go_on = emit(child)
        stack.append(_Frame(child, candidate_set(g, child, ranking)))
        if len(stack) - 1 > stats.max_depth:
            stats.max_depth = len(stack) - 1
    return stats


def waste_bound_report(g: Graph, ranking: Ranking) -> WasteReport:
    """Full enumeration that records the waste of every state.

    Under a degeneracy ranking the waste never exceeds 2*k*max_degree; that
    is checked here and reported either way.
    """
    wastes: list[int] = []
    stats = enumerate_solutions(g, ranking, waste_log=wastes)
    bound = 2 * ranking.k * g.max_degree()
    report = WasteReport(
        max(wastes, default=0), bound, tuple(wastes), stats
    )
    if ranking.source == "degeneracy" and report.max_waste > bound:
        raise AssertionError(
            f"waste {report.max_waste} exceeds bound {bound} under degeneracy ranking"
        )
    return report
