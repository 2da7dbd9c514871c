"""Independent reference implementations and checkers used by the tests.

These deliberately retrace definitions with different code than the package,
so agreement between the two is evidence, not tautology.
"""
from __future__ import annotations

from itertools import combinations, product

from cbgraph.enumeration import candidate_set, root_state, try_child
from cbgraph.graph import Graph, compare_neighborhoods


def assert_induced_cycle(g: Graph, cycle, parity=None, min_len=None):
    """Consecutive vertices adjacent (wrapping), all distinct, no chords."""
    k = len(cycle)
    assert k >= 3
    assert len(set(cycle)) == k, f"repeated vertex in cycle {cycle}"
    if min_len is not None:
        assert k >= min_len, f"cycle {cycle} shorter than {min_len}"
    if parity == "odd":
        assert k % 2 == 1, f"cycle {cycle} is not odd"
    if parity == "even":
        assert k % 2 == 0, f"cycle {cycle} is not even"
    for i in range(k):
        assert g.has_edge(cycle[i], cycle[(i + 1) % k]), f"gap in cycle {cycle}"
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            assert not g.has_edge(cycle[i], cycle[j]), f"chord in cycle {cycle}"


def ws_members_brute(g: Graph, x) -> set[int]:
    """Weak-simplicial vertices of G[X] by the raw definition: independence
    and all-pairs comparability, via the public comparison operation."""
    xs = frozenset(x)
    out = set()
    for v in xs:
        nv = [u for u in g.neighbors(v) if u in xs]
        ok = True
        for a, b in combinations(nv, 2):
            if g.has_edge(a, b):
                ok = False
                break
            if not compare_neighborhoods(g, xs, a, b).comparable():
                ok = False
                break
        if ok:
            out.add(v)
    return out


def aws_members_brute(g: Graph, x) -> set[int]:
    xs = frozenset(x)
    out = set()
    for v in g.vertices():
        if v not in xs and v in ws_members_brute(g, xs | {v}):
            out.add(v)
    return out


def bipartite_brute(g: Graph, x) -> bool:
    """Exhaustive 2-coloring search; only for small vertex sets."""
    verts = sorted(set(x))
    assert len(verts) <= 12
    edges = [(u, v) for u, v in g.edges() if u in set(verts) and v in set(verts)]
    for colors in product((0, 1), repeat=len(verts)):
        cmap = dict(zip(verts, colors))
        if all(cmap[u] != cmap[v] for u, v in edges):
            return True
    return False


def degeneracy_brute(g: Graph) -> int:
    """Max over nonempty vertex subsets of the minimum degree inside."""
    n = g.n
    assert n <= 10
    adj = [0] * (n + 1)
    for v in g.vertices():
        for u in g.neighbors(v):
            adj[v] |= 1 << (u - 1)
    best = 0
    for mask in range(1, 1 << n):
        mind = None
        v = 1
        m = mask
        while m:
            if m & 1:
                d = bin(adj[v] & mask).count("1")
                if mind is None or d < mind:
                    mind = d
            m >>= 1
            v += 1
        if mind is not None and mind > best:
            best = mind
    return best


def walk_states(g: Graph, ranking):
    """Yield every enumeration state reachable through try_child."""
    stack = [root_state(g, ranking)]
    while stack:
        st = stack.pop()
        yield st
        for v in candidate_set(g, st, ranking):
            child = try_child(g, st, v, ranking)
            if child is not None:
                stack.append(child)
