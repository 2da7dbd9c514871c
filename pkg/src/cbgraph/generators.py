"""Deterministic graph and hypergraph families for tests and benchmarks."""
from __future__ import annotations

import random
from typing import Iterable

from .graph import Graph
from .hypergraph import Hypergraph


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def star_graph(leaves: int) -> Graph:
    """Center is vertex 1."""
    return Graph(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """Sides 1..a and a+1..a+b."""
    return Graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols grid; vertex (r, c) is r*cols + c + 1 for 0-based r, c."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c + 1
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(n, edges)


def random_bipartite_graph(a: int, b: int, p: float, rng: random.Random) -> Graph:
    """Random bipartite graph with sides 1..a and a+1..a+b."""
    edges = [
        (u, a + v)
        for u in range(1, a + 1)
        for v in range(1, b + 1)
        if rng.random() < p
    ]
    return Graph(a + b, edges)


def random_bounded_degree_graph(
    n: int, max_degree: int, p: float, rng: random.Random
) -> Graph:
    """Scans vertex pairs in random order, keeping an edge with probability p
    when both endpoints still have room."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    rng.shuffle(pairs)
    deg = [0] * (n + 1)
    edges = []
    for u, v in pairs:
        if deg[u] < max_degree and deg[v] < max_degree and rng.random() < p:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
    return Graph(n, edges)


def random_chain_graph(a: int, b: int, rng: random.Random) -> Graph:
    """Random bipartite chain graph: left vertex i is joined to a prefix of
    the right side, with prefix lengths drawn at random."""
    edges = []
    for i in range(1, a + 1):
        t = rng.randint(0, b)
        edges.extend((i, a + j) for j in range(1, t + 1))
    return Graph(a + b, edges)


def path_with_pendants(n: int, rng: random.Random) -> Graph:
    """Path on 1..n with a pendant hung on each path vertex with probability
    one half; pendants take identities above n."""
    edges = [(i, i + 1) for i in range(1, n)]
    nxt = n + 1
    for v in range(1, n + 1):
        if rng.random() < 0.5:
            edges.append((v, nxt))
            nxt += 1
    return Graph(nxt - 1, edges)


def cycle_with_pendants(n: int, rng: random.Random) -> Graph:
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    nxt = n + 1
    for v in range(1, n + 1):
        if rng.random() < 0.5:
            edges.append((v, nxt))
            nxt += 1
    return Graph(nxt - 1, edges)


def random_hypergraph(
    n_vertices: int, n_edges: int, rng: random.Random
) -> Hypergraph:
    """Random hypergraph over string labels v1..vN; each hyperedge is a
    uniform nonempty subset. Duplicates collapse, so the edge count is an
    upper bound."""
    labels = [f"v{i}" for i in range(1, n_vertices + 1)]
    edges = []
    for _ in range(n_edges):
        e = [lab for lab in labels if rng.random() < 0.5]
        if not e:
            e = [rng.choice(labels)]
        edges.append(e)
    return Hypergraph(edges, labels)


def named_corpus() -> dict[str, Graph]:
    """Small named graphs used throughout the tests."""
    return {
        "P4": path_graph(4),
        "C4": cycle_graph(4),
        "C6": cycle_graph(6),
        "C8": cycle_graph(8),
        "K3": complete_graph(3),
        "K1_5": star_graph(5),
        "K2_3": complete_bipartite_graph(2, 3),
        "K3_3": complete_bipartite_graph(3, 3),
    }


def random_corpus(
    count: int,
    n_low: int,
    n_high: int,
    densities: Iterable[float],
    seed: int,
) -> list[Graph]:
    """Fixed-seed list of random graphs cycling through the densities."""
    rng = random.Random(seed)
    ds = list(densities)
    out = []
    for i in range(count):
        n = rng.randint(n_low, n_high)
        out.append(random_graph(n, ds[i % len(ds)], rng))
    return out
