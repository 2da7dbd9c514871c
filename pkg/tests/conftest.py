import random

import pytest

from cbgraph.generators import (
    named_corpus,
    random_bipartite_graph,
    random_chain_graph,
    random_corpus,
    random_hypergraph,
)

CORPUS_SEED = 20250822


@pytest.fixture(scope="session")
def named():
    return named_corpus()


@pytest.fixture(scope="session")
def corpus_n8(named):
    """Named graphs plus 504 fixed-seed random graphs with n <= 8 across
    edge densities 0.2 / 0.4 / 0.6."""
    return list(named.values()) + random_corpus(
        504, 1, 8, (0.2, 0.4, 0.6), seed=CORPUS_SEED
    )


@pytest.fixture(scope="session")
def corpus_n10_extra():
    return random_corpus(36, 9, 10, (0.2, 0.4, 0.6), seed=CORPUS_SEED + 1)


@pytest.fixture(scope="session")
def corpus_n12(corpus_n8):
    return corpus_n8 + random_corpus(
        160, 9, 12, (0.2, 0.4, 0.6), seed=CORPUS_SEED + 2
    )


@pytest.fixture(scope="session")
def chain_graphs():
    rng = random.Random(CORPUS_SEED + 3)
    return [
        random_chain_graph(rng.randint(1, 6), rng.randint(1, 6), rng)
        for _ in range(200)
    ]


@pytest.fixture(scope="session")
def bipartite_graphs():
    """Random bipartite graphs with their generating side sizes."""
    rng = random.Random(CORPUS_SEED + 4)
    out = []
    for _ in range(400):
        a, b = rng.randint(1, 4), rng.randint(1, 4)
        out.append((a, b, random_bipartite_graph(a, b, rng.choice((0.3, 0.5, 0.7)), rng)))
    return out


@pytest.fixture(scope="session")
def small_hypergraphs():
    rng = random.Random(CORPUS_SEED + 5)
    return [
        random_hypergraph(rng.randint(1, 6), rng.randint(1, 6), rng)
        for _ in range(300)
    ]
