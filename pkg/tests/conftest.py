import itertools

import pytest

from sumchoice import Budget, MemoStore, graph_from_edges
from sumchoice.graphs import Graph


@pytest.fixture(scope="session")
def memo():
    """One memo store for the whole run; records are final so sharing is safe."""
    return MemoStore()


@pytest.fixture
def budget():
    return Budget.of(seconds=300)


def perm_orbit_min(n: int, edge_mask: int, pairs: list[tuple[int, int]]) -> int:
    """Smallest edge mask in the relabeling orbit: an isomorphism oracle that
    is independent of the canonical-labeling code."""
    pair_index = {p: i for i, p in enumerate(pairs)}
    best = edge_mask
    for perm in itertools.permutations(range(n)):
        out = 0
        for i, (u, v) in enumerate(pairs):
            if edge_mask >> i & 1:
                a, b = sorted((perm[u], perm[v]))
                out |= 1 << pair_index[(a, b)]
        if out < best:
            best = out
    return best


def graph_from_mask(n: int, edge_mask: int, pairs: list[tuple[int, int]]) -> Graph:
    edges = [pairs[i] for i in range(len(pairs)) if edge_mask >> i & 1]
    return graph_from_edges(n, edges)


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))
