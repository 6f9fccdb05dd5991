import itertools
import random

import pytest

from ldpsim import Graph, LdpSet, LevelPartition, generate


@pytest.fixture
def q3() -> Graph:
    return generate("hypercube", 3)


@pytest.fixture
def petersen() -> Graph:
    return generate("petersen")


@pytest.fixture
def fig1_pair() -> LdpSet:
    """The two Q3 partitions used throughout as a golden fixture."""
    s = LevelPartition.from_lists(
        [[0b000], [0b001], [0b011], [0b010, 0b111], [0b110], [0b100], [0b101]]
    )
    t = LevelPartition.from_lists(
        [[0b000], [0b010], [0b110], [0b100], [0b101], [0b001, 0b111], [0b011]]
    )
    return LdpSet(root=0, partitions=(s, t))


@pytest.fixture
def fig3_triple() -> LdpSet:
    """Three Q3 partitions of optimal height and count."""
    s = LevelPartition.from_lists(
        [[0b000], [0b010], [0b011], [0b001], [0b101], [0b100], [0b110], [0b111]]
    )
    t = LevelPartition.from_lists(
        [[0b000], [0b100], [0b110], [0b010, 0b111], [0b011], [0b001], [0b101]]
    )
    u = LevelPartition.from_lists(
        [[0b000], [0b001], [0b101], [0b100], [0b110], [0b010, 0b111], [0b011]]
    )
    return LdpSet(root=0, partitions=(s, t, u))


def connected_edge_subsets(n: int):
    """All labeled connected graphs on exactly n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if _spans_connected(n, edges):
            yield Graph.from_edges(n, edges)


def _spans_connected(n: int, edges) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count == 1


def random_connected_graph(rng: random.Random, max_n: int = 8) -> Graph:
    """Random connected graph: random spanning tree plus random extras."""
    n = rng.randint(2, max_n)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        a = order[rng.randint(0, i - 1)]
        b = order[i]
        edges.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.25:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_bipartite_two_connected(rng: random.Random, max_side: int = 4):
    """One random 2-connected bipartite graph, or None for a failed draw."""
    from ldpsim.blocks import is_two_connected

    a = rng.randint(2, max_side)
    b = rng.randint(2, max_side)
    edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < 0.65]
    try:
        g = Graph.from_edges(a + b, edges)
    except ValueError:
        return None
    return g if is_two_connected(g) else None
