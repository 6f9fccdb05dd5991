"""Exhaustive backtracking oracle for rooted level-disjoint partitions.

Complete decision procedure at desk scale: since levels are non-empty,
any solution has height at most n - 1, so searching per-vertex level
tuples up to that cap decides existence.
"""

from __future__ import annotations

from collections import deque

from .graphs import Graph, bfs_distances, bipartition
from .partitions import LdpSet, LevelPartition, verify_ldp_set


def _parity_walk_distances(g: Graph, v: int) -> list[list[int]]:
    """Shortest even- and odd-length walk from v to each vertex.

    A vertex can occupy level l only if a descending witness chain of
    length l can reach the root, which is exactly a length-l walk; walks
    of one parity exist for every length down to this minimum.  Missing
    parities get an unreachable bound of 2n.
    """
    unreached = 2 * g.n
    table = [[unreached, unreached] for _ in range(g.n)]
    table[v][0] = 0
    queue = deque([(v, 0)])
    while queue:
        u, p = queue.popleft()
        for w in g.adj[u]:
            if table[w][1 - p] == unreached:
                table[w][1 - p] = table[u][p] + 1
                queue.append((w, 1 - p))
    return table


def brute_force(g: Graph, v: int, k: int, max_height: int) -> LdpSet | None:
    """First k-partition set rooted at v with heights <= max_height, in
    deterministic search order, or None when none exists.

    Vertices are assigned tuples of k distinct levels, nearest the root
    first, smallest levels first; pruning uses the neighbor-in-previous-
    level rule, the distance and spread floors, and parity-aware walk
    distances (which reduce to the bipartite parity rule on bipartite
    graphs).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph")
    dist = bfs_distances(g, v)
    ecc = max(dist)
    if max_height < ecc:
        raise ValueError(f"max_height {max_height} below eccentricity {ecc}")
    if k > g.degree(v) and g.n > 1:
        return None
    if g.n == 1:
        return None if k > 1 else LdpSet(v, (LevelPartition((frozenset({v}),)),))

    bip = bipartition(g) is not None
    spread = 2 * k - 2 if bip else k - 1
    cap = max_height
    order = sorted((u for u in g.vertices if u != v), key=lambda u: (dist[u], u))
    walk = _parity_walk_distances(g, v)

    def domain(u: int) -> list[int]:
        return [l for l in range(dist[u], cap + 1) if walk[u][l % 2] <= l]

    def tuples_for(u: int, sorted_only: bool) -> list[tuple[int, ...]]:
        values = domain(u)
        floor_max = dist[u] + spread
        out: list[tuple[int, ...]] = []

        def build(prefix: list[int]) -> None:
            if len(prefix) == k:
                if max(prefix) >= floor_max:
                    out.append(tuple(prefix))
                return
            for val in values:
                if val in prefix:
                    continue
                if sorted_only and prefix and val <= prefix[-1]:
                    continue
                prefix.append(val)
                build(prefix)
                prefix.pop()

        build([])
        return out

    choices = [tuples_for(u, sorted_only=(i == 0)) for i, u in enumerate(order)]
    level = [[-1] * g.n for _ in range(k)]
    for i in range(k):
        level[i][v] = 0

    def can_sit(w: int, l: int) -> bool:
        return 0 < l <= cap and walk[w][l % 2] <= l

    def supported(x: int, i: int) -> bool:
        lx = level[i][x]
        want = lx - 1
        for w in g.adj[x]:
            lw = level[i][w]
            if lw == want:
                return True
            if lw < 0 and w != v and can_sit(w, want):
                return True
        return False

    def place(u: int, chosen: tuple[int, ...]) -> bool:
        for i in range(k):
            level[i][u] = chosen[i]
        for i in range(k):
            if not supported(u, i):
                return False
            for w in g.adj[u]:
                if w != v and level[i][w] >= 0 and not supported(w, i):
                    return False
        return True

    def unplace(u: int) -> None:
        for i in range(k):
            level[i][u] = -1

    def solve(pos: int) -> bool:
        if pos == len(order):
            return True
        u = order[pos]
        for chosen in choices[pos]:
            if place(u, chosen):
                if solve(pos + 1):
                    return True
            unplace(u)
        return False

    if not solve(0):
        return None

    partitions = []
    for i in range(k):
        height = max(level[i])
        tiers: list[set[int]] = [set() for _ in range(height + 1)]
        for u in g.vertices:
            tiers[level[i][u]].add(u)
        partitions.append(LevelPartition(tuple(frozenset(t) for t in tiers)))
    found = LdpSet(root=v, partitions=tuple(partitions))
    bad = verify_ldp_set(g, found)
    if bad is not None:
        raise RuntimeError(f"search produced an invalid set: {bad.message}")
    return found
