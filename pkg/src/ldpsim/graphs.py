"""Simple undirected connected graphs with the metrics the rest of the
package relies on: BFS distances, eccentricity, girth and local girth,
bipartition, and standard generators (cycles, hypercubes, complete
bipartite graphs, grids, complete graphs, the Petersen graph).

Vertices are dense integers 0..n-1.  Graphs parsed from edge lists keep
their original labels in a sidecar name map.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphParseError(ValueError):
    """Base class for edge-list parsing and validation failures."""


class MalformedLineError(GraphParseError):
    pass


class LoopEdgeError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class DisconnectedError(GraphParseError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected undirected graph.

    ``adj[v]`` is the sorted tuple of neighbors of ``v``.  ``names``
    carries original vertex labels when the graph was built from
    non-dense input; ``None`` means labels equal ids.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        names: Sequence[str] | None = None,
    ) -> "Graph":
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        seen: set[tuple[int, int]] = set()
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise LoopEdgeError(f"loop edge at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge {key}")
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
        g = cls(
            n=n,
            adj=tuple(tuple(sorted(ns)) for ns in neighbors),
            names=tuple(names) if names is not None else None,
        )
        if not g.is_connected():
            raise DisconnectedError("graph is not connected")
        return g

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_count(self) -> int:
        return sum(len(ns) for ns in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def name_of(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = bfs_distances(self, 0)
        return all(d >= 0 for d in seen)


def bfs_distances(g: Graph, source: int, within: frozenset[int] | None = None) -> list[int]:
    """BFS distances from ``source``; unreachable vertices get -1.

    ``within`` restricts the search to an induced vertex subset.
    """
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if within is not None and w not in within:
                continue
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_path(
    g: Graph,
    source: int,
    target: int,
    allowed: frozenset[int],
) -> list[int] | None:
    """Shortest path inside ``allowed`` (lowest-id tie-break), or None."""
    if source not in allowed or target not in allowed:
        return None
    parent: dict[int, int] = {source: source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            path = [u]
            while path[-1] != source:
                path.append(parent[path[-1]])
            path.reverse()
            return path
        for w in g.adj[u]:
            if w in allowed and w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def components_without(g: Graph, v: int) -> tuple[frozenset[int], ...]:
    """Connected components of G - v, ordered by smallest member."""
    seen = [False] * g.n
    seen[v] = True
    comps: list[frozenset[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return tuple(sorted(comps, key=min))


def bipartition(
    g: Graph, within: frozenset[int] | None = None
) -> tuple[frozenset[int], frozenset[int]] | None:
    """2-coloring classes of G (or of a connected induced subgraph),
    the class of the smallest vertex first; None if an odd cycle exists.
    """
    verts = within if within is not None else frozenset(g.vertices)
    start = min(verts)
    color = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in verts:
                continue
            if w not in color:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return None
    side0 = frozenset(v for v in verts if color[v] == 0)
    side1 = frozenset(v for v in verts if color[v] == 1)
    return (side0, side1)


def local_girth(g: Graph, v: int) -> int | None:
    """Length of a shortest cycle through ``v``, or None if there is none.

    For each incident edge (v, w), the shortest cycle using that edge is
    1 + d(v, w) in the graph without it; the minimum over edges is exact.
    """
    best: int | None = None
    others = frozenset(g.vertices)
    for w in g.adj[v]:
        dist = _distance_avoiding_edge(g, v, w, others)
        if dist >= 0 and (best is None or dist + 1 < best):
            best = dist + 1
    return best


def _distance_avoiding_edge(g: Graph, source: int, target: int, within: frozenset[int]) -> int:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            return dist[u]
        for w in g.adj[u]:
            if u == source and w == target:
                continue
            if w in within and dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return -1


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for trees."""
    best: int | None = None
    for v in g.vertices:
        lg = local_girth(g, v)
        if lg is not None and (best is None or lg < best):
            best = lg
    return best


@dataclass(frozen=True)
class GraphMetrics:
    root: int
    distances: tuple[int, ...]
    ecc: int
    girth: int | None
    local_girth: int | None
    bipartition: tuple[frozenset[int], frozenset[int]] | None

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None


def metrics(g: Graph, v: int) -> GraphMetrics:
    """Distances from ``v``, eccentricity, girth, local girth, bipartition."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph")
    dist = bfs_distances(g, v)
    return GraphMetrics(
        root=v,
        distances=tuple(dist),
        ecc=max(dist),
        girth=girth(g),
        local_girth=local_girth(g, v),
        bipartition=bipartition(g),
    )


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document: one "u v" pair per line, '#' comments.

    Vertex labels are arbitrary non-negative integers; they are compacted
    to dense ids 0..n-1 (ascending label order) with the original labels
    kept as names.
    """
    raw_edges: list[tuple[int, int]] = []
    labels: set[int] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise MalformedLineError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise MalformedLineError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise LoopEdgeError(f"line {lineno}: loop edge at vertex {u}")
        raw_edges.append((u, v))
        labels.update((u, v))
    if not raw_edges:
        raise MalformedLineError("no edges in input")
    ordered = sorted(labels)
    index = {label: i for i, label in enumerate(ordered)}
    dense = ordered == list(range(len(ordered)))
    return Graph.from_edges(
        len(ordered),
        [(index[u], index[v]) for u, v in raw_edges],
        names=None if dense else [str(label) for label in ordered],
    )


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.name_of(u)} {g.name_of(v)}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def generate(family: str, *params: int) -> Graph:
    """Build a named graph family instance.

    Families: cycle(n>=3), hypercube(n>=1), complete_bipartite(a,b>=1),
    petersen, grid(m,n), complete(n>=1).
    """
    def need(count: int) -> None:
        if len(params) != count:
            raise ValueError(f"family {family!r} takes {count} parameter(s), got {len(params)}")

    if family == "cycle":
        need(1)
        n = params[0]
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "hypercube":
        need(1)
        dim = params[0]
        if dim < 1:
            raise ValueError("hypercube needs n >= 1")
        n = 1 << dim
        edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(dim) if u < u ^ (1 << b)]
        names = [format(u, f"0{dim}b") for u in range(n)]
        return Graph.from_edges(n, edges, names=names)
    if family == "complete_bipartite":
        need(2)
        a, b = params
        if a < 1 or b < 1:
            raise ValueError("complete_bipartite needs a, b >= 1")
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if family == "petersen":
        need(0)
        edges = []
        for i in range(5):
            edges.append((i, (i + 1) % 5))
            edges.append((i, i + 5))
            edges.append((5 + i, 5 + (i + 2) % 5))
        return Graph.from_edges(10, edges)
    if family == "grid":
        need(2)
        m, n = params
        if m < 1 or n < 1:
            raise ValueError("grid needs m, n >= 1")
        edges = []
        for r in range(m):
            for c in range(n):
                if c + 1 < n:
                    edges.append((r * n + c, r * n + c + 1))
                if r + 1 < m:
                    edges.append((r * n + c, (r + 1) * n + c))
        return Graph.from_edges(m * n, edges)
    if family == "complete":
        need(1)
        n = params[0]
        if n < 1:
            raise ValueError("complete needs n >= 1")
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    raise ValueError(f"unknown graph family {family!r}")
