"""Cycles through a vertex and separating chordal-path certificates.

A certificate packages a root cycle C = (v A u, u D w, w B v) together
with a chordal path u P w whose endpoints split C so that v and the
vertex opposite v lie on different arcs.  Certificates witness the
bipartite half of the two-partition existence characterization.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .blocks import is_two_connected
from .graphs import Graph, bfs_path, bipartition


@dataclass(frozen=True)
class CyclePath:
    """A path or cycle as a sequence of distinct vertices.

    Closed sequences do not repeat the first vertex; ``length`` counts
    edges (including the closing edge for cycles).
    """

    vertices: tuple[int, ...]
    closed: bool

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("empty vertex sequence")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertices must be distinct")
        if self.closed and len(self.vertices) < 3:
            raise ValueError("cycles need at least 3 vertices")

    @property
    def length(self) -> int:
        return len(self.vertices) if self.closed else len(self.vertices) - 1

    def reverse(self) -> "CyclePath":
        if self.closed:
            return CyclePath((self.vertices[0],) + tuple(reversed(self.vertices[1:])), True)
        return CyclePath(tuple(reversed(self.vertices)), False)

    def edge_pairs(self) -> list[tuple[int, int]]:
        pairs = [(self.vertices[i], self.vertices[i + 1]) for i in range(len(self.vertices) - 1)]
        if self.closed:
            pairs.append((self.vertices[-1], self.vertices[0]))
        return pairs

    def is_valid_in(self, g: Graph) -> bool:
        return all(g.has_edge(u, w) for u, w in self.edge_pairs())


@dataclass(frozen=True)
class ChordalCertificate:
    """Root cycle plus separating chordal path, in normalized orientation.

    ``cycle.vertices[0]`` is the root, the chordal-path endpoints sit at
    cycle positions ``a`` and ``a + d``, and a >= b, d >= p, a < b + d.
    """

    root: int
    cycle: CyclePath
    chordal_path: CyclePath
    a: int
    b: int
    d: int
    p: int
    opposite: int

    @property
    def u(self) -> int:
        return self.chordal_path.vertices[0]

    @property
    def w(self) -> int:
        return self.chordal_path.vertices[-1]


def separates_arithmetically(a: int, b: int, d: int) -> bool:
    """Separation test on normalized arc lengths (requires a >= b)."""
    if a < b:
        raise ValueError("normalization a >= b required")
    return a < b + d


def separates_combinatorially(cycle_len: int, x: int, y: int) -> bool:
    """True when the root and its opposite vertex fall on different arcs
    of the cycle split at positions ``x < y`` (root at position 0)."""
    if not 1 <= x < y <= cycle_len - 1:
        raise ValueError("endpoint positions must avoid the root")
    half = cycle_len // 2
    if cycle_len % 2 != 0:
        raise ValueError("opposite vertex defined only on even cycles")
    return x < half < y


def validate_certificate(g: Graph, cert: ChordalCertificate) -> None:
    """Raise ValueError unless every certificate invariant holds in g."""
    cyc = cert.cycle
    path = cert.chordal_path
    if not cyc.closed or path.closed:
        raise ValueError("certificate needs a closed cycle and an open path")
    length = cyc.length
    if length % 2 != 0:
        raise ValueError("certificate cycle must be even")
    if cyc.vertices[0] != cert.root:
        raise ValueError("cycle must be anchored at the root")
    if length != cert.a + cert.b + cert.d:
        raise ValueError("arc lengths do not sum to the cycle length")
    if not (cert.a >= cert.b >= 1 and cert.d >= cert.p >= 1):
        raise ValueError("arc lengths violate normalization")
    if path.length != cert.p:
        raise ValueError("chordal path length disagrees with p")
    if cyc.vertices[cert.a] != path.vertices[0]:
        raise ValueError("chordal path must start at cycle position a")
    if cyc.vertices[cert.a + cert.d] != path.vertices[-1]:
        raise ValueError("chordal path must end at cycle position a+d")
    if set(path.vertices) & set(cyc.vertices) != {path.vertices[0], path.vertices[-1]}:
        raise ValueError("chordal path interior must avoid the cycle")
    if cert.opposite != cyc.vertices[length // 2]:
        raise ValueError("opposite vertex mismatch")
    if not cyc.is_valid_in(g) or not path.is_valid_in(g):
        raise ValueError("certificate uses non-edges")
    arith = separates_arithmetically(cert.a, cert.b, cert.d)
    comb = separates_combinatorially(length, cert.a, cert.a + cert.d)
    if arith != comb:
        raise RuntimeError("separation tests disagree on a certificate")
    if not arith:
        raise ValueError("chordal path does not separate root and opposite")


def cycles_through(
    g: Graph,
    v: int,
    within: frozenset[int] | None = None,
    max_length: int | None = None,
) -> list[tuple[int, ...]]:
    """All simple cycles through v up to ``max_length`` edges, anchored at
    v, one orientation each, sorted by (length, vertex sequence)."""
    vset = frozenset(within) if within is not None else frozenset(g.vertices)
    cap = max_length if max_length is not None else len(vset)
    found: list[tuple[int, ...]] = []
    path = [v]
    on_path = {v}

    def walk(u: int) -> None:
        for w in g.adj[u]:
            if w not in vset:
                continue
            if w == v:
                if len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
                continue
            if w in on_path or len(path) >= cap:
                continue
            path.append(w)
            on_path.add(w)
            walk(w)
            path.pop()
            on_path.remove(w)

    walk(v)
    found.sort(key=lambda c: (len(c), c))
    return found


def odd_cycle_through(g: Graph, v: int, within: frozenset[int] | None = None) -> CyclePath:
    """An odd cycle containing v in a 2-connected non-bipartite graph."""
    verts = sorted(within) if within is not None else list(g.vertices)
    vset = frozenset(verts)
    if v not in vset:
        raise ValueError(f"vertex {v} not in graph")
    if not is_two_connected(g, vset):
        raise ValueError("odd_cycle_through requires a 2-connected graph")
    base = _any_odd_cycle(g, verts)
    if base is None:
        raise ValueError("odd_cycle_through requires a non-bipartite graph")
    if v in base:
        return _anchor_cycle(base, v)
    first, second = _two_disjoint_paths_to_cycle(g, v, vset, base)
    return _combine_paths_with_arc(base, first, second)


def _any_odd_cycle(g: Graph, verts: list[int]) -> list[int] | None:
    """First odd cycle by BFS parity edge; None when bipartite."""
    vset = set(verts)
    root = verts[0]
    parent: dict[int, int | None] = {root: None}
    depth = {root: 0}
    queue = deque([root])
    order = [root]
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in vset:
                continue
            if w not in depth:
                depth[w] = depth[u] + 1
                parent[w] = u
                queue.append(w)
                order.append(w)
    for u in order:
        for w in g.adj[u]:
            if w not in vset or w <= u:
                continue
            if depth[u] % 2 == depth[w] % 2:
                up_u = _path_to_root(parent, u)
                up_w = _path_to_root(parent, w)
                common = 0
                while (
                    common < min(len(up_u), len(up_w))
                    and up_u[len(up_u) - 1 - common] == up_w[len(up_w) - 1 - common]
                ):
                    common += 1
                seg_u = up_u[: len(up_u) - common + 1]
                seg_w = up_w[: len(up_w) - common]
                return list(reversed(seg_u)) + seg_w
    return None


def _path_to_root(parent: dict[int, int | None], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])  # type: ignore[arg-type]
    return path


def _anchor_cycle(seq: list[int], v: int) -> CyclePath:
    i = seq.index(v)
    rotated = seq[i:] + seq[:i]
    reverse = [rotated[0]] + list(reversed(rotated[1:]))
    return CyclePath(tuple(min(rotated, reverse)), closed=True)


def _two_disjoint_paths_to_cycle(
    g: Graph, v: int, vset: frozenset[int], cycle: list[int]
) -> tuple[list[int], list[int]]:
    """Two internally disjoint v-to-cycle paths meeting the cycle only at
    their endpoints (unit-capacity vertex flow, two augmentations)."""
    con = set(cycle)
    source = ("s", -1)
    sink = ("t", -1)
    capacity: dict[tuple[str, int], dict[tuple[str, int], int]] = {}
    residual: dict[tuple[str, int], dict[tuple[str, int], int]] = {}

    def add_arc(x: tuple[str, int], y: tuple[str, int]) -> None:
        capacity.setdefault(x, {})[y] = 1
        residual.setdefault(x, {})[y] = 1
        residual.setdefault(y, {}).setdefault(x, 0)

    for x in vset:
        if x == v or x in con:
            continue
        add_arc(("i", x), ("o", x))
    for c in con:
        add_arc(("c", c), sink)
    for x in g.adj[v]:
        if x not in vset:
            continue
        add_arc(source, ("c", x) if x in con else ("i", x))
    for x in vset:
        if x == v or x in con:
            continue
        for y in g.adj[x]:
            if y not in vset or y == v:
                continue
            add_arc(("o", x), ("c", y) if y in con else ("i", y))

    flow = 0
    for _ in range(2):
        prev: dict[tuple[str, int], tuple[str, int]] = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            node = queue.popleft()
            for nxt in sorted(residual.get(node, {})):
                if residual[node][nxt] > 0 and nxt not in prev:
                    prev[nxt] = node
                    queue.append(nxt)
        if sink not in prev:
            break
        node = sink
        while node != source:
            residual[prev[node]][node] -= 1
            residual[node][prev[node]] += 1
            node = prev[node]
        flow += 1
    if flow < 2:
        raise RuntimeError("2-connected graph must admit two disjoint paths to a cycle")

    def net_flow(x: tuple[str, int], y: tuple[str, int]) -> int:
        return capacity.get(x, {}).get(y, 0) - residual.get(x, {}).get(y, 0)

    paths: list[list[int]] = []
    for first in sorted(capacity[source]):
        if net_flow(source, first) != 1:
            continue
        residual[source][first] = 1
        path = [v]
        node = first
        while True:
            kind, x = node
            if kind == "c":
                path.append(x)
                break
            if kind == "i":
                path.append(x)
            nxt = None
            for cand in sorted(capacity.get(node, {})):
                if net_flow(node, cand) == 1:
                    nxt = cand
                    break
            if nxt is None:
                raise RuntimeError("flow decomposition failed")
            residual[node][nxt] = 1
            node = nxt
        paths.append(path)
    if len(paths) != 2:
        raise RuntimeError("flow decomposition failed")
    return paths[0], paths[1]


def _combine_paths_with_arc(cycle: list[int], p1: list[int], p2: list[int]) -> CyclePath:
    """Join two disjoint root-to-cycle paths with the cycle arc of the
    parity that makes the whole thing an odd cycle."""
    length = len(cycle)
    ix = cycle.index(p1[-1])
    iy = cycle.index(p2[-1])
    forward = [cycle[(ix + t) % length] for t in range((iy - ix) % length + 1)]
    backward = [cycle[(ix - t) % length] for t in range((ix - iy) % length + 1)]
    for arc in (forward, backward):
        total = (len(p1) - 1) + (len(p2) - 1) + (len(arc) - 1)
        if total % 2 == 1:
            seq = p1 + arc[1:] + list(reversed(p2[1:-1]))
            return _anchor_cycle(seq, p1[0])
    raise RuntimeError("no odd closing arc found")


def find_separating_chordal(
    g: Graph,
    v: int,
    within: frozenset[int] | None = None,
    max_cycle_length: int | None = None,
) -> ChordalCertificate | None:
    """Search a 2-connected bipartite graph for a root cycle with a
    chordal path separating v from its opposite vertex.

    Cycles through v are enumerated shortest first; for each pair of
    cycle positions a shortest chordal path is taken from BFS.  Returns
    the first normalized certificate, or None when no cycle admits a
    separating chordal path (complete once the length cap reaches the
    vertex count).
    """
    verts = sorted(within) if within is not None else list(g.vertices)
    vset = frozenset(verts)
    if v not in vset:
        raise ValueError(f"vertex {v} not in graph")
    if not is_two_connected(g, vset):
        raise ValueError("find_separating_chordal requires a 2-connected graph")
    if bipartition(g, vset) is None:
        raise ValueError("find_separating_chordal requires a bipartite graph")

    for cyc in cycles_through(g, v, vset, max_cycle_length):
        length = len(cyc)
        off_cycle = vset - set(cyc)
        for x in range(1, length - 1):
            for y in range(x + 1, length):
                u, w = cyc[x], cyc[y]
                allowed = off_cycle | {u, w}
                path = bfs_path(g, u, w, frozenset(allowed))
                if path is None:
                    continue
                d = y - x
                p = len(path) - 1
                flip = x < length - y
                a, b = (length - y, x) if flip else (x, length - y)
                arith = separates_arithmetically(a, b, d)
                comb = separates_combinatorially(length, x, y)
                if arith != comb:
                    raise RuntimeError("separation tests disagree during search")
                if not arith or p > d:
                    continue
                if flip:
                    cycle_seq = (cyc[0],) + tuple(reversed(cyc[1:]))
                    path_seq = tuple(reversed(path))
                else:
                    cycle_seq = cyc
                    path_seq = tuple(path)
                cert = ChordalCertificate(
                    root=v,
                    cycle=CyclePath(tuple(cycle_seq), closed=True),
                    chordal_path=CyclePath(path_seq, closed=False),
                    a=a,
                    b=b,
                    d=d,
                    p=p,
                    opposite=cyc[length // 2],
                )
                validate_certificate(g, cert)
                return cert
    return None
