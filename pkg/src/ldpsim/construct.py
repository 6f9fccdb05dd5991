"""Constructions of level-disjoint partition sets.

The route to two same-rooted partitions: every block at the root must be
2-connected, and each one yields a seed pair either from an odd cycle
through the root (non-bipartite blocks) or from a separating chordal
certificate (bipartite blocks).  Seeds are grown to their component by
the extension step and the components are composed level-wise.

The reverse direction is also mechanized: from any two partitions on a
bipartite graph, witness chains give two merged level-disjoint paths,
the merge-adjust procedure confines their shared vertices to a common
prefix and suffix, and the result splits into a certificate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .blocks import TWO_CONNECTED, block_decomposition
from .cycles import ChordalCertificate, CyclePath, find_separating_chordal, odd_cycle_through, validate_certificate
from .graphs import Graph, bipartition, components_without
from .partitions import LdpSet, LevelPartition, verify_ldp_set


@dataclass(frozen=True)
class ConstructionFailure:
    """Why no two partitions rooted at the requested vertex can exist.

    ``condition`` is "not-two-connected" (a failed block) or
    "no-separating-chordal-path" (a bipartite block without the needed
    cycle/chordal-path pair).
    """

    condition: str
    root: int
    block: frozenset[int]
    component: frozenset[int]

    @property
    def message(self) -> str:
        verts = ",".join(str(v) for v in sorted(self.block))
        if self.condition == "not-two-connected":
            return f"block {{{verts}}} at root {self.root} is not 2-connected"
        return (
            f"block {{{verts}}} at root {self.root} is bipartite with no "
            "separating chordal certificate"
        )


def _seed_edges(*paths: CyclePath) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for path in paths:
        for u, w in path.edge_pairs():
            adj.setdefault(u, set()).add(w)
            adj.setdefault(w, set()).add(u)
    return adj


def _check_seed(ldp: LdpSet, adj: dict[int, set[int]]) -> None:
    """Mandatory self-check of a freshly built seed against its own edges."""
    support = frozenset(adj)
    for part in ldp.partitions:
        placed: set[int] = set()
        for i, level in enumerate(part.levels):
            if not level:
                raise RuntimeError(f"seed has an empty level {i}")
            for v in level:
                if v in placed or v not in support:
                    raise RuntimeError(f"seed misplaces vertex {v}")
                placed.add(v)
            if i > 0 and any(not (adj[v] & part.levels[i - 1]) for v in level):
                raise RuntimeError(f"seed level {i} breaks the neighbor rule")
        if placed != support:
            raise RuntimeError("seed does not cover its subgraph")
        if part.levels[0] != frozenset({ldp.root}):
            raise RuntimeError("seed is not rooted")
    for i in range(ldp.k):
        for j in range(i + 1, ldp.k):
            a, b = ldp.partitions[i], ldp.partitions[j]
            for level in range(1, min(a.height, b.height) + 1):
                if a.levels[level] & b.levels[level]:
                    raise RuntimeError("seed partitions are not level-disjoint")


def two_ldps_odd_cycle(cycle: CyclePath, v: int) -> LdpSet:
    """The two traversal orders of an odd cycle through v, as singleton
    level partitions rooted at v."""
    if not cycle.closed:
        raise ValueError("two_ldps_odd_cycle needs a cycle")
    if cycle.length % 2 == 0:
        raise ValueError("two_ldps_odd_cycle needs an odd cycle")
    if v not in cycle.vertices:
        raise ValueError(f"vertex {v} is not on the cycle")
    i = cycle.vertices.index(v)
    order = cycle.vertices[i:] + cycle.vertices[:i]
    forward = LevelPartition(tuple(frozenset({x}) for x in order))
    backward = LevelPartition(
        tuple(frozenset({x}) for x in (order[0],) + tuple(reversed(order[1:])))
    )
    seed = LdpSet(root=v, partitions=(forward, backward))
    _check_seed(seed, _seed_edges(cycle))
    return seed


def two_ldps_chordal(cert: ChordalCertificate, v: int) -> LdpSet:
    """Two rooted partitions of cycle-plus-chordal-path from a certificate.

    One partition runs through the root-side arc and the chordal path
    before sweeping the far arc from both ends; the other runs the
    opposite way around.  Out-of-range labels are simply omitted.
    """
    if cert.root != v:
        raise ValueError("certificate root does not match v")
    a, b, d, p = cert.a, cert.b, cert.d, cert.p
    if not (a >= b >= 1 and d >= p >= 1 and a < b + d):
        raise ValueError("certificate is not normalized or not separating")
    cyc = cert.cycle.vertices
    path = cert.chordal_path.vertices
    if len(cyc) != a + b + d or len(path) != p + 1:
        raise ValueError("certificate lengths disagree with its sequences")

    u_lab = {i: cyc[i] for i in range(1, a + 1)}
    z_lab = {j: cyc[a + d - j] for j in range(1, d + 1)}
    w_lab = {j: cyc[a + d + (b - j)] for j in range(1, b + 1)}
    v_lab = {j: path[j] for j in range(1, p + 1)}

    h_s = max(a + d + p - 1, a + b + p - 1)
    s_levels: list[set[int]] = [{v}]
    for i in range(1, h_s + 1):
        level: set[int] = set()
        if 1 <= i <= a:
            level.add(u_lab[i])
        if a + 1 <= i <= a + p:
            level.add(v_lab[i - a])
        if i > a + p:
            if 1 <= i - a - p <= d - 1:
                level.add(z_lab[i - a - p])
            if 1 <= a + b + p - i <= b - 1:
                level.add(w_lab[a + b + p - i])
        s_levels.append(level)

    h_t = max(a + b + d - 1, b + d + p - 1)
    t_levels: list[set[int]] = [{v}]
    for i in range(1, h_t + 1):
        level = set()
        if 1 <= i <= b:
            level.add(w_lab[i])
        if b + 1 <= i <= b + d:
            level.add(z_lab[i - b])
        if i > b + d:
            if 1 <= a + b + d - i <= a - 1:
                level.add(u_lab[a + b + d - i])
            if 1 <= i - b - d <= p - 1:
                level.add(v_lab[i - b - d])
        t_levels.append(level)

    seed = LdpSet(
        root=v,
        partitions=(
            LevelPartition(tuple(frozenset(l) for l in s_levels)),
            LevelPartition(tuple(frozenset(l) for l in t_levels)),
        ),
    )
    _check_seed(seed, _seed_edges(cert.cycle, cert.chordal_path))
    return seed


def extend(
    g: Graph,
    h_vertices: frozenset[int],
    ldp: LdpSet,
    within: frozenset[int] | None = None,
) -> LdpSet:
    """Grow a rooted set from a subgraph H to the whole graph (or to
    ``within``), one uncovered vertex at a time.

    Each uncovered vertex u with a covered neighbor w other than the
    root lands one level below w in every partition, which keeps the
    partitions level-disjoint.  H must touch every component of G - v.
    """
    scope = within if within is not None else frozenset(g.vertices)
    v = ldp.root
    if v not in h_vertices or not h_vertices <= scope:
        raise ValueError("H must contain the root and lie inside the graph")
    bad = verify_ldp_set(g, ldp, within=h_vertices)
    if bad is not None:
        raise ValueError(f"seed does not verify on H: {bad.message}")
    for comp in _scope_components_without(g, v, scope):
        if not comp & h_vertices:
            raise ValueError(
                f"H misses the component of G - {v} containing vertex {min(comp)}"
            )

    layer = _multi_source_layers(g, h_vertices, scope)
    levels: list[dict[int, int]] = []
    for part in ldp.partitions:
        table: dict[int, int] = {}
        for i, level in enumerate(part.levels):
            for x in level:
                table[x] = i
        levels.append(table)
    covered = set(h_vertices)
    pending = set(scope) - covered
    while pending:
        best: tuple[int, int] | None = None
        for u in pending:
            if any(w in covered and w != v for w in g.adj[u]):
                key = (layer[u], u)
                if best is None or key < best:
                    best = key
        if best is None:
            raise RuntimeError("extension stalled with uncovered vertices left")
        u = best[1]
        witness = min(
            (w for w in g.adj[u] if w in covered and w != v),
            key=lambda w: (max(table[w] for table in levels), w),
        )
        for table in levels:
            table[u] = table[witness] + 1
        covered.add(u)
        pending.remove(u)

    parts = []
    for table in levels:
        height = max(table.values())
        tiers: list[set[int]] = [set() for _ in range(height + 1)]
        for x, l in table.items():
            tiers[l].add(x)
        parts.append(LevelPartition(tuple(frozenset(t) for t in tiers)))
    result = LdpSet(root=v, partitions=tuple(parts))
    bad = verify_ldp_set(g, result, within=scope)
    if bad is not None:
        raise RuntimeError(f"extension produced an invalid set: {bad.message}")
    return result


def _scope_components_without(
    g: Graph, v: int, scope: frozenset[int]
) -> tuple[frozenset[int], ...]:
    if scope == frozenset(g.vertices):
        return components_without(g, v)
    rest = set(scope) - {v}
    comps = []
    while rest:
        start = min(rest)
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in rest and w not in comp:
                    comp.add(w)
                    queue.append(w)
        rest -= comp
        comps.append(frozenset(comp))
    return tuple(sorted(comps, key=min))


def _multi_source_layers(g: Graph, sources: frozenset[int], scope: frozenset[int]) -> dict[int, int]:
    layer = {s: 0 for s in sources}
    queue = deque(sorted(sources))
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in scope and w not in layer:
                layer[w] = layer[u] + 1
                queue.append(w)
    return layer


def compose_components(g: Graph, parts: Sequence[LdpSet]) -> LdpSet:
    """Union same-index levels of per-component sets into one rooted set.

    The parts must share root and k, and their supports minus the root
    must partition the rest of the graph.
    """
    if not parts:
        raise ValueError("nothing to compose")
    root = parts[0].root
    k = parts[0].k
    for part in parts:
        if part.root != root:
            raise ValueError("composed parts must share one root")
        if part.k != k:
            raise ValueError("composed parts must have the same k")
    claimed: set[int] = set()
    for part in parts:
        body = set(part.support()) - {root}
        if claimed & body:
            raise ValueError("component supports overlap")
        claimed |= body
    if claimed != set(g.vertices) - {root}:
        raise ValueError("component supports do not partition the graph")

    members = []
    for j in range(k):
        height = max(part.partitions[j].height for part in parts)
        tiers: list[set[int]] = [set() for _ in range(height + 1)]
        for part in parts:
            for i, level in enumerate(part.partitions[j].levels):
                tiers[i] |= level
        members.append(LevelPartition(tuple(frozenset(t) for t in tiers)))
    result = LdpSet(root=root, partitions=tuple(members))
    bad = verify_ldp_set(g, result)
    if bad is not None:
        raise RuntimeError(f"composition produced an invalid set: {bad.message}")
    return result


def construct_two_ldps(g: Graph, v: int) -> LdpSet | ConstructionFailure:
    """Decide and construct two partitions rooted at v.

    Per component of G - v, the block at v must be 2-connected and
    either non-bipartite (odd-cycle seed) or admit a separating chordal
    certificate (chordal seed); seeds are extended component-wide and
    composed.  Failure names the first offending block and condition.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph")
    comps = components_without(g, v)
    if not comps:
        return ConstructionFailure(
            condition="not-two-connected",
            root=v,
            block=frozenset({v}),
            component=frozenset(),
        )
    dec = block_decomposition(g)
    blocks_at_v = [dec.blocks[i] for i in dec.blocks_containing(v)]
    parts: list[LdpSet] = []
    for comp in comps:
        block = next(b for b in blocks_at_v if (b - {v}) <= comp)
        kind = dec.kinds[dec.blocks.index(block)]
        if kind != TWO_CONNECTED:
            return ConstructionFailure(
                condition="not-two-connected", root=v, block=block, component=comp
            )
        if bipartition(g, block) is not None:
            cert = find_separating_chordal(g, v, within=block)
            if cert is None:
                return ConstructionFailure(
                    condition="no-separating-chordal-path",
                    root=v,
                    block=block,
                    component=comp,
                )
            seed = two_ldps_chordal(cert, v)
        else:
            cyc = odd_cycle_through(g, v, within=block)
            seed = two_ldps_odd_cycle(cyc, v)
        parts.append(extend(g, seed.support(), seed, within=comp | {v}))
    result = compose_components(g, parts)
    bad = verify_ldp_set(g, result)
    if bad is not None:
        raise RuntimeError(f"construction produced an invalid set: {bad.message}")
    return result


def _prefix_suffix(p1: Sequence[int], p2: Sequence[int]) -> tuple[int, int]:
    """Longest common prefix/suffix lengths of p1 and reversed(p2)."""
    p2r = list(reversed(p2))
    t = 0
    while t < min(len(p1), len(p2r)) and p1[t] == p2r[t]:
        t += 1
    s = 0
    while s < min(len(p1), len(p2r)) and p1[len(p1) - 1 - s] == p2r[len(p2r) - 1 - s]:
        s += 1
    return t, s


def merge_steps(
    p1: Sequence[int], p2: Sequence[int]
) -> Iterator[tuple[list[int], list[int], int, int]]:
    """Yield (p1, p2, prefix, suffix) after each rerouting round.

    The inputs must be merged (crosswise-equal endpoints) and
    level-disjoint (any shared vertex sits at different positions).
    Each round reroutes the path holding the first stray shared vertex
    at the higher position through the other path's prefix; the common
    prefix or suffix strictly lengthens, so the loop terminates with all
    shared vertices confined to the shared ends.
    """
    a = list(p1)
    b = list(p2)
    if len(a) < 2 or len(b) < 2:
        raise ValueError("paths need at least two vertices")
    if a[0] != b[-1] or a[-1] != b[0]:
        raise ValueError("paths are not merged (endpoints must cross-match)")
    _check_level_disjoint_paths(a, b)
    while True:
        t, s = _prefix_suffix(a, b)
        yield list(a), list(b), t, s
        pos_b = {x: i for i, x in enumerate(b)}
        stray = [
            (i, pos_b[x])
            for i, x in enumerate(a)
            if x in pos_b and not (i < t or i >= len(a) - s)
        ]
        if not stray:
            return
        i, j = stray[0]
        if i == j:
            raise RuntimeError("stray vertex at equal levels despite disjointness")
        if i < j:
            b = b[: j + 1] + list(reversed(a[:i]))
        else:
            a = a[: i + 1] + list(reversed(b[:j]))
        _check_level_disjoint_paths(a, b)


def _check_level_disjoint_paths(a: Sequence[int], b: Sequence[int]) -> None:
    pos_b = {x: i for i, x in enumerate(b)}
    for i, x in enumerate(a):
        if x in pos_b and pos_b[x] == i:
            raise ValueError(f"paths share vertex {x} at equal position {i + 1}")


def merge_adjust(p1: CyclePath, p2: CyclePath) -> tuple[CyclePath, CyclePath]:
    """Rewire two merged level-disjoint paths until fully merged: all
    shared vertices in the common prefix or suffix, endpoints unchanged."""
    if p1.closed or p2.closed:
        raise ValueError("merge_adjust operates on open paths")
    a: list[int] = []
    b: list[int] = []
    for a, b, _, _ in merge_steps(p1.vertices, p2.vertices):
        pass
    return CyclePath(tuple(a), closed=False), CyclePath(tuple(b), closed=False)


def extract_certificate(g: Graph, ldp: LdpSet) -> ChordalCertificate:
    """Recover a separating chordal certificate from two partitions on a
    bipartite graph.

    Witness chains through the two level structures give two merged
    level-disjoint paths between first-level neighbors of the root;
    merge-adjust confines their overlap, and the fully-merged pair folds
    into the certificate cycle and chordal path.
    """
    if bipartition(g) is None:
        raise ValueError("extract_certificate requires a bipartite graph")
    if ldp.k != 2:
        raise ValueError("extract_certificate requires exactly two partitions")
    bad = verify_ldp_set(g, ldp)
    if bad is not None:
        raise ValueError(f"input set does not verify: {bad.message}")
    v = ldp.root
    s_part, t_part = ldp.partitions
    s_level = {x: i for i, lvl in enumerate(s_part.levels) for x in lvl}
    t_level = {x: i for i, lvl in enumerate(t_part.levels) for x in lvl}

    pair = _crosswise_pair(g, v, s_part, t_part, s_level, t_level)
    if pair is None:
        raise RuntimeError("no crosswise witness chains found in a verified set")
    u1, w1 = pair
    path1 = _witness_walk(g, start=w1, goal=u1, level=s_level)
    path2 = _witness_walk(g, start=u1, goal=w1, level=t_level)
    q1, q2 = merge_adjust(
        CyclePath(tuple(reversed(path1)), closed=False),
        CyclePath(tuple(reversed(path2)), closed=False),
    )
    return _fold_certificate(g, v, list(q1.vertices), list(q2.vertices))


def _descents(g: Graph, x: int, level: dict[int, int]) -> list[int]:
    return [y for y in g.adj[x] if level.get(y) == level[x] - 1]


def _crosswise_pair(
    g: Graph,
    v: int,
    s_part: LevelPartition,
    t_part: LevelPartition,
    s_level: dict[int, int],
    t_level: dict[int, int],
) -> tuple[int, int] | None:
    """First (u, w) in S_1 x T_1 with w reachable from u by descending
    the T levels and u reachable from w by descending the S levels."""
    s_one = sorted(s_part.levels[1])
    t_one = sorted(t_part.levels[1])

    def reachable(start: int, level: dict[int, int]) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in _descents(g, x, level):
                if y != v and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    for u in s_one:
        down_t = reachable(u, t_level)
        for w in t_one:
            if w not in down_t:
                continue
            if u in reachable(w, s_level):
                return (u, w)
    return None


def _witness_walk(g: Graph, start: int, goal: int, level: dict[int, int]) -> list[int]:
    """Descend the level structure from start to goal, lowest-id witness
    among the neighbors that can still reach the goal."""
    can_reach = {goal}
    frontier = deque([goal])
    while frontier:
        x = frontier.popleft()
        for y in g.adj[x]:
            if level.get(y) == level[x] + 1 and y not in can_reach:
                can_reach.add(y)
                frontier.append(y)
    if start not in can_reach:
        raise RuntimeError("witness walk start cannot reach its goal")
    walk = [start]
    while walk[-1] != goal:
        step = min(y for y in _descents(g, walk[-1], level) if y in can_reach)
        walk.append(step)
    return walk


def _fold_certificate(g: Graph, v: int, q1: list[int], q2: list[int]) -> ChordalCertificate:
    """Split a fully-merged level-disjoint pair into cycle and chordal
    path, choosing the orientation that normalizes the arc lengths."""
    t, s = _prefix_suffix(q1, q2)
    m, n = len(q1), len(q2)
    if m - t - s < 0 or n - t - s < 0:
        raise RuntimeError("degenerate fully-merged pair")
    if m - t - s == 0 and n - t - s == 0:
        raise RuntimeError("pair covers an even cycle, impossible in bipartite graphs")
    if m - t - s + 1 > n - t - s + 1:
        q1, q2 = q2, q1
        t, s = _prefix_suffix(q1, q2)
        m, n = len(q1), len(q2)

    a, b = t, s
    d = n - t - s + 1
    p = m - t - s + 1
    prefix = q1[:t]
    suffix = q1[m - s:]
    middle = q2[s : n - t]
    chord = q1[t - 1 : m - s + 1]
    if a >= b:
        cycle_seq = [v] + prefix + list(reversed(middle)) + suffix
        path_seq = chord
    else:
        a, b = b, a
        cycle_seq = [v] + list(reversed(suffix)) + middle + list(reversed(prefix))
        path_seq = list(reversed(chord))
    if not a < b + d:
        raise RuntimeError("fully-merged pair does not separate; invariant broken")
    cert = ChordalCertificate(
        root=v,
        cycle=CyclePath(tuple(cycle_seq), closed=True),
        chordal_path=CyclePath(tuple(path_seq), closed=False),
        a=a,
        b=b,
        d=d,
        p=p,
        opposite=cycle_seq[(a + b + d) // 2],
    )
    validate_certificate(g, cert)
    return cert
