"""Level partitions and level-disjoint partition sets.

A level partition splits the vertices into ordered levels so that every
vertex has a neighbor in the previous level; broadcasting a message
level by level then satisfies the 1-in-port, no-buffer, non-repeating
model.  Several partitions with a common root that never share a level
index carry that many messages simultaneously.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, bfs_distances, bipartition, local_girth


@dataclass(frozen=True)
class LevelPartition:
    """Ordered tuple of non-empty vertex levels S_0..S_h."""

    levels: tuple[frozenset[int], ...]

    @classmethod
    def from_lists(cls, levels: Iterable[Iterable[int]]) -> "LevelPartition":
        return cls(tuple(frozenset(level) for level in levels))

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    @property
    def root(self) -> int | None:
        """The root vertex when the starting level is a singleton."""
        if len(self.levels[0]) == 1:
            return next(iter(self.levels[0]))
        return None

    def level_of(self, v: int) -> int | None:
        for i, level in enumerate(self.levels):
            if v in level:
                return i
        return None

    def support(self) -> frozenset[int]:
        return frozenset(v for level in self.levels for v in level)


@dataclass(frozen=True)
class LdpSet:
    """k level partitions sharing one root, pairwise level-disjoint."""

    root: int
    partitions: tuple[LevelPartition, ...]

    @property
    def k(self) -> int:
        return len(self.partitions)

    @property
    def max_height(self) -> int:
        return max(p.height for p in self.partitions)

    def support(self) -> frozenset[int]:
        return self.partitions[0].support()


def r_of(ldp: LdpSet, u: int) -> frozenset[int]:
    """Set of level indices at which ``u`` occurs across the partitions."""
    levels = set()
    for part in ldp.partitions:
        l = part.level_of(u)
        if l is not None:
            levels.add(l)
    return frozenset(levels)


@dataclass(frozen=True)
class Violation:
    """First property failure found by a verifier; None result means ok."""

    kind: str
    message: str
    member: int | None = None
    level: int | None = None
    vertex: int | None = None


def verify_partition(
    g: Graph,
    part: LevelPartition,
    within: frozenset[int] | None = None,
) -> Violation | None:
    """Check the level-partition invariants on g (or an induced subgraph).

    Returns None when the levels partition the vertex set and every
    vertex has a neighbor in the previous level; otherwise a report
    naming the first offending level or vertex.
    """
    universe = within if within is not None else frozenset(g.vertices)
    for v in part.support():
        if not 0 <= v < g.n:
            raise ValueError(f"partition references unknown vertex {v}")
    seen: dict[int, int] = {}
    for i, level in enumerate(part.levels):
        if not level:
            return Violation("empty-level", f"level {i} is empty", level=i)
        for v in sorted(level):
            if v not in universe:
                return Violation(
                    "foreign-vertex", f"vertex {v} is outside the graph", level=i, vertex=v
                )
            if v in seen:
                return Violation(
                    "duplicate-vertex",
                    f"vertex {v} appears in levels {seen[v]} and {i}",
                    level=i,
                    vertex=v,
                )
            seen[v] = i
    missing = universe - part.support()
    if missing:
        v = min(missing)
        return Violation("uncovered-vertex", f"vertex {v} is in no level", vertex=v)
    for i in range(1, len(part.levels)):
        prev = part.levels[i - 1]
        for v in sorted(part.levels[i]):
            if not any(w in prev for w in g.adj[v]):
                return Violation(
                    "no-previous-neighbor",
                    f"vertex {v} in level {i} has no neighbor in level {i - 1}",
                    level=i,
                    vertex=v,
                )
    return None


def verify_ldp_set(
    g: Graph,
    ldp: LdpSet,
    within: frozenset[int] | None = None,
) -> Violation | None:
    """Check a set of partitions for common root and level-disjointness.

    Pairwise disjointness is cross-checked against the per-vertex level
    counts |R(u)| = k, and in bipartite graphs every R(u) must be of a
    single parity.
    """
    for m, part in enumerate(ldp.partitions):
        inner = verify_partition(g, part, within)
        if inner is not None:
            return Violation(
                inner.kind,
                f"member {m}: {inner.message}",
                member=m,
                level=inner.level,
                vertex=inner.vertex,
            )
        if part.levels[0] != frozenset({ldp.root}):
            return Violation(
                "root",
                f"member {m} does not start at root {ldp.root}",
                member=m,
                level=0,
            )
    for i, first in enumerate(ldp.partitions):
        for j in range(i + 1, ldp.k):
            second = ldp.partitions[j]
            common_height = min(first.height, second.height)
            for level in range(1, common_height + 1):
                overlap = first.levels[level] & second.levels[level]
                if overlap:
                    v = min(overlap)
                    return Violation(
                        "level-overlap",
                        f"members {i} and {j} share vertex {v} at level {level}",
                        member=j,
                        level=level,
                        vertex=v,
                    )
    universe = within if within is not None else frozenset(g.vertices)
    for u in sorted(universe):
        sizes = len(r_of(ldp, u))
        expected = 1 if u == ldp.root else ldp.k
        if sizes != expected:
            raise RuntimeError(
                f"|R({u})| = {sizes} disagrees with pairwise level-disjointness"
            )
    if bipartition(g) is not None:
        for u in sorted(universe):
            parities = {l % 2 for l in r_of(ldp, u)}
            if len(parities) > 1:
                return Violation(
                    "parity",
                    f"vertex {u} occurs at levels of both parities",
                    vertex=u,
                )
    return None


def bfs_partition(g: Graph, v: int) -> LevelPartition:
    """The distance-layer partition from v: the single-message optimum."""
    dist = bfs_distances(g, v)
    height = max(dist)
    levels = [set() for _ in range(height + 1)]
    for u, d in enumerate(dist):
        levels[d].add(u)
    return LevelPartition(tuple(frozenset(level) for level in levels))


@dataclass(frozen=True)
class Bounds:
    """Lower bounds implied by degree, distances, and bipartiteness."""

    root: int
    k: int
    max_count: int
    ecc: int
    bipartite: bool
    height_floor: int
    distances: tuple[int, ...]

    def min_level_floor(self, u: int) -> int:
        return self.distances[u]

    def max_level_floor(self, u: int) -> int:
        spread = 2 * self.k - 2 if self.bipartite else self.k - 1
        return self.distances[u] + spread


def bounds(g: Graph, v: int, k: int) -> Bounds:
    if k < 1:
        raise ValueError("k must be at least 1")
    dist = bfs_distances(g, v)
    ecc = max(dist)
    bip = bipartition(g) is not None
    spread = 2 * k - 2 if bip else k - 1
    return Bounds(
        root=v,
        k=k,
        max_count=g.degree(v),
        ecc=ecc,
        bipartite=bip,
        height_floor=ecc + spread,
        distances=tuple(dist),
    )


@dataclass(frozen=True)
class HeightFeasibility:
    """Outcome of the eccentricity/local-girth necessary condition.

    ``feasible`` means the condition does not rule optimal height out;
    it is not a guarantee of existence.
    """

    feasible: bool
    ecc: int
    local_girth: int | None
    bipartite: bool
    required_ecc: int | None

    @property
    def witness(self) -> str:
        branch = "bipartite" if self.bipartite else "non-bipartite"
        if self.local_girth is None:
            return f"no cycle through the root ({branch} branch)"
        return (
            f"ecc {self.ecc} vs local girth {self.local_girth} - "
            f"{2 if not self.bipartite else 3} ({branch} branch)"
        )


def optimal_height_feasible(g: Graph, v: int, k: int) -> HeightFeasibility:
    """Necessary condition for k root-rooted partitions of optimal height:
    ecc(v) >= s' - 2 (non-bipartite) or s' - 3 (bipartite) for the local
    girth s' of the root.  A root on no cycle can never reach it."""
    if k < 2:
        raise ValueError("optimal_height_feasible requires k >= 2")
    dist = bfs_distances(g, v)
    ecc = max(dist)
    bip = bipartition(g) is not None
    s = local_girth(g, v)
    if s is None:
        return HeightFeasibility(False, ecc, None, bip, None)
    required = s - 3 if bip else s - 2
    return HeightFeasibility(ecc >= required, ecc, s, bip, required)


@dataclass(frozen=True)
class OptimalityReport:
    count_optimal: bool
    height_optimal: bool
    k: int
    max_count: int
    max_height: int
    height_floor: int


def is_optimal(ldp: LdpSet, g: Graph) -> OptimalityReport:
    """Compare a verified set against the degree and height floors."""
    b = bounds(g, ldp.root, ldp.k)
    return OptimalityReport(
        count_optimal=ldp.k == b.max_count,
        height_optimal=ldp.max_height == b.height_floor,
        k=ldp.k,
        max_count=b.max_count,
        max_height=ldp.max_height,
        height_floor=b.height_floor,
    )


def assert_bound_invariants(g: Graph, ldp: LdpSet) -> None:
    """Assert the degree/height/per-vertex floor inequalities that every
    valid set must satisfy; used as a fuzzing harness by the tests."""
    b = bounds(g, ldp.root, ldp.k)
    if ldp.k > b.max_count:
        raise AssertionError(f"k={ldp.k} exceeds deg(root)={b.max_count}")
    if ldp.max_height < b.height_floor:
        raise AssertionError(
            f"max height {ldp.max_height} below floor {b.height_floor}"
        )
    for u in g.vertices:
        if u == ldp.root:
            continue
        levels = r_of(ldp, u)
        if min(levels) < b.min_level_floor(u):
            raise AssertionError(f"min R({u}) below distance floor")
        if max(levels) < b.max_level_floor(u):
            raise AssertionError(f"max R({u}) below spread floor")
        if b.bipartite and len({l % 2 for l in levels}) > 1:
            raise AssertionError(f"R({u}) mixes parities in a bipartite graph")
