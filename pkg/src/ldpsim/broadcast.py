"""Synchronous multi-message broadcast schedules derived from rooted
level-disjoint partitions, plus an independent validator for the
communication model: at most one incoming message per vertex per step,
received messages forwarded only in the immediately following step,
no message resent to an informed vertex, unlimited outgoing messages,
full-duplex edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graphs import Graph
from .partitions import LdpSet, LevelPartition, verify_ldp_set


class Transmission(NamedTuple):
    sender: int
    receiver: int
    message: int


@dataclass(frozen=True)
class BroadcastTrace:
    """Per-step transmissions; steps[t - 1] holds the step-t sends."""

    root: int
    messages: int
    steps: tuple[tuple[Transmission, ...], ...]

    @property
    def makespan(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class TraceViolation:
    step: int | None
    constraint: str
    message: str


def schedule(g: Graph, ldp: LdpSet) -> BroadcastTrace:
    """Realize a verified partition set as explicit transmissions.

    Message i reaches each level-l vertex at step l from its lowest-id
    neighbor in the previous level.  The derivation itself only needs
    the neighbor rule, so a deliberately corrupted set still yields a
    trace for the validator to reject.
    """
    steps: list[list[Transmission]] = [[] for _ in range(ldp.max_height)]
    for i, part in enumerate(ldp.partitions):
        for l in range(1, part.height + 1):
            prev = part.levels[l - 1]
            for u in sorted(part.levels[l]):
                parents = [w for w in g.adj[u] if w in prev]
                if not parents:
                    raise ValueError(
                        f"vertex {u} at level {l} of member {i} has no parent"
                    )
                steps[l - 1].append(Transmission(min(parents), u, i))
    return BroadcastTrace(
        root=ldp.root,
        messages=ldp.k,
        steps=tuple(tuple(sorted(step, key=lambda tr: (tr.receiver, tr.message))) for step in steps),
    )


def validate(g: Graph, trace: BroadcastTrace) -> TraceViolation | None:
    """Check every model constraint; report the earliest violation.

    Per step: edges must exist, each vertex receives at most one
    transmission (this also rejects same-direction duplicates on an
    edge, while opposite directions stay legal: full duplex), the root
    receives nothing, and every non-root sender of a message received
    it exactly one step earlier while the root sends each message only
    at step 1.  Finally every vertex other than the root must end up
    with every message exactly once.
    """
    received: dict[tuple[int, int], int] = {}
    for t, step in enumerate(trace.steps, start=1):
        for tr in step:
            if not (0 <= tr.sender < g.n and 0 <= tr.receiver < g.n):
                return TraceViolation(t, "edge", f"unknown vertex in {tr}")
            if tr.sender == tr.receiver:
                return TraceViolation(t, "edge", f"self-send at vertex {tr.sender}")
            if not g.has_edge(tr.sender, tr.receiver):
                return TraceViolation(
                    t, "edge", f"({tr.sender}, {tr.receiver}) is not an edge"
                )
            if not 0 <= tr.message < trace.messages:
                return TraceViolation(t, "edge", f"unknown message id {tr.message}")
        receivers: set[int] = set()
        for tr in step:
            if tr.receiver in receivers:
                return TraceViolation(
                    t, "a", f"vertex {tr.receiver} receives twice at step {t}"
                )
            receivers.add(tr.receiver)
        for tr in step:
            if tr.receiver == trace.root:
                return TraceViolation(
                    t, "root-receipt", f"root {trace.root} receives at step {t}"
                )
        for tr in step:
            if tr.sender == trace.root:
                if t != 1:
                    return TraceViolation(
                        t, "b", f"root sends message {tr.message} at step {t}"
                    )
            elif received.get((tr.sender, tr.message)) != t - 1:
                return TraceViolation(
                    t,
                    "b",
                    f"vertex {tr.sender} forwards message {tr.message} at step {t} "
                    f"without receiving it at step {t - 1}",
                )
        for tr in step:
            if (tr.receiver, tr.message) in received:
                return TraceViolation(
                    t,
                    "c",
                    f"vertex {tr.receiver} receives message {tr.message} again",
                )
            received[(tr.receiver, tr.message)] = t
    for u in g.vertices:
        if u == trace.root:
            continue
        for m in range(trace.messages):
            if (u, m) not in received:
                return TraceViolation(
                    None,
                    "completeness",
                    f"vertex {u} never receives message {m}",
                )
    return None


def ldps_from_trace(g: Graph, trace: BroadcastTrace) -> LdpSet:
    """Rebuild the partition set from receipt times (left inverse of
    schedule); the trace must validate."""
    bad = validate(g, trace)
    if bad is not None:
        raise ValueError(f"trace does not validate: {bad.message}")
    receipt: dict[tuple[int, int], int] = {}
    for t, step in enumerate(trace.steps, start=1):
        for tr in step:
            receipt[(tr.receiver, tr.message)] = t
    partitions = []
    for m in range(trace.messages):
        height = max(receipt[(u, m)] for u in g.vertices if u != trace.root) if g.n > 1 else 0
        tiers: list[set[int]] = [set() for _ in range(height + 1)]
        tiers[0].add(trace.root)
        for u in g.vertices:
            if u != trace.root:
                tiers[receipt[(u, m)]].add(u)
        partitions.append(LevelPartition(tuple(frozenset(x) for x in tiers)))
    result = LdpSet(root=trace.root, partitions=tuple(partitions))
    bad2 = verify_ldp_set(g, result)
    if bad2 is not None:
        raise RuntimeError(f"trace levels do not verify: {bad2.message}")
    return result


def format_trace(trace: BroadcastTrace) -> str:
    """One line per transmission: "t sender receiver msg", sorted."""
    lines = [f"# root {trace.root} messages {trace.messages}"]
    for t, step in enumerate(trace.steps, start=1):
        for tr in sorted(step, key=lambda tr: (tr.receiver, tr.message)):
            lines.append(f"{t} {tr.sender} {tr.receiver} {tr.message}")
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> BroadcastTrace:
    root: int | None = None
    messages: int | None = None
    rows: list[tuple[int, Transmission]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            parts = stripped.split()
            if len(parts) == 5 and parts[1] == "root" and parts[3] == "messages":
                root = int(parts[2])
                messages = int(parts[4])
            continue
        parts = stripped.split()
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 't sender receiver msg'")
        t, sender, receiver, msg = (int(x) for x in parts)
        if t < 1:
            raise ValueError(f"line {lineno}: steps start at 1")
        rows.append((t, Transmission(sender, receiver, msg)))
    if root is None or messages is None:
        raise ValueError("missing '# root R messages K' header")
    horizon = max((t for t, _ in rows), default=0)
    steps: list[list[Transmission]] = [[] for _ in range(horizon)]
    for t, tr in rows:
        steps[t - 1].append(tr)
    return BroadcastTrace(
        root=root,
        messages=messages,
        steps=tuple(tuple(sorted(s, key=lambda tr: (tr.receiver, tr.message))) for s in steps),
    )
