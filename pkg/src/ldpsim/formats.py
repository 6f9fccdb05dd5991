"""On-disk formats: LDP JSON documents and DOT exports."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .broadcast import BroadcastTrace
from .graphs import Graph
from .partitions import LdpSet, LevelPartition, r_of


@dataclass(frozen=True)
class LdpDocument:
    """Parsed LDP JSON: a list of level partitions and, when every
    partition is rooted at one vertex, that root."""

    root: int | None
    partitions: tuple[LevelPartition, ...]

    def to_ldp_set(self) -> LdpSet:
        if self.root is None:
            raise ValueError("document has no root; cannot form a rooted set")
        return LdpSet(root=self.root, partitions=self.partitions)


def write_ldp_json(doc: LdpSet | LdpDocument) -> str:
    root = doc.root
    partitions = doc.partitions
    payload = {
        "root": root,
        "partitions": [
            [sorted(level) for level in part.levels] for part in partitions
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def read_ldp_json(g: Graph, text: str) -> LdpDocument:
    """Parse and range-check an LDP JSON document against a graph."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    if not isinstance(payload, dict) or "partitions" not in payload:
        raise ValueError("LDP document must be an object with a 'partitions' key")
    root = payload.get("root")
    if root is not None and not isinstance(root, int):
        raise ValueError("'root' must be an integer or null")
    if root is not None and not 0 <= root < g.n:
        raise ValueError(f"root {root} is not a vertex of the graph")
    raw = payload["partitions"]
    if not isinstance(raw, list) or not raw:
        raise ValueError("'partitions' must be a non-empty list")
    partitions = []
    for p_idx, levels in enumerate(raw):
        if not isinstance(levels, list) or not levels:
            raise ValueError(f"partition {p_idx} must be a non-empty list of levels")
        clean = []
        for l_idx, level in enumerate(levels):
            if not isinstance(level, list):
                raise ValueError(f"partition {p_idx} level {l_idx} must be a list")
            for x in level:
                if not isinstance(x, int) or not 0 <= x < g.n:
                    raise ValueError(
                        f"partition {p_idx} level {l_idx}: {x!r} is not a vertex"
                    )
            clean.append(frozenset(level))
        partitions.append(LevelPartition(tuple(clean)))
    if root is not None:
        for p_idx, part in enumerate(partitions):
            if part.levels[0] != frozenset({root}):
                raise ValueError(f"partition {p_idx} does not start at root {root}")
    return LdpDocument(root=root, partitions=tuple(partitions))


def _dot_quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def dot_graph(g: Graph, annotations: dict[int, str] | None = None) -> str:
    """Undirected DOT; annotations append a second label line per vertex."""
    lines = ["graph G {"]
    for v in g.vertices:
        label = g.name_of(v)
        if annotations and v in annotations:
            label += r"\n" + annotations[v]
        lines.append(f"  {v} [label={_dot_quote(label)}];")
    for u, w in g.edges():
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_partition(g: Graph, part: LevelPartition) -> str:
    notes = {}
    for i, level in enumerate(part.levels):
        for v in level:
            notes[v] = f"level={i}"
    return dot_graph(g, notes)


def dot_ldp_set(g: Graph, ldp: LdpSet) -> str:
    notes = {}
    for v in g.vertices:
        levels = ",".join(str(l) for l in sorted(r_of(ldp, v)))
        notes[v] = f"R={{{levels}}}"
    return dot_graph(g, notes)


def dot_trace_steps(g: Graph, trace: BroadcastTrace) -> str:
    """One digraph per step for offline visualization."""
    chunks = []
    for t, step in enumerate(trace.steps, start=1):
        lines = [f"digraph step{t} {{"]
        for v in g.vertices:
            lines.append(f"  {v} [label={_dot_quote(g.name_of(v))}];")
        for tr in step:
            lines.append(f"  {tr.sender} -> {tr.receiver} [label=\"m{tr.message}\"];")
        lines.append("}")
        chunks.append("\n".join(lines))
    return "\n".join(chunks) + "\n"
