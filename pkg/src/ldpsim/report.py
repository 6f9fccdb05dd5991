"""Report rendering: a per-vertex CSV plus matplotlib figures.

Figures use a radial layout (distance shell from the root as radius),
which makes broadcast waves read outward from the center.
"""

from __future__ import annotations

import csv
import io
import math
import os

from .broadcast import BroadcastTrace
from .graphs import Graph, bfs_distances
from .partitions import LdpSet, bounds, r_of

_PNG_METADATA = {"Software": "ldpsim"}


def _layout(g: Graph, root: int) -> dict[int, tuple[float, float]]:
    dist = bfs_distances(g, root)
    shells: dict[int, list[int]] = {}
    for v in sorted(g.vertices):
        shells.setdefault(dist[v], []).append(v)
    pos: dict[int, tuple[float, float]] = {}
    for d, members in sorted(shells.items()):
        if d == 0:
            for v in members:
                pos[v] = (0.0, 0.0)
            continue
        for idx, v in enumerate(members):
            angle = 2 * math.pi * idx / len(members) + d * 0.35
            pos[v] = (d * math.cos(angle), d * math.sin(angle))
    return pos


def _draw_graph(ax, g: Graph, pos, colors, title: str) -> None:
    for u, w in g.edges():
        xs = (pos[u][0], pos[w][0])
        ys = (pos[u][1], pos[w][1])
        ax.plot(xs, ys, color="0.75", linewidth=1.0, zorder=1)
    xs = [pos[v][0] for v in g.vertices]
    ys = [pos[v][1] for v in g.vertices]
    ax.scatter(xs, ys, c=colors, cmap="viridis", s=260, zorder=2, edgecolors="black")
    for v in g.vertices:
        ax.annotate(
            g.name_of(v),
            pos[v],
            ha="center",
            va="center",
            fontsize=7,
            zorder=3,
            color="white",
        )
    ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")


def render_report(
    g: Graph,
    root: int,
    k: int,
    out_dir: str,
    ldp: LdpSet | None = None,
    trace: BroadcastTrace | None = None,
) -> list[str]:
    """Write report.csv and the figures into ``out_dir``; return paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(out_dir, exist_ok=True)
    written: list[str] = []

    csv_path = os.path.join(out_dir, "report.csv")
    with open(csv_path, "w", newline="") as fh:
        fh.write(vertex_table_csv(g, root, k, ldp, trace))
    written.append(csv_path)

    pos = _layout(g, root)
    dist = bfs_distances(g, root)

    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    _draw_graph(ax, g, pos, [dist[v] for v in g.vertices], f"distance from {g.name_of(root)}")
    fig.tight_layout()
    graph_path = os.path.join(out_dir, "graph.png")
    fig.savefig(graph_path, dpi=120, metadata=_PNG_METADATA)
    plt.close(fig)
    written.append(graph_path)

    if ldp is not None:
        cols = ldp.k
        fig, axes = plt.subplots(1, cols, figsize=(5.0 * cols, 5.0), squeeze=False)
        for i, part in enumerate(ldp.partitions):
            level_of = {v: l for l, lvl in enumerate(part.levels) for v in lvl}
            _draw_graph(
                axes[0][i],
                g,
                pos,
                [level_of[v] for v in g.vertices],
                f"message {i}: levels (height {part.height})",
            )
        fig.tight_layout()
        levels_path = os.path.join(out_dir, "levels.png")
        fig.savefig(levels_path, dpi=120, metadata=_PNG_METADATA)
        plt.close(fig)
        written.append(levels_path)

    if trace is not None:
        fig, ax = plt.subplots(figsize=(6.0, 4.0))
        for m in range(trace.messages):
            informed = [0]
            count = 0
            for step in trace.steps:
                count += sum(1 for tr in step if tr.message == m)
                informed.append(count)
            ax.plot(range(len(informed)), informed, marker="o", label=f"message {m}")
        ax.set_xlabel("step")
        ax.set_ylabel("vertices informed")
        ax.set_title(f"broadcast progress (makespan {trace.makespan})")
        ax.legend()
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        sched_path = os.path.join(out_dir, "schedule.png")
        fig.savefig(sched_path, dpi=120, metadata=_PNG_METADATA)
        plt.close(fig)
        written.append(sched_path)

    return written


def vertex_table_csv(
    g: Graph,
    root: int,
    k: int,
    ldp: LdpSet | None = None,
    trace: BroadcastTrace | None = None,
) -> str:
    """Per-vertex delimited report: distances, floors, levels, receipts."""
    b = bounds(g, root, k)
    receipt: dict[tuple[int, int], int] = {}
    if trace is not None:
        for t, step in enumerate(trace.steps, start=1):
            for tr in step:
                receipt[(tr.receiver, tr.message)] = t
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["vertex", "name", "degree", "distance", "min_level_floor", "max_level_floor"]
    if ldp is not None:
        header += [f"level_m{i}" for i in range(ldp.k)]
        header.append("levels")
    if trace is not None:
        header += [f"receipt_m{i}" for i in range(trace.messages)]
    writer.writerow(header)
    for v in g.vertices:
        row: list[object] = [
            v,
            g.name_of(v),
            g.degree(v),
            b.distances[v],
            b.min_level_floor(v) if v != root else 0,
            b.max_level_floor(v) if v != root else 0,
        ]
        if ldp is not None:
            for part in ldp.partitions:
                row.append(part.level_of(v))
            row.append(";".join(str(l) for l in sorted(r_of(ldp, v))))
        if trace is not None:
            for m in range(trace.messages):
                row.append(0 if v == root else receipt.get((v, m), ""))
        writer.writerow(row)
    return buf.getvalue()
