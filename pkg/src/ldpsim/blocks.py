"""Block decomposition (biconnected components, bridges, cut vertices)."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

TWO_CONNECTED = "two-connected"
BRIDGE = "bridge"
ISOLATED_VERTEX = "isolated-vertex"


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks of a connected graph, each a maximal subgraph without a cut
    vertex, plus the cut vertices.  Blocks are sorted by their vertex sets.
    """

    blocks: tuple[frozenset[int], ...]
    kinds: tuple[str, ...]
    cut_vertices: frozenset[int]

    def blocks_containing(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.blocks) if v in b)


def block_decomposition(g: Graph, within: frozenset[int] | None = None) -> BlockDecomposition:
    """Hopcroft-Tarjan biconnected components (iterative DFS).

    ``within`` restricts to an induced subgraph, which must be connected.
    """
    verts = sorted(within) if within is not None else list(g.vertices)
    vset = frozenset(verts)
    if len(verts) == 1:
        return BlockDecomposition(
            blocks=(frozenset(verts),),
            kinds=(ISOLATED_VERTEX,),
            cut_vertices=frozenset(),
        )

    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    counter = 0
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []
    cuts: set[int] = set()

    def neighbors(u: int) -> list[int]:
        if within is None:
            return list(g.adj[u])
        return [w for w in g.adj[u] if w in vset]

    for root in verts:
        if root in disc:
            continue
        parent[root] = None
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack: list[tuple[int, list[int], int]] = [(root, neighbors(root), 0)]
        while stack:
            u, nbrs, idx = stack[-1]
            if idx < len(nbrs):
                stack[-1] = (u, nbrs, idx + 1)
                w = nbrs[idx]
                if w not in disc:
                    parent[w] = u
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((u, w))
                    stack.append((w, neighbors(w), 0))
                elif w != parent[u] and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if p == root:
                        root_children += 1
                    if low[u] >= disc[p]:
                        block: list[tuple[int, int]] = []
                        while edge_stack:
                            e = edge_stack.pop()
                            block.append(e)
                            if e == (p, u):
                                break
                        raw_blocks.append(block)
                        if p != root:
                            cuts.add(p)
        if root_children >= 2:
            cuts.add(root)

    blocks: list[frozenset[int]] = []
    kinds: list[str] = []
    for block_edges in raw_blocks:
        members = frozenset(v for e in block_edges for v in e)
        blocks.append(members)
        kinds.append(BRIDGE if len(block_edges) == 1 else TWO_CONNECTED)
    order = sorted(range(len(blocks)), key=lambda i: tuple(sorted(blocks[i])))
    return BlockDecomposition(
        blocks=tuple(blocks[i] for i in order),
        kinds=tuple(kinds[i] for i in order),
        cut_vertices=frozenset(cuts),
    )


def is_two_connected(g: Graph, within: frozenset[int] | None = None) -> bool:
    dec = block_decomposition(g, within)
    return len(dec.blocks) == 1 and dec.kinds[0] == TWO_CONNECTED
