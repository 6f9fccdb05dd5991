from ldpsim import block_decomposition, generate, parse_graph
from ldpsim.blocks import BRIDGE, ISOLATED_VERTEX, TWO_CONNECTED, is_two_connected
from ldpsim.graphs import bfs_distances


def test_triangle_with_pendant():
    g = parse_graph("0 1\n1 2\n2 0\n2 3")
    dec = block_decomposition(g)
    assert dec.blocks == (frozenset({0, 1, 2}), frozenset({2, 3}))
    assert dec.kinds == (TWO_CONNECTED, BRIDGE)
    assert dec.cut_vertices == frozenset({2})


def test_two_connected_single_block(petersen):
    dec = block_decomposition(petersen)
    assert len(dec.blocks) == 1
    assert dec.kinds == (TWO_CONNECTED,)
    assert dec.cut_vertices == frozenset()
    assert is_two_connected(petersen)


def test_path_three_vertices():
    g = parse_graph("0 1\n1 2")
    dec = block_decomposition(g)
    assert dec.blocks == (frozenset({0, 1}), frozenset({1, 2}))
    assert dec.kinds == (BRIDGE, BRIDGE)
    assert dec.cut_vertices == frozenset({1})


def test_isolated_vertex_block():
    g = generate("complete", 1)
    dec = block_decomposition(g)
    assert dec.blocks == (frozenset({0}),)
    assert dec.kinds == (ISOLATED_VERTEX,)


def test_blocks_partition_edges():
    g = parse_graph("0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 3\n5 6")
    dec = block_decomposition(g)
    block_edges = []
    for block in dec.blocks:
        block_edges.append(
            {(u, v) for u, v in g.edges() if u in block and v in block}
        )
    union = set().union(*block_edges)
    assert union == set(g.edges())
    total = sum(len(be) for be in block_edges)
    assert total == g.edge_count()


def test_cut_vertices_disconnect():
    g = parse_graph("0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 3")
    dec = block_decomposition(g)
    for v in g.vertices:
        rest = sorted(set(g.vertices) - {v})
        dist = bfs_distances(g, rest[0], within=frozenset(rest))
        disconnected = any(dist[u] < 0 for u in rest)
        assert disconnected == (v in dec.cut_vertices)


def test_restricted_decomposition():
    g = parse_graph("0 1\n1 2\n2 0\n2 3")
    dec = block_decomposition(g, within=frozenset({0, 1, 2}))
    assert dec.blocks == (frozenset({0, 1, 2}),)
    assert dec.kinds == (TWO_CONNECTED,)
    assert not is_two_connected(g, within=frozenset({2, 3}))
