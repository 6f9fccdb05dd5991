import pytest

from ldpsim import (
    CyclePath,
    cycles_through,
    find_separating_chordal,
    generate,
    odd_cycle_through,
    parse_graph,
    validate_certificate,
)
from ldpsim.cycles import separates_arithmetically, separates_combinatorially


class TestCyclePath:
    def test_lengths(self):
        assert CyclePath((0, 1, 2), closed=True).length == 3
        assert CyclePath((0, 1, 2), closed=False).length == 2

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            CyclePath((0, 1, 0), closed=False)

    def test_rejects_short_cycle(self):
        with pytest.raises(ValueError):
            CyclePath((0, 1), closed=True)

    def test_reverse(self):
        assert CyclePath((0, 1, 2), closed=True).reverse().vertices == (0, 2, 1)
        assert CyclePath((0, 1, 2), closed=False).reverse().vertices == (2, 1, 0)

    def test_validity(self):
        g = generate("cycle", 4)
        assert CyclePath((0, 1, 2, 3), closed=True).is_valid_in(g)
        assert not CyclePath((0, 2), closed=False).is_valid_in(g)


class TestOddCycleThrough:
    def test_c5_is_its_own_cycle(self):
        g = generate("cycle", 5)
        cyc = odd_cycle_through(g, 3)
        assert cyc.closed and cyc.length == 5
        assert cyc.vertices[0] == 3

    def test_complete_four(self):
        g = generate("complete", 4)
        for v in g.vertices:
            cyc = odd_cycle_through(g, v)
            assert cyc.length % 2 == 1
            assert v in cyc.vertices
            assert cyc.is_valid_in(g)

    def test_petersen_all_roots(self, petersen):
        for v in petersen.vertices:
            cyc = odd_cycle_through(petersen, v)
            assert cyc.length % 2 == 1
            assert cyc.vertices[0] == v
            assert cyc.is_valid_in(petersen)
            assert cyc.length == 5

    def test_root_off_the_first_odd_cycle(self):
        # hexagon with a chord: the triangle sits opposite the root, so
        # the root is joined to it by two disjoint paths
        g = parse_graph("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 2")
        cyc = odd_cycle_through(g, 4)
        assert cyc.length % 2 == 1
        assert cyc.vertices[0] == 4
        assert cyc.is_valid_in(g)

    def test_rejects_bipartite(self):
        with pytest.raises(ValueError, match="non-bipartite"):
            odd_cycle_through(generate("cycle", 6), 0)

    def test_rejects_not_two_connected(self):
        g = parse_graph("0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 3")
        with pytest.raises(ValueError, match="2-connected"):
            odd_cycle_through(g, 0)


class TestSeparatingChordal:
    def test_k23_certificate(self):
        # parts {0,1} and {2,3,4}; root is the first vertex of the big side
        g = generate("complete_bipartite", 2, 3)
        cert = find_separating_chordal(g, 2)
        assert cert is not None
        assert (cert.a, cert.b, cert.d, cert.p) == (1, 1, 2, 2)
        assert cert.cycle.vertices == (2, 0, 3, 1)
        assert cert.chordal_path.vertices == (0, 4, 1)
        validate_certificate(g, cert)

    def test_bare_even_cycle_has_none(self):
        g = generate("cycle", 6)
        for v in g.vertices:
            assert find_separating_chordal(g, v) is None

    def test_q3_certificate(self, q3):
        cert = find_separating_chordal(q3, 0)
        assert cert is not None
        validate_certificate(q3, cert)
        # deterministic: same call, same certificate
        again = find_separating_chordal(q3, 0)
        assert again == cert

    def test_rejects_non_bipartite(self, petersen):
        with pytest.raises(ValueError, match="bipartite"):
            find_separating_chordal(petersen, 0)

    def test_rejects_not_two_connected(self):
        with pytest.raises(ValueError, match="2-connected"):
            find_separating_chordal(parse_graph("0 1\n1 2"), 0)


def test_cycles_through_enumeration_q3(q3):
    cycles = cycles_through(q3, 0)
    assert all(c[0] == 0 for c in cycles)
    assert all(len(c) % 2 == 0 for c in cycles)
    lengths = sorted({len(c) for c in cycles})
    assert lengths == [4, 6, 8]
    # each cycle appears in exactly one orientation
    assert len({frozenset(c) for c in cycles if len(c) == 4}) == 3
    assert sum(1 for c in cycles if len(c) == 4) == 3


def test_cycles_through_respects_cap(q3):
    assert all(len(c) <= 4 for c in cycles_through(q3, 0, max_length=4))


def test_separation_tests_match_by_hand():
    # C6 positions: u at 1, w at 4 puts the opposite vertex inside the arc
    assert separates_combinatorially(6, 1, 4)
    assert separates_arithmetically(2, 1, 3)
    # u at 1, w at 2 leaves root and opposite together
    assert not separates_combinatorially(6, 1, 2)
    assert not separates_arithmetically(4, 1, 1)
