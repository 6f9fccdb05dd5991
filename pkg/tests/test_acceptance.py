"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
PASS/FAIL lines.  The exhaustive cross-check (criterion 4) dominates the
runtime at a few minutes.
"""

import random

from ldpsim import (
    ConstructionFailure,
    LdpSet,
    brute_force,
    construct_two_ldps,
    extract_certificate,
    generate,
    is_optimal,
    ldps_from_trace,
    optimal_height_feasible,
    r_of,
    schedule,
    two_ldps_chordal,
    validate,
    validate_certificate,
    verify_ldp_set,
    verify_partition,
)
from ldpsim.partitions import assert_bound_invariants

from conftest import (
    connected_edge_subsets,
    random_bipartite_two_connected,
    random_connected_graph,
)


class _Report:
    def __init__(self, number: int, description: str):
        self.number = number
        self.description = description

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        print(f"ACCEPTANCE {self.number} {status}: {self.description}")
        return False


def test_criterion_1_figure1_fixture(q3, fig1_pair):
    with _Report(1, "figure-1 pair verifies; R(010)={1,3}, R(101)={4,6}; height 6"):
        for part in fig1_pair.partitions:
            assert verify_partition(q3, part) is None
        assert verify_ldp_set(q3, fig1_pair) is None
        assert r_of(fig1_pair, 0b010) == frozenset({1, 3})
        assert r_of(fig1_pair, 0b101) == frozenset({4, 6})
        assert fig1_pair.max_height == 6


def test_criterion_2_figure3_fixture(q3, fig3_triple):
    with _Report(2, "figure-3 triple verifies; count-optimal and height-optimal"):
        assert verify_ldp_set(q3, fig3_triple) is None
        report = is_optimal(fig3_triple, q3)
        assert report.count_optimal and report.k == 3 == report.max_count
        assert report.height_optimal and report.max_height == 7 == report.height_floor


def test_criterion_3_cycle_family():
    with _Report(3, "odd cycles build pairs of height n-1; even cycles exhaust"):
        for m in range(1, 6):
            g = generate("cycle", 2 * m + 1)
            result = construct_two_ldps(g, 0)
            assert isinstance(result, LdpSet)
            assert verify_ldp_set(g, result) is None
            assert [p.height for p in result.partitions] == [2 * m, 2 * m]
        for m in range(2, 7):
            g = generate("cycle", 2 * m)
            result = construct_two_ldps(g, 0)
            assert isinstance(result, ConstructionFailure)
            assert brute_force(g, 0, 2, g.n - 1) is None


def test_criterion_4_exhaustive_theorem_cross_check():
    with _Report(4, "construct <=> brute force on all connected graphs, n <= 6"):
        checked = 0
        for n in range(2, 7):
            for g in connected_edge_subsets(n):
                for v in range(n):
                    result = construct_two_ldps(g, v)
                    built = isinstance(result, LdpSet)
                    if built:
                        assert verify_ldp_set(g, result) is None
                    found = brute_force(g, v, 2, n - 1) is not None
                    assert built == found, (
                        f"disagreement at n={n} v={v} edges={sorted(g.edges())}"
                    )
                    checked += 1
        assert checked == 164030


def test_criterion_5_petersen(petersen):
    with _Report(5, "Petersen: pairs exist everywhere, optimal height unreachable"):
        for v in petersen.vertices:
            result = construct_two_ldps(petersen, v)
            assert isinstance(result, LdpSet)
            assert verify_ldp_set(petersen, result) is None
            assert not optimal_height_feasible(petersen, v, 2).feasible
            assert not optimal_height_feasible(petersen, v, 3).feasible
            assert brute_force(petersen, v, 2, 3) is None
            assert brute_force(petersen, v, 3, 4) is None


def test_criterion_6_k33_probe():
    with _Report(6, "K_{3,3}: no three partitions anywhere; pairs match the decision"):
        g = generate("complete_bipartite", 3, 3)
        for v in g.vertices:
            assert brute_force(g, v, 3, 5) is None
            built = isinstance(construct_two_ldps(g, v), LdpSet)
            found = brute_force(g, v, 2, g.n - 1) is not None
            assert built == found


def test_criterion_7_simulator_soundness():
    with _Report(7, "200 random graphs: schedules validate and round-trip"):
        rng = random.Random(20240501)
        graphs = 0
        simulated = 0
        while graphs < 200:
            g = random_connected_graph(rng, max_n=8)
            graphs += 1
            for v in g.vertices:
                found = brute_force(g, v, 2, g.n - 1)
                if found is None:
                    continue
                trace = schedule(g, found)
                assert validate(g, trace) is None
                assert trace.makespan == found.max_height
                assert ldps_from_trace(g, trace) == found
                simulated += 1
        assert simulated > 100


def test_criterion_8_bound_invariants_under_fuzzing(q3, fig1_pair, fig3_triple):
    with _Report(8, "every produced set satisfies the degree/height/parity floors"):
        assert_bound_invariants(q3, fig1_pair)
        assert_bound_invariants(q3, fig3_triple)
        rng = random.Random(987)
        produced = 0
        for _ in range(120):
            g = random_connected_graph(rng, max_n=7)
            for v in g.vertices:
                built = construct_two_ldps(g, v)
                if isinstance(built, LdpSet):
                    assert_bound_invariants(g, built)
                    produced += 1
                ks = (1, 2, 3) if g.n <= 6 else (1, 2)
                for k in ks:
                    found = brute_force(g, v, k, g.n - 1)
                    if found is not None:
                        assert_bound_invariants(g, found)
                        produced += 1
        assert produced > 500


def test_criterion_9_certificate_loop():
    with _Report(9, "extracted certificates are valid and rebuild verified pairs"):
        rng = random.Random(555)
        extracted = 0
        trials = 0
        while extracted < 120 and trials < 6000:
            trials += 1
            g = random_bipartite_two_connected(rng, max_side=4)
            if g is None:
                continue
            for v in g.vertices:
                found = brute_force(g, v, 2, g.n - 1)
                if found is None:
                    continue
                cert = extract_certificate(g, found)
                validate_certificate(g, cert)
                assert cert.a < cert.b + cert.d
                rebuilt = two_ldps_chordal(cert, v)
                assert verify_ldp_set(g, rebuilt, within=rebuilt.support()) is None
                extracted += 1
        assert extracted >= 120
