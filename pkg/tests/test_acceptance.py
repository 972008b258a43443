"""Acceptance criteria, one test each, with their stated time limits.

Every test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line to the terminal.
"""
import time
from contextlib import contextmanager
from itertools import combinations
from math import comb

import networkx as nx
import numpy as np

from conftest import to_nx
from kcolour import bounds
from kcolour.constructions import (
    bg_family_colouring,
    blowup_colouring,
    hypercube_colouring,
    random_colouring,
    subset_partition_colouring,
    triangle_colouring,
)
from kcolour.extract import extract_32k, extract_jump, extract_r21
from kcolour.graph import connectivity, connectivity_bruteforce, restrict
from kcolour.lemmas import (
    bg_trichotomy,
    check_allSbig,
    check_r11bip,
    check_sumq,
    mader_extract,
    verify_bg_certificate,
)
from kcolour.search import EXACT, HEURISTIC, M_value, Query, m_bruteforce, max_k_connected_subgraph, q_value
from kcolour.kcol_io import RunReport
from kcolour.suites import jump_constructions, r1kbip_exhaustive, random_bipartite_colouring, random_graph

SEED = 20240611


@contextmanager
def criterion(capsys, number, title, limit):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {status}: {title} ({elapsed:.1f}s of {limit}s)")


def nx_witness_ok(f, rep, s, k):
    """Re-check a witness with networkx rather than the package's own connectivity code."""
    if len(rep.witness_colours) > s or len(rep.witness_vertices) != rep.value:
        return False
    g = to_nx(restrict(f, rep.witness_vertices, rep.witness_colours))
    return g.number_of_nodes() > k and nx.node_connectivity(g) >= k


def test_1_brute_force_table(capsys):
    table = [(4, 2, 1, 1, 4), (5, 2, 1, 1, 5), (5, 3, 2, 1, 5), (3, 3, 2, 2, 0)]
    with criterion(capsys, 1, "brute-force table", 60):
        got = [m_bruteforce(n, r, Query(s, k)).value for n, r, s, k, _ in table]
        assert got == [row[-1] for row in table]


def test_2_construction_table(capsys):
    table = [
        (hypercube_colouring(16, 7), 2, 1, 8),
        (subset_partition_colouring(20, 5, 2), 2, 1, 18),
        (blowup_colouring(12, 8), 1, 1, 6),
        (blowup_colouring(12, 8), 2, 1, 9),
        (triangle_colouring(12, 2, "large"), 2, 2, 11),
        (bg_family_colouring(10, 1, 2), 1, 2, 8),
        (bg_family_colouring(14, 2, 2), 2, 2, 12),
    ]
    with criterion(capsys, 2, "construction table", 120):
        for f, s, k, expected in table:
            rep = M_value(f, Query(s, k))
            assert rep.value == expected
            assert nx_witness_ok(f, rep, s, k)


def test_3_lemma_suites(capsys):
    rng = np.random.default_rng(SEED)
    with criterion(capsys, 3, "lemma suites", 120):
        report = RunReport()
        r1kbip_exhaustive(report, 8)
        assert report.passed, report.assertions

        for _ in range(200):
            f, left, right = random_bipartite_colouring(rng, int(rng.integers(2, 6)), int(rng.integers(2, 6)),
                                                        int(rng.integers(1, 4)))
            c = int(rng.integers(1, f.r + 1))
            d = sum(1 for u in left for v in right if f.colour(u, v) > c)
            assert check_sumq(f, left, right, c, d, 1).holds
        for _ in range(200):
            f, left, right = random_bipartite_colouring(rng, int(rng.integers(1, 7)), int(rng.integers(1, 7)),
                                                        int(rng.integers(1, 5)))
            assert check_r11bip(f, left, right).holds
        for _ in range(200):
            k = int(rng.integers(1, 3))
            f = random_colouring(int(rng.integers(9, 15)), 3, int(rng.integers(0, 2**31)))
            assert check_allSbig(f, [1], [2], [3], k + 1, k).holds

        for _ in range(500):
            n = int(rng.integers(2, 13))
            g = random_graph(rng, n)
            k = int(rng.integers(1, min(4, n - 1) + 1))
            assert verify_bg_certificate(g, bg_trichotomy(g, int(rng.integers(1, 5)), k))

        done = 0
        while done < 500:
            g = random_graph(rng, int(rng.integers(2, 13)))
            if g.num_edges == 0:
                continue
            rep = mader_extract(g)
            assert rep.verified
            assert 4 * nx.node_connectivity(to_nx(rep.subgraph)) >= rep.alpha
            done += 1


def test_4_extractor_suites(capsys):
    rng = np.random.default_rng(SEED)
    with criterion(capsys, 4, "extractor suites", 180):
        for i in range(500):
            n, r = (16, 32)[i % 2], (3, 7)[i // 2 % 2]
            f = random_colouring(n, r, int(rng.integers(0, 2**31)))
            rep = extract_r21(f)
            assert nx_witness_ok(f, rep, 2, 1) and rep.value * (r + 1) >= 4 * n

        for _ in range(100):
            f = random_colouring(14, 3, int(rng.integers(0, 2**31)))
            rep = extract_32k(f, 2)
            assert nx_witness_ok(f, rep, 2, 2) and rep.value >= 13

        runs = 0
        for f in jump_constructions():
            assert f.n <= 60
            for s in range(1, 7):
                rep = extract_jump(f, s, 1)
                assert "greedy-subsets" not in rep.flags
                assert nx_witness_ok(f, rep, s, 1)
                assert rep.value >= bounds.rootk1_lower(f.n, f.r, s)
                runs += 1
        assert runs > 0


def test_5_oracle_cross_checks(capsys):
    rng = np.random.default_rng(SEED)
    with criterion(capsys, 5, "oracle cross-checks", 60):
        for _ in range(200):
            g = random_graph(rng, int(rng.integers(2, 15)))
            k = int(rng.integers(1, 5))
            assert (max_k_connected_subgraph(g, k, HEURISTIC).value
                    <= max_k_connected_subgraph(g, k, EXACT).value)

        for _ in range(500):
            g = random_graph(rng, int(rng.integers(1, 11)))
            assert connectivity(g) == connectivity_bruteforce(g)

        for n in range(2, 6):
            for r in range(1, 4):
                for s in range(1, r + 1):
                    for k in range(1, 4):
                        a = m_bruteforce(n, r, Query(s, k), "colour-perm").value
                        b = m_bruteforce(n, r, Query(s, k), "colour-and-vertex").value
                        assert a == b, (n, r, s, k)


def small_constructions():
    for n in range(4, 15):
        for r in (3, 4, 7, 8):
            yield hypercube_colouring(n, r)
        for r in (3, 5, 8):
            yield blowup_colouring(n, r)
        for r, s in ((3, 1), (5, 1), (5, 2)):
            if n >= comb(r, s):
                yield subset_partition_colouring(n, r, s)
        for k in (1, 2, 3):
            if n >= 3 * k - 2:
                yield triangle_colouring(n, k, "large")
        for s, k in ((1, 1), (1, 2), (2, 1), (2, 2), (1, 3)):
            if n >= 2 * comb(2 * s, s) * (k - 1) + 1:
                yield bg_family_colouring(n, s, k)
    for n, k in ((2, 2), (3, 2), (4, 3), (5, 3), (6, 3)):
        yield triangle_colouring(n, k, "small")


def test_6_monotonicity(capsys):
    with criterion(capsys, 6, "monotonicity", 30):
        colourings = list(small_constructions())
        for f in colourings:
            ks = (1, 2, 3)
            table = {(s, k): M_value(f, Query(s, k)).value for s in range(1, f.r + 1) for k in ks}
            for (s, k), v in table.items():
                if s < f.r:
                    assert v <= table[s + 1, k]
                if k < ks[-1]:
                    assert v >= table[s, k + 1]

        rng = np.random.default_rng(SEED)
        targets = [f for f in colourings if f.r <= 5 and f.n <= 10]
        targets += [random_colouring(int(rng.integers(4, 11)), int(rng.integers(1, 6)), seed) for seed in range(10)]
        for f in targets:
            sets = [frozenset(S) for size in range(f.r + 1) for S in combinations(range(1, f.r + 1), size)]
            for k in (1, 2):
                q = {S: q_value(f, S, k).value for S in sets}
                for S in sets:
                    for c in range(1, f.r + 1):
                        if c not in S:
                            assert q[S] <= q[S | {c}]
