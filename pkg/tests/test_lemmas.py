from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import nx_connectivity, random_graph
from kcolour.constructions import random_colouring
from kcolour.graph import EdgeColouring, InputError, SimpleGraph, connectivity, is_k_connected
from kcolour.lemmas import (
    MergeRefused,
    bg_trichotomy,
    check_allSbig,
    check_intersect,
    check_r11bip,
    check_r1kbip,
    check_sumq,
    extract_21ktech,
    extract_2s1bip,
    kconn_merge,
    mader_extract,
    r1kbip_bound,
    verify_bg_certificate,
)
from kcolour.search import max_k_connected_subgraph
from kcolour.suites import bipartite_graphs, random_bipartite_colouring

K = SimpleGraph.complete
KB = SimpleGraph.complete_bipartite


def star(leaves):
    return SimpleGraph.from_edges(range(1, leaves + 2), [(1, i) for i in range(2, leaves + 2)])


def without(graph, edges):
    drop = {tuple(sorted(e)) for e in edges}
    return SimpleGraph.from_edges(graph.vertices, [e for e in graph.edges() if e not in drop])


def bip_colouring(m, n, cross, inside=1, r=None):
    """Colouring of K_{m+n} with cross(u, v) on 1..m x m+1..m+n and ``inside`` elsewhere."""
    left, right = list(range(1, m + 1)), list(range(m + 1, m + n + 1))
    lset = set(left)

    def col(i, j):
        if (i in lset) != (j in lset):
            u, v = (i, j) if i in lset else (j, i)
            return cross(u, v)
        return inside

    f = EdgeColouring.from_function(m + n, r, col)
    return f, left, right


class TestMader:
    def test_complete(self):
        rep = mader_extract(K(5))
        assert rep.alpha == 4 and rep.subgraph == K(5) and rep.connectivity == 4

    def test_two_cliques(self):
        rep = mader_extract(K([1, 2, 3, 4, 5]).union(K([6, 7, 8, 9, 10])))
        assert rep.subgraph.order == 5 and rep.connectivity == 4

    def test_star(self):
        rep = mader_extract(star(9))
        assert rep.alpha == Fraction(9, 5) and rep.connectivity >= 1

    def test_needs_an_edge(self):
        with pytest.raises(InputError):
            mader_extract(SimpleGraph.from_edges([1, 2], []))

    def test_random(self, rng):
        for _ in range(100):
            g = random_graph(rng, int(rng.integers(2, 13)))
            if g.num_edges == 0:
                continue
            rep = mader_extract(g)
            assert rep.verified
            assert 4 * nx_connectivity(rep.subgraph) >= rep.alpha


class TestIntersect:
    def test_complete(self):
        assert check_intersect(KB([1, 2, 3], [4, 5, 6, 7]), [1, 2, 3], [4, 5, 6, 7], 3)

    def test_matching_removed(self):
        g = without(KB([1, 2, 3], [4, 5, 6]), [(1, 4), (2, 5), (3, 6)])
        assert not check_intersect(g, [1, 2, 3], [4, 5, 6], 2)
        assert not check_intersect(g, [4, 5, 6], [1, 2, 3], 2)

    def test_isolated_left_vertex(self):
        g = without(KB([1, 2], [3, 4]), [(1, 3), (1, 4)])
        assert not check_intersect(g, [1, 2], [3, 4], 1)

    def test_non_bipartite(self):
        with pytest.raises(InputError):
            check_intersect(K(4), [1, 2], [3, 4], 1)

    def test_exhaustive_small(self):
        for m in range(1, 5):
            for n in range(1, 8 - m):
                left, right = list(range(1, m + 1)), list(range(m + 1, m + n + 1))
                for g in bipartite_graphs(m, n):
                    for k in (1, 2, 3):
                        if check_intersect(g, left, right, k):
                            assert connectivity(g) >= k


class TestTwentyOneTech:
    def test_complete(self):
        g = KB(range(1, 11), range(11, 15))
        assert extract_21ktech(g, range(1, 11), range(11, 15), 4, 2, 2) == g

    def test_one_deficient_vertex(self):
        g = without(KB(range(1, 11), range(11, 15)), [(1, 11), (1, 12), (1, 13)])
        out = extract_21ktech(g, list(range(1, 11)), list(range(11, 15)), 4, 2, 2)
        assert out.order == 13 and 1 not in out.vertices and is_k_connected(out, 2)

    def test_fourteen_by_six(self):
        left, right = list(range(1, 15)), list(range(15, 21))
        missing = [((2 * i + d) % 14 + 1, 15 + i) for i in range(6) for d in range(3)]
        g = without(KB(left, right), missing)
        out = extract_21ktech(g, left, right, 6, 3, 2)
        assert out.order > 20 - 6 and is_k_connected(out, 2)

    def test_documented_thirteen_by_six_violates_size_precondition(self):
        g = KB(range(1, 14), range(14, 20))
        with pytest.raises(InputError, match="4b"):
            extract_21ktech(g, list(range(1, 14)), list(range(14, 20)), 6, 3, 2)

    @pytest.mark.parametrize("a,b,k", [(3, 2, 2), (4, 2, 3)])
    def test_precondition_errors(self, a, b, k):
        g = KB(range(1, 11), range(11, 15))
        with pytest.raises(InputError):
            extract_21ktech(g, list(range(1, 11)), list(range(11, 15)), a, b, k)

    def test_degree_precondition(self):
        g = without(KB(range(1, 11), range(11, 15)), [(i, 11) for i in range(1, 4)])
        with pytest.raises(InputError, match="degree"):
            extract_21ktech(g, list(range(1, 11)), list(range(11, 15)), 4, 2, 2)


class TestTwoSMinusOneBip:
    def test_all_U(self):
        f, left, right = bip_colouring(15, 15, lambda u, v: 3, r=3)
        out = extract_2s1bip(f, left, right, [1], [2], [3], 1)
        assert out.order == 30

    def test_guard(self):
        f, left, right = bip_colouring(15, 15, lambda u, v: 1 if u == 1 else 3, r=3)
        with pytest.raises(InputError):
            extract_2s1bip(f, left, right, [1], [2], [3], 1)

    def test_one_S_and_one_T_edge_each(self):
        # u gets its S-edge to 15+u, v = 15+j gets its T-edge from j % 15 + 1
        def cross(u, v):
            j = v - 15
            if j == u:
                return 1
            if u == j % 15 + 1:
                return 2
            return 3

        f, left, right = bip_colouring(15, 15, cross, r=3)
        out = extract_2s1bip(f, left, right, [1], [2], [3], 1)
        assert is_k_connected(out, 1)
        assert len(set(left) - set(out.vertices)) <= 5 and len(set(right) - set(out.vertices)) <= 2

    def test_random(self, rng):
        for _ in range(20):
            m = 15
            cross = {(u, v): 3 for u in range(1, m + 1) for v in range(m + 1, 2 * m + 1)}
            for u in range(1, m + 1):
                cross[u, int(rng.integers(m + 1, 2 * m + 1))] = 1
            f, left, right = bip_colouring(m, m, lambda u, v: cross[u, v], r=3)
            out = extract_2s1bip(f, left, right, [1], [2], [3], 1)
            assert is_k_connected(out, 1)


class TestMerge:
    def test_overlap(self):
        out = kconn_merge(None, K([1, 2, 3, 4]), K([2, 3, 4, 5]), 3, "overlap")
        assert out.order == 5 and is_k_connected(out, 3)

    def test_addvtx(self):
        out = kconn_merge(K(5), K([1, 2, 3, 4]), K([5]), 3, "addvtx")
        assert out == K(5)

    def test_linkup(self):
        ctx = K([1, 2, 3, 4]).union(K([5, 6, 7, 8])).with_edges((u, v) for u in range(1, 5) for v in range(5, 9))
        out = kconn_merge(ctx, K([1, 2, 3, 4]), K([5, 6, 7, 8]), 3, "linkup")
        assert out.order == 8 and connectivity(out) >= 3

    def test_refusals(self):
        with pytest.raises(MergeRefused, match="k"):
            kconn_merge(None, K([1, 2, 3, 4]), K([4, 5, 6, 7]), 3, "overlap")
        with pytest.raises(MergeRefused):
            kconn_merge(K(5).subgraph([1, 2, 3, 4, 5]), K([1, 2, 3, 4]), K([5]), 3, "linkup")
        ctx = without(K(5), [(5, 1), (5, 2)])
        with pytest.raises(MergeRefused, match="neighbours"):
            kconn_merge(ctx, K([1, 2, 3, 4]), K([5]), 3, "addvtx")
        with pytest.raises(MergeRefused, match="not k-connected"):
            kconn_merge(None, K([1, 2, 3]), K([1, 2, 3]), 3, "overlap")


class TestTrichotomy:
    def test_complete(self):
        assert bg_trichotomy(K(6), 5, 3).kind == "bg-a"

    def test_star(self):
        cert = bg_trichotomy(star(5), 3, 2)
        assert cert.kind == "bg-b" and verify_bg_certificate(star(5), cert)

    def test_two_cliques_joined(self):
        g = K([1, 2, 3, 4, 5]).union(K([6, 7, 8, 9, 10])).with_edges([(5, 6)])
        cert = bg_trichotomy(g, 4, 2)
        assert cert.kind == "bg-c"
        p, q = cert.witness_vertices
        assert len(p) + len(q) == 10 - 2 + 1 and min(len(p), len(q)) >= 4
        assert verify_bg_certificate(g, cert)

    def test_degenerate(self):
        with pytest.raises(InputError):
            bg_trichotomy(K(3), 1, 3)

    @given(st.integers(2, 11), st.integers(0, 2**32 - 1), st.integers(1, 4), st.integers(1, 5))
    @settings(max_examples=150, deadline=None)
    def test_random_certificates_reverify(self, n, seed, k, d):
        g = random_graph(np.random.default_rng(seed), n)
        if g.num_edges == n * (n - 1) // 2 and n <= k:
            return
        cert = bg_trichotomy(g, d, k)
        assert verify_bg_certificate(g, cert)
        # exactly the first applicable branch is returned
        if cert.kind != "bg-a":
            assert not is_k_connected(g, k)
        if cert.kind == "bg-c":
            assert all(g.degree(v) > d + k - 3 for v in g.vertices)


class TestR1kbip:
    def test_k44(self):
        g = KB([1, 2, 3, 4], [5, 6, 7, 8])
        cert = check_r1kbip(g, [1, 2, 3, 4], [5, 6, 7, 8], 1, 9)
        assert cert.kind == "inequality-holds"
        assert cert.witness_value == Fraction(51, 2) == Fraction(9 * 9, 6) + 2 * 6

    def test_edgeless(self):
        g = SimpleGraph.from_edges(range(1, 7), [])
        assert check_r1kbip(g, [1, 2, 3], [4, 5, 6], 0, 2).holds

    def test_vacuous(self):
        g = KB([1, 2, 3], [4, 5, 6])
        cert = check_r1kbip(g, [1, 2, 3], [4, 5, 6], 1, 5)
        assert cert.holds and cert.context["vacuous"]

    def test_precondition(self):
        with pytest.raises(InputError):
            check_r1kbip(KB([1], [2]), [1], [2], 1, 3)

    def test_bound_arithmetic(self):
        assert r1kbip_bound(4, 4, 1, 9) == Fraction(51, 2)
        assert r1kbip_bound(3, 5, 0, 4) == Fraction(4 * 15, 8)

    @pytest.mark.parametrize("m,n", [(1, 3), (2, 3), (3, 3), (2, 4), (3, 4), (1, 6)])
    def test_exhaustive_every_q(self, m, n):
        left, right = list(range(1, m + 1)), list(range(m + 1, m + n + 1))
        for g in bipartite_graphs(m, n):
            for ell in (0, 1):
                if m < ell or n < ell or m + n < 2 * ell + 1:
                    continue
                largest = max_k_connected_subgraph(g, ell + 1).value
                for q in range(1, m + n + 1):
                    assert check_r1kbip(g, left, right, ell, q, largest=largest).holds


class TestSumq:
    def test_monochromatic(self):
        f, left, right = bip_colouring(4, 4, lambda u, v: 1, r=1)
        cert = check_sumq(f, left, right, 1, 0, 1)
        assert cert.holds and cert.context["q"] == {1: 8} and cert.context["rhs"] == 3

    def test_random_two_colourings(self):
        for seed in range(100):
            rng = np.random.default_rng(seed)
            f, left, right = random_bipartite_colouring(rng, 5, 5, 2)
            assert check_sumq(f, left, right, 2, 0, 1).holds

    def test_vacuous_when_k_large(self):
        f, left, right = bip_colouring(3, 4, lambda u, v: 1 + (u + v) % 2, r=2)
        cert = check_sumq(f, left, right, 2, 0, 2)
        assert cert.context["rhs"] <= 0 and cert.holds

    def test_stray_edges_counted(self):
        f, left, right = bip_colouring(3, 3, lambda u, v: 2, r=2)
        with pytest.raises(InputError):
            check_sumq(f, left, right, 1, 3, 1)
        assert check_sumq(f, left, right, 1, 9, 1).holds


class TestAllSbig:
    def test_all_U(self):
        f = EdgeColouring.monochromatic(10, 3, colour=3)
        cert = check_allSbig(f, [1], [2], [3], 2, 1)
        assert cert.kind == "allSbig-a" and cert.witness_value == 10

    def test_random(self):
        for seed in range(60):
            f = random_colouring(int(9 + seed % 6), 3, seed)
            k = 1 + seed % 2
            assert check_allSbig(f, [1], [2], [3], k + 1, k).holds

    def test_U_unused(self):
        f = EdgeColouring.from_function(12, 3, lambda i, j: 1 + (i + j) % 2)
        cert = check_allSbig(f, [1], [2], [3], 2, 1)
        assert cert.kind == "allSbig-b"
        assert cert.witness_value >= cert.context["rhs"]

    def test_preconditions(self):
        f = EdgeColouring.monochromatic(6, 3)
        with pytest.raises(InputError):
            check_allSbig(f, [1], [2], [3], 3, 1)
        with pytest.raises(InputError):
            check_allSbig(f, [1], [2], [], 1, 1)


class TestR11bip:
    def test_monochromatic(self):
        f, left, right = bip_colouring(3, 4, lambda u, v: 1, r=1)
        cert = check_r11bip(f, left, right)
        assert cert.holds and cert.witness_value == 7

    def test_two_matchings(self):
        f, left, right = bip_colouring(2, 2, lambda u, v: 1 if v - 2 == u else 2, r=2)
        cert = check_r11bip(f, left, right)
        assert cert.witness_value == 2 and cert.holds

    def test_random(self):
        for seed in range(200):
            rng = np.random.default_rng(seed)
            f, left, right = random_bipartite_colouring(rng, 6, 6, int(rng.integers(1, 5)))
            assert check_r11bip(f, left, right).holds


def test_certificate_serialises():
    cert = check_r1kbip(KB([1, 2], [3, 4]), [1, 2], [3, 4], 0, 5)
    d = cert.to_dict()
    assert d["kind"] == "inequality-holds" and isinstance(d["witness_value"], str)
