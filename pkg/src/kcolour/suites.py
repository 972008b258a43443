"""Named verification suites run by ``kcol verify``; each fills a RunReport."""
from __future__ import annotations

import time
from math import comb

import numpy as np

from . import bounds
from .constructions import (
    blowup_colouring,
    bg_family_colouring,
    hypercube_colouring,
    random_colouring,
    subset_partition_colouring,
    triangle_colouring,
)
from .extract import extract_32k, extract_jump, extract_r21, witness_ok
from .graph import EdgeColouring, SimpleGraph, connectivity
from .kcol_io import RunReport
from .lemmas import (
    bg_trichotomy,
    check_allSbig,
    check_intersect,
    check_r11bip,
    check_r1kbip,
    check_sumq,
    mader_extract,
    verify_bg_certificate,
)
from .search import Query, M_value, m_bruteforce, max_k_connected_subgraph

SUITES = ("lemmas", "constructions", "brute-tables", "extractors")


def random_graph(rng: np.random.Generator, n: int, p: float | None = None) -> SimpleGraph:
    p = rng.uniform(0.2, 0.9) if p is None else p
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return SimpleGraph.from_edges(range(1, n + 1), edges)


def random_bipartite_colouring(rng: np.random.Generator, m: int, n: int, r: int) -> tuple[EdgeColouring, list, list]:
    """An r-colouring of K_{m+n} whose cross edges between 1..m and m+1..m+n are uniform."""
    size = m + n
    mat = np.ones((size + 1, size + 1), dtype=int)
    mat[1:, 1:] = rng.integers(1, r + 1, size=(size, size))
    mat = np.triu(mat, 1)
    mat = mat + mat.T
    return EdgeColouring.from_matrix(mat, r), list(range(1, m + 1)), list(range(m + 1, size + 1))


def bipartite_graphs(m: int, n: int):
    """Every bipartite graph with parts 1..m and m+1..m+n."""
    pairs = [(i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)]
    for bits in range(1 << len(pairs)):
        yield SimpleGraph.from_edges(range(1, m + n + 1), [p for b, p in enumerate(pairs) if bits >> b & 1])


# -- lemma suites -----------------------------------------------------------

def r1kbip_exhaustive(report: RunReport, max_order: int = 8) -> None:
    bad = total = 0
    for m in range(1, max_order):
        for n in range(1, max_order - m + 1):
            left, right = list(range(1, m + 1)), list(range(m + 1, m + n + 1))
            for g in bipartite_graphs(m, n):
                for ell in (0, 1):
                    if m < ell or n < ell or m + n < 2 * ell + 1:
                        continue
                    largest = max_k_connected_subgraph(g, ell + 1).value
                    # larger q only loosens the edge bound, so q = largest + 1 is the tightest case
                    q = largest + 1
                    if q > max_order:
                        continue
                    total += 1
                    cert = check_r1kbip(g, left, right, ell, q, largest=largest)
                    bad += not cert.holds
    report.check(f"edge bound for bipartite graphs without large (l+1)-connected subgraphs, m+n <= {max_order}",
                 bad == 0, f"{total} cases, {bad} violations")


def sumq_random(report: RunReport, rng, count: int) -> None:
    bad = 0
    for _ in range(count):
        m, n = int(rng.integers(2, 6)), int(rng.integers(2, 6))
        r = int(rng.integers(1, 4))
        k = 1
        f, left, right = random_bipartite_colouring(rng, m, n, r)
        c = int(rng.integers(1, r + 1))
        d = sum(1 for u in left for v in right if f.colour(u, v) > c)
        bad += not check_sumq(f, left, right, c, d, k).holds
    report.check("sum of per-colour q_k on a bipartite colouring meets the lower bound", bad == 0,
                 f"{count} instances, {bad} violations")


def r11bip_random(report: RunReport, rng, count: int) -> None:
    bad = 0
    for _ in range(count):
        m, n = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        r = int(rng.integers(1, 5))
        f, left, right = random_bipartite_colouring(rng, m, n, r)
        bad += not check_r11bip(f, left, right).holds
    report.check("largest monochromatic component of a coloured K_{m,n} has >= (m+n)/r vertices",
                 bad == 0, f"{count} instances, {bad} violations")


def allSbig_random(report: RunReport, rng, count: int) -> None:
    bad = 0
    for _ in range(count):
        n = int(rng.integers(9, 15))
        k = int(rng.integers(1, 3))
        t = k + 1
        f = random_colouring(n, 3, int(rng.integers(0, 2**31)))
        bad += not check_allSbig(f, [1], [2], [3], t, k).holds
    report.check("q_k(U) >= n-t or q_k(S)+q_k(T) meets the lower bound", bad == 0,
                 f"{count} instances, {bad} violations")


def bg_random(report: RunReport, rng, count: int) -> None:
    bad = 0
    for _ in range(count):
        n = int(rng.integers(2, 13))
        g = random_graph(rng, n)
        k = int(rng.integers(1, min(4, n) + 1))
        if k >= n and g.num_edges == n * (n - 1) // 2:
            k = n - 1 if n > 1 else 1
        d = int(rng.integers(1, 5))
        bad += not verify_bg_certificate(g, bg_trichotomy(g, d, k))
    report.check("trichotomy certificate re-verifies", bad == 0, f"{count} graphs, {bad} failures")


def mader_random(report: RunReport, rng, count: int) -> None:
    bad = done = 0
    while done < count:
        g = random_graph(rng, int(rng.integers(2, 13)))
        if g.num_edges == 0:
            continue
        rep = mader_extract(g)
        done += 1
        bad += not (rep.verified and 4 * connectivity(rep.subgraph) >= rep.alpha)
    report.check("extracted subgraph has connectivity >= average degree / 4", bad == 0,
                 f"{done} graphs, {bad} failures")


def intersect_random(report: RunReport, rng, count: int) -> None:
    bad = 0
    for _ in range(count):
        m, n = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        k = int(rng.integers(1, 4))
        p = rng.uniform(0.5, 1.0)
        edges = [(i, m + j) for i in range(1, m + 1) for j in range(1, n + 1) if rng.random() < p]
        g = SimpleGraph.from_edges(range(1, m + n + 1), edges)
        left, right = list(range(1, m + 1)), list(range(m + 1, m + n + 1))
        if check_intersect(g, left, right, k):
            bad += connectivity(g) < k
    report.check("common-neighbour condition implies k-connectivity", bad == 0,
                 f"{count} graphs, {bad} counterexamples")


def lemma_suite(report: RunReport, seed: int, quick: bool) -> None:
    rng = np.random.default_rng(seed)
    scale = 50 if quick else 200
    r1kbip_exhaustive(report, 6 if quick else 8)
    sumq_random(report, rng, scale)
    r11bip_random(report, rng, scale)
    allSbig_random(report, rng, scale)
    bg_random(report, rng, 2 * scale if quick else 500)
    mader_random(report, rng, 2 * scale if quick else 500)
    intersect_random(report, rng, 2 * scale if quick else 500)


# -- construction tables ----------------------------------------------------

CONSTRUCTION_TABLE = (
    # (label, builder, args, s, k, expected M, clause)
    ("hypercube(16,7)", hypercube_colouring, (16, 7), 2, 1, 8, "m(n,r,s,1) <= 2^s ceil(n/2^R)"),
    ("subset-partition(20,5,2)", subset_partition_colouring, (20, 5, 2), 2, 1, 18,
     "m(n,r,s,k) <= ceil((1 - 1/C(r,s)) n) for 2s < r"),
    ("blowup(12,8)", blowup_colouring, (12, 8), 1, 1, 6, "m(n,r,s,k) <= (s+1) ceil(n/floor(sqrt(2r)))"),
    ("blowup(12,8)", blowup_colouring, (12, 8), 2, 1, 9, "m(n,r,s,k) <= (s+1) ceil(n/floor(sqrt(2r)))"),
    ("triangle(12,2,large)", triangle_colouring, (12, 2, "large"), 2, 2, 11, "m(n,3,2,k) = n-k+1"),
    ("bg-family(10,1,2)", bg_family_colouring, (10, 1, 2), 1, 2, 8, "m(n,2s,s,k) <= n-2k+2"),
    ("bg-family(14,2,2)", bg_family_colouring, (14, 2, 2), 2, 2, 12, "m(n,2s,s,k) <= n-2k+2"),
)


def construction_suite(report: RunReport, seed: int, quick: bool) -> None:
    for label, build, args, s, k, expected, clause in CONSTRUCTION_TABLE:
        rep = M_value(build(*args), Query(s, k))
        report.results.append({"name": f"M[{label}, s={s}, k={k}]", **rep.stable_dict()})
        report.check(f"{clause}: M = {expected} for {label}, s={s}, k={k}", rep.value == expected,
                     f"got {rep.value}")
    # formula upper bounds on a small grid
    grid = [
        (lambda n, r: hypercube_colouring(n, r), bounds.hypercube_upper, [(n, r) for n in (8, 12, 16) for r in (3, 7)]),
        (lambda n, r: blowup_colouring(n, r), bounds.blowup_upper, [(n, r) for n in (8, 12) for r in (3, 6, 8)]),
    ]
    bad = total = 0
    for build, upper, params in grid:
        for n, r in params:
            f = build(n, r)
            for s in range(1, min(r, 3) + 1):
                total += 1
                bad += M_value(f, Query(s, 1)).value > upper(n, r, s)
    for n, r, s in ((10, 5, 2), (12, 5, 2), (21, 7, 2)):
        total += 1
        bad += M_value(subset_partition_colouring(n, r, s), Query(s, 1)).value > bounds.subset_partition_upper(n, r, s)
    report.check("construction M values stay within their closed-form upper bounds", bad == 0,
                 f"{total} cases, {bad} over the bound")


# -- brute-force tables -----------------------------------------------------

BRUTE_TABLE = (
    (4, 2, 1, 1, 4, "m(n,2,1,k) = n-2k+2"),
    (5, 2, 1, 1, 5, "m(n,2,1,k) = n-2k+2"),
    (5, 3, 2, 1, 5, "m(n,3,2,k) = n-k+1"),
    (3, 3, 2, 2, 0, "m(n,3,2,k) = 0 when n <= 3k-3"),
)


def brute_suite(report: RunReport, seed: int, quick: bool, workers: int = 1) -> None:
    for n, r, s, k, expected, clause in BRUTE_TABLE:
        if quick and n * (n - 1) // 2 > 6 and r > 2:
            continue
        rep = m_bruteforce(n, r, Query(s, k), workers=workers)
        report.results.append({"name": f"m({n},{r},{s},{k})", **rep.stable_dict()})
        report.check(f"{clause}: m({n},{r},{s},{k}) = {expected}", rep.value == expected, f"got {rep.value}")


# -- extractor suites -------------------------------------------------------

def extractor_suite(report: RunReport, seed: int, quick: bool) -> None:
    rng = np.random.default_rng(seed)
    count = 50 if quick else 500
    bad = 0
    for i in range(count):
        n, r = (16, 32)[i % 2], (3, 7)[(i // 2) % 2]
        f = random_colouring(n, r, int(rng.integers(0, 2**31)))
        rep = extract_r21(f)
        ok = (len(rep.witness_colours) <= 2 and witness_ok(f, rep.witness_vertices, rep.witness_colours, 1)
              and rep.value * (r + 1) >= 4 * n)
        bad += not ok
    report.check("m(n,r,2,1) >= 4n/(r+1): connected two-coloured extraction", bad == 0,
                 f"{count} colourings, {bad} failures")

    count = 10 if quick else 100
    bad = 0
    for _ in range(count):
        f = random_colouring(14, 3, int(rng.integers(0, 2**31)))
        rep = extract_32k(f, 2)
        ok = (len(rep.witness_colours) <= 2 and witness_ok(f, rep.witness_vertices, rep.witness_colours, 2)
              and rep.value >= 13)
        bad += not ok
    report.check("m(n,3,2,k) >= n-k+1: two-coloured 2-connected extraction at n=14", bad == 0,
                 f"{count} colourings, {bad} failures")

    bad = total = 0
    for f in jump_constructions(quick):
        for s in range(1, 7):
            rep = extract_jump(f, s, 1)
            total += 1
            ok = ("greedy-subsets" not in rep.flags and len(rep.witness_colours) <= s
                  and witness_ok(f, rep.witness_vertices, rep.witness_colours, 1)
                  and rep.value >= bounds.rootk1_lower(f.n, f.r, s))
            bad += not ok
    report.check("m(n,r,s,1) >= (1 - e^{-s^2/3r}) n: extraction on constructions", bad == 0,
                 f"{total} runs, {bad} failures")


def jump_constructions(quick: bool = False):
    """Every construction family on a grid of parameters with n <= 60."""
    sizes = (12, 30) if quick else (8, 13, 20, 31, 45, 60)
    for n in sizes:
        for r in (3, 4, 7, 8, 15):
            yield hypercube_colouring(n, r)
        for r in (3, 5, 8, 12, 18):
            yield blowup_colouring(n, r)
        for r, s in ((3, 1), (5, 1), (5, 2), (6, 2), (7, 3)):
            if n >= comb(r, s):
                yield subset_partition_colouring(n, r, s)
        for k in (1, 2, 3):
            if n >= 3 * k - 2:
                yield triangle_colouring(n, k, "large")
        if n <= 6:
            yield triangle_colouring(n, 3, "small")
        for s, k in ((1, 2), (2, 1), (2, 2), (3, 2), (1, 3)):
            if n >= 2 * comb(2 * s, s) * (k - 1) + 1:
                yield bg_family_colouring(n, s, k)


def run_suite(name: str, seed: int = 0, quick: bool = False, workers: int = 1) -> RunReport:
    report = RunReport(config={"command": "verify", "suite": name, "seed": seed, "quick": quick})
    start = time.perf_counter()
    if name == "lemmas":
        lemma_suite(report, seed, quick)
    elif name == "constructions":
        construction_suite(report, seed, quick)
    elif name == "brute-tables":
        brute_suite(report, seed, quick, workers)
    elif name == "extractors":
        extractor_suite(report, seed, quick)
    else:
        raise ValueError(f"unknown suite {name!r}")
    report.timings["total"] = time.perf_counter() - start
    return report
