"""Exact and heuristic search for large k-connected subgraphs.

``max_k_connected_subgraph`` is the workhorse.  Exact mode splits the graph
along vertex cuts of size < k: every k-connected subgraph survives the
removal of such a cut C inside one component X, so it lives in G[X u C].
Peeling vertices of degree < k first keeps the pieces small.  The leaves
of the recursion are k-connected, and every maximum k-connected subgraph
is one of them.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb
from typing import Iterable, Iterator, Sequence

from .graph import (
    EdgeColouring,
    InputError,
    SimpleGraph,
    all_pairs,
    bits_tuple,
    component_masks,
    find_small_cut,
    is_k_connected_bruteforce,
    k_core,
    mask_of,
    restrict,
)

DEFAULT_EXACT_CAP = 24
DEFAULT_SUBSET_BUDGET = 10**6
DEFAULT_BRUTE_BUDGET = 10**8

EXACT = "exact"
HEURISTIC = "heuristic"


class SearchRefused(RuntimeError):
    """A search would exceed its configured cap or budget.

    ``partial`` holds the best report found before stopping, if any.
    """

    def __init__(self, message: str, partial: "BoundReport | None" = None):
        super().__init__(message)
        self.partial = partial


def env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


def exact_cap() -> int:
    return env_int("KCOL_EXACT_CAP", DEFAULT_EXACT_CAP)


@dataclass(frozen=True)
class Query:
    s: int
    k: int = 1
    mode: str = EXACT

    def __post_init__(self):
        if self.s < 0:
            raise InputError("s must be nonnegative")
        if self.k < 1:
            raise InputError("k must be a positive integer")
        if self.mode not in (EXACT, HEURISTIC):
            raise InputError(f"mode must be {EXACT!r} or {HEURISTIC!r}")


@dataclass(frozen=True)
class BoundReport:
    value: int
    witness_vertices: tuple[int, ...] = ()
    witness_colours: tuple[int, ...] = ()
    mode: str = EXACT
    elapsed: float = field(default=0.0, compare=False)
    nodes_explored: int = field(default=0, compare=False)
    flags: tuple[str, ...] = ()
    colouring: EdgeColouring | None = field(default=None, repr=False)

    def stable_dict(self) -> dict:
        d = {
            "value": self.value,
            "witness_vertices": list(self.witness_vertices),
            "witness_colours": list(self.witness_colours),
            "mode": self.mode,
            "flags": list(self.flags),
        }
        if self.colouring is not None:
            d["witness_colouring"] = {"n": self.colouring.n, "r": self.colouring.r,
                                      "colours": list(self.colouring.colours)}
        return d

    def volatile_dict(self) -> dict:
        return {"elapsed": self.elapsed, "nodes_explored": self.nodes_explored}


def _better(a: tuple[int, tuple[int, ...]], b: tuple[int, tuple[int, ...]]) -> bool:
    """Larger order wins; ties go to the lexicographically smaller vertex tuple."""
    return a[0] > b[0] or (a[0] == b[0] and a[1] < b[1])


class _Search:
    def __init__(self, adj: Sequence[int], k: int, exhaustive: bool):
        self.adj = adj
        self.k = k
        self.exhaustive = exhaustive
        self.nodes = 0
        self.memo: dict[int, tuple[int, tuple[int, ...]]] = {}

    def run(self, mask: int) -> tuple[int, tuple[int, ...]]:
        if mask in self.memo:
            return self.memo[mask]
        self.nodes += 1
        k, adj = self.k, self.adj
        core = k_core(adj, mask, k)
        best: tuple[int, tuple[int, ...]] = (0, ())
        if core.bit_count() >= k + 1:
            comps = component_masks(adj, core)
            if len(comps) > 1:
                pieces = comps
            else:
                cut = find_small_cut(adj, core, k)
                if cut is None:
                    best = (core.bit_count(), bits_tuple(core))
                    pieces = []
                else:
                    pieces = [c | cut for c in component_masks(adj, core & ~cut)]
            if pieces and not self.exhaustive:
                pieces = [max(pieces, key=lambda p: (p.bit_count(), -p))]
            for piece in pieces:
                cand = self.run(piece)
                if _better(cand, best):
                    best = cand
        self.memo[mask] = best
        return best


def max_k_connected_subgraph(graph: SimpleGraph, k: int, mode: str = EXACT, *,
                             cap: int | None = None, force: bool = False) -> BoundReport:
    """Largest vertex set inducing a k-connected subgraph of ``graph``.

    Exact mode returns the maximum order and the lexicographically smallest
    maximum witness.  Heuristic mode follows only the largest piece at each
    split and returns a k-connected set no larger than the exact answer.
    Exact mode with k >= 2 refuses graphs above ``cap`` vertices unless
    ``force`` is set; k = 1 reduces to components and is never capped.
    """
    if k < 1:
        raise InputError("k must be a positive integer")
    if mode not in (EXACT, HEURISTIC):
        raise InputError(f"unknown mode {mode!r}")
    cap = exact_cap() if cap is None else cap
    if mode == EXACT and k >= 2 and graph.order > cap and not force:
        raise SearchRefused(f"exact search on {graph.order} vertices exceeds the cap of {cap}")
    t0 = time.perf_counter()
    search = _Search(graph.adj, k, exhaustive=(mode == EXACT))
    size, witness = search.run(graph.mask)
    return BoundReport(size, witness, (), mode, time.perf_counter() - t0, search.nodes)


def max_k_connected_bruteforce(graph: SimpleGraph, k: int, peel: bool = True) -> tuple[int, tuple[int, ...]]:
    """Descend by subset size, testing every subset with cut enumeration.

    With ``peel`` the candidates are drawn from the k-core only.  Returns the
    maximum order and the lexicographically smallest maximum witness.
    """
    mask = k_core(graph.adj, graph.mask, k) if peel else graph.mask
    verts = bits_tuple(mask)
    for size in range(len(verts), k, -1):
        for subset in combinations(verts, size):
            if is_k_connected_bruteforce(graph.subgraph(mask_of(subset)), k):
                return size, subset
    return 0, ()


def q_value(colouring: EdgeColouring, colours: Iterable[int], k: int, mode: str = EXACT, *,
            cap: int | None = None, force: bool = False) -> BoundReport:
    """Order of the largest k-connected subgraph whose edges use only ``colours``."""
    cols = tuple(sorted(set(colours)))
    g = restrict(colouring, None, cols)
    rep = max_k_connected_subgraph(g, k, mode, cap=cap, force=force)
    used = tuple(sorted(colouring.colours_within(rep.witness_vertices) & set(cols))) if rep.value else ()
    return BoundReport(rep.value, rep.witness_vertices, used, rep.mode, rep.elapsed, rep.nodes_explored)


def M_value(colouring: EdgeColouring, query: Query, *, cap: int | None = None, force: bool = False,
            budget: int | None = None) -> BoundReport:
    """Largest k-connected subgraph using at most s colours, with its witness.

    Only s-subsets need checking (supersets dominate).  The smallest
    achieving colour set in lexicographic order is reported, together with
    the colours the witness actually uses.
    """
    r, s, k = colouring.r, query.s, query.k
    budget = env_int("KCOL_BUDGET", DEFAULT_SUBSET_BUDGET) if budget is None else budget
    t0 = time.perf_counter()
    s_eff = min(s, r)
    total = comb(r, s_eff)
    best = BoundReport(0, (), (), query.mode)
    best_set: tuple[int, ...] = ()
    nodes = 0
    if s_eff == 0:
        return BoundReport(0, (), (), query.mode, time.perf_counter() - t0, 0)
    for idx, S in enumerate(combinations(range(1, r + 1), s_eff)):
        if idx >= budget:
            partial = BoundReport(best.value, best.witness_vertices, best.witness_colours, HEURISTIC,
                                  time.perf_counter() - t0, nodes, ("budget-exceeded", f"searched {idx} of {total}"))
            raise SearchRefused(f"{total} colour subsets exceed the budget of {budget}", partial)
        rep = q_value(colouring, S, k, query.mode, cap=cap, force=force)
        nodes += rep.nodes_explored
        if rep.value > best.value:
            best, best_set = rep, S
        if best.value == colouring.n:
            break
    flags = ("colour-set:" + ",".join(map(str, best_set)),) if best.value else ()
    return BoundReport(best.value, best.witness_vertices, best.witness_colours, query.mode,
                       time.perf_counter() - t0, nodes, flags)


# -- brute force over all colourings ----------------------------------------

def _rgs_sequences(length: int, r: int) -> Iterator[tuple[int, ...]]:
    """Sequences over [r] in which each new colour is one more than the largest so far.

    These are exactly the lexicographically minimal representatives of
    colour-permutation classes.
    """
    seq = [0] * length

    def rec(i: int, top: int):
        if i == length:
            yield tuple(seq)
            return
        for c in range(1, min(top + 1, r) + 1):
            seq[i] = c
            yield from rec(i + 1, max(top, c))

    if length == 0:
        yield ()
    else:
        yield from rec(0, 0)


def _normalise(seq: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for c in seq:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        out.append(relabel[c])
    return tuple(out)


@lru_cache(maxsize=None)
def _edge_permutations(n: int) -> tuple[tuple[int, ...], ...]:
    """For every vertex permutation p (except the identity), the map
    new_edge_index -> old_edge_index of the colouring's image under p."""
    pairs = list(all_pairs(n))
    index = {p: i for i, p in enumerate(pairs)}
    out = []
    for perm in permutations(range(1, n + 1)):
        if list(perm) == list(range(1, n + 1)):
            continue
        inv = {perm[v - 1]: v for v in range(1, n + 1)}
        out.append(tuple(index[tuple(sorted((inv[a], inv[b])))] for a, b in pairs))
    return tuple(out)


def _vertex_canonical(seq: tuple[int, ...], n: int) -> bool:
    for emap in _edge_permutations(n):
        if _normalise([seq[i] for i in emap]) < seq:
            return False
    return True


def stirling2(m: int, j: int) -> int:
    table = [[0] * (j + 1) for _ in range(m + 1)]
    table[0][0] = 1
    for a in range(1, m + 1):
        for b in range(1, min(a, j) + 1):
            table[a][b] = b * table[a - 1][b] + table[a - 1][b - 1]
    return table[m][j]


def colouring_count(n: int, r: int, symmetry: str) -> int:
    """Number of candidates before vertex-symmetry filtering."""
    e = n * (n - 1) // 2
    if symmetry == "none":
        return r**e
    return sum(stirling2(e, j) for j in range(0, min(r, e) + 1)) if e else 1


SYMMETRIES = ("none", "colour-perm", "colour-and-vertex")


@lru_cache(maxsize=32)
def canonical_colourings(n: int, r: int, symmetry: str = "colour-perm") -> tuple[tuple[int, ...], ...]:
    """Edge-colour sequences of K_n, one per class of the chosen symmetry group."""
    e = n * (n - 1) // 2
    if symmetry == "none":
        return tuple(product(range(1, r + 1), repeat=e))
    seqs = _rgs_sequences(e, r)
    if symmetry == "colour-perm":
        return tuple(seqs)
    if symmetry == "colour-and-vertex":
        return tuple(s for s in seqs if _vertex_canonical(s, n))
    raise InputError(f"unknown symmetry {symmetry!r}")


def _min_over(args) -> tuple[int, int, int]:
    n, r, s, k, seqs, offset = args
    best = (n + 1, -1)
    nodes = 0
    for i, seq in enumerate(seqs):
        rep = M_value(EdgeColouring(n, r, seq), Query(s, k), force=True)
        nodes += rep.nodes_explored
        if rep.value < best[0]:
            best = (rep.value, offset + i)
    return best[0], best[1], nodes


def m_bruteforce(n: int, r: int, query: Query, symmetry: str = "colour-perm", *,
                 budget: int | None = None, workers: int | None = None) -> BoundReport:
    """Exact m(n, r, s, k): the minimum of M over every r-colouring of K_n.

    Colourings are enumerated once per symmetry class (lexicographically
    minimal edge-colour sequence).  Ties keep the first minimiser in
    enumeration order, so the answer does not depend on ``workers``.
    """
    if n < 2 or r < 1:
        raise InputError("brute force needs n >= 2 and r >= 1")
    if symmetry not in SYMMETRIES:
        raise InputError(f"unknown symmetry {symmetry!r}")
    budget = env_int("KCOL_BRUTE_BUDGET", DEFAULT_BRUTE_BUDGET) if budget is None else budget
    workers = env_int("KCOL_THREADS", 1) if workers is None else workers
    total = colouring_count(n, r, symmetry)
    if total > budget:
        raise SearchRefused(f"{total} candidate colourings exceed the budget of {budget}")
    t0 = time.perf_counter()
    seqs = canonical_colourings(n, r, symmetry)
    s, k = query.s, query.k
    if workers > 1 and len(seqs) > 1000:
        step = -(-len(seqs) // workers)
        jobs = [(n, r, s, k, seqs[i:i + step], i) for i in range(0, len(seqs), step)]
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_min_over, jobs))
    else:
        results = [_min_over((n, r, s, k, seqs, 0))]
    value, index, nodes = min(results, key=lambda t: (t[0], t[1]))
    witness = EdgeColouring(n, r, seqs[index])
    wrep = M_value(witness, Query(s, k), force=True)
    return BoundReport(value, wrep.witness_vertices, wrep.witness_colours, EXACT, time.perf_counter() - t0,
                       nodes, (f"symmetry:{symmetry}", f"colourings:{len(seqs)}"), witness)
