"""Constructive procedures that find large k-connected subgraphs using few colours."""
from __future__ import annotations

import time
from itertools import combinations
from math import ceil, comb

from .graph import (
    EdgeColouring,
    InputError,
    bits_tuple,
    component_masks,
    is_k_connected,
    iter_bits,
    restrict,
    restrict_bipartite,
)
from .lemmas import InvariantError, check_intersect
from .search import EXACT, HEURISTIC, BoundReport, exact_cap, max_k_connected_subgraph

SUBSET_LIMIT = 10**5


def witness_ok(colouring: EdgeColouring, vertices, colours, k: int) -> bool:
    """True iff ``vertices`` induce a k-connected graph in ``colours``."""
    return is_k_connected(restrict(colouring, vertices, colours), k)


def _report(colouring, vertices, colours, k, start, mode=EXACT, flags=()) -> BoundReport:
    vertices = tuple(sorted(vertices))
    used = colouring.colours_within(vertices) & set(colours)
    if vertices and not witness_ok(colouring, vertices, used, k):
        raise InvariantError(f"witness is not {k}-connected in colours {sorted(used)}")
    return BoundReport(len(vertices), vertices, tuple(sorted(used)), mode,
                       time.perf_counter() - start, 0, tuple(flags))


def _colour_mass(colouring: EdgeColouring, v: int, colours, target: int) -> int:
    return sum((colouring.colour_neighbours(c, v) & target).bit_count() for c in colours)


def largest_monochromatic_component(colouring: EdgeColouring) -> tuple[int, int]:
    """``(mask, colour)`` of a largest monochromatic component; ties go to the
    smaller colour, then the component with the smaller least vertex."""
    best, best_c = 0, 1
    for c in range(1, colouring.r + 1):
        g = restrict(colouring, None, [c])
        for comp in component_masks(g.adj, g.mask):
            if comp.bit_count() > best.bit_count():
                best, best_c = comp, c
    return best, best_c


# -- two colours, connectivity one -----------------------------------------

def extract_r21(colouring: EdgeColouring) -> BoundReport:
    """Connected two-coloured subgraph; at least 4n/(r+1) vertices when (r+1) | 4n.

    Candidates: the largest monochromatic component A, A plus every outside
    vertex reaching A in the most frequent cross colour, and A plus every
    outside vertex reaching A in the colour seen by the most outside vertices.
    """
    if colouring.r < 3:
        raise InputError("extract_r21 needs r >= 3")
    start = time.perf_counter()
    n = colouring.n
    a_mask, c1 = largest_monochromatic_component(colouring)
    b_mask = colouring.vertex_mask & ~a_mask
    candidates = [(a_mask, (c1,))]
    if b_mask:
        cross = {c: 0 for c in range(1, colouring.r + 1)}
        reach = {c: 0 for c in range(1, colouring.r + 1)}
        for u in iter_bits(b_mask):
            for c in cross:
                hits = colouring.colour_neighbours(c, u) & a_mask
                if hits:
                    cross[c] += hits.bit_count()
                    reach[c] |= 1 << u
        c2 = max(cross, key=lambda c: (cross[c], -c))
        candidates.append((a_mask | reach[c2], (c1, c2)))
        ell = max((c for c in reach if c != c1), key=lambda c: (reach[c].bit_count(), -c))
        candidates.append((a_mask | reach[ell], (c1, ell)))
    mask, cols = max(candidates, key=lambda mc: mc[0].bit_count())
    rep = _report(colouring, bits_tuple(mask), cols, 1, start)
    flags = ["divisible"] if (4 * n) % (colouring.r + 1) == 0 else ["non-divisible"]
    if flags[0] == "divisible" and rep.value * (colouring.r + 1) < 4 * n:
        raise InvariantError(f"r21 extraction found {rep.value} < 4n/(r+1)")
    return BoundReport(rep.value, rep.witness_vertices, rep.witness_colours, EXACT,
                       rep.elapsed, 0, tuple(flags))


# -- three colours, two allowed -------------------------------------------

def _largest(colouring, colours, k, cap):
    g = restrict(colouring, None, colours)
    rep = max_k_connected_subgraph(g, k, EXACT, cap=cap, force=cap is None)
    return sum(1 << v for v in rep.witness_vertices)


def extract_32k(colouring: EdgeColouring, k: int, *, cap: int | None = None) -> BoundReport:
    """k-connected subgraph on >= n-k+1 vertices using two of three colours.

    Needs n >= 13k-15.  Large k-connected one- and two-colour subgraphs come
    from exact search.  Either a big monochromatic piece absorbs more than
    half of the rest, or the largest pieces Y (colours 1,2) and Z (1,3) cover
    every vertex and the colour-{2,3} bipartite graph between Y & Z and the
    symmetric difference is k-connected after dropping its few low-degree
    vertices.
    """
    if colouring.r != 3:
        raise InputError("extract_32k needs a 3-colouring")
    if k < 1:
        raise InputError("k must be at least 1")
    n = colouring.n
    if n < 13 * k - 15:
        raise InputError(f"n = {n} < 13k-15 = {13 * k - 15}")
    cap = exact_cap() if cap is None else cap
    if k >= 2 and n > cap:
        raise InputError(f"n = {n} exceeds the exact-search cap {cap}")
    start = time.perf_counter()
    full = colouring.vertex_mask
    low = n - 2 * k + 2

    for ell in (1, 2, 3):
        x = _largest(colouring, [ell], k, None)
        if x.bit_count() < max(low, 1):
            continue
        i, j = (c for c in (1, 2, 3) if c != ell)
        rest = full & ~x
        side_a = [v for v in iter_bits(rest) if _colour_mass(colouring, v, (i, ell), x) >= k]
        side_b = [v for v in iter_bits(rest) if _colour_mass(colouring, v, (j, ell), x) >= k]
        if len(side_a) + len(side_b) < rest.bit_count():
            raise InvariantError("attachment sets do not cover the complement")
        side, cols = (side_a, (i, ell)) if len(side_a) >= len(side_b) else (side_b, (j, ell))
        verts = bits_tuple(x) + tuple(side)
        rep = _report(colouring, verts, cols, k, start, flags=("monochromatic-core",))
        if rep.value < n - k + 1:
            raise InvariantError("monochromatic case fell short of n-k+1")
        return rep

    y = _largest(colouring, [1, 2], k, None)
    z = _largest(colouring, [1, 3], k, None)
    if min(y.bit_count(), z.bit_count()) < low:
        raise InvariantError("two-colour oracle failed")
    for piece, cols in ((z, (1, 3)), (y, (1, 2))):
        if piece.bit_count() >= n - k + 1:
            return _report(colouring, bits_tuple(piece), cols, k, start, flags=("two-colour-piece",))
    if y | z != full:
        raise InvariantError("maximal pieces do not cover the vertex set")
    core = y & z
    outer = (y & ~z) | (z & ~y)
    g = restrict_bipartite(colouring, bits_tuple(core), bits_tuple(outer), [2, 3])
    dropped = [v for v in iter_bits(core) if g.degree(v) <= k - 1]
    if len(dropped) > k - 1:
        raise InvariantError("too many low-degree vertices")
    keep = bits_tuple(core & ~sum(1 << v for v in dropped))
    h = g.subgraph(keep + bits_tuple(outer))
    if not check_intersect(h, keep, bits_tuple(outer), k):
        raise InvariantError("intersection certificate failed")
    return _report(colouring, h.vertices, (2, 3), k, start, flags=("bipartite-certificate",))


# -- s colours via a smaller core ----------------------------------------

class _Jump:
    def __init__(self, colouring: EdgeColouring, k: int, cap: int):
        self.f = colouring
        self.k = k
        self.cap = cap
        self.modes: set[str] = set()
        self.all = tuple(range(1, colouring.r + 1))

    def used(self, mask: int, colours) -> frozenset[int]:
        return frozenset(self.f.colours_within(bits_tuple(mask)) & set(colours))

    def base(self) -> tuple[int, frozenset[int]]:
        if self.k == 1:
            mask, c = largest_monochromatic_component(self.f)
            return mask, frozenset({c})
        mode = EXACT if self.f.n <= self.cap else HEURISTIC
        if mode == HEURISTIC:
            self.modes.add("heuristic-base")
        best, best_c = (0, ()), 1
        for c in self.all:
            rep = max_k_connected_subgraph(restrict(self.f, None, [c]), self.k, mode, cap=self.cap)
            if rep.value > best[0]:
                best, best_c = (rep.value, rep.witness_vertices), c
        return sum(1 << v for v in best[1]), frozenset({best_c})

    def close(self, mask: int, colours) -> int:
        """Add outside vertices with >= k edges in ``colours`` into the set, to a fixpoint."""
        changed = True
        while changed:
            changed = False
            for v in iter_bits(self.f.vertex_mask & ~mask):
                if _colour_mass(self.f, v, colours, mask) >= self.k:
                    mask |= 1 << v
                    changed = True
        return mask

    def lists(self, mask: int, exclude) -> dict[int, frozenset[int]]:
        out = {}
        for v in iter_bits(self.f.vertex_mask & ~mask):
            out[v] = frozenset(c for c in self.all if c not in exclude
                               and (self.f.colour_neighbours(c, v) & mask).bit_count() >= self.k)
        return out

    def improve(self, mask: int, cols: frozenset[int], t: int) -> tuple[int, frozenset[int]]:
        """Closure, plus (for k = 1) regrowing from any outside vertex whose
        edges into the core use at most t colours: the star at that vertex
        spans the core and one more vertex."""
        while True:
            mask = self.close(mask, cols)
            if self.k != 1 or mask == self.f.vertex_mask:
                return mask, cols
            for v in iter_bits(self.f.vertex_mask & ~mask):
                seen = frozenset(self.f.colour(v, u) for u in iter_bits(mask))
                if len(seen) <= t:
                    mask, cols = mask | 1 << v, seen
                    break
            else:
                return mask, cols

    def run(self, s: int) -> tuple[int, frozenset[int]]:
        if s == 1:
            mask, cols = self.base()
            return self.improve(mask, cols, 1) if mask else (0, cols)
        t = ceil(s / 2)
        mask, cols = self.run(t)
        if not mask:
            return 0, frozenset()
        mask, cols = self.improve(mask, cols, t)
        cols = self.used(mask, cols) or cols
        if mask == self.f.vertex_mask:
            return mask, cols
        rest = [c for c in self.all if c not in cols]
        extra = max(0, min(s - len(cols), len(rest)))
        lists = self.lists(mask, cols)
        chosen = self.choose(rest, extra, lists)
        total = cols | chosen
        attached = mask
        for v, lv in lists.items():
            if lv & chosen:
                attached |= 1 << v
        return self.close(attached, total), total

    def choose(self, rest, extra, lists) -> frozenset[int]:
        def gain(sub):
            return sum(1 for lv in lists.values() if lv & sub)

        if comb(len(rest), extra) <= SUBSET_LIMIT:
            self.modes.add("exhaustive-subsets")
            best, best_gain = frozenset(rest[:extra]), -1
            for sub in combinations(rest, extra):
                g = gain(frozenset(sub))
                if g > best_gain:
                    best, best_gain = frozenset(sub), g
            return best
        self.modes.add("greedy-subsets")
        chosen: frozenset[int] = frozenset()
        for _ in range(extra):
            c = max((c for c in rest if c not in chosen), key=lambda c: (gain(chosen | {c}), -c))
            chosen = chosen | {c}
        return chosen


def extract_jump(colouring: EdgeColouring, s: int, k: int = 1, *, cap: int | None = None) -> BoundReport:
    """k-connected subgraph with at most s colours grown from a ceil(s/2)-colour core.

    The core is built recursively (one colour: largest monochromatic
    k-connected subgraph).  Outside vertices are attached through colours
    that send at least k edges into the core; the extra colour set is chosen
    exhaustively when at most 10^5 candidates exist and greedily otherwise.
    An empty core yields value 0 with the ``empty-core`` flag.
    """
    if s < 1:
        raise InputError("s must be at least 1")
    if k < 1:
        raise InputError("k must be at least 1")
    start = time.perf_counter()
    job = _Jump(colouring, k, exact_cap() if cap is None else cap)
    mask, cols = job.run(min(s, colouring.r))
    flags = sorted(job.modes)
    if not mask:
        return BoundReport(0, (), (), EXACT, time.perf_counter() - start, 0, tuple(flags + ["empty-core"]))
    mode = HEURISTIC if "heuristic-base" in job.modes else EXACT
    rep = _report(colouring, bits_tuple(mask), cols, k, start, mode, flags)
    if len(rep.witness_colours) > s:
        raise InvariantError("jump extraction used too many colours")
    return rep
