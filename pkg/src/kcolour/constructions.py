"""Deterministic extremal colourings and seeded random colourings.

Every constructor returns an :class:`EdgeColouring`; edges whose colour the
underlying argument leaves free get colour 1 or the smallest legal colour,
as documented per constructor.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, isqrt

import numpy as np

from .graph import EdgeColouring, InputError


def near_equal_parts(n: int, t: int) -> list[range]:
    """Split ``1..n`` into ``t`` contiguous ranges; the first ``n % t`` get one extra."""
    q, extra = divmod(n, t)
    parts, start = [], 1
    for i in range(t):
        size = q + (1 if i < extra else 0)
        parts.append(range(start, start + size))
        start += size
    return parts


def _class_of(n: int, t: int) -> list[int]:
    """``cls[v]`` is the 0-based part index of vertex v (index 0 unused)."""
    cls = [-1] * (n + 1)
    for idx, part in enumerate(near_equal_parts(n, t)):
        for v in part:
            cls[v] = idx
    return cls


def hypercube_dimension(r: int) -> int:
    """Largest R with 2^R - 1 <= r, i.e. floor(log2(r + 1))."""
    return (r + 1).bit_length() - 1


def blowup_classes(r: int) -> int:
    return isqrt(2 * r)


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters of a named construction.  Derived quantities are properties."""

    kind: str
    n: int
    r: int | None = None
    s: int | None = None
    k: int | None = None

    @property
    def R(self) -> int | None:
        if self.kind == "hypercube":
            return hypercube_dimension(self.r)
        if self.kind == "blowup":
            return blowup_classes(self.r)
        return None

    @property
    def part_sizes(self) -> list[int]:
        t = {
            "hypercube": lambda: 2 ** hypercube_dimension(self.r),
            "blowup": lambda: blowup_classes(self.r),
            "subset-partition": lambda: comb(self.r, self.s),
        }.get(self.kind)
        return [len(p) for p in near_equal_parts(self.n, t())] if t else []

    @property
    def colour_count(self) -> int:
        if self.kind.startswith("triangle"):
            return 3
        if self.kind == "bg-family":
            return 2 * self.s
        return self.r

    def build(self) -> EdgeColouring:
        if self.kind == "hypercube":
            return hypercube_colouring(self.n, self.r)
        if self.kind == "triangle-large":
            return triangle_colouring(self.n, self.k, "large")
        if self.kind == "triangle-small":
            return triangle_colouring(self.n, self.k, "small")
        if self.kind == "bg-family":
            return bg_family_colouring(self.n, self.s, self.k)
        if self.kind == "subset-partition":
            return subset_partition_colouring(self.n, self.r, self.s)
        if self.kind == "blowup":
            return blowup_colouring(self.n, self.r)
        raise InputError(f"unknown construction kind {self.kind!r}")


KINDS = ("hypercube", "triangle-large", "triangle-small", "bg-family", "subset-partition", "blowup")


def hypercube_colouring(n: int, r: int) -> EdgeColouring:
    """Vertices split into 2^R classes labelled by {0,1}^R, R = floor(log2(r+1)).

    A cross edge between classes x and y gets colour x XOR y (read as an
    integer, so the vector 0...01 is colour 1); edges inside a class get
    colour 1.  At most 2^R - 1 <= r colours occur.
    """
    if n < 2:
        raise InputError("hypercube colouring needs n >= 2")
    if r < 3:
        raise InputError("hypercube colouring needs r >= 3")
    R = hypercube_dimension(r)
    cls = _class_of(n, 2 ** R)
    return EdgeColouring.from_function(n, r, lambda i, j: (cls[i] ^ cls[j]) or 1)


def triangle_sets(n: int, k: int, variant: str) -> dict[str, range]:
    if variant == "large":
        if n < 3 * k - 2:
            raise InputError(f"large variant needs n >= 3k-2 = {3 * k - 2}")
        a = range(1, k)
        b = range(k, 2 * k - 1)
        c = range(2 * k - 1, 3 * k - 2)
        return {"A": a, "B": b, "C": c, "W": range(3 * k - 2, n + 1)}
    if variant == "small":
        if n > 3 * k - 3:
            raise InputError(f"small variant needs n <= 3k-3 = {3 * k - 3}")
        a, b, c = near_equal_parts(n, 3)
        return {"A": a, "B": b, "C": c, "W": range(n + 1, n + 1)}
    raise InputError(f"variant must be 'large' or 'small', got {variant!r}")


def triangle_colouring(n: int, k: int, variant: str = "large") -> EdgeColouring:
    """The 3-colouring that keeps every 2-coloured k-connected subgraph small.

    Sets A, B, C, W as in :func:`triangle_sets`.  Colour 1 joins A to B and W,
    colour 2 joins B to C and W, colour 3 joins C to A and W.  In the large
    variant all remaining edges get colour 1; in the small variant the
    insides of A, B, C get colours 2, 3, 1.
    """
    if n < 2 or k < 1:
        raise InputError("triangle colouring needs n >= 2 and k >= 1")
    sets = triangle_sets(n, k, variant)
    label = [""] * (n + 1)
    for name, part in sets.items():
        for v in part:
            label[v] = name
    cross = {frozenset("AB"): 1, frozenset("AW"): 1, frozenset("BC"): 2,
             frozenset("BW"): 2, frozenset("CA"): 3, frozenset("CW"): 3}
    inside = {"A": 2, "B": 3, "C": 1} if variant == "small" else {}

    def col(i, j):
        a, b = label[i], label[j]
        if a == b:
            return inside.get(a, 1)
        return cross[frozenset((a, b))]

    return EdgeColouring.from_function(n, 3, col)


def bg_family_sets(n: int, s: int, k: int) -> tuple[list[tuple[tuple[int, ...], range, range]], range]:
    """``([(T, A_T, B_T), ...], W)`` with T over the s-subsets of [2s] in lex order."""
    t = comb(2 * s, s)
    if n < 2 * t * (k - 1) + 1:
        raise InputError(f"bg family colouring needs n >= 2*C(2s,s)*(k-1)+1 = {2 * t * (k - 1) + 1}")
    out, start = [], 1
    for T in combinations(range(1, 2 * s + 1), s):
        a = range(start, start + k - 1)
        b = range(start + k - 1, start + 2 * k - 2)
        out.append((T, a, b))
        start += 2 * k - 2
    return out, range(start, n + 1)


def bg_family_colouring(n: int, s: int, k: int) -> EdgeColouring:
    """The 2s-colouring in which no s colours k-connect more than n - 2k + 2 vertices.

    For each s-set T there are sets A_T, B_T of size k-1; W is the rest.
    W to A_T u B_T: smallest colour outside T.  A_T u B_T to A_T' u B_T'
    (T' != complement of T, including T' = T): smallest colour outside
    T u T'.  For 1 not in T: A_T-A_Tc and B_T-B_Tc get colour 1, A_T-B_Tc and
    B_T-A_Tc get min(T).  Edges inside W get colour 1.
    """
    if s < 1 or k < 1:
        raise InputError("bg family colouring needs s >= 1 and k >= 1")
    sets, _ = bg_family_sets(n, s, k)
    full = frozenset(range(1, 2 * s + 1))
    owner: list[tuple[frozenset, str] | None] = [None] * (n + 1)
    for T, a, b in sets:
        for v in a:
            owner[v] = (frozenset(T), "A")
        for v in b:
            owner[v] = (frozenset(T), "B")

    def col(i, j):
        oi, oj = owner[i], owner[j]
        if oi is None and oj is None:
            return 1
        if oi is None or oj is None:
            T = (oi or oj)[0]
            return min(full - T)
        (T, si), (U, sj) = oi, oj
        if U != full - T:
            return min(full - (T | U))
        if 1 in T:
            T, si, U, sj = U, sj, T, si
        # now 1 is not in T and U is its complement
        return 1 if si == sj else min(T)

    return EdgeColouring.from_function(n, 2 * s, col)


def subset_partition_colouring(n: int, r: int, s: int) -> EdgeColouring:
    """Classes A_T for the s-subsets T of [r]; an edge between A_T and A_T'
    gets the smallest colour outside T u T', an edge inside A_T the
    smallest colour outside T."""
    if s < 1 or 2 * s >= r:
        raise InputError("subset partition colouring needs 1 <= s and 2s < r")
    subsets = [frozenset(T) for T in combinations(range(1, r + 1), s)]
    if n < len(subsets):
        raise InputError(f"subset partition colouring needs n >= C(r,s) = {len(subsets)}")
    cls = _class_of(n, len(subsets))
    full = frozenset(range(1, r + 1))
    return EdgeColouring.from_function(n, r, lambda i, j: min(full - (subsets[cls[i]] | subsets[cls[j]])))


def blowup_colouring(n: int, r: int) -> EdgeColouring:
    """Blow-up of a rainbow K_R, R = floor(sqrt(2r)): class pair {a, b} (in
    lexicographic order) gets colour 1, 2, ..., C(R, 2); inside a class colour 1."""
    if n < 2 or r < 2:
        raise InputError("blowup colouring needs n >= 2 and r >= 2")
    R = blowup_classes(r)
    cls = _class_of(n, R)
    pair_colour = {p: i + 1 for i, p in enumerate(combinations(range(R), 2))}

    def col(i, j):
        a, b = sorted((cls[i], cls[j]))
        return 1 if a == b else pair_colour[(a, b)]

    return EdgeColouring.from_function(n, r, col)


def random_colouring(n: int, r: int, seed: int) -> EdgeColouring:
    """Independent uniform colours from numpy's PCG64 generator seeded with ``seed``.

    Pairs are drawn in lexicographic order with a single
    ``Generator.integers(1, r + 1, size=n(n-1)/2)`` call.
    """
    if n < 2 or r < 1:
        raise InputError("random colouring needs n >= 2 and r >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    return EdgeColouring(n, r, tuple(rng.integers(1, r + 1, size=n * (n - 1) // 2).tolist()))
