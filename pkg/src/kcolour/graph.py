"""Coloured complete graphs, plain graphs and exact vertex connectivity.

Vertices are the integers ``1..n``.  Adjacency is stored as one Python int
per vertex whose bit ``v`` is set when ``v`` is a neighbour; every routine in
the package works on these bitmasks.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np


class InputError(ValueError):
    """Raised when arguments fall outside an operation's domain."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def pair_index(i: int, j: int, n: int) -> int:
    """Position of the pair ``{i, j}`` (1-based, i < j) in lexicographic order."""
    if i > j:
        i, j = j, i
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(1, n + 1), 2)


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected simple graph on a subset of the positive integers.

    ``adj[v]`` is the neighbour bitmask of ``v`` (unused slots are 0);
    ``mask`` has bit ``v`` set for each vertex.
    """

    mask: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.mask & 1:
            raise InputError("vertex labels start at 1")
        size = self.mask.bit_length()
        adj = tuple(self.adj[:size]) + (0,) * (size - len(self.adj))
        adj = tuple(a if self.mask >> v & 1 else 0 for v, a in enumerate(adj))
        object.__setattr__(self, "adj", adj)
        for v in iter_bits(self.mask):
            a = self.adj[v]
            if a >> v & 1:
                raise InputError(f"self-loop at {v}")
            if a & ~self.mask:
                raise InputError(f"vertex {v} has a neighbour outside the vertex set")
            for u in iter_bits(a):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"adjacency not symmetric at {{{u}, {v}}}")

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        vs = sorted(set(vertices))
        if vs and vs[0] < 1:
            raise InputError("vertex labels start at 1")
        size = (vs[-1] + 1) if vs else 1
        adj = [0] * size
        vmask = mask_of(vs)
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at {u}")
            if not (vmask >> u & 1 and vmask >> v & 1):
                raise InputError(f"edge {{{u}, {v}}} leaves the vertex set")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(vmask, tuple(adj))

    @classmethod
    def complete(cls, vertices: Iterable[int] | int) -> "SimpleGraph":
        if isinstance(vertices, int):
            vertices = range(1, vertices + 1)
        vs = list(vertices)
        return cls.from_edges(vs, combinations(vs, 2))

    @classmethod
    def complete_bipartite(cls, left: Sequence[int], right: Sequence[int]) -> "SimpleGraph":
        return cls.from_edges(list(left) + list(right), [(u, v) for u in left for v in right])

    @property
    def vertices(self) -> tuple[int, ...]:
        return bits_tuple(self.mask)

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.order

    def neighbours(self, v: int) -> tuple[int, ...]:
        return bits_tuple(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < len(self.adj) and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in iter_bits(self.mask):
            for u in iter_bits(self.adj[v] >> (v + 1) << (v + 1)):
                out.append((v, u))
        return out

    @property
    def num_edges(self) -> int:
        return sum(self.adj[v].bit_count() for v in iter_bits(self.mask)) // 2

    def min_degree(self) -> int:
        return min((self.adj[v].bit_count() for v in iter_bits(self.mask)), default=0)

    def subgraph(self, vertices: Iterable[int] | int) -> "SimpleGraph":
        """Induced subgraph on ``vertices`` (an iterable or a bitmask)."""
        m = vertices if isinstance(vertices, int) else mask_of(vertices)
        if m & ~self.mask:
            raise InputError("subgraph vertices must belong to the graph")
        return SimpleGraph(m, tuple(a & m if (m >> v & 1) else 0 for v, a in enumerate(self.adj)))

    def union(self, other: "SimpleGraph") -> "SimpleGraph":
        size = max(len(self.adj), len(other.adj))
        a = self.adj + (0,) * (size - len(self.adj))
        b = other.adj + (0,) * (size - len(other.adj))
        return SimpleGraph(self.mask | other.mask, tuple(x | y for x, y in zip(a, b)))

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = list(self.adj)
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return SimpleGraph(self.mask, tuple(adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(vertices={list(self.vertices)}, edges={self.edges()})"


@dataclass(frozen=True)
class EdgeColouring:
    """An r-colouring of the edges of K_n.

    ``colours`` lists the colour of every pair in lexicographic order
    (1,2), (1,3), ..., (n-1,n).  Colours are 1-based and need not all occur.
    """

    n: int
    r: int
    colours: tuple[int, ...]
    _matrix: np.ndarray = field(init=False, repr=False, compare=False)
    _colour_adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n, r = self.n, self.r
        if n < 2:
            raise InputError("an edge colouring needs n >= 2")
        if r < 1:
            raise InputError("an edge colouring needs r >= 1")
        cols = tuple(int(c) for c in self.colours)
        if len(cols) != n * (n - 1) // 2:
            raise InputError(f"expected {n * (n - 1) // 2} edge colours, got {len(cols)}")
        bad = [c for c in cols if not 1 <= c <= r]
        if bad:
            raise InputError(f"colour {bad[0]} outside [1, {r}]")
        object.__setattr__(self, "colours", cols)

        mat = np.zeros((n + 1, n + 1), dtype=np.int16)
        cadj = [[0] * (n + 1) for _ in range(r + 1)]
        for (i, j), c in zip(all_pairs(n), cols):
            mat[i, j] = mat[j, i] = c
            cadj[c][i] |= 1 << j
            cadj[c][j] |= 1 << i
        mat.setflags(write=False)
        object.__setattr__(self, "_matrix", mat)
        object.__setattr__(self, "_colour_adj", tuple(tuple(row) for row in cadj))

    @classmethod
    def from_function(cls, n: int, r: int, fn) -> "EdgeColouring":
        return cls(n, r, tuple(fn(i, j) for i, j in all_pairs(n)))

    @classmethod
    def from_matrix(cls, matrix, r: int | None = None) -> "EdgeColouring":
        m = np.asarray(matrix)
        n = m.shape[0] - 1
        cols = tuple(int(m[i, j]) for i, j in all_pairs(n))
        return cls(n, r if r is not None else max(cols), cols)

    @classmethod
    def monochromatic(cls, n: int, r: int = 1, colour: int = 1) -> "EdgeColouring":
        return cls(n, r, (colour,) * (n * (n - 1) // 2))

    @property
    def matrix(self) -> np.ndarray:
        """Read-only (n+1)x(n+1) colour matrix; row/column 0 and the diagonal are 0."""
        return self._matrix

    @property
    def num_edges(self) -> int:
        return len(self.colours)

    @property
    def vertex_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) & ~1

    def colour(self, i: int, j: int) -> int:
        if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
            raise InputError(f"no edge {{{i}, {j}}} in K_{self.n}")
        return int(self._matrix[i, j])

    def colour_neighbours(self, c: int, v: int) -> int:
        """Bitmask of vertices joined to ``v`` by an edge of colour ``c``."""
        return self._colour_adj[c][v]

    def used_colours(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.colours)))

    def colour_counts(self) -> dict[int, int]:
        counts = dict.fromkeys(range(1, self.r + 1), 0)
        for c in self.colours:
            counts[c] += 1
        return counts

    def colours_within(self, vertices: Iterable[int]) -> set[int]:
        vs = sorted(vertices)
        return {int(self._matrix[u, v]) for u, v in combinations(vs, 2)}

    def relabel(self, colour_map: Sequence[int] | None = None, vertex_perm: Sequence[int] | None = None) -> "EdgeColouring":
        """Image under a colour map (``colour_map[c-1]`` is the new colour of c)
        and/or a vertex permutation (``vertex_perm[v-1]`` is the new label of v)."""
        n = self.n
        mat = np.zeros((n + 1, n + 1), dtype=np.int16)
        for i, j in all_pairs(n):
            c = int(self._matrix[i, j])
            if colour_map is not None:
                c = colour_map[c - 1]
            a, b = (vertex_perm[i - 1], vertex_perm[j - 1]) if vertex_perm is not None else (i, j)
            mat[a, b] = mat[b, a] = c
        return EdgeColouring.from_matrix(mat, self.r)


def _check_vertices(n: int, vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if not 1 <= v <= n:
            raise InputError(f"vertex {v} outside [1, {n}]")
        m |= 1 << v
    return m


def restrict(colouring: EdgeColouring, vertices: Iterable[int] | None = None,
             colours: Iterable[int] | None = None) -> SimpleGraph:
    """The graph on ``vertices`` whose edges are the pairs coloured from ``colours``.

    ``None`` means all vertices / all colours.
    """
    n, r = colouring.n, colouring.r
    vmask = colouring.vertex_mask if vertices is None else _check_vertices(n, vertices)
    cols = range(1, r + 1) if colours is None else sorted(set(colours))
    for c in cols:
        if not 1 <= c <= r:
            raise InputError(f"colour {c} outside [1, {r}]")
    adj = [0] * (n + 1)
    for v in iter_bits(vmask):
        a = 0
        for c in cols:
            a |= colouring.colour_neighbours(c, v)
        adj[v] = a & vmask
    return SimpleGraph(vmask, tuple(adj))


def restrict_bipartite(colouring: EdgeColouring, left: Iterable[int], right: Iterable[int],
                       colours: Iterable[int] | None = None) -> SimpleGraph:
    """Like :func:`restrict` but keeping only edges between ``left`` and ``right``."""
    n, r = colouring.n, colouring.r
    lm = _check_vertices(n, left)
    rm = _check_vertices(n, right)
    if lm & rm:
        raise InputError("bipartition sides overlap")
    cols = range(1, r + 1) if colours is None else sorted(set(colours))
    adj = [0] * (n + 1)
    for v in iter_bits(lm | rm):
        other = rm if lm >> v & 1 else lm
        a = 0
        for c in cols:
            a |= colouring.colour_neighbours(c, v)
        adj[v] = a & other
    return SimpleGraph(lm | rm, tuple(adj))


# -- connectivity primitives on (adj, mask) ---------------------------------

def reach(adj: Sequence[int], mask: int, start: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``mask``."""
    seen = frontier = 1 << start
    while frontier:
        new = 0
        for u in iter_bits(frontier):
            new |= adj[u]
        frontier = new & mask & ~seen
        seen |= frontier
    return seen


def is_connected_mask(adj: Sequence[int], mask: int) -> bool:
    if not mask:
        return True
    start = (mask & -mask).bit_length() - 1
    return reach(adj, mask, start) == mask


def component_masks(adj: Sequence[int], mask: int) -> list[int]:
    out = []
    rest = mask
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = reach(adj, rest, start)
        out.append(comp)
        rest &= ~comp
    return out


def components(graph: SimpleGraph) -> list[tuple[int, ...]]:
    """Connected components, each sorted, listed by smallest member."""
    return [bits_tuple(c) for c in component_masks(graph.adj, graph.mask)]


def _local_cut(adj: Sequence[int], mask: int, s: int, t: int, cap: int) -> tuple[int, int | None]:
    """Vertex-disjoint s-t paths inside ``mask`` (s, t non-adjacent), capped at ``cap``.

    Unit-capacity max flow on the split graph: vertex v becomes v_in = 2v and
    v_out = 2v+1.  Returns ``(flow, cut_mask)``; ``cut_mask`` is a minimum
    s-t separator when ``flow < cap`` and ``None`` otherwise.
    """
    big = 1 << 30
    res: dict[int, dict[int, int]] = {}

    def arc(a: int, b: int, c: int) -> None:
        res.setdefault(a, {})
        res.setdefault(b, {})
        res[a][b] = res[a].get(b, 0) + c
        res[b].setdefault(a, 0)

    for v in iter_bits(mask):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in iter_bits(adj[v] & mask):
            arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in res[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            cut = 0
            for v in iter_bits(mask):
                if 2 * v in parent and 2 * v + 1 not in parent:
                    cut |= 1 << v
            return flow, cut
        b = sink
        while b != source:
            a = parent[b]
            res[a][b] -= 1
            res[b][a] += 1
            b = a
        flow += 1
    return flow, None


def _small_cut_flow(adj: Sequence[int], mask: int, k: int) -> int | None:
    """A vertex cut of size < k of the connected graph on ``mask``, or None.

    Any cut C with |C| < k misses one of the first k vertices v, and some
    vertex w non-adjacent to v lies in another component of G - C, so it
    suffices to test pairs (v, w) with v among the first k vertices.
    """
    verts = bits_tuple(mask)
    for v in verts[:k]:
        for w in iter_bits(mask & ~adj[v] & ~(1 << v)):
            f, cut = _local_cut(adj, mask, v, w, k)
            if f < k:
                return cut
    return None


def _small_cut_enum(adj: Sequence[int], mask: int, k: int) -> int | None:
    """Same contract as :func:`_small_cut_flow`, by trying every candidate cut."""
    verts = bits_tuple(mask)
    for size in range(0, k):
        for cut in combinations(verts, size):
            cm = mask_of(cut)
            if not is_connected_mask(adj, mask & ~cm):
                return cm
    return None


_ENUM_LIMIT = 400


def find_small_cut(adj: Sequence[int], mask: int, k: int) -> int | None:
    """A vertex cut of size < k of the graph on ``mask`` (assumed to have at
    least k+1 vertices), or None when there is none."""
    if not is_connected_mask(adj, mask):
        return 0
    if k <= 1:
        return None
    n = mask.bit_count()
    if sum(_binom(n, j) for j in range(1, k)) <= _ENUM_LIMIT:
        return _small_cut_enum(adj, mask, k)
    return _small_cut_flow(adj, mask, k)


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def _is_complete(adj: Sequence[int], mask: int) -> bool:
    return all((adj[v] | (1 << v)) & mask == mask for v in iter_bits(mask))


def min_vertex_cut(graph: SimpleGraph) -> tuple[int, tuple[int, ...] | None]:
    """``(kappa, cut)``: vertex connectivity and a minimum separating set.

    ``cut`` is None for complete graphs and graphs with fewer than two vertices.
    """
    adj, mask = graph.adj, graph.mask
    n = mask.bit_count()
    if n < 2:
        return 0, None
    if not is_connected_mask(adj, mask):
        return 0, ()
    if _is_complete(adj, mask):
        return n - 1, None
    best = graph.min_degree()
    best_cut = None
    verts = bits_tuple(mask)
    for i, v in enumerate(verts):
        if i > best:
            break
        for w in iter_bits(mask & ~adj[v] & ~(1 << v)):
            f, cut = _local_cut(adj, mask, v, w, best + 1)
            if cut is not None and (f < best or best_cut is None):
                best, best_cut = f, cut
    assert best_cut is not None
    return best, bits_tuple(best_cut)


def connectivity(graph: SimpleGraph) -> int:
    """Vertex connectivity: the largest k for which ``graph`` is k-connected."""
    return min_vertex_cut(graph)[0]


def is_k_connected(graph: SimpleGraph, k: int) -> bool:
    if k < 1:
        raise InputError("k must be a positive integer")
    adj, mask = graph.adj, graph.mask
    if mask.bit_count() < k + 1 or graph.min_degree() < k:
        return False
    if not is_connected_mask(adj, mask):
        return False
    return _small_cut_flow(adj, mask, k) is None


def connectivity_bruteforce(graph: SimpleGraph) -> int:
    """Vertex connectivity by enumerating every vertex subset as a candidate cut."""
    adj, mask = graph.adj, graph.mask
    n = mask.bit_count()
    if n < 2:
        return 0
    verts = bits_tuple(mask)
    for size in range(0, n - 1):
        for cut in combinations(verts, size):
            rest = mask & ~mask_of(cut)
            if not is_connected_mask(adj, rest):
                return size
    return n - 1


def is_k_connected_bruteforce(graph: SimpleGraph, k: int) -> bool:
    return graph.order >= k + 1 and connectivity_bruteforce(graph) >= k


def k_core(adj: Sequence[int], mask: int, k: int) -> int:
    """Largest vertex subset of ``mask`` inducing minimum degree >= k."""
    changed = True
    while changed:
        changed = False
        for v in iter_bits(mask):
            if (adj[v] & mask).bit_count() < k:
                mask &= ~(1 << v)
                changed = True
    return mask
