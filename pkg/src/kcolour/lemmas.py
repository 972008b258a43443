"""Checkable inequalities, certificates and bipartite extraction tools."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Iterable, Sequence

from .graph import (
    EdgeColouring,
    InputError,
    SimpleGraph,
    bits_tuple,
    component_masks,
    connectivity,
    is_k_connected,
    iter_bits,
    mask_of,
    min_vertex_cut,
    restrict,
    restrict_bipartite,
)
from .search import EXACT, HEURISTIC, SearchRefused, exact_cap, max_k_connected_subgraph, q_value


class InvariantError(AssertionError):
    """A guaranteed property failed to hold; indicates a bug, never bad input."""


class MergeRefused(InputError):
    """The requested merge rule does not apply to the given subgraphs."""


@dataclass(frozen=True)
class Certificate:
    """Outcome of a check, re-verifiable from the input alone.

    ``kind`` is one of bg-a, bg-b, bg-c, allSbig-a, allSbig-b,
    inequality-holds, inequality-violated.
    """

    kind: str
    witness_vertices: tuple[tuple[int, ...], ...] = ()
    witness_value: Fraction | None = None
    context: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.kind != "inequality-violated"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "witness_vertices": [list(w) for w in self.witness_vertices],
            "witness_value": None if self.witness_value is None else str(self.witness_value),
            "context": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.context.items()},
        }


@dataclass(frozen=True)
class MaderReport:
    alpha: Fraction
    subgraph: SimpleGraph
    connectivity: int
    verified: bool = True


def _check_parts(graph: SimpleGraph, left: Sequence[int], right: Sequence[int]) -> tuple[int, int]:
    lm, rm = mask_of(left), mask_of(right)
    if lm & rm or (lm | rm) != graph.mask:
        raise InputError("parts must partition the vertex set")
    for v in iter_bits(lm):
        if graph.adj[v] & lm:
            raise InputError(f"edge inside the first part at vertex {v}")
    for v in iter_bits(rm):
        if graph.adj[v] & rm:
            raise InputError(f"edge inside the second part at vertex {v}")
    return lm, rm


# -- Mader ------------------------------------------------------------------

def mader_extract(graph: SimpleGraph, *, cap: int | None = None) -> MaderReport:
    """A subgraph whose connectivity is at least a quarter of the average degree.

    Peeling plus cut splitting is tried first; if it comes back empty and
    the graph is within the exact cap, exact search is used (which cannot
    fail, since such a subgraph always exists).  Otherwise the report is
    marked unverified.
    """
    m = graph.num_edges
    if m < 1:
        raise InputError("Mader extraction needs at least one edge")
    alpha = Fraction(2 * m, graph.order)
    target = max(1, ceil(alpha / 4))
    cap = exact_cap() if cap is None else cap
    rep = max_k_connected_subgraph(graph, target, HEURISTIC)
    if rep.value == 0 and graph.order <= cap:
        rep = max_k_connected_subgraph(graph, target, EXACT, cap=cap)
    if rep.value == 0:
        return MaderReport(alpha, SimpleGraph(0, ()), 0, verified=False)
    sub = graph.subgraph(rep.witness_vertices)
    kappa = connectivity(sub)
    if kappa < alpha / 4:
        raise InvariantError(f"extracted subgraph has connectivity {kappa} < {alpha}/4")
    return MaderReport(alpha, sub, kappa)


# -- bipartite tools ----------------------------------------------------------

def check_intersect(graph: SimpleGraph, left: Sequence[int], right: Sequence[int], k: int) -> bool:
    """Degree >= k on the ``left`` side and >= k common neighbours for every
    pair on the ``right`` side; together these force k-connectivity."""
    lm, rm = _check_parts(graph, left, right)
    adj = graph.adj
    if any(adj[v].bit_count() < k for v in iter_bits(lm)):
        return False
    rv = bits_tuple(rm)
    for i, y in enumerate(rv):
        for z in rv[i + 1:]:
            if (adj[y] & adj[z]).bit_count() < k:
                return False
    return True


def extract_21ktech(graph: SimpleGraph, left: Sequence[int], right: Sequence[int], a: int, b: int, k: int) -> SimpleGraph:
    """Drop the ``left`` vertices of degree <= k-1; what remains is k-connected.

    Requires |left| >= 4b+k, |right| >= a >= 2k and every ``right`` vertex to
    miss at most b of ``left``.  At most ab/(a-k+1) < 2b vertices are dropped.
    """
    lm, rm = _check_parts(graph, left, right)
    nl, nr = lm.bit_count(), rm.bit_count()
    if nl < 4 * b + k:
        raise InputError(f"|M| = {nl} < 4b+k = {4 * b + k}")
    if nr < a:
        raise InputError(f"|N| = {nr} < a = {a}")
    if a < 2 * k:
        raise InputError(f"a = {a} < 2k = {2 * k}")
    for v in iter_bits(rm):
        if graph.adj[v].bit_count() < nl - b:
            raise InputError(f"vertex {v} of N has degree {graph.adj[v].bit_count()} < |M|-b = {nl - b}")
    dropped = mask_of(v for v in iter_bits(lm) if graph.adj[v].bit_count() <= k - 1)
    if dropped.bit_count() * (a - k + 1) > a * b:
        raise InvariantError("too many low-degree vertices")
    out = graph.subgraph(graph.mask & ~dropped)
    keep_left = bits_tuple(lm & ~dropped)
    if not check_intersect(out, keep_left, bits_tuple(rm), k) or not is_k_connected(out, k):
        raise InvariantError("extracted bipartite graph is not k-connected")
    return out


def _colour_set(colours: Iterable[int]) -> frozenset[int]:
    return frozenset(colours)


def extract_2s1bip(colouring: EdgeColouring, left: Sequence[int], right: Sequence[int],
                   S: Iterable[int], T: Iterable[int], U: Iterable[int], k: int) -> SimpleGraph:
    """k-connected U-coloured subgraph of the complete bipartite graph left x right.

    Requires |right| >= |left| >= 15k, at most k S-coloured edges at each
    ``left`` vertex and at most k T-coloured edges at each ``right`` vertex.
    Removes left vertices with at most 3|right|/5 U-edges (at most 5k of
    them) and right vertices with at most 6k U-edges (at most 2k of them).
    """
    S, T, U = _colour_set(S), _colour_set(T), _colour_set(U)
    if S | T | U != frozenset(range(1, colouring.r + 1)):
        raise InputError("S, T and U must cover all colours")
    nl, nr = len(left), len(right)
    if not nr >= nl >= 15 * k:
        raise InputError(f"need |N| >= |M| >= 15k, got |M| = {nl}, |N| = {nr}")
    f = colouring.colour
    for u in left:
        cnt = sum(1 for v in right if f(u, v) in S)
        if cnt > k:
            raise InputError(f"vertex {u} of M has {cnt} > k S-coloured edges")
    for v in right:
        cnt = sum(1 for u in left if f(u, v) in T)
        if cnt > k:
            raise InputError(f"vertex {v} of N has {cnt} > k T-coloured edges")
    h = restrict_bipartite(colouring, left, right, U)
    bad_left = [u for u in left if 5 * h.degree(u) <= 3 * nr]
    bad_right = [v for v in right if h.degree(v) <= 6 * k]
    if len(bad_left) > 5 * k or len(bad_right) > 2 * k:
        raise InvariantError("bad vertex sets exceed their bounds")
    keep = h.mask & ~mask_of(bad_left) & ~mask_of(bad_right)
    out = h.subgraph(keep)
    if not is_k_connected(out, k):
        raise InvariantError("extracted U-coloured graph is not k-connected")
    return out


# -- merging k-connected pieces ---------------------------------------------

MERGE_MODES = ("addvtx", "linkup", "overlap")


def kconn_merge(context: SimpleGraph | None, h1: SimpleGraph, h2: SimpleGraph, k: int, mode: str) -> SimpleGraph:
    """Union of two k-connected subgraphs under one of three sufficient rules.

    addvtx: ``h2`` is one vertex with >= k ``context`` edges into ``h1``.
    linkup: k vertices of ``h1`` each have >= k ``context`` neighbours in ``h2``.
    overlap: the vertex sets share >= k vertices.
    For addvtx and linkup the ``context`` edges between the two parts are
    included in the union.
    """
    if mode not in MERGE_MODES:
        raise InputError(f"unknown merge mode {mode!r}")
    if not is_k_connected(h1, k):
        raise MergeRefused("H1 is not k-connected")
    if mode == "overlap":
        if not is_k_connected(h2, k):
            raise MergeRefused("H2 is not k-connected")
        if (h1.mask & h2.mask).bit_count() < k:
            raise MergeRefused(f"|V(H1) & V(H2)| = {(h1.mask & h2.mask).bit_count()} < k")
        out = h1.union(h2)
    else:
        if context is None:
            raise MergeRefused(f"mode {mode} needs the ambient graph")
        if (h1.mask | h2.mask) & ~context.mask:
            raise MergeRefused("subgraphs must live in the ambient graph")
        if mode == "addvtx":
            if h2.order != 1:
                raise MergeRefused("addvtx needs H2 to be a single vertex")
            v = h2.vertices[0]
            deg = (context.adj[v] & h1.mask & ~(1 << v)).bit_count()
            if deg < k:
                raise MergeRefused(f"vertex {v} has {deg} < k neighbours in H1")
        else:
            if not is_k_connected(h2, k):
                raise MergeRefused("H2 is not k-connected")
            linked = [v for v in iter_bits(h1.mask) if (context.adj[v] & h2.mask).bit_count() >= k]
            if len(linked) < k:
                raise MergeRefused(f"only {len(linked)} < k vertices of H1 have k neighbours in H2")
        cross = [(u, v) for u in iter_bits(h1.mask) for v in iter_bits(context.adj[u] & h2.mask & ~h1.mask)]
        out = h1.union(h2).with_edges(cross)
    if not is_k_connected(out, k):
        raise InvariantError(f"{mode} merge produced a graph that is not k-connected")
    return out


# -- Bollobas-Gyarfas trichotomy ---------------------------------------------

def bg_trichotomy(graph: SimpleGraph, d: int, k: int) -> Certificate:
    """Exactly one of: (a) k-connected; (b) a vertex of degree <= d+k-3;
    (c) disjoint P, Q with no edges between them, |P|+|Q| = |G|-k+1 and
    min(|P|, |Q|) >= d.

    Branch (c) comes from a minimum vertex cut of size < k: one component of
    the rest forms one side, the others the second side, and surplus
    vertices are discarded from the larger side.  When |G| <= k and G is
    complete no branch can hold and InputError is raised.
    """
    n = graph.order
    ctx = {"d": d, "k": k, "order": n}
    if k >= 1 and is_k_connected(graph, k):
        return Certificate("bg-a", (), None, ctx)
    for v in graph.vertices:
        if graph.degree(v) <= d + k - 3:
            return Certificate("bg-b", ((v,),), Fraction(graph.degree(v)), ctx)
    kappa, cut = min_vertex_cut(graph)
    if cut is None or kappa > k - 1:
        raise InputError(f"no branch applies: graph on {n} <= k vertices is complete")
    rest = graph.mask & ~mask_of(cut)
    comps = component_masks(graph.adj, rest)
    side_p, side_q = comps[0], 0
    for c in comps[1:]:
        side_q |= c
    surplus = (n - kappa) - (n - k + 1)
    if side_p.bit_count() < side_q.bit_count():
        side_p, side_q = side_q, side_p
    drop = bits_tuple(side_p)[len(bits_tuple(side_p)) - surplus:] if surplus else ()
    side_p &= ~mask_of(drop)
    p, q = sorted((bits_tuple(side_p), bits_tuple(side_q)))
    ctx = dict(ctx, cut=list(cut), discarded=list(drop))
    return Certificate("bg-c", (p, q), Fraction(len(p) + len(q)), ctx)


def verify_bg_certificate(graph: SimpleGraph, cert: Certificate) -> bool:
    d, k = cert.context["d"], cert.context["k"]
    if cert.kind == "bg-a":
        return is_k_connected(graph, k)
    if cert.kind == "bg-b":
        (v,), = cert.witness_vertices
        return graph.mask >> v & 1 == 1 and graph.degree(v) <= d + k - 3
    if cert.kind == "bg-c":
        p, q = cert.witness_vertices
        pm, qm = mask_of(p), mask_of(q)
        if pm & qm or (pm | qm) & ~graph.mask:
            return False
        if any(graph.adj[v] & qm for v in p):
            return False
        return len(p) + len(q) == graph.order - k + 1 and min(len(p), len(q)) >= d
    return False


# -- edge-count bound for bipartite graphs -----------------------------------

def r1kbip_bound(m: int, n: int, ell: int, q: int) -> Fraction:
    return Fraction(q * (n - ell) * (m - ell), m + n - 2 * ell) + (ell * ell + ell) * (m + n - 2 * ell)


def check_r1kbip(graph: SimpleGraph, left: Sequence[int], right: Sequence[int], ell: int, q: int, *,
                 largest: int | None = None) -> Certificate:
    """Either an (ell+1)-connected subgraph on >= q vertices exists, or the
    edge count is at most q(n-ell)(m-ell)/(m+n-2ell) + (ell^2+ell)(m+n-2ell).

    ``largest`` may carry a precomputed maximum (ell+1)-connected order.
    """
    lm, rm = _check_parts(graph, left, right)
    m, n = lm.bit_count(), rm.bit_count()
    if m < ell or n < ell or m + n < 2 * ell + 1:
        raise InputError("need m, n >= ell and m + n >= 2 ell + 1")
    ctx = {"m": m, "n": n, "ell": ell, "q": q, "edges": graph.num_edges}
    if largest is None:
        rep = max_k_connected_subgraph(graph, ell + 1)
        largest, witness = rep.value, rep.witness_vertices
    else:
        witness = ()
    if largest >= q:
        return Certificate("inequality-holds", (witness,) if witness else (), Fraction(largest), dict(ctx, vacuous=True))
    bound = r1kbip_bound(m, n, ell, q)
    kind = "inequality-holds" if graph.num_edges <= bound else "inequality-violated"
    return Certificate(kind, (), bound, dict(ctx, vacuous=False, largest=largest))


def check_sumq(colouring: EdgeColouring, left: Sequence[int], right: Sequence[int], c: int, d: int, k: int) -> Certificate:
    """Sum over colours i <= c of the largest k-connected colour-i subgraph of
    the complete bipartite graph left x right is at least
    (m+n-2k)(1 - d/mn - c k^2 (m+n)/mn), given at most d edges use colours > c."""
    m, n = len(left), len(right)
    if m <= k or n <= k:
        raise InputError("need m, n > k")
    if mask_of(left) & mask_of(right):
        raise InputError("parts overlap")
    outside = sum(1 for u in left for v in right if colouring.colour(u, v) > c)
    if outside > d:
        raise InputError(f"{outside} edges use colours outside [c], more than d = {d}")
    qs = {}
    for i in range(1, c + 1):
        if i > colouring.r:
            qs[i] = 0
            continue
        g = restrict_bipartite(colouring, left, right, [i])
        qs[i] = max_k_connected_subgraph(g, k, force=True).value
    total = sum(qs.values())
    mn = m * n
    rhs = (m + n - 2 * k) * (1 - Fraction(d, mn) - Fraction(c * k * k * (m + n), mn))
    kind = "inequality-holds" if total >= rhs else "inequality-violated"
    return Certificate(kind, (), Fraction(total), {"q": qs, "rhs": rhs, "m": m, "n": n, "c": c, "d": d, "k": k})


def allSbig_rhs(n: int, t: int, k: int) -> Fraction:
    return n - 2 * t - 4 * k - Fraction(2 * k * k * n * n, t * (n - 2 * t - k))


def check_allSbig(colouring: EdgeColouring, S: Iterable[int], T: Iterable[int], U: Iterable[int], t: int, k: int) -> Certificate:
    """Either q_k(U) >= n - t, or q_k(S) + q_k(T) >= n - 2t - 4k - 2k^2n^2/(t(n-2t-k))."""
    n = colouring.n
    S, T, U = _colour_set(S), _colour_set(T), _colour_set(U)
    if S | T | U != frozenset(range(1, colouring.r + 1)):
        raise InputError("S, T and U must cover all colours")
    if t < 1 or n <= 2 * t + k:
        raise InputError(f"need t >= 1 and n > 2t + k")
    qu = q_value(colouring, U, k, force=True)
    ctx = {"n": n, "t": t, "k": k, "q_U": qu.value}
    if qu.value >= n - t:
        return Certificate("allSbig-a", (qu.witness_vertices,), Fraction(qu.value), ctx)
    qs = q_value(colouring, S, k, force=True)
    qt = q_value(colouring, T, k, force=True)
    rhs = allSbig_rhs(n, t, k)
    ctx = dict(ctx, q_S=qs.value, q_T=qt.value, rhs=rhs)
    if qs.value + qt.value >= rhs:
        return Certificate("allSbig-b", (qs.witness_vertices, qt.witness_vertices), Fraction(qs.value + qt.value), ctx)
    return Certificate("inequality-violated", (), Fraction(qs.value + qt.value), ctx)


def largest_monochromatic_bipartite_component(colouring: EdgeColouring, left: Sequence[int],
                                              right: Sequence[int]) -> tuple[int, int, tuple[int, ...]]:
    """``(size, colour, vertices)`` of the largest single-colour component of left x right."""
    best = (0, 0, ())
    for c in range(1, colouring.r + 1):
        g = restrict_bipartite(colouring, left, right, [c])
        for comp in component_masks(g.adj, g.mask):
            size = comp.bit_count()
            if size >= 2 and size > best[0]:
                best = (size, c, bits_tuple(comp))
    return best


def check_r11bip(colouring: EdgeColouring, left: Sequence[int], right: Sequence[int]) -> Certificate:
    """Some colour class of the complete bipartite graph has a component on >= (m+n)/r vertices."""
    if mask_of(left) & mask_of(right):
        raise InputError("parts overlap")
    size, colour, verts = largest_monochromatic_bipartite_component(colouring, left, right)
    bound = Fraction(len(left) + len(right), colouring.r)
    kind = "inequality-holds" if size >= bound else "inequality-violated"
    return Certificate(kind, (verts,), Fraction(size), {"bound": bound, "colour": colour, "r": colouring.r})
