"""Fibers, Graver and minimal Markov bases, indispensability.

Everything here works on exponent vectors (tuples indexed by edge id) and the
vertex-degree map ``u -> A u`` of the host hypergraph.  All searches are
exhaustive and carry explicit degree caps.

Markov bases are computed fiber by fiber.  Two points of a fiber are joined
by a move of a strictly smaller fiber exactly when they share an edge, so the
components that still need connecting in fiber ``b`` are the components of
the "shares an edge" graph on its points.  One connecting binomial is added
per missing link of a minimum-degree spanning tree over those components.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .balanced import Binomial, image, is_primitive_binomial
from .hypergraph import Hypergraph

log = logging.getLogger(__name__)


class IncompleteResult(RuntimeError):
    """A cap-dependent result is not known to be complete."""


@dataclass(frozen=True)
class Fiber:
    degree_vector: tuple
    points: tuple
    cap: Optional[int] = None

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class GraverBasis:
    elements: tuple
    degree_cap: int

    @property
    def complete_to_degree(self) -> int:
        return self.degree_cap

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class MarkovBasis:
    """Minimal generating set restricted to fibers reachable in degree <= cap.

    ``complete`` is False when some visited fiber could only be connected by
    a binomial of degree above the cap; such binomials are not included.
    """

    elements: tuple
    degree_cap: int
    complete: bool = True
    fibers: tuple = field(default=(), repr=False)

    @property
    def max_degree(self) -> int:
        return max((f.degree for f in self.elements), default=0)

    @property
    def complete_to_degree(self) -> int:
        return self.degree_cap

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _vertex_edges(h: Hypergraph) -> list:
    inc = [[] for _ in range(h.n_vertices)]
    for j, e in enumerate(h.edges):
        for v in e:
            inc[v].append(j)
    return inc


def iter_fiber(h: Hypergraph, deg_vec: Sequence[int], cap: Optional[int] = None) -> Iterator[tuple]:
    """Yield every ``u >= 0`` with ``A u = deg_vec`` and ``sum(u) <= cap``.

    Depth-first over edges in index order; an edge's multiplicity is bounded
    by the remaining degree of its vertices, and a branch dies as soon as some
    vertex with remaining degree has no later edge left to cover it.
    """
    rem = list(deg_vec)
    if len(rem) != h.n_vertices or min(rem, default=0) < 0:
        raise ValueError("degree vector must be a non-negative vector over the vertices")
    edges = h.edges
    n_e = len(edges)
    last = [-1] * h.n_vertices
    for j, e in enumerate(edges):
        for v in e:
            last[v] = j
    if any(r > 0 and last[v] < 0 for v, r in enumerate(rem)):
        return
    # vertices whose last covering edge is j: they must be exhausted after j
    closes = [[] for _ in range(n_e)]
    for v, j in enumerate(last):
        if j >= 0:
            closes[j].append(v)
    budget = float("inf") if cap is None else cap
    u = [0] * n_e

    def rec(j: int, used: int):
        if j == n_e:
            yield tuple(u)
            return
        e = edges[j]
        hi = min(rem[v] for v in e)
        hi = min(hi, budget - used)
        # multiplicity forced from above by vertices that close at this edge
        lo = max((rem[v] for v in closes[j]), default=0)
        if lo > hi:
            return
        for m in range(hi, lo - 1, -1):
            for v in e:
                rem[v] -= m
            if all(rem[v] == 0 for v in closes[j]):
                u[j] = m
                yield from rec(j + 1, used + m)
            for v in e:
                rem[v] += m
        u[j] = 0

    yield from rec(0, 0)


def enumerate_fiber(h: Hypergraph, deg_vec: Sequence[int], cap: Optional[int] = None) -> Fiber:
    points = tuple(sorted(iter_fiber(h, deg_vec, cap)))
    return Fiber(tuple(deg_vec), points, cap)


def monomials_by_image(h: Hypergraph, cap: int, min_degree: int = 1) -> dict:
    """Group all monomials of degree ``min_degree..cap`` by their image."""
    buckets: dict = defaultdict(list)
    n_e = h.n_edges
    for d in range(min_degree, cap + 1):
        for combo in itertools.combinations_with_replacement(range(n_e), d):
            u = [0] * n_e
            for j in combo:
                u[j] += 1
            u = tuple(u)
            buckets[image(h, u)].append(u)
    return buckets


def _disjoint(u: tuple, v: tuple) -> bool:
    return not any(a and b for a, b in zip(u, v))


def graver_basis(h: Hypergraph, degree_cap: int) -> GraverBasis:
    """All primitive binomials with both monomials of degree <= ``degree_cap``.

    One sign representative each (see :meth:`Binomial.canonical`), sorted by
    degree and then lexicographically.
    """
    if degree_cap < 1:
        raise ValueError("degree_cap must be positive")
    found = set()
    for pts in monomials_by_image(h, degree_cap).values():
        if len(pts) < 2:
            continue
        for u, v in itertools.combinations(pts, 2):
            if _disjoint(u, v):
                f = Binomial(u, v).canonical()
                if f not in found and is_primitive_binomial(h, f):
                    found.add(f)
    return GraverBasis(tuple(sorted(found, key=_binomial_key)), degree_cap)


def _binomial_key(f: Binomial):
    return (f.degree, f.plus, f.minus)


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def shared_edge_components(points: Sequence[tuple]) -> list:
    """Components of the graph joining points that share an edge.

    Returned as lists of points, each sorted, in order of first point.
    """
    dsu = _DSU(len(points))
    first_with: dict = {}
    for i, p in enumerate(points):
        for j, m in enumerate(p):
            if m:
                if j in first_with:
                    dsu.union(i, first_with[j])
                else:
                    first_with[j] = i
    groups: dict = defaultdict(list)
    for i, p in enumerate(points):
        groups[dsu.find(i)].append(p)
    return [sorted(g) for _, g in sorted(groups.items())]


def move_components(points: Iterable[tuple], moves: Iterable[Binomial]) -> list:
    """Components of a fiber under explicit moves ``u -> u - plus + minus`` (and back)."""
    pts = sorted(set(points))
    index = {p: i for i, p in enumerate(pts)}
    steps = []
    for f in moves:
        steps.append((f.plus, f.minus))
        steps.append((f.minus, f.plus))
    dsu = _DSU(len(pts))
    for p in pts:
        for a, b in steps:
            if all(x >= y for x, y in zip(p, a)):
                q = tuple(x - y + z for x, y, z in zip(p, a, b))
                if q in index:
                    dsu.union(index[p], index[q])
    groups: dict = defaultdict(list)
    for p in pts:
        groups[dsu.find(index[p])].append(p)
    return [g for _, g in sorted(groups.items())]


def _point_key(tie_break: str):
    if tie_break == "lex":
        return lambda p: (sum(p), p)
    if tie_break == "reverse":
        return lambda p: (sum(p), tuple(-x for x in p))
    raise ValueError(f"unknown tie_break {tie_break!r}")


def fiber_connectors(points: Sequence[tuple], tie_break: str = "lex") -> list:
    """Binomials joining the shared-edge components of one fiber.

    Each component is represented by its smallest point under the tie-break
    order; representatives are joined by a spanning tree of least possible
    maximum degree (Kruskal on pair degree, ties broken by the same order).
    """
    comps = shared_edge_components(points)
    if len(comps) < 2:
        return []
    key = _point_key(tie_break)
    reps = sorted((min(c, key=key) for c in comps), key=key)
    pairs = sorted(
        itertools.combinations(range(len(reps)), 2),
        key=lambda ij: (max(sum(reps[ij[0]]), sum(reps[ij[1]])), key(reps[ij[0]]), key(reps[ij[1]])),
    )
    dsu = _DSU(len(reps))
    out = []
    for i, j in pairs:
        if dsu.union(i, j):
            out.append(Binomial(reps[i], reps[j]).canonical())
    return out


def _candidate_fibers(h: Hypergraph, degree_cap: int) -> list:
    """Fibers containing a point of degree <= cap, each listed completely."""
    buckets = monomials_by_image(h, degree_cap)
    uniform = h.is_uniform() is not None
    out = []
    for b in sorted(buckets, key=lambda b: (sum(b), b)):
        pts = buckets[b]
        if uniform:
            # every point of a fiber has the same degree
            if len(pts) > 1:
                out.append((b, sorted(pts)))
        else:
            full = sorted(iter_fiber(h, b))
            if len(full) > 1:
                out.append((b, full))
    return out


def markov_basis(h: Hypergraph, degree_cap: int, tie_break: str = "lex", prune: bool = True) -> MarkovBasis:
    """Minimal Markov basis, complete for every fiber with a point of degree <= cap.

    ``tie_break`` ("lex" or "reverse") selects which of the many minimal
    bases is returned.  With ``prune`` each element is re-checked by explicit
    move connectivity and dropped if the others already connect its fiber.
    """
    if degree_cap < 1:
        raise ValueError("degree_cap must be positive")
    elements = []
    complete = True
    touched = []
    for b, pts in _candidate_fibers(h, degree_cap):
        touched.append(b)
        for f in fiber_connectors(pts, tie_break):
            if f.degree > degree_cap:
                complete = False
                log.info("fiber %s needs a binomial of degree %d > cap", b, f.degree)
                continue
            elements.append(f)
    if prune:
        elements = prune_redundant(h, elements)
    elements.sort(key=_binomial_key)
    return MarkovBasis(tuple(elements), degree_cap, complete, tuple(touched))


def prune_redundant(h: Hypergraph, elements: Sequence[Binomial]) -> list:
    """Drop each element whose endpoints are joined by the remaining ones."""
    kept = list(elements)
    for f in sorted(elements, key=_binomial_key, reverse=True):
        others = [g for g in kept if g != f]
        pts = list(iter_fiber(h, image(h, f.plus)))
        if _connected(pts, others, f.plus, f.minus):
            kept = others
    return kept


def _connected(points, moves, a, b) -> bool:
    for comp in move_components(points, moves):
        if a in comp:
            return b in comp
    return False


def markov_width(h: Hypergraph, degree_cap: int) -> int:
    mb = markov_basis(h, degree_cap)
    if not mb.complete:
        raise IncompleteResult(f"some fiber needs a generator of degree > {degree_cap}")
    return mb.max_degree


def is_indispensable(h: Hypergraph, f: Binomial, degree_cap: Optional[int] = None) -> bool:
    """True iff every generating set contains ``f`` or ``-f``.

    That happens exactly when the fiber of ``f`` consists of its two
    monomials and nothing else (they share no edge since ``f`` is reduced).
    The fiber is scanned lazily and abandoned at the third point.
    """
    if f.is_zero():
        return False
    if not f.in_kernel(h):
        raise ValueError("binomial is not in the toric ideal")
    count = 0
    for p in iter_fiber(h, image(h, f.plus), degree_cap):
        count += 1
        if count > 2 or p not in (f.plus, f.minus):
            return False
    if degree_cap is not None and f.degree > degree_cap:
        raise IncompleteResult("binomial exceeds the fiber cap")
    return count == 2


def graver_equals_markov(h: Hypergraph, degree_cap: int) -> bool:
    gb = graver_basis(h, degree_cap)
    mb = markov_basis(h, degree_cap)
    if not mb.complete:
        raise IncompleteResult(f"Markov basis incomplete at cap {degree_cap}")
    return {f.canonical() for f in gb} == {f.canonical() for f in mb}


def generates(h: Hypergraph, moves: Sequence[Binomial], f: Binomial) -> bool:
    """Ideal membership of ``f`` in the ideal of ``moves`` via fiber connectivity."""
    pts = list(iter_fiber(h, image(h, f.plus)))
    return _connected(pts, moves, f.plus, f.minus)
