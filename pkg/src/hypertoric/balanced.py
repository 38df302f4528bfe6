"""Balanced edge sets, their binomials, and primitivity.

A balanced edge set is a pair of edge multisets (blue, red) over a host
hypergraph such that every vertex lies in as many blue edges as red edges.
The binomial of such a set is ``prod(t_e, e blue) - prod(t_e, e red)``; in
exponent form it is the pair of multiplicity vectors ``(plus, minus)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .hypergraph import Hypergraph
from .multiset import Multiset


def image(h: Hypergraph, vec) -> tuple:
    """Vertex-degree vector ``A @ vec`` of an edge multiplicity vector."""
    deg = [0] * h.n_vertices
    for j, m in enumerate(vec):
        if m:
            for v in h.edges[j]:
                deg[v] += m
    return tuple(deg)


def multiset_image(h: Hypergraph, ms: Multiset) -> tuple:
    deg = [0] * h.n_vertices
    for j, m in ms.items():
        for v in h.edges[j]:
            deg[v] += m
    return tuple(deg)


def _as_multiset(h: Hypergraph, edges) -> Multiset:
    if isinstance(edges, Multiset):
        for j in edges:
            h.edge_index(j)
        return edges
    return Multiset(h.edge_index(e) for e in edges)


@dataclass(frozen=True)
class BalancedEdgeSet:
    """Bicolored edge multiset on ``host``.

    The balancing condition is *not* enforced here, so the same type also
    carries arbitrary bicolored multisets; use :func:`is_balanced`.
    """

    blue: Multiset
    red: Multiset
    host: Hypergraph

    @classmethod
    def from_edges(cls, host: Hypergraph, blue: Iterable, red: Iterable) -> "BalancedEdgeSet":
        """Build from edge ids, labels or vertex tuples (repeats = multiplicity)."""
        return cls(_as_multiset(host, blue), _as_multiset(host, red), host)

    @property
    def size(self) -> int:
        return self.blue.size + self.red.size

    def __len__(self) -> int:
        return self.size

    def blue_degrees(self) -> tuple:
        return multiset_image(self.host, self.blue)

    def red_degrees(self) -> tuple:
        return multiset_image(self.host, self.red)

    def vertices(self) -> frozenset:
        out = set()
        for j in self.blue.support | self.red.support:
            out.update(self.host.edges[j])
        return frozenset(out)

    def is_trivial(self) -> bool:
        """Blue and red coincide, so the binomial is zero."""
        return self.blue == self.red

    def swapped(self) -> "BalancedEdgeSet":
        return BalancedEdgeSet(self.red, self.blue, self.host)

    def key(self) -> tuple:
        return (self.blue.items(), self.red.items())

    def describe(self) -> str:
        name = self.host.edge_name
        blue = ", ".join(name(j) for j in self.blue.elements())
        red = ", ".join(name(j) for j in self.red.elements())
        return f"{{{blue}}} ⊔ {{{red}}}"


@dataclass(frozen=True)
class Binomial:
    """Binomial ``t^plus - t^minus`` in reduced form.

    Common factors of the two monomials are cancelled on construction.
    """

    plus: tuple
    minus: tuple

    def __post_init__(self):
        p, m = tuple(int(x) for x in self.plus), tuple(int(x) for x in self.minus)
        if len(p) != len(m):
            raise ValueError("exponent vectors differ in length")
        if min(p + m, default=0) < 0:
            raise ValueError("negative exponent")
        g = [min(a, b) for a, b in zip(p, m)]
        object.__setattr__(self, "plus", tuple(a - c for a, c in zip(p, g)))
        object.__setattr__(self, "minus", tuple(b - c for b, c in zip(m, g)))

    @property
    def degree(self) -> int:
        return max(sum(self.plus), sum(self.minus))

    def is_zero(self) -> bool:
        return self.plus == self.minus

    def negated(self) -> "Binomial":
        return Binomial(self.minus, self.plus)

    def canonical(self) -> "Binomial":
        """Sign representative with the lexicographically larger monomial first."""
        return self if self.plus >= self.minus else self.negated()

    def same_up_to_sign(self, other: "Binomial") -> bool:
        return self.canonical() == other.canonical()

    def in_kernel(self, h: Hypergraph) -> bool:
        return len(self.plus) == h.n_edges and image(h, self.plus) == image(h, self.minus)

    def format(self, h: Hypergraph | None = None) -> str:
        return f"{format_monomial(self.plus, h)} - {format_monomial(self.minus, h)}"


def format_monomial(vec, h: Hypergraph | None = None) -> str:
    parts = []
    for j, m in enumerate(vec):
        if m:
            name = h.edge_name(j) if h is not None else str(j)
            parts.append(f"t[{name}]" + (f"^{m}" if m > 1 else ""))
    return "*".join(parts) if parts else "1"


def is_balanced(b: BalancedEdgeSet) -> bool:
    for ms in (b.blue, b.red):
        for j in ms:
            if not 0 <= j < b.host.n_edges:
                raise KeyError(f"unknown edge id {j}")
    return b.blue_degrees() == b.red_degrees()


def binomial_of(b: BalancedEdgeSet) -> Binomial:
    if not is_balanced(b):
        raise ValueError("edge set is not balanced")
    if b.is_trivial():
        raise ValueError("edge set gives the zero binomial")
    n = b.host.n_edges
    return Binomial(b.blue.to_vector(n), b.red.to_vector(n))


def balanced_of_binomial(h: Hypergraph, f: Binomial) -> BalancedEdgeSet:
    if len(f.plus) != h.n_edges:
        raise ValueError("binomial has wrong number of variables")
    if f.is_zero():
        raise ValueError("zero binomial has no walk")
    if not f.in_kernel(h):
        raise ValueError("binomial is not in the toric ideal")
    return BalancedEdgeSet(Multiset.from_vector(f.plus), Multiset.from_vector(f.minus), h)


def _sub_images(h: Hypergraph, ms: Multiset):
    """Map each image ``A u'`` to one count vector ``0 < u' < ms`` realizing it."""
    items = list(ms.items())
    out = {}
    full = tuple(m for _, m in items)
    for counts in itertools.product(*(range(m + 1) for _, m in items)):
        if not any(counts) or counts == full:
            continue
        deg = [0] * h.n_vertices
        for (j, _), c in zip(items, counts):
            if c:
                for v in h.edges[j]:
                    deg[v] += c
        out.setdefault(tuple(deg), counts)
    return out, items


def primitivity_witness(b: BalancedEdgeSet):
    """A smaller balanced set sandwiched color-wise inside ``b``, or None."""
    blue_imgs, blue_items = _sub_images(b.host, b.blue)
    red_imgs, red_items = _sub_images(b.host, b.red)
    small, big = (blue_imgs, red_imgs) if len(blue_imgs) <= len(red_imgs) else (red_imgs, blue_imgs)
    for img in small:
        if img in big:
            bc, rc = blue_imgs[img], red_imgs[img]
            blue = Multiset({j: c for (j, _), c in zip(blue_items, bc)})
            red = Multiset({j: c for (j, _), c in zip(red_items, rc)})
            return BalancedEdgeSet(blue, red, b.host)
    return None


def is_primitive(b: BalancedEdgeSet) -> bool:
    """No nonempty balanced set sits properly inside ``b`` in both colors.

    Exhaustive over the box of sub-multisets of each color.  The empty set is
    not primitive, and neither is a set whose two colors coincide.
    """
    if not is_balanced(b):
        raise ValueError("edge set is not balanced")
    if b.is_trivial():
        return False
    return primitivity_witness(b) is None


def is_primitive_binomial(h: Hypergraph, f: Binomial) -> bool:
    return is_primitive(balanced_of_binomial(h, f))


def add_splitting(b: BalancedEdgeSet, s: Multiset) -> BalancedEdgeSet:
    """``b + S``: the multiset ``S`` added to both colors."""
    for j in s:
        b.host.edge_index(j)
    return BalancedEdgeSet(b.blue + s, b.red + s, b.host)


def maxdeg(v: int, b: BalancedEdgeSet) -> int:
    edges = b.host.edges
    blue = sum(m for j, m in b.blue.items() if v in edges[j])
    red = sum(m for j, m in b.red.items() if v in edges[j])
    return max(blue, red)
