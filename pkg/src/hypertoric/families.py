"""Named hypergraph and walk families.

Includes the constructive rewriting steps used for cumulant hypergraphs:
the degree-reducing splitting of walks with one 3-edge per color, the
reduction that trades two 3-edges for three 2-edges, and the telescoping
refinement of a large edge into smaller parts.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .balanced import BalancedEdgeSet, Binomial, is_balanced, is_primitive
from .hypergraph import Hypergraph
from .multiset import Multiset

GROUP_BASED_EDGES = (
    "111", "122", "133", "144",
    "221", "212", "243", "234",
    "331", "342", "313", "324",
    "441", "432", "423", "414",
)


def complete_kpartite(k: int, d: int) -> Hypergraph:
    """All ``d**k`` transversals of ``k`` blocks with ``d`` vertices each.

    Vertex ``j`` of block ``i`` has id ``i*d + j``.
    """
    if k < 2 or d < 2:
        raise ValueError("need k >= 2 and d >= 2")
    edges = [tuple(i * d + j for i, j in enumerate(t)) for t in itertools.product(range(d), repeat=k)]
    vlabels = tuple(f"v{i}{j}" for i in range(k) for j in range(d))
    elabels = tuple("e" + "".join(map(str, t)) for t in itertools.product(range(d), repeat=k))
    return Hypergraph(k * d, tuple(edges), vlabels, elabels)


def kpartite_blocks(k: int, d: int) -> list:
    return [list(range(i * d, (i + 1) * d)) for i in range(k)]


def no_three_way(a: int, b: int, c: int) -> Hypergraph:
    """Hypergraph of the no-3-way interaction model on ``a x b x c`` tables.

    Vertices are the cells of the three 2-way margins, ``x_ij``, ``y_ik`` and
    ``z_jk`` (row-major within each margin, in that order); cell ``(i,j,k)``
    is the edge ``{x_ij, y_ik, z_jk}`` labelled ``e_ijk``.
    """
    if min(a, b, c) < 2:
        raise ValueError("table dimensions must be at least 2")
    x = {(i, j): i * b + j for i in range(a) for j in range(b)}
    y = {(i, k): a * b + i * c + k for i in range(a) for k in range(c)}
    z = {(j, k): a * b + a * c + j * c + k for j in range(b) for k in range(c)}
    labels = [f"x{i}{j}" for i, j in x] + [f"y{i}{k}" for i, k in y] + [f"z{j}{k}" for j, k in z]
    edges, elabels = [], []
    for i, j, k in itertools.product(range(a), range(b), range(c)):
        edges.append((x[i, j], y[i, k], z[j, k]))
        elabels.append(f"e{i}{j}{k}")
    return Hypergraph(len(labels), tuple(edges), tuple(labels), tuple(elabels))


def no_three_way_blocks(a: int, b: int, c: int) -> list:
    return [list(range(a * b)), list(range(a * b, a * b + a * c)), list(range(a * b + a * c, a * b + a * c + b * c))]


def group_based_16() -> Hypergraph:
    """The 3-uniform group-based phylogenetic model on ``x1..x4, y1..y4, z1..z4``.

    Edge ``e_abc`` is ``{x_a, y_b, z_c}``.
    """
    labels = tuple(f"{p}{i}" for p in "xyz" for i in range(1, 5))
    edges = []
    for code in GROUP_BASED_EDGES:
        a, b, c = (int(ch) - 1 for ch in code)
        edges.append((a, 4 + b, 8 + c))
    return Hypergraph(12, tuple(edges), labels, tuple("e" + code for code in GROUP_BASED_EDGES))


def group_based_blocks() -> list:
    return [list(range(0, 4)), list(range(4, 8)), list(range(8, 12))]


def group_based_walk() -> BalancedEdgeSet:
    h = group_based_16()
    return BalancedEdgeSet.from_edges(h, ["e324", "e111", "e243", "e432"], ["e122", "e313", "e234", "e441"])


def cumulant_hypergraph(n: int, full: bool = True) -> Hypergraph:
    """Subsets of ``{1..n}`` of size >= 2 (``full``) or of size 2 and 3 only.

    Vertex ``i`` carries label ``str(i+1)``; edges are ordered by size, then
    lexicographically.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    top = n if full else min(3, n)
    edges = [c for r in range(2, top + 1) for c in itertools.combinations(range(n), r)]
    vlabels = tuple(str(i + 1) for i in range(n))
    elabels = tuple("e" + "".join(str(v + 1) for v in c) for c in edges)
    return Hypergraph(n, tuple(edges), vlabels, elabels)


def printed_walk_233() -> BalancedEdgeSet:
    """The degree-6 walk on the 2x3x3 no-3-way hypergraph.

    The last red edge is printed as ``e220``, which is not an edge of the
    model; ``e020`` is the only choice that balances the walk.
    """
    h = no_three_way(2, 3, 3)
    return BalancedEdgeSet.from_edges(
        h,
        ["e000", "e101", "e011", "e112", "e022", "e120"],
        ["e100", "e001", "e111", "e012", "e122", "e020"],
    )


def slim_table_walk(r: int, c: int) -> BalancedEdgeSet:
    """Walk of degree ``2*min(r,c)`` on ``no_three_way(2, r, c)``.

    Built from the cycle ``0 -> 1 -> ... -> m-1 -> 0`` on ``K_{r,c}``: layer 0
    takes the diagonal cells blue and the shifted cells red, layer 1 the
    other way round.
    """
    if r < 2 or c < 2:
        raise ValueError("need r, c >= 2")
    if max(r, c) > 10:
        raise ValueError("edge labels support dimensions up to 10")
    h = no_three_way(2, r, c)
    m = min(r, c)
    blue = [f"e0{j}{j}" for j in range(m)] + [f"e1{j}{(j + 1) % m}" for j in range(m)]
    red = [f"e1{j}{j}" for j in range(m)] + [f"e0{j}{(j + 1) % m}" for j in range(m)]
    return BalancedEdgeSet.from_edges(h, blue, red)


# -- cumulant rewriting -------------------------------------------------------


def _sized(h: Hypergraph, ms: Multiset, size: int) -> list:
    return [j for j in ms.elements() if len(h.edges[j]) == size]


def in_class_bh(w: BalancedEdgeSet) -> bool:
    """Equal color sizes and exactly one 3-edge in each color (all edges of size 2 or 3)."""
    h = w.host
    if any(len(h.edges[j]) not in (2, 3) for j in w.blue.support | w.red.support):
        return False
    return (
        w.blue.size == w.red.size
        and len(_sized(h, w.blue, 3)) == 1
        and len(_sized(h, w.red, 3)) == 1
    )


def _decomposition(whole: BalancedEdgeSet, g1: BalancedEdgeSet, s: Multiset, g2: BalancedEdgeSet):
    from .splitting import Decomposition, classify

    return Decomposition(g1, s, g2, classify(g1, s, g2))


def cumulant_split_certificate(w: BalancedEdgeSet):
    """Degree-reducing decomposition of ``w + S`` for a cumulant walk.

    For a primitive walk with one 3-edge per color, equal color sizes and
    degree above 3, the case analysis around the red 3-edge ``e1`` and a blue
    2-edge ``e2`` meeting it produces a proper splitting set whose two halves
    again have one 3-edge per color and strictly smaller degree.

    A walk whose colors carry different numbers of 3-edges is first reduced
    by replacing two 3-edges of the heavier color with three 2-edges; the
    decomposition of that step is returned instead (see :func:`b23_step`).
    """
    h = w.host
    if not is_balanced(w):
        raise ValueError("walk is not balanced")
    if w.blue.size < w.red.size:
        raise ValueError("expected |blue| >= |red|")
    if any(len(h.edges[j]) not in (2, 3) for j in w.blue.support | w.red.support):
        raise ValueError("walk must use only 2- and 3-edges")
    n3b, n3r = len(_sized(h, w.blue, 3)), len(_sized(h, w.red, 3))
    if not in_class_bh(w):
        if max(n3b, n3r) >= 2 and (n3b != n3r or n3b >= 2):
            return b23_step(w)
        raise ValueError("walk is not in the class with one 3-edge per color")
    if w.blue.size <= 3:
        raise ValueError("degree must exceed 3")
    if not is_primitive(w):
        raise ValueError("walk is not primitive")

    edges = h.edges
    eid = {frozenset(e): j for j, e in enumerate(edges)}

    def edge(*vs) -> int:
        return eid[frozenset(vs)]

    (e1,) = _sized(h, w.red, 3)
    E1 = set(edges[e1])
    red2 = sorted(set(_sized(h, w.red, 2)))
    blue2 = sorted(j for j in set(_sized(h, w.blue, 2)) if E1 & set(edges[j]))
    if not blue2:
        raise RuntimeError("no blue 2-edge meets the red 3-edge of a primitive walk")
    e2 = blue2[0]
    E2 = set(edges[e2])
    if E2 <= E1:
        # case 1: e1 = e2 + {v3}
        (v3,) = E1 - E2
        e3 = next((j for j in red2 if v3 not in edges[j]), None)
        if e3 is None:
            raise RuntimeError("case 1: no red 2-edge avoids v3")
        e4 = edge(v3, *edges[e3])
        s = Multiset([e4])
        removed = Multiset([e1, e3])
        g2 = BalancedEdgeSet(Multiset([e2, e4]), removed, h)
    else:
        (v1,) = E1 & E2
        (v2,) = E2 - {v1}
        case2 = [j for j in red2 if v2 in edges[j] and (set(edges[j]) - {v2}) <= E1 - {v1}]
        if case2:
            e3 = case2[0]
            (v3,) = set(edges[e3]) - {v2}
            (v4,) = E1 - {v1, v3}
            e4 = next((j for j in red2 if v3 not in edges[j]), None)
            if e4 is None:
                raise RuntimeError("case 2: no red 2-edge avoids v3")
            a, b = edges[e4]
            v5, v6 = (b, a) if a == v4 else (a, b)
            e5, e6 = edge(v3, v4, v5), edge(v3, v6)
            s = Multiset([e5, e6])
            removed = Multiset([e1, e3, e4])
            g2 = BalancedEdgeSet(Multiset([e2, e5, e6]), removed, h)
        else:
            case3 = [j for j in red2 if v2 in edges[j] and not (set(edges[j]) & E1)]
            if not case3:
                raise RuntimeError("no case applies; the walk contradicts the case analysis")
            e3 = case3[0]
            e4 = edge(*((E1 - {v1}) | (set(edges[e3]) - {v2})))
            s = Multiset([e4])
            removed = Multiset([e1, e3])
            g2 = BalancedEdgeSet(Multiset([e2, e4]), removed, h)
    g1 = BalancedEdgeSet(w.blue - Multiset([e2]), (w.red - removed) + s, h)
    whole = BalancedEdgeSet(w.blue + s, w.red + s, h)
    return _decomposition(whole, g1, s, g2)


def _pairings(vertices: list):
    """Split a list of six vertex slots into three pairs of distinct vertices."""
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    seen = set()
    for i, v in enumerate(rest):
        if v == first or v in seen:
            continue
        seen.add(v)
        for tail in _pairings(rest[:i] + rest[i + 1:]):
            yield [(first, v)] + tail


def b23_step(w: BalancedEdgeSet):
    """Replace two 3-edges of the color with more 3-edges by three 2-edges.

    Returns the decomposition ``(G1, S, G2)`` of ``w + S`` where ``S`` is the
    three new 2-edges, ``G2 = S ⊔ {e1, e2}`` and ``G1`` is ``w`` with the swap
    applied.  The reduced walk is ``G1``.
    """
    h = w.host
    eid = {e: j for j, e in enumerate(h.edges)}
    n3b, n3r = len(_sized(h, w.blue, 3)), len(_sized(h, w.red, 3))
    flip = n3b > n3r
    ww = w.swapped() if flip else w
    threes = _sized(h, ww.red, 3)
    if len(threes) < 2:
        raise ValueError("need two 3-edges in one color")
    e1, e2 = threes[0], threes[1]
    slots = sorted(h.edges[e1] + h.edges[e2])
    pair = Multiset([e1, e2])
    for pairing in _pairings(slots):
        s = Multiset(eid[tuple(sorted(p))] for p in pairing)
        g1 = BalancedEdgeSet(ww.blue, (ww.red - pair) + s, h)
        # a pairing that recreates the other color leaves nothing to reduce
        if not g1.is_trivial():
            break
    else:
        raise ValueError("walk is itself a single exchange of two 3-edges for three 2-edges")
    g2 = BalancedEdgeSet(s, pair, h)
    if flip:
        # mirror back: the decomposition of w + S uses swapped roles
        g1, g2 = g2.swapped(), g1.swapped()
    whole = BalancedEdgeSet(w.blue + s, w.red + s, h)
    return _decomposition(whole, g1, s, g2)


def edge_refinement_rewrite(h: Hypergraph, e, parts: Sequence) -> list:
    """Telescoping quadrics expressing ``t_e - prod(t_p for p in parts)``.

    With parts ``k1..kl`` and ``U_j = k_j ∪ ... ∪ k_l`` the terms are
    ``(prod(t_k1..t_k{j-1}), t_{U_j} - t_{k_j} t_{U_{j+1}})`` for
    ``j = 1..l-1``; their weighted sum is the target binomial.  Every union
    ``U_j`` must itself be an edge of ``h``.
    """
    target = frozenset(h.edges[h.edge_index(e)])
    sets = [frozenset(h.edges[h.edge_index(p)]) for p in parts]
    if len(sets) < 2:
        raise ValueError("need at least two parts")
    if sum(len(p) for p in sets) != len(target) or frozenset().union(*sets) != target:
        raise ValueError("parts are not a disjoint cover of the edge")
    eid = {frozenset(x): j for j, x in enumerate(h.edges)}
    n = h.n_edges

    def vec(*idx):
        v = [0] * n
        for j in idx:
            v[j] += 1
        return tuple(v)

    part_ids = [eid[p] for p in sets]
    terms = []
    for j in range(len(sets) - 1):
        u_j = frozenset().union(*sets[j:])
        u_next = frozenset().union(*sets[j + 1:])
        if u_j not in eid or u_next not in eid:
            raise ValueError("intermediate union is not an edge of the hypergraph")
        cofactor = vec(*part_ids[:j])
        terms.append((cofactor, Binomial(vec(eid[u_j]), vec(part_ids[j], eid[u_next]))))
    return terms
