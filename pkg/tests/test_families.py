import itertools
import random

import pytest

from hypertoric.balanced import BalancedEdgeSet, balanced_of_binomial, binomial_of, is_balanced, is_primitive
from hypertoric.families import (
    b23_step,
    complete_kpartite,
    cumulant_hypergraph,
    cumulant_split_certificate,
    edge_refinement_rewrite,
    group_based_16,
    group_based_blocks,
    in_class_bh,
    kpartite_blocks,
    no_three_way,
    no_three_way_blocks,
    printed_walk_233,
    slim_table_walk,
)
from hypertoric.multiset import Multiset
from hypertoric.splitting import check_decomposition
from hypertoric.toric import generates, markov_basis

# transcribed edge tables
TABLE_233 = {
    "e000": "x00 y00 z00", "e001": "x00 y01 z01", "e002": "x00 y02 z02",
    "e010": "x01 y00 z10", "e011": "x01 y01 z11", "e012": "x01 y02 z12",
    "e020": "x02 y00 z20", "e021": "x02 y01 z21", "e022": "x02 y02 z22",
    "e100": "x10 y10 z00", "e101": "x10 y11 z01", "e102": "x10 y12 z02",
    "e110": "x11 y10 z10", "e111": "x11 y11 z11", "e112": "x11 y12 z12",
    "e120": "x12 y10 z20", "e121": "x12 y11 z21", "e122": "x12 y12 z22",
}
TABLE_GROUP = {
    "e111": "x1 y1 z1", "e122": "x1 y2 z2", "e133": "x1 y3 z3", "e144": "x1 y4 z4",
    "e221": "x2 y2 z1", "e212": "x2 y1 z2", "e243": "x2 y4 z3", "e234": "x2 y3 z4",
    "e331": "x3 y3 z1", "e342": "x3 y4 z2", "e313": "x3 y1 z3", "e324": "x3 y2 z4",
    "e441": "x4 y4 z1", "e432": "x4 y3 z2", "e423": "x4 y2 z3", "e414": "x4 y1 z4",
}


def test_complete_kpartite():
    assert complete_kpartite(2, 2).n_edges == 4
    h = complete_kpartite(3, 2)
    assert h.n_edges == 8 and h.is_uniform() == 3 and h.is_kpartite(kpartite_blocks(3, 2))
    assert complete_kpartite(2, 3).n_edges == 9
    with pytest.raises(ValueError):
        complete_kpartite(1, 3)


def test_no_three_way_sizes_and_regularity():
    h = no_three_way(2, 2, 2)
    assert (h.n_edges, h.n_vertices) == (8, 12) and h.is_regular(2)
    for dims in [(2, 2, 3), (2, 3, 3), (3, 3, 3), (3, 2, 2)]:
        g = no_three_way(*dims)
        assert g.is_kpartite(no_three_way_blocks(*dims))
        assert not g.is_regular(2)
    assert no_three_way(3, 3, 3).n_edges == 27
    with pytest.raises(ValueError):
        no_three_way(1, 2, 2)


def test_no_three_way_matches_printed_table():
    h = no_three_way(2, 3, 3)
    assert h.n_edges == 18 and set(h.edge_labels) == set(TABLE_233)
    for label, verts in TABLE_233.items():
        assert h.edge_index(verts.split()) == h.edge_index(label)


def test_group_based_matches_printed_table():
    h = group_based_16()
    assert h.n_edges == 16 and h.is_uniform() == 3
    assert h.is_kpartite(group_based_blocks())
    assert set(h.degrees()) == {4}
    for label, verts in TABLE_GROUP.items():
        assert h.edge_index(verts.split()) == h.edge_index(label)


def test_cumulant_sizes():
    h = cumulant_hypergraph(3, full=True)
    assert h.edge_labels == ("e12", "e13", "e23", "e123")
    assert cumulant_hypergraph(4, full=False).n_edges == 10
    assert cumulant_hypergraph(4, full=True).n_edges == 11
    assert cumulant_hypergraph(6, full=True).n_edges == 2**6 - 6 - 1
    with pytest.raises(ValueError):
        cumulant_hypergraph(1)


def test_printed_233_walk():
    w = printed_walk_233()
    assert is_balanced(w) and is_primitive(w)
    assert w.blue.size == w.red.size == 6
    # every covered vertex has degree one in each color
    assert set(d for d in w.blue_degrees() if d) == {1}


def test_slim_walk_small_cases():
    h = no_three_way(2, 2, 2)
    (f,) = markov_basis(h, 4).elements
    assert binomial_of(slim_table_walk(2, 2)).same_up_to_sign(f)
    w = slim_table_walk(2, 5)
    assert w.blue.size == 4 and is_primitive(w)
    with pytest.raises(ValueError):
        slim_table_walk(1, 3)


def test_slim_walk_3x3_is_printed_walk_up_to_relabeling():
    target = printed_walk_233()
    h = target.host
    tgt = {(frozenset(h.edge_name(j) for j in target.blue.elements()), frozenset(h.edge_name(j) for j in target.red.elements()))}
    w = slim_table_walk(3, 3)
    names = lambda ms: [w.host.edge_name(j) for j in ms.elements()]  # noqa: E731
    found = False
    for pj, pk in itertools.product(itertools.permutations(range(3)), repeat=2):
        for pi in ((0, 1), (1, 0)):
            def relabel(lab):
                i, j, k = int(lab[1]), int(lab[2]), int(lab[3])
                return f"e{pi[i]}{pj[j]}{pk[k]}"
            blue = frozenset(relabel(x) for x in names(w.blue))
            red = frozenset(relabel(x) for x in names(w.red))
            if (blue, red) in tgt or (red, blue) in tgt:
                found = True
    assert found


def test_case_one_instance():
    h = cumulant_hypergraph(5, full=False)
    w = BalancedEdgeSet.from_edges(h, ["e15", "e34", "e45", "e235"], ["e24", "e35", "e35", "e145"])
    assert in_class_bh(w) and is_primitive(w)
    d = cumulant_split_certificate(w)
    # e2 = {1,5} inside e1 = {1,4,5}, v3 = 4, e3 = {3,5}: S = {e3 + v3}
    assert d.separator == Multiset([h.edge_index("e345")])
    assert check_decomposition(d.whole(), d).status == "valid_proper"


def test_case_three_instance():
    h = cumulant_hypergraph(5, full=False)
    w = BalancedEdgeSet.from_edges(h, ["e15", "e24", "e34", "e235"], ["e23", "e45", "e45", "e123"])
    d = cumulant_split_certificate(w)
    # e1 = {1,2,3}, e2 = {1,5}, e3 = {4,5}: S = {(e1 - 1) + (e3 - 5)}
    assert d.separator == Multiset([h.edge_index("e234")])
    assert check_decomposition(d.whole(), d).status == "valid_proper"
    assert in_class_bh(d.gamma1) and in_class_bh(d.gamma2)


def test_case_two_instance():
    h = cumulant_hypergraph(5, full=False)
    w = BalancedEdgeSet.from_edges(h, ["e24", "e35", "e35", "e145"], ["e15", "e34", "e45", "e235"])
    d = cumulant_split_certificate(w)
    assert d.separator.size == 2
    assert check_decomposition(d.whole(), d).status == "valid_proper"
    assert max(d.gamma1.blue.size, d.gamma2.blue.size) < 4


def test_certificate_rejects_bad_input():
    h = cumulant_hypergraph(5, full=False)
    small = BalancedEdgeSet.from_edges(h, ["e12", "e13", "e23"], ["e123", "e123"])
    with pytest.raises(ValueError):
        cumulant_split_certificate(small.swapped())
    with pytest.raises(ValueError):
        cumulant_split_certificate(BalancedEdgeSet.from_edges(h, ["e12"], ["e13"]))


def test_two_three_edges_traded_for_three_two_edges():
    h = cumulant_hypergraph(5, full=False)
    w = BalancedEdgeSet.from_edges(h, ["e12", "e13", "e45"], ["e123", "e145"])
    d = cumulant_split_certificate(w)
    assert check_decomposition(d.whole(), d).ok
    assert d.separator.size == 3
    assert all(len(h.edges[j]) == 2 for j in d.separator)
    # flipped colors go through the mirrored construction
    d2 = b23_step(w.swapped())
    assert check_decomposition(d2.whole(), d2).ok


def test_random_bh_walks_reduce():
    h = cumulant_hypergraph(6, full=False)
    rng = random.Random(5)
    threes = [j for j, e in enumerate(h.edges) if len(e) == 3]
    twos = [j for j, e in enumerate(h.edges) if len(e) == 2]
    from hypertoric.toric import iter_fiber
    from hypertoric.balanced import image

    checked = 0
    for _ in range(400):
        n = rng.choice([4, 5])
        u = [0] * h.n_edges
        u[rng.choice(threes)] += 1
        for _ in range(n - 1):
            u[rng.choice(twos)] += 1
        for v in iter_fiber(h, image(h, u), n):
            w = BalancedEdgeSet(Multiset.from_vector(u), Multiset.from_vector(v), h)
            if in_class_bh(w) and not (w.blue & w.red) and is_primitive(w):
                d = cumulant_split_certificate(w)
                assert check_decomposition(d.whole(), d).status == "valid_proper"
                assert d.gamma1.blue.size < n and d.gamma2.blue.size < n
                checked += 1
                break
    assert checked > 20


def _refinement_sum(h, terms):
    n = h.n_edges
    rng = random.Random(0)
    t = [rng.randint(-5, 5) for _ in range(n)]

    def mono(vec):
        out = 1
        for x, e in zip(t, vec):
            out *= x**e
        return out

    return t, sum(mono(c) * (mono(f.plus) - mono(f.minus)) for c, f in terms)


@pytest.mark.parametrize(
    "edge, parts",
    [
        ("e1234", ["e12", "e34"]),
        ("e123456", ["e12", "e34", "e56"]),
        ("e12345", ["e12", "e345"]),
        ("e12345", ["e345", "e12"]),
    ],
)
def test_edge_refinement(edge, parts):
    h = cumulant_hypergraph(6, full=True)
    terms = edge_refinement_rewrite(h, edge, parts)
    assert len(terms) == len(parts) - 1
    assert all(f.degree <= 2 for _, f in terms)
    t, total = _refinement_sum(h, terms)
    expect = t[h.edge_index(edge)]
    prod = 1
    for p in parts:
        prod *= t[h.edge_index(p)]
    assert total == expect - prod


def test_edge_refinement_rejects_bad_cover():
    h = cumulant_hypergraph(5, full=True)
    with pytest.raises(ValueError):
        edge_refinement_rewrite(h, "e1234", ["e12", "e23"])
    with pytest.raises(ValueError):
        edge_refinement_rewrite(h, "e1234", ["e12"])


def test_full_cumulant_generated_by_truncated_plus_refinements(cumulant_basis):
    full = cumulant_hypergraph(4, full=True)
    small = cumulant_hypergraph(4, full=False)
    # embed the truncated basis into the full edge indexing
    pos = [full.edge_index(small.edges[j]) for j in range(small.n_edges)]

    def lift(vec):
        out = [0] * full.n_edges
        for j, m in enumerate(vec):
            out[pos[j]] += m
        return tuple(out)

    from hypertoric.balanced import Binomial

    moves = [Binomial(lift(f.plus), lift(f.minus)) for f in cumulant_basis(4, 5)]
    big = full.edge_index((0, 1, 2, 3))
    for a in itertools.combinations(range(4), 2):
        rest = tuple(v for v in range(4) if v not in a)
        (c,) = edge_refinement_rewrite(full, big, [full.edge_index(a), full.edge_index(rest)])
        moves.append(c[1])
    for f in markov_basis(full, 5):
        assert generates(full, moves, f)
