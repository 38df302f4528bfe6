import numpy as np
import pytest

from hypertoric.families import complete_kpartite, kpartite_blocks, no_three_way
from hypertoric.hypergraph import Hypergraph


def test_incidence_matrix_columns_are_edges():
    h = Hypergraph(4, ((0, 1), (1, 2, 3)))
    a = h.incidence_matrix()
    assert a.shape == (4, 2)
    assert np.array_equal(a[:, 1], [0, 1, 1, 1])


def test_rejects_repeated_or_empty_edges():
    with pytest.raises(ValueError):
        Hypergraph(3, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        Hypergraph(3, ((),))
    with pytest.raises(ValueError):
        Hypergraph(2, ((0, 5),))


def test_degree_and_regularity():
    h = no_three_way(2, 2, 2)
    assert h.is_regular(2)
    assert h.degree(0) == 2
    with pytest.raises(ValueError):
        h.degree(99)
    # an isolated vertex breaks regularity
    assert not Hypergraph(3, ((0, 1),)).is_regular(1)


def test_uniformity():
    assert complete_kpartite(3, 2).is_uniform() == 3
    assert Hypergraph(3, ((0, 1), (0, 1, 2))).is_uniform() is None


def test_kpartite():
    h = complete_kpartite(3, 2)
    assert h.is_kpartite(kpartite_blocks(3, 2))
    assert not h.is_kpartite([[0, 2], [1, 3], [4, 5]])
    with pytest.raises(ValueError):
        h.is_kpartite([[0, 1], [1, 2, 3, 4, 5]])


def test_edge_lookup_by_label_and_vertices():
    h = no_three_way(2, 2, 2)
    j = h.edge_index("e101")
    assert h.edge_index(h.edges[j]) == j
    assert h.edge_index(["x10", "y11", "z01"]) == j
    with pytest.raises(KeyError):
        h.edge_index("e999")
    with pytest.raises(KeyError):
        h.edge_index((0, 1))


def test_induced_subhypergraph_restricts_table():
    big = no_three_way(3, 3, 3)
    keep = [v for v, lab in enumerate(big.vertex_labels) if lab[0] == "z" or lab[1] != "2"]
    sub = big.induced_subhypergraph(keep)
    small = no_three_way(2, 3, 3)
    assert sub.same_structure(small)
    assert sub.edge_labels == small.edge_labels
    assert sub.vertex_labels == small.vertex_labels
