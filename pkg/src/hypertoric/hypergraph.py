"""Simple hypergraphs and the incidence matrix of their monomial map."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np


@dataclass(frozen=True)
class Hypergraph:
    """A simple hypergraph on vertices ``0 .. n_vertices-1``.

    Edges are stored as sorted tuples of vertex ids, in the order given.
    ``vertex_labels`` and ``edge_labels`` are optional display names (for
    instance ``"x01"`` or ``"e133"``) and play no role in any computation.
    """

    n_vertices: int
    edges: tuple
    vertex_labels: Optional[tuple] = None
    edge_labels: Optional[tuple] = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        edges = tuple(tuple(sorted(set(int(v) for v in e))) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if not e:
                raise ValueError("edges must be nonempty")
            if e[0] < 0 or e[-1] >= self.n_vertices:
                raise ValueError(f"edge {e} has a vertex outside 0..{self.n_vertices - 1}")
        if len(set(edges)) != len(edges):
            raise ValueError("hypergraph is not simple: repeated edge")
        if self.vertex_labels is not None:
            object.__setattr__(self, "vertex_labels", tuple(self.vertex_labels))
            if len(self.vertex_labels) != self.n_vertices:
                raise ValueError("vertex_labels length mismatch")
        if self.edge_labels is not None:
            object.__setattr__(self, "edge_labels", tuple(self.edge_labels))
            if len(self.edge_labels) != len(edges):
                raise ValueError("edge_labels length mismatch")
        index = {e: i for i, e in enumerate(edges)}
        if self.edge_labels is not None:
            for i, lab in enumerate(self.edge_labels):
                index[lab] = i
        object.__setattr__(self, "_index", index)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge_index(self, key) -> int:
        """Index of an edge given as an index, a label, or a vertex collection."""
        if isinstance(key, (int, np.integer)):
            if not 0 <= key < self.n_edges:
                raise KeyError(f"unknown edge id {key}")
            return int(key)
        if isinstance(key, str):
            try:
                return self._index[key]
            except KeyError:
                raise KeyError(f"unknown edge label {key!r}") from None
        vertices = tuple(sorted(self.vertex_id(v) for v in key))
        try:
            return self._index[vertices]
        except KeyError:
            raise KeyError(f"{tuple(key)} is not an edge") from None

    def vertex_id(self, v) -> int:
        if isinstance(v, str):
            if self.vertex_labels is None or v not in self.vertex_labels:
                raise KeyError(f"unknown vertex label {v!r}")
            return self.vertex_labels.index(v)
        return int(v)

    def edge_name(self, i: int) -> str:
        if self.edge_labels is not None:
            return self.edge_labels[i]
        return "e" + "_".join(str(v) for v in self.edges[i])

    def degree(self, v: int) -> int:
        """Number of edges containing ``v``."""
        if not 0 <= v < self.n_vertices:
            raise ValueError(f"invalid vertex id {v}")
        return sum(1 for e in self.edges if v in e)

    def incidence_matrix(self) -> np.ndarray:
        """0/1 matrix, rows indexed by vertices and columns by edges."""
        a = np.zeros((self.n_vertices, self.n_edges), dtype=np.int64)
        for j, e in enumerate(self.edges):
            a[list(e), j] = 1
        return a

    def edge_sizes(self) -> tuple:
        return tuple(len(e) for e in self.edges)

    def is_uniform(self) -> Optional[int]:
        sizes = set(self.edge_sizes())
        if len(sizes) == 1:
            return sizes.pop()
        return None

    def is_kpartite(self, partition: Sequence[Sequence[int]]) -> bool:
        blocks = [set(b) for b in partition]
        seen: set = set()
        for b in blocks:
            if seen & b:
                raise ValueError("partition blocks overlap")
            seen |= b
        if seen != set(range(self.n_vertices)):
            raise ValueError("partition does not cover the vertex set")
        return all(all(len(b.intersection(e)) == 1 for b in blocks) for e in self.edges)

    def is_regular(self, r: int) -> bool:
        """True iff every vertex, isolated ones included, lies in exactly ``r`` edges."""
        return all(d == r for d in self.degrees())

    def degrees(self) -> tuple:
        deg = [0] * self.n_vertices
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    def induced_subhypergraph(self, vertices) -> "Hypergraph":
        """Edges lying inside ``vertices``, with vertices renumbered in ascending order."""
        keep = sorted(set(self.vertex_id(v) for v in vertices))
        for v in keep:
            if not 0 <= v < self.n_vertices:
                raise ValueError(f"invalid vertex id {v}")
        new_id = {v: i for i, v in enumerate(keep)}
        edges, labels = [], []
        for i, e in enumerate(self.edges):
            if all(v in new_id for v in e):
                edges.append(tuple(new_id[v] for v in e))
                labels.append(self.edge_name(i))
        vlabels = None
        if self.vertex_labels is not None:
            vlabels = tuple(self.vertex_labels[v] for v in keep)
        elabels = tuple(labels) if self.edge_labels is not None else None
        return Hypergraph(len(keep), tuple(edges), vlabels, elabels)

    def same_structure(self, other: "Hypergraph") -> bool:
        return self.n_vertices == other.n_vertices and self.edges == other.edges


def degree(h: Hypergraph, v: int) -> int:
    return h.degree(v)


def is_uniform(h: Hypergraph) -> Optional[int]:
    return h.is_uniform()


def is_kpartite(h: Hypergraph, partition) -> bool:
    return h.is_kpartite(partition)


def is_regular(h: Hypergraph, r: int) -> bool:
    return h.is_regular(r)


def induced_subhypergraph(h: Hypergraph, vertices) -> Hypergraph:
    return h.induced_subhypergraph(vertices)


def incidence_matrix(h: Hypergraph) -> np.ndarray:
    return h.incidence_matrix()
