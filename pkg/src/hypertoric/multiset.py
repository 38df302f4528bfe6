"""Finite multisets over integer element ids.

A multiset is stored as a mapping ``element -> multiplicity`` with every
multiplicity at least one.  Instances are immutable and hashable, so they can
be collected in sets and used as dictionary keys.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from typing import Union

NOT_CONTAINED = "not_contained"
PROPER = "proper"
EQUAL = "equal"


class Multiset(Mapping):
    """Immutable multiset with entries kept in ascending element order.

    Accepts a mapping of multiplicities or an iterable with repeats::

        >>> Multiset({1: 1, 2: 3}) == Multiset([2, 1, 2, 2])
        True
    """

    __slots__ = ("_items", "_dict", "_hash")

    def __init__(self, data: Union[Mapping, Iterable, None] = None):
        counts: dict = {}
        if data is None:
            pass
        elif isinstance(data, Mapping):
            for a, m in data.items():
                m = int(m)
                if m < 0:
                    raise ValueError(f"negative multiplicity {m} for {a!r}")
                if m:
                    counts[a] = counts.get(a, 0) + m
        else:
            for a in data:
                counts[a] = counts.get(a, 0) + 1
        self._items = tuple(sorted(counts.items()))
        self._dict = dict(self._items)
        self._hash = None

    # -- Mapping protocol -------------------------------------------------
    def __getitem__(self, a) -> int:
        return self._dict[a]

    def get(self, a, default=0):
        return self._dict.get(a, default)

    def __iter__(self) -> Iterator:
        return (a for a, _ in self._items)

    def __len__(self) -> int:
        # number of distinct elements; see ``size`` for the total count
        return len(self._items)

    def __contains__(self, a) -> bool:
        return a in self._dict

    def __eq__(self, other) -> bool:
        if isinstance(other, Multiset):
            return self._items == other._items
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._items)
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{a!r}: {m}" for a, m in self._items)
        return f"Multiset({{{body}}})"

    def __bool__(self) -> bool:
        return bool(self._items)

    # -- basic quantities -------------------------------------------------
    @property
    def size(self) -> int:
        """Total number of copies, ``sum of multiplicities``."""
        return sum(m for _, m in self._items)

    @property
    def support(self) -> frozenset:
        return frozenset(self._dict)

    def items(self):
        return self._items

    def elements(self) -> list:
        """Expanded sorted list with repeats."""
        out = []
        for a, m in self._items:
            out.extend([a] * m)
        return out

    def to_vector(self, length: int) -> tuple:
        v = [0] * length
        for a, m in self._items:
            v[a] = m
        return tuple(v)

    @classmethod
    def from_vector(cls, vec: Iterable[int]) -> "Multiset":
        return cls({i: m for i, m in enumerate(vec) if m})

    # -- algebra ----------------------------------------------------------
    def union(self, other: "Multiset") -> "Multiset":
        out = dict(self._dict)
        for a, m in other._items:
            out[a] = max(out.get(a, 0), m)
        return Multiset(out)

    def intersection(self, other: "Multiset") -> "Multiset":
        return Multiset({a: min(m, other._dict[a]) for a, m in self._items if a in other._dict})

    def difference(self, other: "Multiset") -> "Multiset":
        # saturating: elements whose count would drop to zero or below vanish
        return Multiset({a: m - other._dict.get(a, 0) for a, m in self._items if m > other._dict.get(a, 0)})

    def sum(self, other: "Multiset") -> "Multiset":
        out = dict(self._dict)
        for a, m in other._items:
            out[a] = out.get(a, 0) + m
        return Multiset(out)

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __add__ = sum

    def issubset(self, other: "Multiset") -> bool:
        return all(m <= other._dict.get(a, 0) for a, m in self._items)

    __le__ = issubset

    def __lt__(self, other: "Multiset") -> bool:
        return self.issubset(other) and self != other


def union(m1: Multiset, m2: Multiset) -> Multiset:
    return m1.union(m2)


def intersection(m1: Multiset, m2: Multiset) -> Multiset:
    return m1.intersection(m2)


def difference(m1: Multiset, m2: Multiset) -> Multiset:
    return m1.difference(m2)


def msum(m1: Multiset, m2: Multiset) -> Multiset:
    """The sum ``m1 ⊔ m2``: multiplicities add."""
    return m1.sum(m2)


def is_submultiset(m2: Multiset, m1: Multiset) -> str:
    """Classify ``m2`` relative to ``m1``.

    Returns ``"equal"``, ``"proper"`` (contained and strictly smaller in some
    multiplicity or in support) or ``"not_contained"``.
    """
    if not m2.issubset(m1):
        return NOT_CONTAINED
    return EQUAL if m2 == m1 else PROPER
