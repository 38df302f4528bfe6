"""Separators, splitting sets and degree certificates for balanced edge sets.

A decomposition ``(G1, S, G2)`` of a balanced set ``whole`` splits it
color-wise into two balanced pieces with ``S = G1.red ∩ G2.blue``.  For
``whole = W + S`` every decomposition has the shape::

    G1 = (W.blue - Y) ⊔ (S + X)        G2 = (S + Y) ⊔ (W.red - X)

with ``X <= W.red``, ``Y <= W.blue`` of disjoint support and
``A(X + Y) = A(W.blue) - A(S)``.  The searches below enumerate exactly these
pairs.  Pieces whose two colors coincide give the zero binomial and are
never accepted; without that restriction ``S = W.red`` would split every
walk trivially.

Algebraically the decomposition rewrites ``f_W = Y·f_G1 + X·f_G2``.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .balanced import (
    BalancedEdgeSet,
    Binomial,
    binomial_of,
    is_balanced,
    is_primitive,
    multiset_image,
)
from .multiset import Multiset

log = logging.getLogger(__name__)

PROPER, BLUE, RED = "proper", "blue", "red"
DEFAULT = "default"


class InconsistentCertificate(RuntimeError):
    """A polynomial identity that must hold by construction failed."""


@dataclass(frozen=True)
class Decomposition:
    gamma1: BalancedEdgeSet
    separator: Multiset
    gamma2: BalancedEdgeSet
    classification: str

    def whole(self) -> BalancedEdgeSet:
        g1, g2 = self.gamma1, self.gamma2
        return BalancedEdgeSet(g1.blue + g2.blue, g1.red + g2.red, g1.host)

    def base_walk(self) -> BalancedEdgeSet:
        """The walk ``W`` with ``W + S`` equal to :meth:`whole`."""
        w = self.whole()
        return BalancedEdgeSet(w.blue - self.separator, w.red - self.separator, w.host)


@dataclass(frozen=True)
class CheckResult:
    status: str
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.status.startswith("valid")

    def __bool__(self) -> bool:
        return self.ok


def classify(g1: BalancedEdgeSet, s: Multiset, g2: BalancedEdgeSet) -> str:
    """Proper, blue or red; when ``G1.red = S = G2.blue`` the answer is blue."""
    if s < g1.red and s < g2.blue:
        return PROPER
    if g1.red == s:
        return BLUE
    if g2.blue == s:
        return RED
    raise ValueError("separator is not contained in G1.red and G2.blue")


def check_decomposition(whole: BalancedEdgeSet, d: Decomposition) -> CheckResult:
    """Verify every decomposition condition against ``whole`` and classify."""
    g1, s, g2 = d.gamma1, d.separator, d.gamma2

    def bad(reason):
        return CheckResult("invalid", reason)

    if not is_balanced(whole):
        return bad("whole is not balanced")
    for name, g in (("gamma1", g1), ("gamma2", g2)):
        if not is_balanced(g):
            return bad(f"{name} is not balanced")
    if not s:
        return bad("separator is empty")
    for name, g in (("gamma1", g1), ("gamma2", g2)):
        if not (g.blue <= whole.blue and g.red <= whole.red):
            return bad(f"coloring condition fails for {name}")
    if g1.blue + g2.blue != whole.blue or g1.red + g2.red != whole.red:
        return bad("gamma1 and gamma2 do not sum to whole")
    if (g1.red & g2.blue) != s:
        return bad("separator differs from gamma1.red ∩ gamma2.blue")
    for name, g in (("gamma1", g1), ("gamma2", g2)):
        if not g.blue and not g.red:
            return bad(f"{name} is empty")
        if g.is_trivial():
            return bad(f"{name} has equal colors (zero binomial)")
    kind = classify(g1, s, g2)
    if d.classification != kind:
        return bad(f"classification is {kind}, recorded {d.classification}")
    return CheckResult(f"valid_{kind}")


# -- search -------------------------------------------------------------------


def _make_decomposition(w: BalancedEdgeSet, s: Multiset, x: Multiset, y: Multiset) -> Optional[Decomposition]:
    h = w.host
    g1 = BalancedEdgeSet(w.blue - y, s + x, h)
    g2 = BalancedEdgeSet(s + y, w.red - x, h)
    if g1.is_trivial() or g2.is_trivial():
        return None
    return Decomposition(g1, s, g2, classify(g1, s, g2))


def splitting_decompositions(w: BalancedEdgeSet, s: Multiset) -> Iterator[Decomposition]:
    """Every decomposition of ``w + s`` with separator ``s``."""
    h = w.host
    beta = multiset_image(h, w.blue)
    rem = list(beta)
    for j, m in s.items():
        for v in h.edges[j]:
            rem[v] -= m
    if min(rem, default=0) < 0 or not s:
        return
    support = sorted(w.blue.support | w.red.support)
    edges = h.edges
    # a vertex must be settled once the last support edge through it is placed
    last = {}
    for k, j in enumerate(support):
        for v in edges[j]:
            last[v] = k
    if any(r and v not in last for v, r in enumerate(rem)):
        return
    closes = [[] for _ in support]
    for v, k in last.items():
        closes[k].append(v)
    x, y = {}, {}

    def rec(k: int) -> Iterator[Decomposition]:
        if k == len(support):
            d = _make_decomposition(w, s, Multiset(x), Multiset(y))
            if d is not None:
                yield d
            return
        j = support[k]
        e = edges[j]
        room = min(rem[v] for v in e)
        need = max((rem[v] for v in closes[k]), default=0)
        options = [(None, 0)] if need == 0 else []
        options += [("x", c) for c in range(max(1, need), min(w.red.get(j), room) + 1)]
        options += [("y", c) for c in range(max(1, need), min(w.blue.get(j), room) + 1)]
        for side, c in options:
            if c:
                for v in e:
                    rem[v] -= c
                (x if side == "x" else y)[j] = c
            if all(rem[v] == 0 for v in closes[k]):
                yield from rec(k + 1)
            if c:
                for v in e:
                    rem[v] += c
                del (x if side == "x" else y)[j]

    yield from rec(0)


def _candidate_separators(w: BalancedEdgeSet, size_cap, mult_cap) -> Iterator[Multiset]:
    h = w.host
    beta = multiset_image(h, w.blue)
    cands = [j for j, e in enumerate(h.edges) if all(beta[v] > 0 for v in e)]
    rem = list(beta)
    cur: dict = {}

    def rec(k: int, size: int):
        if k == len(cands):
            if cur:
                yield Multiset(cur)
            return
        j = cands[k]
        e = h.edges[j]
        hi = min(rem[v] for v in e)
        if mult_cap is not None:
            hi = min(hi, mult_cap)
        if size_cap is not None:
            hi = min(hi, size_cap - size)
        for c in range(0, hi + 1):
            if c:
                for v in e:
                    rem[v] -= c
                cur[j] = c
            yield from rec(k + 1, size + c)
            if c:
                for v in e:
                    rem[v] += c
                del cur[j]

    yield from rec(0, 0)


def _resolve_caps(w: BalancedEdgeSet, size_cap, mult_cap):
    if size_cap == DEFAULT:
        size_cap = max(w.blue.size, w.red.size) - 1
    if mult_cap == DEFAULT:
        mult_cap = 2
    return size_cap, mult_cap


def _caps_exhaustive(w: BalancedEdgeSet, size_cap, mult_cap) -> bool:
    h = w.host
    beta = multiset_image(h, w.blue)
    cands = [e for e in h.edges if all(beta[v] > 0 for v in e)]
    if not cands:
        return True
    max_size = sum(beta) // min(len(e) for e in cands)
    max_mult = max(min(beta[v] for v in e) for e in cands)
    return (size_cap is None or size_cap >= max_size) and (mult_cap is None or mult_cap >= max_mult)


@dataclass(frozen=True)
class SplittingSearch:
    """Splitting sets found within caps, each with one witnessing decomposition."""

    found: tuple
    size_cap: Optional[int]
    mult_cap: Optional[int]
    exhaustive: bool

    def __iter__(self):
        return iter(self.found)

    def __len__(self) -> int:
        return len(self.found)

    def separators(self) -> list:
        return [s for s, _ in self.found]

    def proper(self) -> list:
        return [(s, d) for s, d in self.found if d.classification == PROPER]


def find_splitting_sets(
    w: BalancedEdgeSet, h=None, size_cap=DEFAULT, mult_cap=DEFAULT, prefer: str = PROPER
) -> SplittingSearch:
    """All splitting sets of ``w`` within the caps.

    ``size_cap`` defaults to ``max(|blue|, |red|) - 1`` and ``mult_cap`` to 2;
    pass ``None`` for no cap (the search stays finite because ``A S`` cannot
    exceed the degree vector of ``w``).  The witnessing decomposition is the
    first one of kind ``prefer`` when such exists, else the first found.
    """
    if h is not None and not h.same_structure(w.host):
        raise ValueError("walk does not live on the given hypergraph")
    if not is_balanced(w):
        raise ValueError("edge set is not balanced")
    size_cap, mult_cap = _resolve_caps(w, size_cap, mult_cap)
    found = []
    for s in _candidate_separators(w, size_cap, mult_cap):
        first = None
        for d in splitting_decompositions(w, s):
            if first is None:
                first = d
            if d.classification == prefer:
                first = d
                break
        if first is not None:
            found.append((s, first))
    found.sort(key=lambda sd: (sd[0].size, sd[0].items()))
    return SplittingSearch(tuple(found), size_cap, mult_cap, _caps_exhaustive(w, size_cap, mult_cap))


# -- algebra ------------------------------------------------------------------


def _vec(ms: Multiset, n: int) -> tuple:
    return ms.to_vector(n)


def _sub(a: tuple, b: tuple) -> tuple:
    out = tuple(x - y for x, y in zip(a, b))
    if min(out, default=0) < 0:
        raise InconsistentCertificate("cofactor is not a monomial")
    return out


def _add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def expand(terms: Sequence) -> Counter:
    """Polynomial ``sum(cofactor * binomial)`` as monomial -> coefficient."""
    poly: Counter = Counter()
    for cof, f in terms:
        poly[_add(cof, f.plus)] += 1
        poly[_add(cof, f.minus)] -= 1
    return Counter({k: c for k, c in poly.items() if c})


def walk_polynomial(w: BalancedEdgeSet) -> Counter:
    n = w.host.n_edges
    poly: Counter = Counter()
    poly[_vec(w.blue, n)] += 1
    poly[_vec(w.red, n)] -= 1
    return Counter({k: c for k, c in poly.items() if c})


def identity_holds(w: BalancedEdgeSet, terms: Sequence) -> bool:
    return expand(terms) == walk_polynomial(w)


@dataclass(frozen=True)
class Rewrite:
    m1: tuple
    f1: Binomial
    m2: tuple
    f2: Binomial

    def terms(self) -> list:
        return [(self.m1, self.f1), (self.m2, self.f2)]


def _term_for(cofactor_source: tuple, g: BalancedEdgeSet, side: str) -> tuple:
    """Cofactor and reduced binomial of ``g`` with ``cofactor * g.side = source``."""
    f = binomial_of(g)
    mono = f.plus if side == "plus" else f.minus
    return _sub(cofactor_source, mono), f


def rewrite_with_decomposition(w: BalancedEdgeSet, d: Decomposition) -> Rewrite:
    """``f_W = m1·f_G1 + m2·f_G2`` for a decomposition of ``W + S``.

    ``m1 = u / u1`` and ``m2 = v / v2`` where ``u, v`` are the monomials of
    ``W`` and ``u1``, ``v2`` the matching monomials of the reduced piece
    binomials.  The identity is checked by expansion before returning.
    """
    whole = BalancedEdgeSet(w.blue + d.separator, w.red + d.separator, w.host)
    verdict = check_decomposition(whole, d)
    if not verdict:
        raise ValueError(f"invalid decomposition: {verdict.reason}")
    n = w.host.n_edges
    m1, f1 = _term_for(_vec(w.blue, n), d.gamma1, "plus")
    m2, f2 = _term_for(_vec(w.red, n), d.gamma2, "minus")
    rw = Rewrite(m1, f1, m2, f2)
    if not identity_holds(w, rw.terms()):
        raise InconsistentCertificate("rewrite identity fails")
    return rw


def check_lemma_proper_split(w: BalancedEdgeSet, s: Multiset) -> bool:
    """Some decomposition of ``W + S`` has both pieces smaller than ``W``.

    Requires a uniform host and ``S`` a proper splitting set of ``W``.
    """
    if w.host.is_uniform() is None:
        raise ValueError("host hypergraph is not uniform")
    decs = list(splitting_decompositions(w, s))
    if not any(d.classification == PROPER for d in decs):
        raise ValueError("S is not a proper splitting set")
    return any(d.gamma1.size < w.size and d.gamma2.size < w.size for d in decs)


# -- degree certificates ------------------------------------------------------


@dataclass(frozen=True)
class SplitStep:
    """One pair of a blue splitting (``S``) and a red splitting (``R``)."""

    blue: Decomposition
    red: Decomposition
    walk: BalancedEdgeSet  # the walk both decompositions split
    next_walk: BalancedEdgeSet


@dataclass(frozen=True)
class DegreeCertificate:
    """Evidence that ``f_W`` is a combination of binomials of lower degree.

    ``kind`` is ``"condition_i"`` (``decomposition`` is a proper splitting of
    ``W + S``) or ``"condition_ii"`` (``steps`` is the chain of blue/red
    splitting pairs; ``terminal`` is ``("shared_edge", e)`` or
    ``("proper", Decomposition)`` for the last intermediate walk).
    """

    kind: str
    walk: BalancedEdgeSet
    decomposition: Optional[Decomposition] = None
    steps: tuple = ()
    terminal: tuple = ()
    caps: dict = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return max(self.walk.blue.size, self.walk.red.size)

    def terms(self) -> list:
        """Cofactor/binomial pairs whose sum is ``f_W``."""
        w = self.walk
        n_e = w.host.n_edges
        if self.kind == "condition_i":
            return rewrite_with_decomposition(w, self.decomposition).terms()
        left, right = [], []
        for st in self.steps:
            wb, wr = _vec(st.walk.blue, n_e), _vec(st.walk.red, n_e)
            left.append(_term_for(wb, st.blue.gamma1, "plus"))
            right.append(_term_for(wr, st.red.gamma2, "minus"))
        last = self.steps[-1].next_walk
        tag, item = self.terminal
        if last.is_trivial():
            middle = []
        elif tag == "shared_edge":
            f = binomial_of(last)
            middle = [(_sub(_vec(last.blue, n_e), f.plus), f)]
        else:
            middle = rewrite_with_decomposition(last, item).terms()
        return left + middle + right[::-1]

    def verify(self) -> CheckResult:
        """Re-check every decomposition, the chain, sizes and the identity."""
        try:
            return self._verify()
        except (ValueError, KeyError, InconsistentCertificate) as exc:
            return CheckResult("invalid", str(exc))

    def _verify(self) -> CheckResult:
        w, n = self.walk, self.n
        bad = lambda reason: CheckResult("invalid", reason)  # noqa: E731
        if not is_balanced(w):
            return bad("walk is not balanced")
        if self.kind == "condition_i":
            d = self.decomposition
            whole = BalancedEdgeSet(w.blue + d.separator, w.red + d.separator, w.host)
            v = check_decomposition(whole, d)
            if v.status != "valid_proper":
                return bad(f"condition i needs a proper separator: {v.status} {v.reason}")
        elif self.kind == "condition_ii":
            if not self.steps:
                return bad("empty chain")
            current = w
            for i, st in enumerate(self.steps, 1):
                if st.walk != current:
                    return bad(f"step {i} splits the wrong walk")
                s, r = st.blue.separator, st.red.separator
                for tag, d, sep in (("S", st.blue, s), ("R", st.red, r)):
                    whole = BalancedEdgeSet(current.blue + sep, current.red + sep, w.host)
                    v = check_decomposition(whole, d)
                    if not v:
                        return bad(f"step {i} {tag}: {v.reason}")
                    if sep.size >= n:
                        return bad(f"step {i} {tag} has size >= n")
                if st.blue.gamma1.red != s:
                    return bad(f"step {i}: S is not a blue splitting set")
                if st.red.gamma2.blue != r:
                    return bad(f"step {i}: R is not a red splitting set")
                expect = BalancedEdgeSet(st.blue.gamma2.blue, st.red.gamma1.red, w.host)
                if st.next_walk != expect:
                    return bad(f"step {i}: intermediate walk mismatch")
                current = expect
            tag, item = self.terminal
            last = self.steps[-1]
            if tag == "shared_edge":
                if not (last.blue.separator.get(item) and last.red.separator.get(item)):
                    return bad("terminal edge is not shared by S_N and R_N")
            elif tag == "proper":
                whole = BalancedEdgeSet(current.blue + item.separator, current.red + item.separator, w.host)
                if check_decomposition(whole, item).status != "valid_proper":
                    return bad("terminal decomposition is not a proper splitting")
            else:
                return bad(f"unknown terminal {tag!r}")
        else:
            return bad(f"unknown kind {self.kind!r}")
        terms = self.terms()
        if not identity_holds(w, terms):
            return bad("identity does not reproduce f_W")
        top = max(f.degree for _, f in terms)
        if top >= n:
            return bad(f"a term has degree {top} >= {n}")
        return CheckResult("valid")


def _ordered_separators(w: BalancedEdgeSet, size_cap, mult_cap) -> list:
    return sorted(_candidate_separators(w, size_cap, mult_cap), key=lambda s: (s.size, s.items()))


def _proper_split(w: BalancedEdgeSet, size_cap, mult_cap) -> Optional[Decomposition]:
    for s in _ordered_separators(w, size_cap, mult_cap):
        for d in splitting_decompositions(w, s):
            if d.classification == PROPER:
                return d
    return None


def _colored_splittings(w: BalancedEdgeSet, size_cap, mult_cap, max_each: int):
    """Blue splittings (``G1.red = S``) and red splittings (``G2.blue = R``)."""
    blues, reds = [], []
    for s in _ordered_separators(w, size_cap, mult_cap):
        for d in splitting_decompositions(w, s):
            if d.gamma1.red == s and len(blues) < max_each:
                blues.append(d)
            if d.gamma2.blue == s and len(reds) < max_each:
                reds.append(d)
    return blues, reds


def find_degree_certificate(
    w: BalancedEdgeSet,
    d: int,
    size_cap=DEFAULT,
    mult_cap=DEFAULT,
    n_cap: int = 3,
    kinds: Sequence[str] = ("condition_i", "condition_ii"),
    max_branch: int = 200,
) -> Optional[DegreeCertificate]:
    """Search a certificate that ``f_W`` reduces to lower degree.

    Condition i: a proper splitting set.  Condition ii: a chain of at most
    ``n_cap`` blue/red splitting pairs, each of size below ``n``, ending in
    a shared edge of the last pair or a proper splitting set of the last
    intermediate walk.  ``None`` means nothing was found within the caps,
    not that no certificate exists.
    """
    h = w.host
    if h.is_uniform() is None:
        raise ValueError("host hypergraph is not uniform")
    if not is_primitive(w):
        raise ValueError("walk is not primitive")
    n = w.blue.size
    if not n > d:
        raise ValueError(f"walk of degree {n} does not exceed d = {d}")
    size_cap, mult_cap = _resolve_caps(w, size_cap, mult_cap)
    pair_cap = n - 1 if size_cap is None else min(size_cap, n - 1)
    caps = {"size_cap": size_cap, "mult_cap": mult_cap, "n_cap": n_cap}

    if "condition_i" in kinds:
        dec = _proper_split(w, size_cap, mult_cap)
        if dec is not None:
            return DegreeCertificate("condition_i", w, decomposition=dec, caps=caps)
    if "condition_ii" not in kinds:
        return None

    seen = set()

    def level(current: BalancedEdgeSet, chain: list, depth: int):
        blues, reds = _colored_splittings(current, pair_cap, mult_cap, max_branch)
        pairs = [(b, r) for b in blues for r in reds]
        for b, r in pairs:
            shared = b.separator & r.separator
            if shared:
                nxt = BalancedEdgeSet(b.gamma2.blue, r.gamma1.red, h)
                return chain + [SplitStep(b, r, current, nxt)], ("shared_edge", min(shared))
        nexts = []
        for b, r in pairs:
            nxt = BalancedEdgeSet(b.gamma2.blue, r.gamma1.red, h)
            if nxt.key() in seen or nxt.is_trivial():
                continue
            seen.add(nxt.key())
            step = chain + [SplitStep(b, r, current, nxt)]
            dec = _proper_split(nxt, pair_cap, mult_cap)
            if dec is not None:
                return step, ("proper", dec)
            nexts.append((nxt, step))
        if depth + 1 >= n_cap:
            return None
        for nxt, step in nexts:
            got = level(nxt, step, depth + 1)
            if got is not None:
                return got
        return None

    got = level(w, [], 0)
    if got is None:
        log.info("no certificate for walk of degree %d within caps %s", n, caps)
        return None
    steps, terminal = got
    return DegreeCertificate("condition_ii", w, steps=tuple(steps), terminal=terminal, caps=caps)


@dataclass(frozen=True)
class NonuniformWitness:
    kind: str  # "condition_i" or "condition_ii"
    decompositions: tuple

    def terms(self, w: BalancedEdgeSet) -> list:
        if self.kind == "condition_i":
            return rewrite_with_decomposition(w, self.decompositions[0]).terms()
        b, r = self.decompositions
        n_e = w.host.n_edges
        mid = BalancedEdgeSet(b.gamma2.blue, r.gamma1.red, w.host)
        terms = [_term_for(_vec(w.blue, n_e), b.gamma1, "plus")]
        if not mid.is_trivial():
            f = binomial_of(mid)
            terms.append((_sub(_vec(mid.blue, n_e), f.plus), f))
        terms.append(_term_for(_vec(w.red, n_e), r.gamma2, "minus"))
        return terms


def check_nonuniform_conditions(e: BalancedEdgeSet, mult_cap=None) -> Optional[NonuniformWitness]:
    """Witness that ``f_E`` is a combination of binomials of degree below ``n = |E.blue|``.

    Condition i: a proper splitting with every color of both pieces below
    ``n``.  Condition ii: blue ``S`` and red ``R`` of size below ``n`` sharing
    an edge, with ``|G1.blue|, |U2.red| < n`` and ``|G2.blue|, |U1.red| <= n``.
    """
    if not is_balanced(e):
        raise ValueError("edge set is not balanced")
    if mult_cap == DEFAULT:
        mult_cap = None
    n = e.blue.size
    if n < e.red.size:
        raise ValueError("expected |blue| >= |red|")
    blues, reds = [], []
    for s in _ordered_separators(e, n - 1, mult_cap):
        for d in splitting_decompositions(e, s):
            g1, g2 = d.gamma1, d.gamma2
            if d.classification == PROPER and max(g1.blue.size, g1.red.size, g2.blue.size, g2.red.size) < n:
                return NonuniformWitness("condition_i", (d,))
            if g1.red == s and g1.blue.size < n and g2.blue.size <= n:
                blues.append(d)
            if g2.blue == s and g2.red.size < n and g1.red.size <= n:
                reds.append(d)
    for b in blues:
        for r in reds:
            if b.separator & r.separator:
                return NonuniformWitness("condition_ii", (b, r))
    return None
