"""JSON encoding of hypergraphs, walks, binomials, bases and certificates.

Every document carries a ``"schema"`` tag.  Edges are referenced by index
into the embedded hypergraph; names are included for reading only.
"""

from __future__ import annotations

import json
from typing import Any

from .balanced import BalancedEdgeSet, Binomial, is_balanced
from .hypergraph import Hypergraph
from .multiset import Multiset
from .splitting import (
    CheckResult,
    Decomposition,
    DegreeCertificate,
    NonuniformWitness,
    SplitStep,
    SplittingSearch,
    check_decomposition,
    expand,
    identity_holds,
    walk_polynomial,
)
from .toric import GraverBasis, MarkovBasis


class SchemaError(ValueError):
    pass


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _expect(doc: Any, schema: str) -> dict:
    if not isinstance(doc, dict) or doc.get("schema") != schema:
        got = doc.get("schema") if isinstance(doc, dict) else type(doc).__name__
        raise SchemaError(f"expected schema {schema!r}, got {got!r}")
    return doc


# -- hypergraphs and walks ---------------------------------------------------


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {
        "schema": "hypergraph",
        "n_vertices": h.n_vertices,
        "edges": [list(e) for e in h.edges],
        "vertex_labels": list(h.vertex_labels) if h.vertex_labels else None,
        "edge_labels": list(h.edge_labels) if h.edge_labels else None,
    }


def hypergraph_from_json(doc: dict) -> Hypergraph:
    _expect(doc, "hypergraph")
    try:
        return Hypergraph(
            int(doc["n_vertices"]),
            tuple(tuple(e) for e in doc["edges"]),
            doc.get("vertex_labels"),
            doc.get("edge_labels"),
        )
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed hypergraph: {exc}") from None


def _ms(ms: Multiset) -> list:
    return ms.elements()


def _names(h: Hypergraph, ms: Multiset) -> list:
    return [h.edge_name(j) for j in ms.elements()]


def _ms_from(h: Hypergraph, ids) -> Multiset:
    ms = Multiset(int(j) for j in ids)
    for j in ms:
        h.edge_index(j)
    return ms


def _colors(b: BalancedEdgeSet) -> dict:
    h = b.host
    return {"blue": _ms(b.blue), "red": _ms(b.red), "blue_names": _names(h, b.blue), "red_names": _names(h, b.red)}


def _colors_from(h: Hypergraph, doc: dict) -> BalancedEdgeSet:
    return BalancedEdgeSet(_ms_from(h, doc["blue"]), _ms_from(h, doc["red"]), h)


def walk_to_json(b: BalancedEdgeSet) -> dict:
    return {"schema": "walk", "hypergraph": hypergraph_to_json(b.host), **_colors(b)}


def walk_from_json(doc: dict, host: Hypergraph | None = None) -> BalancedEdgeSet:
    _expect(doc, "walk")
    h = hypergraph_from_json(doc["hypergraph"]) if "hypergraph" in doc else host
    if h is None:
        raise SchemaError("walk has no hypergraph")
    return _colors_from(h, doc)


# -- binomials and bases -----------------------------------------------------


def _binomial_body(f: Binomial, h: Hypergraph) -> dict:
    return {"plus": list(f.plus), "minus": list(f.minus), "degree": f.degree, "text": f.format(h)}


def binomial_to_json(f: Binomial, h: Hypergraph) -> dict:
    return {"schema": "binomial", "hypergraph": hypergraph_to_json(h), **_binomial_body(f, h)}


def binomial_from_json(doc: dict) -> tuple:
    _expect(doc, "binomial")
    h = hypergraph_from_json(doc["hypergraph"])
    return h, Binomial(tuple(doc["plus"]), tuple(doc["minus"]))


def basis_to_json(basis, h: Hypergraph) -> dict:
    doc = {
        "schema": "basis",
        "hypergraph": hypergraph_to_json(h),
        "degree_cap": basis.degree_cap,
        "elements": [_binomial_body(f, h) for f in basis],
    }
    if isinstance(basis, MarkovBasis):
        doc.update(kind="markov", complete=basis.complete, max_degree=basis.max_degree)
    elif isinstance(basis, GraverBasis):
        doc.update(kind="graver", complete=True)
    return doc


# -- certificates ------------------------------------------------------------


def _decomposition_json(d: Decomposition) -> dict:
    h = d.gamma1.host
    return {
        "gamma1": _colors(d.gamma1),
        "separator": _ms(d.separator),
        "separator_names": _names(h, d.separator),
        "gamma2": _colors(d.gamma2),
        "classification": d.classification,
    }


def _decomposition_from(h: Hypergraph, doc: dict) -> Decomposition:
    return Decomposition(
        _colors_from(h, doc["gamma1"]),
        _ms_from(h, doc["separator"]),
        _colors_from(h, doc["gamma2"]),
        doc["classification"],
    )


def _terms_json(terms) -> list:
    return [{"cofactor": list(c), "plus": list(f.plus), "minus": list(f.minus)} for c, f in terms]


def _terms_from(doc: list) -> list:
    return [(tuple(t["cofactor"]), Binomial(tuple(t["plus"]), tuple(t["minus"]))) for t in doc]


def certificate_to_json(cert, walk: BalancedEdgeSet | None = None, extra: dict | None = None) -> dict:
    """Encode a degree certificate, a non-uniform witness or a splitting search."""
    if isinstance(cert, DegreeCertificate):
        w = cert.walk
        doc = {"kind": cert.kind, "caps": cert.caps}
        if cert.kind == "condition_i":
            doc["decomposition"] = _decomposition_json(cert.decomposition)
        else:
            doc["steps"] = [
                {"blue": _decomposition_json(st.blue), "red": _decomposition_json(st.red), "next_walk": _colors(st.next_walk)}
                for st in cert.steps
            ]
            tag, item = cert.terminal
            doc["terminal"] = {"type": tag}
            if tag == "shared_edge":
                doc["terminal"]["edge"] = item
            else:
                doc["terminal"]["decomposition"] = _decomposition_json(item)
        terms = cert.terms()
    elif isinstance(cert, NonuniformWitness):
        w = walk
        doc = {"kind": "nonuniform_" + cert.kind, "decompositions": [_decomposition_json(d) for d in cert.decompositions]}
        terms = cert.terms(w)
    elif isinstance(cert, SplittingSearch):
        w = walk
        doc = {
            "kind": "splitting_sets",
            "caps": {"size_cap": cert.size_cap, "mult_cap": cert.mult_cap},
            "exhaustive": cert.exhaustive,
            "found": [_decomposition_json(d) for _, d in cert],
        }
        terms = None
    else:
        raise TypeError(f"cannot encode {type(cert).__name__}")
    doc.update(schema="certificate", walk=walk_to_json(w))
    if terms is not None:
        doc["terms"] = _terms_json(terms)
    if extra:
        doc.update(extra)
    return doc


def certificate_from_json(doc: dict):
    """Decode into ``(walk, object)``; the object type depends on ``kind``."""
    _expect(doc, "certificate")
    w = walk_from_json(doc["walk"])
    h = w.host
    kind = doc.get("kind")
    if kind == "condition_i":
        return w, DegreeCertificate(kind, w, decomposition=_decomposition_from(h, doc["decomposition"]), caps=doc.get("caps", {}))
    if kind == "condition_ii":
        steps, current = [], w
        for st in doc["steps"]:
            nxt = _colors_from(h, st["next_walk"])
            steps.append(SplitStep(_decomposition_from(h, st["blue"]), _decomposition_from(h, st["red"]), current, nxt))
            current = nxt
        term = doc["terminal"]
        if term["type"] == "shared_edge":
            terminal = ("shared_edge", int(term["edge"]))
        else:
            terminal = (term["type"], _decomposition_from(h, term["decomposition"]))
        return w, DegreeCertificate(kind, w, steps=tuple(steps), terminal=terminal, caps=doc.get("caps", {}))
    if kind in ("nonuniform_condition_i", "nonuniform_condition_ii"):
        decs = tuple(_decomposition_from(h, d) for d in doc["decompositions"])
        return w, NonuniformWitness(kind[len("nonuniform_"):], decs)
    if kind == "splitting_sets":
        return w, [_decomposition_from(h, d) for d in doc["found"]]
    raise SchemaError(f"unknown certificate kind {kind!r}")


def _whole(w: BalancedEdgeSet, s: Multiset) -> BalancedEdgeSet:
    return BalancedEdgeSet(w.blue + s, w.red + s, w.host)


def _verify_nonuniform(w: BalancedEdgeSet, wit: NonuniformWitness) -> CheckResult:
    n = w.blue.size
    for d in wit.decompositions:
        v = check_decomposition(_whole(w, d.separator), d)
        if not v:
            return CheckResult("invalid", v.reason)
    if wit.kind == "condition_i":
        (d,) = wit.decompositions
        sizes = (d.gamma1.blue.size, d.gamma1.red.size, d.gamma2.blue.size, d.gamma2.red.size)
        if d.classification != "proper" or max(sizes) >= n:
            return CheckResult("invalid", "needs a proper splitting with every color below n")
    else:
        b, r = wit.decompositions
        if b.gamma1.red != b.separator or r.gamma2.blue != r.separator:
            return CheckResult("invalid", "needs a blue S and a red R")
        if max(b.separator.size, r.separator.size) >= n or not (b.separator & r.separator):
            return CheckResult("invalid", "S and R must be below n and share an edge")
        if b.gamma1.blue.size >= n or r.gamma2.red.size >= n or b.gamma2.blue.size > n or r.gamma1.red.size > n:
            return CheckResult("invalid", "size constraints fail")
    top = max((f.degree for _, f in wit.terms(w)), default=0)
    if top >= n:
        return CheckResult("invalid", f"a term has degree {top} >= {n}")
    return CheckResult("valid")


def verify_certificate(doc: dict) -> CheckResult:
    """Re-check a serialized certificate from scratch.

    Every decomposition is checked against its whole, and when the document
    lists identity terms they must expand to the walk binomial.
    """
    try:
        w, obj = certificate_from_json(doc)
        if not is_balanced(w):
            return CheckResult("invalid", "walk is not balanced")
        if isinstance(obj, DegreeCertificate):
            res = obj.verify()
        elif isinstance(obj, NonuniformWitness):
            res = _verify_nonuniform(w, obj)
        else:
            for d in obj:
                v = check_decomposition(_whole(w, d.separator), d)
                if not v:
                    return CheckResult("invalid", v.reason)
            res = CheckResult("valid")
        if res and "terms" in doc:
            terms = _terms_from(doc["terms"])
            if not identity_holds(w, terms):
                return CheckResult("invalid", "recorded terms do not expand to the walk binomial")
        return res
    except (SchemaError, KeyError, TypeError, ValueError) as exc:
        return CheckResult("invalid", f"{type(exc).__name__}: {exc}")


def replay(doc: dict) -> bool:
    """True iff the recorded identity terms expand exactly to ``f_W``."""
    w = walk_from_json(doc["walk"])
    return expand(_terms_from(doc["terms"])) == walk_polynomial(w)


__all__ = [
    "SchemaError",
    "basis_to_json",
    "binomial_from_json",
    "binomial_to_json",
    "certificate_from_json",
    "certificate_to_json",
    "dumps",
    "hypergraph_from_json",
    "hypergraph_to_json",
    "replay",
    "verify_certificate",
    "walk_from_json",
    "walk_to_json",
]
