"""Command-line front end.  JSON in on a file or stdin, JSON out on stdout.

Exit codes: 0 success, 1 failed verification, 2 bad input, 3 result cut
short by a cap while ``--strict`` is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import families
from .balanced import balanced_of_binomial, binomial_of
from .serialize import (
    SchemaError,
    basis_to_json,
    binomial_from_json,
    binomial_to_json,
    certificate_to_json,
    dumps,
    hypergraph_from_json,
    hypergraph_to_json,
    verify_certificate,
    walk_from_json,
    walk_to_json,
)
from .splitting import DEFAULT, check_nonuniform_conditions, find_degree_certificate, find_splitting_sets
from .toric import IncompleteResult, graver_basis, is_indispensable, markov_basis

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCOMPLETE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _threads() -> int:
    raw = os.environ.get("HYPERTORIC_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"HYPERTORIC_THREADS must be an integer, got {raw!r}") from None


def _load(path: Optional[str]) -> dict:
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path or 'stdin'}: {exc}") from None


def _hypergraph(doc: dict):
    """Hypergraph from a hypergraph document or any document embedding one."""
    if doc.get("schema") == "hypergraph":
        return hypergraph_from_json(doc)
    if "hypergraph" in doc:
        return hypergraph_from_json(doc["hypergraph"])
    if doc.get("schema") == "walk" or "walk" in doc:
        return walk_from_json(doc if doc.get("schema") == "walk" else doc["walk"]).host
    raise SchemaError("no hypergraph found in input")


def _walk(args) -> object:
    doc = _load(args.walk if args.walk else args.input)
    if doc.get("schema") == "binomial":
        h, f = binomial_from_json(doc)
        return balanced_of_binomial(h, f)
    return walk_from_json(doc)


def _meta(args, **caps) -> dict:
    return {"run": {"seed": args.seed, "threads": _threads(), "caps": caps}}


def _emit(doc: dict) -> None:
    sys.stdout.write(dumps(doc))


def _cap(text: str):
    if text == DEFAULT:
        return DEFAULT
    if text.lower() in ("none", "inf", "unbounded"):
        return None
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("caps must be positive")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


# -- verbs -------------------------------------------------------------------


def cmd_graver(args) -> int:
    h = _hypergraph(_load(args.input))
    gb = graver_basis(h, args.cap)
    _emit({**basis_to_json(gb, h), **_meta(args, degree_cap=args.cap)})
    return EXIT_OK


def cmd_markov(args) -> int:
    h = _hypergraph(_load(args.input))
    mb = markov_basis(h, args.cap, tie_break=args.tie_break)
    _emit({**basis_to_json(mb, h), **_meta(args, degree_cap=args.cap)})
    return EXIT_INCOMPLETE if args.strict and not mb.complete else EXIT_OK


def cmd_width(args) -> int:
    h = _hypergraph(_load(args.input))
    mb = markov_basis(h, args.cap)
    doc = {**basis_to_json(mb, h), **_meta(args, degree_cap=args.cap)}
    doc["width"] = mb.max_degree if mb.complete else None
    _emit(doc)
    return EXIT_INCOMPLETE if args.strict and not mb.complete else EXIT_OK


def cmd_indispensable(args) -> int:
    doc = _load(args.binomial if args.binomial else args.input)
    if doc.get("schema") == "walk":
        w = walk_from_json(doc)
        h, f = w.host, binomial_of(w)
    else:
        h, f = binomial_from_json(doc)
    try:
        verdict = is_indispensable(h, f, args.cap)
    except IncompleteResult:
        verdict = None
    out = {**binomial_to_json(f, h), **_meta(args, degree_cap=args.cap), "indispensable": verdict}
    _emit(out)
    return EXIT_INCOMPLETE if args.strict and verdict is None else EXIT_OK


def cmd_split(args) -> int:
    w = _walk(args)
    res = find_splitting_sets(w, size_cap=args.size_cap, mult_cap=args.mult_cap)
    _emit(certificate_to_json(res, walk=w, extra=_meta(args, size_cap=res.size_cap, mult_cap=res.mult_cap)))
    return EXIT_INCOMPLETE if args.strict and not res.exhaustive else EXIT_OK


def cmd_certify(args) -> int:
    w = _walk(args)
    if w.blue.size < w.red.size:
        w = w.swapped()
    if w.host.is_uniform() is not None:
        if args.degree is None:
            raise UsageError("--degree is required for a walk on a uniform hypergraph")
        cert = find_degree_certificate(w, args.degree, size_cap=args.size_cap, mult_cap=args.mult_cap, n_cap=args.n_cap)
        caps = dict(size_cap=args.size_cap, mult_cap=args.mult_cap, n_cap=args.n_cap, degree=args.degree)
    else:
        mult_cap = None if args.mult_cap == DEFAULT else args.mult_cap
        cert = check_nonuniform_conditions(w, mult_cap=mult_cap)
        caps = dict(size_cap=w.blue.size - 1, mult_cap=mult_cap)
    meta = _meta(args, **caps)
    if cert is None:
        # absence under caps is not a refutation
        _emit({"schema": "certificate", "kind": None, "found": False, "walk": walk_to_json(w), **meta})
        return EXIT_INCOMPLETE if args.strict else EXIT_OK
    _emit(certificate_to_json(cert, walk=w, extra={"found": True, **meta}))
    return EXIT_OK


def _family_objects(args):
    name, p = args.name, args.params
    need = {"kpartite": 2, "no3way": 3, "groupbased16": 0, "cumulant": 1, "slimwalk": 2}
    if len(p) != need[name]:
        raise UsageError(f"family {name} takes {need[name]} integer parameters, got {len(p)}")
    if name == "kpartite":
        return families.complete_kpartite(*p), None
    if name == "no3way":
        h = families.no_three_way(*p)
        walk = families.printed_walk_233() if args.walk and tuple(p) == (2, 3, 3) else None
        if args.walk and walk is None:
            if p[0] != 2:
                raise UsageError("--walk for no3way needs a = 2")
            walk = families.slim_table_walk(p[1], p[2])
        return h, walk
    if name == "groupbased16":
        return families.group_based_16(), families.group_based_walk() if args.walk else None
    if name == "cumulant":
        return families.cumulant_hypergraph(p[0], full=not args.truncated), None
    w = families.slim_table_walk(*p)
    return w.host, w


def cmd_family(args) -> int:
    h, walk = _family_objects(args)
    if walk is not None:
        _emit(walk_to_json(walk))
    else:
        _emit(hypergraph_to_json(h))
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = _load(args.certificate)
    res = verify_certificate(doc)
    _emit({"schema": "verification", "status": res.status, "reason": res.reason})
    return EXIT_OK if res.ok else EXIT_FAIL


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypertoric", description="Toric ideals of hypergraphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="recorded in the output; searches are deterministic")
    common.add_argument("--strict", action="store_true", help="exit 3 when a cap cut the result short")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=fn)
        return sp

    for name, fn, text in (
        ("graver", cmd_graver, "primitive binomials up to a degree cap"),
        ("markov", cmd_markov, "minimal Markov basis up to a degree cap"),
        ("width", cmd_width, "largest degree of a minimal generating set"),
    ):
        sp = verb(name, fn, text)
        sp.add_argument("input", nargs="?", default="-", help="hypergraph JSON (default stdin)")
        sp.add_argument("--cap", type=_positive, default=6, help="degree cap (default 6)")
        if name == "markov":
            sp.add_argument("--tie-break", choices=("lex", "reverse"), default="lex")

    sp = verb("indispensable", cmd_indispensable, "is a binomial in every generating set")
    sp.add_argument("input", nargs="?", default="-", help="binomial or walk JSON (default stdin)")
    sp.add_argument("--binomial", help="binomial or walk JSON file")
    sp.add_argument("--cap", type=_cap, default=None, help="fiber degree cap (default none)")

    for name, fn, text in (
        ("split", cmd_split, "splitting sets of a walk"),
        ("certify", cmd_certify, "certificate that a walk reduces to lower degree"),
    ):
        sp = verb(name, fn, text)
        sp.add_argument("input", nargs="?", default="-", help="walk JSON when --walk is absent (default stdin)")
        sp.add_argument("--walk", help="walk or binomial JSON file")
        sp.add_argument("--size-cap", type=_cap, default=DEFAULT, help="largest |S| (default n-1; 'none' for no cap)")
        sp.add_argument("--mult-cap", type=_cap, default=DEFAULT, help="largest edge multiplicity in S (default 2)")
        if name == "certify":
            sp.add_argument("--degree", type=_positive, help="target degree d for uniform hosts")
            sp.add_argument("--n-cap", type=_positive, default=3, help="longest splitting chain (default 3)")

    sp = verb("family", cmd_family, "emit a named hypergraph or walk")
    sp.add_argument("name", choices=("kpartite", "no3way", "groupbased16", "cumulant", "slimwalk"))
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--walk", action="store_true", help="emit the family's distinguished walk")
    sp.add_argument("--truncated", action="store_true", help="cumulant: only edges of size 2 and 3")

    sp = verb("verify", cmd_verify, "re-check a certificate; exit 1 if it fails")
    sp.add_argument("certificate", nargs="?", default="-")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SchemaError, KeyError, ValueError) as exc:
        print(f"hypertoric: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
