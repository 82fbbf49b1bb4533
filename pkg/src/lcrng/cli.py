"""Command-line surface: verify, spectrum, nilrad, radical, topology,
pullback, check, search.  Exit codes: 0 success, 1 axiom/proposition
failure, 2 parse error."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .build import small_rng_search
from .carrier import build_carrier
from .core import verify_lcr
from .dsl import ParseError, VerificationError, parse
from .errors import InvariantViolation, StructureError
from .homs import enumerate_homs, pullback
from .ideals import nilradical, radical, spectrum
from .replay import replay_all
from .topology import zariski

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    try:
        return parse(text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    except StructureError as exc:
        print(f"structure error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_FAILURE)


def _get(ws, table, name):
    if name not in table:
        print(f"error: unknown name '{name}'", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    return table[name]


def _emit_json(payload):
    print(json.dumps(payload, sort_keys=True, indent=2))


def _header(rng):
    return {"tool_version": __version__,
            "left_identity": rng.label(rng.left_identity)}


def _members(rng, members):
    return [rng.label(x) for x in members]


def cmd_verify(args):
    ws = _load(args.file)
    failed = False
    reports = {}
    for name, rng in sorted(ws.lcrs.items()):
        report = verify_lcr(rng)
        reports[name] = report
        if not report.all_passed:
            failed = True
    if args.json:
        payload = {"tool_version": __version__, "rngs": {}}
        for name, report in reports.items():
            payload["rngs"][name] = {
                v.law: {"passed": v.ok,
                        "witness": list(v.witness) if v.witness else None,
                        "detail": v.detail}
                for v in report.verdicts()}
        _emit_json(payload)
    else:
        for name, report in reports.items():
            for v in report.verdicts():
                status = "ok" if v.ok else f"FAIL witness={v.witness} {v.detail}"
                print(f"{name}: {v.law}: {status}")
    return EXIT_FAILURE if failed else EXIT_OK


def cmd_spectrum(args):
    ws = _load(args.file)
    rng = _get(ws, ws.lcrs, args.name)
    spec = spectrum(rng)
    payload = {**_header(rng),
               "even": [_members(rng, p.members) for p in spec.even_primes],
               "odd": [_members(rng, p.members) for p in spec.odd_primes]}
    if args.json:
        _emit_json(payload)
    else:
        print(f"spectrum of {args.name}: {len(spec)} prime(s)")
        for p in spec.even_primes:
            print("  even: {" + ", ".join(_members(rng, p.members)) + "}")
        for p in spec.odd_primes:
            print("  odd:  {" + ", ".join(_members(rng, p.members)) + "}")
    return EXIT_OK


def cmd_nilrad(args):
    ws = _load(args.file)
    rng = _get(ws, ws.lcrs, args.name)
    try:
        nil = nilradical(rng)
    except InvariantViolation as exc:
        _emit_certificate("nilradical", exc)
        return EXIT_FAILURE
    payload = {**_header(rng), "nilradical": _members(rng, nil.members)}
    if args.json:
        _emit_json(payload)
    else:
        print("nilradical: {" + ", ".join(payload["nilradical"]) + "}")
    return EXIT_OK


def cmd_radical(args):
    ws = _load(args.file)
    rng = _get(ws, ws.lcrs, args.name)
    ideal = _get(ws, ws.ideals, args.ideal)
    rad = radical(rng, ideal)
    payload = {**_header(rng), "ideal": _members(rng, ideal.members),
               "radical": _members(rng, rad.members)}
    if args.json:
        _emit_json(payload)
    else:
        print("radical: {" + ", ".join(payload["radical"]) + "}")
    return EXIT_OK


def cmd_topology(args):
    ws = _load(args.file)
    rng = _get(ws, ws.lcrs, args.name)
    spec = spectrum(rng)
    top = zariski(rng, spec)
    if args.dot:
        print(_dot(rng, spec, top))
        return EXIT_OK
    payload = {**_header(rng),
               "points": [_members(rng, p) for p in top.points],
               "closed_sets": sorted(
                   sorted([_members(rng, top.points[i]) for i in c])
                   for c in top.closed_sets)}
    if args.json:
        _emit_json(payload)
    else:
        print(f"{len(top.points)} point(s), {len(top.closed_sets)} closed set(s)")
        for c in payload["closed_sets"]:
            print("  closed: " + json.dumps(c))
    return EXIT_OK


def _dot(rng, spec, top):
    """Specialization order: an edge P -> Q when Q covers P (Q strictly
    contains P with no prime strictly between)."""
    even = {p.members for p in spec.even_primes}
    lines = ["digraph spectrum {"]
    names = {}
    for i, p in enumerate(top.points):
        names[p] = f"p{i}"
        shape = "box" if p in even else "ellipse"
        label = "{" + ", ".join(_members(rng, p)) + "}"
        lines.append(f'  {names[p]} [label="{label}", shape={shape}];')
    pts = list(top.points)
    for p in pts:
        for q in pts:
            if p == q or not set(p) < set(q):
                continue
            if any(set(p) < set(r) < set(q) for r in pts):
                continue
            lines.append(f"  {names[p]} -> {names[q]};")
    lines.append("}")
    return "\n".join(lines)


def cmd_pullback(args):
    ws = _load(args.file)
    hom = _get(ws, ws.lcr_homs, args.hom)
    try:
        pm = pullback(hom)
    except InvariantViolation as exc:
        _emit_certificate("pullback", exc)
        return EXIT_FAILURE
    pairs = [[_members(hom.codomain, pm.domain.points[i]),
              _members(hom.domain, pm.codomain.points[pm.mapping[i]])]
             for i in range(len(pm.domain.points))]
    payload = {"tool_version": __version__, "map": pairs}
    if args.json:
        _emit_json(payload)
    else:
        for src, dst in pairs:
            print("{" + ", ".join(src) + "} -> {" + ", ".join(dst) + "}")
    return EXIT_OK


def cmd_check(args):
    ws = _load(args.file)
    rng = _get(ws, ws.lcrs, args.name)
    homs = enumerate_homs(rng, rng)
    results = replay_all(rng, homs)
    payload = {**_header(rng),
               "rng": args.name,
               "order": rng.order,
               "endomorphisms": len(homs),
               "propositions": [
                   {"name": r.name, "passed": r.passed,
                    "certificate": r.certificate}
                   for r in results],
               "passed": all(r.passed for r in results)}
    _emit_json(payload)
    return EXIT_OK if payload["passed"] else EXIT_FAILURE


def cmd_search(args):
    try:
        results = []
        for factors in _abelian_factorizations(args.order):
            carrier = build_carrier(factors)
            results.extend((factors, rng) for rng in small_rng_search(carrier))
    except StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    payload = {"tool_version": __version__, "order": args.order,
               "structures": [
                   {"carrier": list(factors),
                    "mul": [list(row) for row in rng.mul],
                    "halo": [rng.label(a) for a in rng.halo]}
                   for factors, rng in results]}
    if args.json:
        _emit_json(payload)
    else:
        print(f"{len(results)} structure(s) of order {args.order}")
        for factors, rng in results:
            print(f"  carrier {factors}: halo size {len(rng.halo)}")
    return EXIT_OK


def _abelian_factorizations(order):
    """Isomorphism classes of abelian groups of a given order, as factor lists."""
    def partitions(n, cap):
        if n == 1:
            yield []
            return
        d = cap
        while d > 1:
            if n % d == 0:
                for rest in partitions(n // d, d):
                    yield [d] + rest
            d -= 1

    if order == 1:
        yield [1]
        return
    # factor lists of the form [d1 >= d2 >= ...] with each di+1 | di give one
    # representative per isomorphism class; simple divisor recursion suffices
    seen = set()
    for candidate in partitions(order, order):
        ok = all(candidate[i + 1] and candidate[i] % candidate[i + 1] == 0
                 for i in range(len(candidate) - 1))
        if ok and tuple(candidate) not in seen:
            seen.add(tuple(candidate))
            yield candidate


def _emit_certificate(kind, exc):
    print(json.dumps({"tool_version": __version__, "check": kind,
                      "message": str(exc), "certificate": exc.certificate},
                     sort_keys=True, indent=2))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="lcrng",
        description="Finite left commutative rngs: spectra, topology, functor.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, *, file=True, names=()):
        p = sub.add_parser(name)
        if file:
            p.add_argument("file", help=".lcr definition file")
        for extra in names:
            p.add_argument(extra)
        p.add_argument("--json", action="store_true", help="JSON output")
        p.set_defaults(fn=fn)
        return p

    add("verify", cmd_verify)
    add("spectrum", cmd_spectrum, names=("name",))
    add("nilrad", cmd_nilrad, names=("name",))
    p = add("radical", cmd_radical, names=("name",))
    p.add_argument("--ideal", required=True, help="ideal binding name")
    p = add("topology", cmd_topology, names=("name",))
    p.add_argument("--dot", action="store_true", help="Graphviz output")
    add("pullback", cmd_pullback, names=("hom",))
    p = sub.add_parser("check")
    p.add_argument("file")
    p.add_argument("name")
    p.set_defaults(fn=cmd_check)
    p = sub.add_parser("search")
    p.add_argument("order", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_search)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
