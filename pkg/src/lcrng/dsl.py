"""Line-oriented definition language for rings, rngs, ideals and homs.

Grammar (one statement per line, `#` comments):

    ring NAME = Z n
    ring NAME = product Z n Z m ...
    hom NAME : A -> B = reduce | zero | table [i, ...]
    lcr NAME = halo_ext A H PSI
    lcr NAME = tables { add = [[...]], mul = [[...]], localmul = [[...]] }
    ideal NAME of R = gens { (a,h), index, ... }
    lcrhom NAME : R -> S = table [i, ...]

Every declared structure is built and verified eagerly; the local product
table of a `tables` rng is indexed over its halo in sorted order.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .build import halo_extension
from .carrier import FiniteCarrier, check_carrier
from .commutative import (CommutativeRingTable, RingHom, check_ring,
                          reduction_hom, ring_zmod_product, verify_ring_hom)
from .core import LcrTable, assemble_lcr, find_bar_units, verify_lcr
from .errors import InvariantViolation, StructureError
from .homs import RngHom as LcrHom
from .homs import verify_hom
from .ideals import IdealSet, ideal_generated


class ParseError(Exception):
    def __init__(self, message, line, col=1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class VerificationError(Exception):
    """A declared structure failed its eager verification."""

    def __init__(self, name, line, law, witness, detail=""):
        msg = f"line {line}: '{name}' failed verification ({law}"
        if witness is not None:
            msg += f", witness {witness}"
        if detail:
            msg += f"; {detail}"
        msg += ")"
        super().__init__(msg)
        self.name = name
        self.line = line
        self.law = law
        self.witness = witness
        self.detail = detail


@dataclass
class Workspace:
    rings: dict = field(default_factory=dict)
    ring_homs: dict = field(default_factory=dict)
    lcrs: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)
    lcr_homs: dict = field(default_factory=dict)
    sources: dict = field(default_factory=dict)

    def names(self):
        return set(self.rings) | set(self.ring_homs) | set(self.lcrs) \
            | set(self.ideals) | set(self.lcr_homs)


_NAME = r"[A-Za-z_][A-Za-z0-9_]*"


def _balanced(text, open_ch, close_ch, line, col):
    """Substring inside the first balanced open/close pair, plus end offset."""
    start = text.find(open_ch)
    if start < 0:
        raise ParseError(f"expected '{open_ch}'", line, col)
    depth = 0
    for i in range(start, len(text)):
        if text[i] == open_ch:
            depth += 1
        elif text[i] == close_ch:
            depth -= 1
            if depth == 0:
                return text[start + 1:i], i + 1
    raise ParseError(f"unbalanced '{open_ch}'", line, col + start)


def _split_top_level(text, sep=","):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _json_array(text, line, what):
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad {what} array: {exc.msg}", line, exc.colno)
    if not isinstance(value, list):
        raise ParseError(f"{what} must be an array", line)
    return value


def _element_index(carrier: FiniteCarrier, token, line):
    token = token.strip()
    if token.startswith("("):
        try:
            tup = tuple(int(t) for t in token.strip("() ").split(","))
            return carrier.index_of_coords(tup)
        except (ValueError, StructureError):
            raise ParseError(f"unknown element {token}", line)
    try:
        idx = int(token)
    except ValueError:
        raise ParseError(f"bad element literal {token!r}", line)
    if not (0 <= idx < carrier.order):
        raise ParseError(f"element index {idx} out of range", line)
    return idx


def _require_new(ws: Workspace, name, line):
    if name in ws.names():
        raise ParseError(f"name '{name}' is already defined", line)


def _lookup(table, name, line, kind):
    if name not in table:
        raise ParseError(f"unknown {kind} '{name}'", line)
    return table[name]


def parse(text: str) -> Workspace:
    ws = Workspace()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stmt = raw.split("#", 1)[0].strip()
        if not stmt:
            continue
        head = stmt.split(None, 1)[0]
        handler = _HANDLERS.get(head)
        if handler is None:
            raise ParseError(f"unknown statement '{head}'", lineno,
                             raw.index(head) + 1)
        handler(ws, stmt, lineno)
    return ws


def _parse_ring(ws, stmt, line):
    m = re.fullmatch(rf"ring\s+({_NAME})\s*=\s*(.+)", stmt)
    if not m:
        raise ParseError("expected: ring NAME = Z n | product Z n ...", line)
    name, rhs = m.group(1), m.group(2).strip()
    _require_new(ws, name, line)
    if rhs.startswith("product"):
        rhs = rhs[len("product"):].strip()
    toks = rhs.split()
    if not toks or len(toks) % 2 != 0 or any(t != "Z" for t in toks[::2]):
        raise ParseError("expected factors of the form 'Z n'", line)
    try:
        moduli = [int(t) for t in toks[1::2]]
    except ValueError:
        raise ParseError("bad modulus", line)
    if any(n < 1 for n in moduli):
        raise ParseError("moduli must be positive", line)
    ring = ring_zmod_product(moduli)
    check_ring(ring)
    ws.rings[name] = ring
    ws.sources[name] = line


def _parse_hom(ws, stmt, line):
    m = re.fullmatch(rf"hom\s+({_NAME})\s*:\s*({_NAME})\s*->\s*({_NAME})\s*=\s*(.+)",
                     stmt)
    if not m:
        raise ParseError("expected: hom NAME : A -> B = reduce|zero|table [...]",
                         line)
    name, dom_name, cod_name, rhs = m.groups()
    _require_new(ws, name, line)
    dom = _lookup(ws.rings, dom_name, line, "ring")
    cod = _lookup(ws.rings, cod_name, line, "ring")
    rhs = rhs.strip()
    if rhs == "reduce":
        try:
            h = reduction_hom(dom, cod)
        except StructureError as exc:
            raise VerificationError(name, line, "ring-hom", None, str(exc))
    elif rhs == "zero":
        h = RingHom(domain=dom, codomain=cod, image=(cod.carrier.zero,) * dom.order)
    elif rhs.startswith("table"):
        arr = _json_array(rhs[len("table"):].strip(), line, "image")
        h = RingHom(domain=dom, codomain=cod, image=tuple(arr))
    else:
        raise ParseError(f"unknown hom form {rhs!r}", line)
    bad = verify_ring_hom(h)
    if bad is not None:
        raise VerificationError(name, line, "ring-hom", bad.get("witness"),
                                bad.get("reason", ""))
    ws.ring_homs[name] = h
    ws.sources[name] = line


def _parse_lcr(ws, stmt, line):
    m = re.fullmatch(rf"lcr\s+({_NAME})\s*=\s*(.+)", stmt, flags=re.S)
    if not m:
        raise ParseError("expected: lcr NAME = halo_ext A H PSI | tables {...}",
                         line)
    name, rhs = m.group(1), m.group(2).strip()
    _require_new(ws, name, line)
    if rhs.startswith("halo_ext"):
        toks = rhs.split()
        if len(toks) != 4:
            raise ParseError("expected: halo_ext A H PSI", line)
        A = _lookup(ws.rings, toks[1], line, "ring")
        H = _lookup(ws.rings, toks[2], line, "ring")
        psi = _lookup(ws.ring_homs, toks[3], line, "hom")
        try:
            rng = halo_extension(A, H, psi)
        except (StructureError, InvariantViolation) as exc:
            raise VerificationError(name, line, "halo-extension", None, str(exc))
    elif rhs.startswith("tables"):
        body, _ = _balanced(rhs, "{", "}", line, 1)
        rng = _lcr_from_tables(name, body, line)
    else:
        raise ParseError(f"unknown lcr form {rhs!r}", line)
    report = verify_lcr(rng)
    if not report.all_passed:
        v = report.first_failure()
        raise VerificationError(name, line, v.law, v.witness, v.detail)
    ws.lcrs[name] = rng
    ws.sources[name] = line


def _lcr_from_tables(name, body, line):
    fields = {}
    for part in _split_top_level(body):
        kv = part.split("=", 1)
        if len(kv) != 2:
            raise ParseError(f"expected key=value in tables, got {part!r}", line)
        fields[kv[0].strip()] = _json_array(kv[1].strip(), line, kv[0].strip())
    missing = {"add", "mul", "localmul"} - set(fields)
    if missing:
        raise ParseError(f"tables missing {sorted(missing)}", line)
    add = fields["add"]
    n = len(add)
    zero = next((e for e in range(n)
                 if all(add[e][x] == x for x in range(n))), None)
    if zero is None:
        raise ParseError("add table has no identity element", line)
    neg = []
    for x in range(n):
        inv = next((y for y in range(n) if add[x][y] == zero), None)
        if inv is None:
            raise ParseError(f"element {x} has no additive inverse", line)
        neg.append(inv)
    carrier = FiniteCarrier(order=n, add=tuple(tuple(r) for r in add),
                            neg=tuple(neg), zero=zero, coords=None)
    try:
        check_carrier(carrier)
    except StructureError as exc:
        raise ParseError(f"bad add table: {exc}", line)
    mul = fields["mul"]
    if len(mul) != n or any(len(r) != n for r in mul):
        raise ParseError("mul table has wrong shape", line)
    bars = find_bar_units(carrier, tuple(tuple(r) for r in mul))
    if not bars:
        raise VerificationError(name, line, "left-identity", None,
                                "no element acts as a left identity")
    halo = sorted(x for x in range(n) if mul[x][bars[0]] == zero)
    local = fields["localmul"]
    if len(local) != len(halo) or any(len(r) != len(halo) for r in local):
        raise ParseError(
            f"localmul must be {len(halo)}x{len(halo)} over the sorted halo", line)
    pairs = {(halo[i], halo[j]): local[i][j]
             for i in range(len(halo)) for j in range(len(halo))}
    try:
        return assemble_lcr(carrier, mul, pairs)
    except StructureError as exc:
        raise ParseError(f"bad tables: {exc}", line)


def _parse_ideal(ws, stmt, line):
    m = re.fullmatch(rf"ideal\s+({_NAME})\s+of\s+({_NAME})\s*=\s*gens\s*(.+)",
                     stmt)
    if not m:
        raise ParseError("expected: ideal NAME of R = gens { ... }", line)
    name, rng_name, rhs = m.groups()
    _require_new(ws, name, line)
    rng = _lookup(ws.lcrs, rng_name, line, "lcr")
    body, _ = _balanced(rhs, "{", "}", line, 1)
    gens = [_element_index(rng.carrier, tok, line)
            for tok in _split_top_level(body)]
    ws.ideals[name] = ideal_generated(rng, gens)
    ws.sources[name] = line


def _parse_lcrhom(ws, stmt, line):
    m = re.fullmatch(
        rf"lcrhom\s+({_NAME})\s*:\s*({_NAME})\s*->\s*({_NAME})\s*=\s*table\s*(.+)",
        stmt)
    if not m:
        raise ParseError("expected: lcrhom NAME : R -> S = table [...]", line)
    name, dom_name, cod_name, rhs = m.groups()
    _require_new(ws, name, line)
    dom = _lookup(ws.lcrs, dom_name, line, "lcr")
    cod = _lookup(ws.lcrs, cod_name, line, "lcr")
    arr = _json_array(rhs.strip(), line, "image")
    h = LcrHom(domain=dom, codomain=cod, image=tuple(arr))
    v = verify_hom(h)
    if not v.ok:
        raise VerificationError(name, line, v.law, v.witness, v.detail)
    ws.lcr_homs[name] = h
    ws.sources[name] = line


_HANDLERS = {
    "ring": _parse_ring,
    "hom": _parse_hom,
    "lcr": _parse_lcr,
    "ideal": _parse_ideal,
    "lcrhom": _parse_lcrhom,
}


# --- JSON round trip ---------------------------------------------------------

def workspace_to_json(ws: Workspace) -> dict:
    def carrier_dict(c):
        return {"order": c.order, "add": [list(r) for r in c.add],
                "neg": list(c.neg), "zero": c.zero,
                "coords": [list(t) for t in c.coords] if c.coords else None}

    def ring_dict(r):
        return {"carrier": carrier_dict(r.carrier),
                "mul": [list(row) for row in r.mul], "one": r.one}

    def lcr_dict(r):
        halo = list(r.halo)
        return {"carrier": carrier_dict(r.carrier),
                "mul": [list(row) for row in r.mul],
                "halo": halo,
                "localmul": [[r.local_mul[a][b] for b in halo] for a in halo],
                "left_identity": r.left_identity,
                "local_identity": r.local_identity}

    out = {"rings": {}, "homs": {}, "lcrs": {}, "ideals": {}, "lcrhoms": {}}
    for name, r in sorted(ws.rings.items()):
        out["rings"][name] = ring_dict(r)
    for name, h in sorted(ws.ring_homs.items()):
        dom = next(k for k, v in ws.rings.items() if v == h.domain)
        cod = next(k for k, v in ws.rings.items() if v == h.codomain)
        out["homs"][name] = {"domain": dom, "codomain": cod,
                             "image": list(h.image)}
    for name, r in sorted(ws.lcrs.items()):
        out["lcrs"][name] = lcr_dict(r)
    for name, ideal in sorted(ws.ideals.items()):
        rng_name = next(k for k, v in ws.lcrs.items() if v == ideal.rng)
        out["ideals"][name] = {"of": rng_name, "members": list(ideal.members)}
    for name, h in sorted(ws.lcr_homs.items()):
        dom = next(k for k, v in ws.lcrs.items() if v == h.domain)
        cod = next(k for k, v in ws.lcrs.items() if v == h.codomain)
        out["lcrhoms"][name] = {"domain": dom, "codomain": cod,
                                "image": list(h.image)}
    return out


def workspace_from_json(data: dict) -> Workspace:
    ws = Workspace()

    def carrier_from(d):
        return FiniteCarrier(order=d["order"],
                             add=tuple(tuple(r) for r in d["add"]),
                             neg=tuple(d["neg"]), zero=d["zero"],
                             coords=tuple(tuple(t) for t in d["coords"])
                             if d.get("coords") else None)

    for name, d in data.get("rings", {}).items():
        ring = CommutativeRingTable(carrier=carrier_from(d["carrier"]),
                                    mul=tuple(tuple(r) for r in d["mul"]),
                                    one=d["one"])
        check_ring(ring)
        ws.rings[name] = ring
    for name, d in data.get("homs", {}).items():
        h = RingHom(domain=ws.rings[d["domain"]], codomain=ws.rings[d["codomain"]],
                    image=tuple(d["image"]))
        if verify_ring_hom(h) is not None:
            raise StructureError(f"hom '{name}' fails verification")
        ws.ring_homs[name] = h
    for name, d in data.get("lcrs", {}).items():
        carrier = carrier_from(d["carrier"])
        halo = list(d["halo"])
        pairs = {(halo[i], halo[j]): d["localmul"][i][j]
                 for i in range(len(halo)) for j in range(len(halo))}
        rng = assemble_lcr(carrier, tuple(tuple(r) for r in d["mul"]), pairs,
                           left_identity=d["left_identity"])
        if not verify_lcr(rng).all_passed:
            raise StructureError(f"lcr '{name}' fails verification")
        ws.lcrs[name] = rng
    for name, d in data.get("ideals", {}).items():
        ws.ideals[name] = IdealSet.create(ws.lcrs[d["of"]], d["members"])
    for name, d in data.get("lcrhoms", {}).items():
        h = LcrHom(domain=ws.lcrs[d["domain"]], codomain=ws.lcrs[d["codomain"]],
                   image=tuple(d["image"]))
        if not verify_hom(h).ok:
            raise StructureError(f"lcrhom '{name}' fails verification")
        ws.lcr_homs[name] = h
    return ws
