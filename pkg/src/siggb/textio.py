"""Problem files: parsing with positioned diagnostics, and rendering back.

Format::

    # comment
    vars: x, y
    order: grevlex          (or lex; optional, default grevlex)
    modorder: pot desc      (pot or top, optional "desc"; default pot)
    4*x*y + 1
    6*x^2 + 1

Header lines come first; every other non-blank line is one generator.
"""

from __future__ import annotations

import re

from .polyring import MonomialOrder, Poly, PolyRing, format_poly
from .sigspace import ModuleOrder
from .systems import ProblemSpec


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


_HEADER = re.compile(r"\s*(vars|order|modorder)\s*:(.*)$")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _PolyParser:
    """Recursive descent over one generator line."""

    def __init__(self, text: str, lineno: int, ring: PolyRing, index: dict):
        self.s = text
        self.i = 0
        self.lineno = lineno
        self.ring = ring
        self.index = index

    def error(self, msg: str, at=None):
        raise ParseError(msg, self.lineno, (self.i if at is None else at) + 1)

    def skip(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def integer(self) -> int:
        self.skip()
        j = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if j == self.i:
            self.error("expected an integer")
        return int(self.s[j:self.i])

    def factor(self, mono: list):
        self.skip()
        m = _NAME.match(self.s, self.i)
        if not m:
            self.error("expected a variable")
        name = m.group()
        if name not in self.index:
            self.error(f"unknown variable {name!r}")
        self.i = m.end()
        exp = 1
        if self.peek() == "^":
            self.i += 1
            self.skip()
            if not self.s[self.i:self.i + 1].isdigit():
                self.error("exponent must be a positive integer")
            at = self.i
            exp = self.integer()
            if exp < 1:
                self.error("exponent must be a positive integer", at)
        mono[self.index[name]] += exp

    def term(self):
        mono = [0] * self.ring.nvars
        coeff = 1
        c = self.peek()
        if c.isdigit():
            coeff = self.integer()
            if self.peek() != "*":
                if _NAME.match(self.s, self.i):
                    self.error("expected '*' between coefficient and variable")
                return coeff, tuple(mono)
            self.i += 1
        self.factor(mono)
        while self.peek() == "*":
            self.i += 1
            self.factor(mono)
        return coeff, tuple(mono)

    def poly(self) -> Poly:
        terms = []
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.s[self.i] == "-" else 1
            self.i += 1
        while True:
            if not self.peek():
                self.error("expected a term")
            c, m = self.term()
            terms.append((sign * c, m))
            nxt = self.peek()
            if not nxt:
                break
            if nxt not in "+-":
                self.error(f"unexpected {nxt!r}")
            sign = -1 if nxt == "-" else 1
            self.i += 1
        return self.ring.from_terms(terms)


def parse_poly(text: str, ring: PolyRing, lineno: int = 1) -> Poly:
    index = {n: k for k, n in enumerate(ring.names)}
    return _PolyParser(text, lineno, ring, index).poly()


def parse_input(text: str) -> ProblemSpec:
    names = None
    order = "grevlex"
    modkind, desc = "pot", False
    ring = None
    gens: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        h = _HEADER.match(raw)
        if h:
            if gens:
                raise ParseError(f"header {h.group(1)!r} after the first generator", lineno, 1)
            key, val = h.group(1), h.group(2).strip()
            after = raw.index(":") + 1
            col = after + len(raw[after:]) - len(raw[after:].lstrip()) + 1
            if key == "vars":
                names = [v.strip() for v in val.split(",")]
                for v in names:
                    if not _NAME.fullmatch(v):
                        raise ParseError(f"bad variable name {v!r}", lineno, col)
                if len(set(names)) != len(names):
                    raise ParseError("duplicate variable", lineno, col)
            elif key == "order":
                if val not in MonomialOrder.KINDS:
                    raise ParseError(f"unknown monomial order {val!r}", lineno, col)
                order = val
            else:
                words = val.split()
                if not words or words[0] not in ("pot", "top") or words[1:] not in ([], ["desc"]):
                    raise ParseError(f"bad module order {val!r}", lineno, col)
                modkind, desc = words[0], len(words) == 2
            continue
        gens.append((lineno, raw))
    if names is None:
        raise ParseError("missing 'vars:' line", 1, 1)
    ring = PolyRing(names, MonomialOrder(order))
    polys = []
    for lineno, raw in gens:
        p = parse_poly(raw, ring, lineno)
        if not p:
            raise ParseError("zero generator", lineno, 1)
        polys.append(p)
    if not polys:
        raise ParseError("no generators", 1, 1)
    return ProblemSpec(ring, ModuleOrder(ring, modkind, desc), polys)


def render_input(spec: ProblemSpec) -> str:
    mo = spec.module_order
    lines = [
        "vars: " + ",".join(spec.ring.names),
        "order: " + spec.ring.order.kind,
        "modorder: " + mo.kind + (" desc" if mo.descending else ""),
    ]
    lines += [format_poly(g) for g in spec.generators]
    return "\n".join(lines) + "\n"
