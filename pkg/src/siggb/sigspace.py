"""Module monomials, signatures (module terms with a coefficient) and module orders."""

from __future__ import annotations

import enum
from typing import NamedTuple, Optional

from .polyring import Monomial, PolyRing, Term, mono_div, mono_mul


class SigCmp(enum.Enum):
    LT = -1
    SIM = 0
    GT = 1


class Signature(NamedTuple):
    """The module term ``coeff * mono * e[index]`` (index is 1-based)."""

    coeff: int
    mono: Monomial
    index: int

    def scaled(self, c: int) -> "Signature":
        return Signature(self.coeff * c, self.mono, self.index)


class ModuleOrder:
    """Position-over-term or term-over-position order on module monomials.

    ``descending=True`` makes e1 the largest unit vector (the convention of the
    worked example in the literature); the default has e1 smallest.
    """

    def __init__(self, ring: PolyRing, kind: str = "pot", descending: bool = False):
        kind = kind.lower()
        if kind not in ("pot", "top"):
            raise ValueError(f"unknown module order {kind!r}")
        self.ring = ring
        self.kind = kind
        self.descending = descending
        self._cache: dict = {}

    @property
    def is_pot(self) -> bool:
        return self.kind == "pot"

    def key(self, mono: Monomial, index: int) -> tuple:
        k = self._cache.get((mono, index))
        if k is None:
            i = -index if self.descending else index
            mk = self.ring.key(mono)
            k = (i, mk) if self.kind == "pot" else (mk, i)
            self._cache[(mono, index)] = k
        return k

    def sig_key(self, s: Signature) -> tuple:
        return self.key(s.mono, s.index)

    def unit_less(self, i: int, j: int) -> bool:
        """True when e_i < e_j."""
        return i > j if self.descending else i < j

    def __repr__(self):
        return f"ModuleOrder({self.kind!r}, descending={self.descending})"


def cmp_sig(s: Signature, t: Signature, order: ModuleOrder) -> SigCmp:
    ks, kt = order.sig_key(s), order.sig_key(t)
    if ks < kt:
        return SigCmp.LT
    if ks > kt:
        return SigCmp.GT
    return SigCmp.SIM


def mul_sig(t: Term, s: Signature) -> Signature:
    return Signature(t.coeff * s.coeff, mono_mul(t.mono, s.mono), s.index)


def sig_divides(s: Signature, t: Signature) -> Optional[Term]:
    """Return the term q with q*s == t, or None."""
    if s.index != t.index or t.coeff % s.coeff:
        return None
    m = mono_div(t.mono, s.mono)
    if m is None:
        return None
    return Term(t.coeff // s.coeff, m)


def add_sig_same_class(s: Signature, t: Signature) -> Optional[Signature]:
    """Sum of two signatures on the same module monomial; None if they cancel."""
    if s.mono != t.mono or s.index != t.index:
        raise ValueError("signatures are not in the same class")
    c = s.coeff + t.coeff
    if not c:
        return None
    return Signature(c, s.mono, s.index)


def max_sig(s: Signature, t: Signature, order: ModuleOrder) -> Optional[Signature]:
    """Leading module term of the sum of two elements with leading terms s and t."""
    c = cmp_sig(s, t, order)
    if c is SigCmp.GT:
        return s
    if c is SigCmp.LT:
        return t
    return add_sig_same_class(s, t)


def format_sig(s: Signature, ring: PolyRing) -> str:
    parts = [str(s.coeff)]
    m = ring.format_mono(s.mono)
    if m:
        parts.append(m)
    parts.append(f"e[{s.index}]")
    return "*".join(parts)
