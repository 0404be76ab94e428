"""Sparse multivariate polynomials over the integers.

Monomials are exponent tuples.  A :class:`PolyRing` fixes the variable names
and the monomial order; it caches order keys so that comparing monomials is a
plain tuple comparison.  Polynomials are immutable dict-backed values.
"""

from __future__ import annotations

from operator import add, sub
from typing import Iterable, Mapping, NamedTuple, Optional

from .coeffring import lcm_coeff

Monomial = tuple  # tuple[int, ...]

# Exponents are Python ints; this bound only guards against runaway inputs.
MAX_DEGREE = 2**31 - 1


class ExponentOverflow(OverflowError):
    pass


class Term(NamedTuple):
    coeff: int
    mono: Monomial


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """Return a/b, or None when b does not divide a."""
    q = tuple(map(sub, a, b))
    for e in q:
        if e < 0:
            return None
    return q


def mono_divides(b: Monomial, a: Monomial) -> bool:
    for x, y in zip(b, a):
        if x > y:
            return False
    return True


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(min, a, b))


def mono_mask(m: Monomial) -> int:
    """Bitmask of the variables occurring in m (cheap divisibility pre-filter)."""
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


_FIELD = 32


def mono_pack(m: Monomial) -> int:
    """Pack exponents into one int, 32 bits per variable.

    The top bit of every field stays clear (exponents are below 2**31), so
    b | a iff ``(pack(a) - pack(b)) & guard == 0``.
    """
    p = 0
    for e in reversed(m):
        p = (p << _FIELD) | e
    return p


def pack_guard(nvars: int) -> int:
    g = 0
    for _ in range(nvars):
        g = (g << _FIELD) | (1 << (_FIELD - 1))
    return g


class MonomialOrder:
    """grevlex or lex, with an optional variable precedence permutation.

    ``precedence[0]`` is the index of the largest variable.  The default is
    the natural order x1 > x2 > ... > xn.
    """

    KINDS = ("grevlex", "lex")

    def __init__(self, kind: str = "grevlex", precedence: Optional[Iterable[int]] = None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.precedence = tuple(precedence) if precedence is not None else None

    def key(self, m: Monomial) -> tuple:
        if self.precedence is not None:
            m = tuple(m[i] for i in self.precedence)
        if self.kind == "lex":
            return tuple(m)
        return (sum(m),) + tuple(-e for e in reversed(m))

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.precedence == other.precedence
        )

    def __hash__(self):
        return hash((self.kind, self.precedence))

    def __repr__(self):
        if self.precedence is None:
            return f"MonomialOrder({self.kind!r})"
        return f"MonomialOrder({self.kind!r}, {self.precedence!r})"


def cmp_mono(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Three-way comparison: -1, 0 or 1."""
    if len(a) != len(b):
        raise ValueError("monomial arity mismatch")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


class PolyRing:
    def __init__(self, names: Iterable[str], order: Optional[MonomialOrder] = None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable name")
        self.nvars = len(self.names)
        self.order = order or MonomialOrder()
        self.one: Monomial = (0,) * self.nvars
        self._key: dict = {}
        self._neg: dict = {}
        self._packed: dict = {}
        self._unpacked: dict = {}
        self._pkey: dict = {}
        self._pneg: dict = {}
        self.guard = pack_guard(self.nvars)

    def pack(self, m: Monomial) -> int:
        p = self._packed.get(m)
        if p is None:
            p = self._packed[m] = mono_pack(m)
            self._unpacked[p] = m
        return p

    def unpack(self, p: int) -> Monomial:
        m = self._unpacked.get(p)
        if m is None:
            mask = (1 << _FIELD) - 1
            m = tuple((p >> (_FIELD * i)) & mask for i in range(self.nvars))
            self._unpacked[p] = m
            self._packed[m] = p
        return m

    def pkey(self, p: int) -> tuple:
        """Order key of a packed monomial."""
        k = self._pkey.get(p)
        if k is None:
            k = self._pkey[p] = self.key(self.unpack(p))
        return k

    def pneg_key(self, p: int) -> tuple:
        k = self._pneg.get(p)
        if k is None:
            k = self._pneg[p] = self.neg_key(self.unpack(p))
        return k

    def key(self, m: Monomial) -> tuple:
        k = self._key.get(m)
        if k is None:
            k = self._key[m] = self.order.key(m)
        return k

    def neg_key(self, m: Monomial) -> tuple:
        """Key whose ascending order is the *descending* monomial order (for heaps)."""
        k = self._neg.get(m)
        if k is None:
            k = self._neg[m] = tuple(-e for e in self.key(m))
        return k

    def zero(self) -> "Poly":
        return Poly(self, {})

    def const(self, c: int) -> "Poly":
        return Poly(self, {self.one: c} if c else {})

    def gen(self, i: int) -> "Poly":
        m = [0] * self.nvars
        m[i] = 1
        return Poly(self, {tuple(m): 1})

    def gens(self) -> list["Poly"]:
        return [self.gen(i) for i in range(self.nvars)]

    def from_terms(self, terms: Iterable[tuple[int, Monomial]]) -> "Poly":
        d: dict = {}
        for c, m in terms:
            m = tuple(m)
            if len(m) != self.nvars:
                raise ValueError("monomial arity mismatch")
            if any(e < 0 for e in m):
                raise ValueError("negative exponent")
            if sum(m) > MAX_DEGREE:
                raise ExponentOverflow("exponent overflow")
            c = d.get(m, 0) + c
            if c:
                d[m] = c
            else:
                d.pop(m, None)
        return Poly(self, d)

    def from_dict(self, d: Mapping[Monomial, int]) -> "Poly":
        return self.from_terms((c, m) for m, c in d.items())

    def cmp_mono(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def format_mono(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return f"PolyRing({list(self.names)!r}, {self.order!r})"


class Poly:
    """Immutable polynomial; ``coeffs`` maps monomials to nonzero ints."""

    __slots__ = ("ring", "coeffs", "_terms", "_lt")

    def __init__(self, ring: PolyRing, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs
        self._terms = None
        self._lt = None

    @property
    def terms(self) -> tuple[Term, ...]:
        """Terms in strictly decreasing monomial order."""
        if self._terms is None:
            key = self.ring.key
            ms = sorted(self.coeffs, key=key, reverse=True)
            self._terms = tuple(Term(self.coeffs[m], m) for m in ms)
        return self._terms

    @property
    def lt(self) -> Optional[Term]:
        if self._lt is None and self.coeffs:
            if self._terms is not None:
                self._lt = self._terms[0]
            else:
                m = max(self.coeffs, key=self.ring.key)
                self._lt = Term(self.coeffs[m], m)
        return self._lt

    @property
    def lm(self) -> Optional[Monomial]:
        t = self.lt
        return None if t is None else t.mono

    @property
    def lc(self) -> int:
        t = self.lt
        return 0 if t is None else t.coeff

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ({self.ring.one: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.coeffs.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self.axpy(1, self.ring.one, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self.axpy(-1, self.ring.one, other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.ring.zero()
            return Poly(self.ring, {m: c * other for m, c in self.coeffs.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        d: dict = {}
        for m2, c2 in other.coeffs.items():
            for m1, c1 in self.coeffs.items():
                m = mono_mul(m1, m2)
                c = d.get(m, 0) + c1 * c2
                if c:
                    d[m] = c
                else:
                    del d[m]
        _check_degree(d)
        return Poly(self.ring, d)

    __rmul__ = __mul__

    def mul_term(self, c: int, m: Monomial) -> "Poly":
        if not c:
            return self.ring.zero()
        if not any(m):
            return self * c
        if self.coeffs and sum(m) + max(sum(k) for k in self.coeffs) > MAX_DEGREE:
            raise ExponentOverflow("exponent overflow")
        p = Poly(self.ring, {mono_mul(k, m): v * c for k, v in self.coeffs.items()})
        if self._terms is not None:
            p._terms = tuple(Term(v * c, mono_mul(k, m)) for v, k in self._terms)
        return p

    def axpy(self, c: int, m: Monomial, q: "Poly") -> "Poly":
        """Return self + (c*m)*q."""
        d = dict(self.coeffs)
        if c:
            for k, v in q.coeffs.items():
                k = mono_mul(k, m)
                v = d.get(k, 0) + c * v
                if v:
                    d[k] = v
                else:
                    del d[k]
        return Poly(self.ring, d)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _check_degree(d):
    for m in d:
        if sum(m) > MAX_DEGREE:
            raise ExponentOverflow("exponent overflow")


def term_lcm(s: Term, t: Term) -> Term:
    """lcm of two nonzero terms; the coefficient is always positive."""
    return Term(lcm_coeff(s.coeff, t.coeff), mono_lcm(s.mono, t.mono))


def term_div(s: Term, t: Term) -> Optional[Term]:
    """Return q with q*t == s, or None if t does not divide s as a term."""
    m = mono_div(s.mono, t.mono)
    if m is None or s.coeff % t.coeff:
        return None
    return Term(s.coeff // t.coeff, m)


def axpy_term(p: Poly, t: Term, q: Poly) -> Poly:
    return p.axpy(t.coeff, t.mono, q)


def leading(p: Poly):
    """(lt, lm, lc); the zero polynomial gives (None, None, 0)."""
    t = p.lt
    if t is None:
        return None, None, 0
    return t, t.mono, t.coeff


def format_term(c: int, m: Monomial, ring: PolyRing, first: bool) -> str:
    mono = ring.format_mono(m)
    sgn = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if not mono:
        body = str(a)
    elif a == 1:
        body = mono
    else:
        body = f"{a}*{mono}"
    if first:
        return sgn + body
    return f" {sgn} {body}"


def format_poly(p: Poly) -> str:
    if not p:
        return "0"
    return "".join(format_term(c, m, p.ring, i == 0) for i, (c, m) in enumerate(p.terms))
