"""Integer coefficient arithmetic: gcd, Bezout pairs, exact division, symmetric remainders.

Coefficients are plain Python ints, so there is no magnitude limit.
"""

from __future__ import annotations

from math import gcd

__all__ = ["gcd", "xgcd", "lcm_coeff", "sym_rem", "div_exact", "sign"]


def sign(a: int) -> int:
    return (a > 0) - (a < 0)


def sym_rem(a: int, m: int) -> int:
    """Return r with r = a (mod m) and -|m|/2 < r <= |m|/2."""
    if m == 0:
        raise ZeroDivisionError("modulus zero")
    m = abs(m)
    r = a % m
    if 2 * r > m:
        r -= m
    return r


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd with a canonical Bezout pair.

    Returns ``(g, u, v)`` with ``u*a + v*b == g >= 0``.  When both inputs are
    nonzero, ``u`` is the symmetric residue modulo ``b/g`` so that
    ``|u| <= |b|/(2g)``; this pins one pair out of infinitely many.
    """
    if b == 0:
        return abs(a), sign(a), 0
    if a == 0:
        return abs(b), 0, sign(b)
    r0, r1 = a, b
    s0, s1 = 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    g, u = r0, s0
    if g < 0:
        g, u = -g, -u
    u = sym_rem(u, b // g)
    v = (g - u * a) // b
    return g, u, v


def lcm_coeff(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def div_exact(a: int, b: int) -> int:
    if b == 0 or a % b:
        raise ArithmeticError(f"inexact division: {a} / {b}")
    return a // b
