"""Signature-free strong Gröbner bases over the integers, used as a reference.

The pairing logic here is written independently of the signature engines; only
the low-level strong reducer is shared.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .coeffring import xgcd
from .polyring import Poly, mono_div, mono_lcm, term_div, term_lcm
from .reducer import ReducerIndex, strong_reduce


def _pair_polys(f: Poly, g: Poly) -> list[Poly]:
    """The S-polynomial and, if neither lc divides the other, the G-polynomial."""
    lf, lg = f.lt, g.lt
    T = term_lcm(lf, lg)
    s = f.mul_term(T.coeff // lf.coeff, mono_div(T.mono, lf.mono))
    s = s.axpy(-(T.coeff // lg.coeff), mono_div(T.mono, lg.mono), g)
    out = [s]
    a, b = lf.coeff, lg.coeff
    if a % b and b % a:
        _, u, v = xgcd(a, b)
        M = mono_lcm(lf.mono, lg.mono)
        out.append(f.mul_term(u, mono_div(M, lf.mono)).axpy(v, mono_div(M, lg.mono), g))
    return out


def _index(G: Iterable[Poly]) -> ReducerIndex:
    G = list(G)
    idx = ReducerIndex(G[0].ring if G else None)
    for g in G:
        idx.add(g)
    return idx


def strong_normal_form(p: Poly, G: Sequence[Poly]) -> Poly:
    """Full strong reduction of p (top, tail, symmetric coefficient remainders)."""
    if not G:
        return p
    return strong_reduce(p, _index(G), tail=True, modular=True)


def classical_strong_gb(F: Sequence[Poly]) -> list[Poly]:
    """Kandri-Rody--Kapur without signatures: all S- and G-polynomials, full reduction."""
    if not F:
        raise ValueError("no generators")
    if any(not f for f in F):
        raise ValueError("zero generator")
    ring = F[0].ring
    idx = ReducerIndex(ring)
    G: list[Poly] = []
    heap: list = []
    seq = 0

    def add(h: Poly):
        nonlocal seq
        j = len(G)
        G.append(h)
        idx.add(h)
        for i in range(j):
            M = mono_lcm(G[i].lm, h.lm)
            seq += 1
            heapq.heappush(heap, (ring.key(M), seq, i, j))

    for f in F:
        h = strong_reduce(f, idx)
        if h:
            add(h)
    while heap:
        _, _, i, j = heapq.heappop(heap)
        for p in _pair_polys(G[i], G[j]):
            h = strong_reduce(p, idx)
            if h:
                add(h)
    return G


def _minimal(G: Sequence[Poly]) -> list[Poly]:
    """Elements whose leading term is not a term multiple of another kept one."""
    out: list[Poly] = []
    for k, g in enumerate(G):
        lt = g.lt
        redundant = False
        for m, h in enumerate(G):
            if m == k:
                continue
            if term_div(lt, h.lt) is not None:
                # Keep the earliest of two elements with associated leading terms.
                if term_div(h.lt, lt) is not None and m > k:
                    continue
                redundant = True
                break
        if not redundant:
            out.append(g)
    return out


def is_strong_gb(G: Sequence[Poly]) -> bool:
    """Every S- and G-polynomial of G strong-reduces to zero modulo G.

    Checked on the subset with minimal leading terms plus reduction of the
    remaining elements modulo that subset; this is equivalent and cheaper.
    """
    G = [g for g in G if g]
    if not G:
        return True
    M = _minimal(G)
    idx = _index(M)
    for j in range(len(M)):
        for i in range(j):
            for p in _pair_polys(M[i], M[j]):
                if strong_reduce(p, idx, tail=False):
                    return False
    return all(not strong_reduce(g, idx, tail=False) for g in G)


def ideal_equal(G1: Sequence[Poly], G2: Sequence[Poly]) -> bool:
    if not is_strong_gb(G1) or not is_strong_gb(G2):
        raise ValueError("ideal_equal needs two strong Gröbner bases")
    G1 = [g for g in G1 if g]
    G2 = [g for g in G2 if g]
    if not G1 or not G2:
        return not G1 and not G2
    i1, i2 = _index(G1), _index(G2)
    return all(not strong_reduce(g, i2, tail=False) for g in G1) and all(
        not strong_reduce(g, i1, tail=False) for g in G2
    )


def normalize_gb(G: Sequence[Poly]) -> list[Poly]:
    """Canonical form: minimal leading terms, positive lcs, reduced tails, sorted."""
    G = [g if g.lc > 0 else -g for g in G if g]
    M = _minimal(G)
    out = []
    for k, g in enumerate(M):
        others = _index(M[:k] + M[k + 1:]) if len(M) > 1 else None
        lt = g.lt
        tail = g - g.ring.from_terms([(lt.coeff, lt.mono)])
        if others is not None and tail:
            tail = strong_reduce(tail, others, tail=True, modular=True)
        out.append(tail + g.ring.from_terms([(lt.coeff, lt.mono)]))
    if out:
        ring = out[0].ring
        out.sort(key=lambda p: (ring.key(p.lm), p.lc))
    return out
