"""Strong reductions with and without signatures, super reducibility, cover test.

All reductions go through one heap-driven loop.  Reducer candidates are kept
sorted by (leading monomial, |leading coefficient|, insertion position), so the
first admissible exact divisor found is the one the selection rule asks for.
"""

from __future__ import annotations

import heapq
from bisect import bisect_right
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable, Optional

from .coeffring import sym_rem
from .combpairs import LabeledPoly, PairClass, PairData
from .polyring import Poly, PolyRing, Term, mono_div, mono_mul
from .sigspace import ModuleOrder, SigCmp, Signature, cmp_sig, sig_divides
from .syzbank import SyzygyBank
from .tracker import lead_term


@dataclass
class ReduceOptions:
    tail: bool = True
    modular: bool = True


_INF = float("inf")


class _Entry:
    """A reducer with its leading data, tail and vector pre-packed."""

    __slots__ = ("pos", "item", "poly", "sig", "lm", "lc", "packed", "sig_packed", "tail", "vector")

    def __init__(self, pos, item, poly: Poly, sig, vector):
        ring = poly.ring
        pack = ring.pack
        lt = poly.lt
        self.pos = pos
        self.item = item
        self.poly = poly
        self.sig = sig
        self.lm = lt.mono
        self.lc = lt.coeff
        self.packed = pack(lt.mono)
        self.sig_packed = pack(sig.mono) if sig is not None else None
        self.tail = tuple((pack(m), c) for m, c in poly.coeffs.items() if m != lt.mono)
        self.vector = (
            tuple(tuple((pack(m), c) for m, c in q.coeffs.items()) for q in vector)
            if vector is not None else None
        )


class ReducerIndex:
    """Reducer lookup structure shared by the signature engines and the oracle.

    Items are either :class:`LabeledPoly` (signature mode) or plain
    :class:`Poly` (classical mode).  The zero polynomial is never indexed.
    """

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.items: list = []
        self._entries: list[_Entry] = []
        self._keys: list = []
        # Per position: packed leading monomial and leading coefficient.
        self.lead_packed: list = []
        self.lead_coeff: list = []

    def add(self, item) -> int:
        pos = len(self.items)
        self.items.append(item)
        if isinstance(item, LabeledPoly):
            poly, sig, vec = item.poly, item.sig, item.vector
        else:
            poly, sig, vec = item, None, None
        self.lead_packed.append(self.ring.pack(poly.lm) if poly else None)
        self.lead_coeff.append(poly.lc)
        if poly:
            k = (self.ring.key(poly.lm), abs(poly.lc), pos)
            at = bisect_right(self._keys, k)
            self._keys.insert(at, k)
            self._entries.insert(at, _Entry(pos, item, poly, sig, vec))
        return pos

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def __iter__(self):
        return iter(self.items)

    def entries(self) -> list[_Entry]:
        return self._entries

    def candidates(self, key) -> list[_Entry]:
        """Entries whose leading monomial key is at most ``key``, in selection order."""
        n = bisect_right(self._keys, (key, _INF))
        if n == len(self._entries):
            return self._entries
        return self._entries[:n]


class SigBasis(ReducerIndex):
    """Append-only list of labeled polynomials under a module order."""

    def __init__(self, order: ModuleOrder, items: Iterable[LabeledPoly] = ()):
        super().__init__(order.ring)
        self.order = order
        for g in items:
            self.add(g)


def _as_sig_basis(G, order: ModuleOrder) -> SigBasis:
    if isinstance(G, SigBasis):
        return G
    return SigBasis(order, G)


def _sig_admissible(order: ModuleOrder, fsig: Signature) -> Callable:
    """Predicate (packed cofactor, entry) -> True iff t*sig(entry) < fsig strictly."""
    ring = order.ring
    fi = fsig.index
    fkey = ring.key(fsig.mono)
    less = order.unit_less
    pkey = ring.pkey
    if order.is_pot:
        def adm(tp, e):
            si = e.sig.index
            if si != fi:
                return less(si, fi)
            return pkey(tp + e.sig_packed) < fkey
    else:
        def adm(tp, e):
            k = pkey(tp + e.sig_packed)
            if k != fkey:
                return k < fkey
            return less(e.sig.index, fi)
    return adm


def _pick(index: ReducerIndex, pm: int, c: int, admissible, modular: bool):
    """Reducer for the term c*m (m packed): (entry, quotient, packed cofactor) or None.

    The first admissible exact divisor in selection order wins; otherwise the
    modular step leaving the smallest symmetric remainder.
    """
    guard = index.ring.guard
    best = best_r = best_t = None
    for e in index.candidates(index.ring.pkey(pm)):
        tp = pm - e.packed
        if tp & guard:
            continue
        if admissible is not None and not admissible(tp, e):
            continue
        lc = e.lc
        if c % lc == 0:
            return e, c // lc, tp
        if modular:
            r = sym_rem(c, lc)
            if r != c and (best is None or abs(r) < abs(best_r)):
                best, best_r, best_t = e, r, tp
    if best is not None:
        return best, (c - best_r) // best.lc, best_t
    return None


def _pack_dict(ring: PolyRing, coeffs: dict) -> dict:
    pack = ring.pack
    return {pack(m): c for m, c in coeffs.items()}


def _unpack_poly(ring: PolyRing, d: dict) -> Poly:
    unpack = ring.unpack
    return Poly(ring, {unpack(p): c for p, c in d.items()})


def _reduce(ring: PolyRing, coeffs: dict, index: ReducerIndex, admissible, tail: bool, modular: bool, vec=None):
    """Strong reduction loop over packed monomials; returns (Poly, vector or None)."""
    rem = _pack_dict(ring, coeffs)
    nk = ring.pneg_key
    heap = [(nk(p), p) for p in rem]
    heapq.heapify(heap)
    out: dict = {}
    vd = [_pack_dict(ring, q.coeffs) for q in vec] if vec is not None else None
    while heap:
        _, pm = heapq.heappop(heap)
        c = rem.pop(pm, 0)
        if not c:
            continue
        while True:
            step = _pick(index, pm, c, admissible, modular)
            if step is None:
                break
            e, q, tp = step
            c -= q * e.lc
            for mg, cg in e.tail:
                mm = tp + mg
                old = rem.get(mm)
                if old is None:
                    rem[mm] = -q * cg
                    heapq.heappush(heap, (nk(mm), mm))
                else:
                    new = old - q * cg
                    if new:
                        rem[mm] = new
                    else:
                        del rem[mm]
            if vd is not None:
                for d, terms in zip(vd, e.vector):
                    for mg, cg in terms:
                        mm = tp + mg
                        new = d.get(mm, 0) - q * cg
                        if new:
                            d[mm] = new
                        else:
                            d.pop(mm, None)
            if not c:
                break
        if c:
            out[pm] = c
            if not tail:
                out.update(rem)
                break
    poly = _unpack_poly(ring, out)
    if vd is None:
        return poly, None
    return poly, tuple(_unpack_poly(ring, d) for d in vd)


def find_regular_reducer(f: LabeledPoly, G, target: Term, order: Optional[ModuleOrder] = None):
    """Exact strong reducer (g, t) of ``target`` with t*sig(g) < sig(f), or None."""
    if order is None:
        order = G.order
    basis = _as_sig_basis(G, order)
    ring = order.ring
    step = _pick(basis, ring.pack(target.mono), target.coeff, _sig_admissible(order, f.sig), False)
    if step is None:
        return None
    e, q, tp = step
    return e.item, Term(q, ring.unpack(tp))


def regular_reduce(f: LabeledPoly, G, opts: Optional[ReduceOptions] = None, order: Optional[ModuleOrder] = None) -> LabeledPoly:
    """Regular s-reduction of f modulo G; the signature never changes."""
    opts = opts or ReduceOptions()
    if order is None:
        order = G.order
    basis = _as_sig_basis(G, order)
    if not f.poly:
        return f
    poly, vec = _reduce(
        order.ring, f.poly.coeffs, basis, _sig_admissible(order, f.sig),
        opts.tail, opts.modular, f.vector,
    )
    return LabeledPoly(f.sig, poly, vec)


def strong_reduce(p: Poly, G: ReducerIndex, tail: bool = True, modular: bool = True) -> Poly:
    """Signature-free strong reduction (the oracle's normal form)."""
    if not len(G):
        return p
    return _reduce(p.ring, p.coeffs, G, None, tail, modular)[0]


def _super_witness(f: LabeledPoly, G, need_lt: bool):
    lt = f.poly.lt
    for g in G:
        if g.sig.index != f.sig.index or not g.poly:
            continue
        t = sig_divides(g.sig, f.sig)
        if t is None:
            continue
        glt = g.poly.lt
        if mono_mul(t.mono, glt.mono) != lt.mono:
            continue
        if need_lt and t.coeff * glt.coeff != lt.coeff:
            continue
        return g, t
    return None


def super_reducible(f: LabeledPoly, G) -> bool:
    """Some t*sig(g) equals sig(f) exactly and lm(t*g) == lm(f)."""
    return _super_witness(f, G, False) is not None


def super_and_s_reducible(f: LabeledPoly, G) -> bool:
    """One (g, t) with t*sig(g) == sig(f) and t*lt(g) == lt(f)."""
    return _super_witness(f, G, True) is not None


def same_class_s_reducible(f: LabeledPoly, G) -> bool:
    """Some g and monomial t with t*lt(g) | lt(f) exactly and t*sig(g) in the class of sig(f).

    The signature coefficients are unconstrained: this is an s-reduction that
    is neither regular nor singular unless the coefficients happen to match.
    """
    lt, fs = f.poly.lt, f.sig
    for g in G:
        gs = g.sig
        if gs.index != fs.index or not g.poly:
            continue
        t = mono_div(fs.mono, gs.mono)
        if t is None:
            continue
        glt = g.poly.lt
        if lt.coeff % glt.coeff == 0 and mono_mul(t, glt.mono) == lt.mono:
            return True
    return False


def same_class_step(f: LabeledPoly, G, modular: bool = False) -> Optional[LabeledPoly]:
    """One non-singular step on lt(f) by a reducer in the class of sig(f).

    Subtracting q*t*g with t*sig(g) in the class of sig(f) leaves the class
    unchanged and moves the signature coefficient by q*lc(sig(g)); reducers
    that would cancel it are skipped. Exact steps are preferred; with
    ``modular`` the smallest symmetric remainder step is the fallback.
    Returns None when no step applies.
    """
    lt, fs = f.poly.lt, f.sig
    best = best_r = None
    for g in G:
        gs = g.sig
        if gs.index != fs.index or not g.poly:
            continue
        t = mono_div(fs.mono, gs.mono)
        if t is None:
            continue
        glt = g.poly.lt
        if mono_mul(t, glt.mono) != lt.mono:
            continue
        if lt.coeff % glt.coeff == 0:
            q = lt.coeff // glt.coeff
            if fs.coeff != q * gs.coeff:
                best = (g, t, q)
                break
        elif modular:
            r = sym_rem(lt.coeff, glt.coeff)
            q = (lt.coeff - r) // glt.coeff
            if r != lt.coeff and fs.coeff != q * gs.coeff and (best_r is None or abs(r) < best_r):
                best, best_r = (g, t, q), abs(r)
    if best is None:
        return None
    g, t, q = best
    vec = None
    if f.vector is not None:
        vec = tuple(a.axpy(-q, t, b) for a, b in zip(f.vector, g.vector))
    sig = Signature(fs.coeff - q * g.sig.coeff, fs.mono, fs.index)
    return LabeledPoly(sig, f.poly.axpy(-q, t, g.poly), vec)


def covered(pd: PairData, G, bank: SyzygyBank, order: Optional[ModuleOrder] = None) -> bool:
    """Cover test for a non-singular pair with signature c*mu*e_k and degree m.

    Covered when the signature is sig-reducible by the bank, or some basis
    element g with sig(g) = c_g*nu*e_k, nu | mu and lm((mu/nu)*g) < m has
    gcd(c_g, c_z) | c, where c_z is the gcd of the bank coefficients at e_k
    over monomials dividing mu (c_z = 0 when there are none).
    """
    if pd.cls is PairClass.SINGULAR:
        raise ValueError("cover test on a singular pair")
    if order is None:
        order = G.order
    ring = order.ring
    sig = pd.sig
    if bank.reducible(sig) is not None:
        return True
    c, mu, k = sig.coeff, sig.mono, sig.index
    mkey = ring.key(pd.mdeg)
    cz = None
    for g in G:
        gs = g.sig
        if gs.index != k or not g.poly:
            continue
        nu = mono_div(mu, gs.mono)
        if nu is None:
            continue
        if ring.key(mono_mul(nu, g.poly.lm)) >= mkey:
            continue
        if c % gs.coeff == 0:
            return True
        if cz is None:
            cz = bank.coeff_gcd(k, mu)
        if cz and c % gcd(gs.coeff, cz) == 0:
            return True
    return False


def s_reduces_to_zero(f: LabeledPoly, G, order: ModuleOrder) -> bool:
    """Top s-reduction to zero allowing t*sig(g) <= sig(f) (strict or same class).

    Singular steps need the module vector to recover the new signature, so
    without a vector only regular and non-singular steps are attempted.
    """
    basis = _as_sig_basis(G, order)
    ring = order.ring
    poly, vec, sig = f.poly, f.vector, f.sig
    while poly:
        lt = poly.lt
        regular = _pick(basis, ring.pack(lt.mono), lt.coeff, _sig_admissible(order, sig), False)
        if regular is not None:
            regular = (regular[0], regular[1], ring.unpack(regular[2]))
        step = regular
        if step is None:
            for e in basis.entries():
                t = mono_div(lt.mono, e.lm)
                if t is None or lt.coeff % e.lc:
                    continue
                ts = Signature(lt.coeff // e.lc * e.sig.coeff, mono_mul(t, e.sig.mono), e.sig.index)
                if cmp_sig(ts, sig, order) is SigCmp.SIM and (vec is not None or ts.coeff != sig.coeff):
                    step = (e, lt.coeff // e.lc, t)
                    break
        if step is None:
            return False
        e, q, t = step
        poly = poly.axpy(-q, t, e.poly)
        if vec is not None:
            vec = tuple(a.axpy(-q, t, b) for a, b in zip(vec, e.item.vector))
        if step is not regular:
            if vec is not None:
                sig = lead_term(vec, order)
                if sig is None:
                    return not poly
            else:
                sig = Signature(sig.coeff - q * e.sig.coeff, sig.mono, sig.index)
    return True
