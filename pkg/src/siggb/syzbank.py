"""Known syzygy signatures: sig-reducibility, sigG-combinations, Koszul syzygies."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional, Sequence

from .coeffring import xgcd
from .polyring import Poly, mono_div, mono_divides, mono_lcm
from .sigspace import ModuleOrder, Signature, max_sig, mul_sig, sig_divides
from .tracker import ModuleVector, unit_vector, vec_axpy, vec_mul_poly, vec_mul_term, vec_sub


@dataclass(slots=True)
class SyzygyRecord:
    sig: Signature
    vector: Optional[ModuleVector] = None


def sig_g_comb(z1: SyzygyRecord, z2: SyzygyRecord) -> SyzygyRecord:
    """sigG-combination: signature gcd(a1, a2) * lcm(mu1, mu2) * e_i."""
    s1, s2 = z1.sig, z2.sig
    if s1.index != s2.index:
        raise ValueError("sigG-combination of syzygies with different indices")
    d, u1, u2 = xgcd(s1.coeff, s2.coeff)
    mu = mono_lcm(s1.mono, s2.mono)
    vec = None
    if z1.vector is not None and z2.vector is not None:
        n1 = mono_div(mu, s1.mono)
        n2 = mono_div(mu, s2.mono)
        vec = vec_axpy(vec_mul_term(z1.vector, u1, n1), u2, n2, z2.vector)
    return SyzygyRecord(Signature(d, mu, s1.index), vec)


def koszul(f, g, order: ModuleOrder) -> Optional[SyzygyRecord]:
    """The syzygy ``g*f - f*g`` of two labeled polynomials.

    Its leading module term is the larger of lt(g)*sig(f) and -lt(f)*sig(g);
    None is returned if those cancel exactly.
    """
    lf, lg = f.poly.lt, g.poly.lt
    sig = max_sig(mul_sig(lg, f.sig), mul_sig(lf, g.sig).scaled(-1), order)
    if sig is None:
        return None
    vec = None
    if f.vector is not None and g.vector is not None:
        vec = vec_sub(vec_mul_poly(f.vector, g.poly), vec_mul_poly(g.vector, f.poly))
    return SyzygyRecord(sig, vec)


class SyzygyBank:
    """Interreduced, sigG-complete collection of syzygy signatures.

    ``history`` keeps every record that was ever stored, including ones later
    pruned because a newer record divides them.
    """

    def __init__(self, order: ModuleOrder):
        self.order = order
        self._by_index: dict[int, list[SyzygyRecord]] = {}
        self.history: list[SyzygyRecord] = []

    def __iter__(self) -> Iterator[SyzygyRecord]:
        for i in sorted(self._by_index):
            yield from self._by_index[i]

    def __len__(self) -> int:
        return sum(len(v) for v in self._by_index.values())

    def records(self) -> list[SyzygyRecord]:
        return list(self)

    def signatures(self) -> list[Signature]:
        return [z.sig for z in self]

    def reducible(self, s: Signature) -> Optional[SyzygyRecord]:
        """First stored record whose signature divides s."""
        for z in self._by_index.get(s.index, ()):
            zs = z.sig
            if s.coeff % zs.coeff == 0 and mono_divides(zs.mono, s.mono):
                return z
        return None

    def coeff_gcd(self, index: int, mono) -> int:
        """gcd of the coefficients of records at ``index`` whose monomial divides ``mono``."""
        g = 0
        for z in self._by_index.get(index, ()):
            if mono_divides(z.sig.mono, mono):
                g = gcd(g, z.sig.coeff)
                if g == 1:
                    break
        return g

    def insert(self, z: SyzygyRecord) -> bool:
        """Insert z with its sigG-combination closure; False if z was already reducible."""
        if self.reducible(z.sig) is not None:
            return False
        work = [z]
        while work:
            z = work.pop()
            if self.reducible(z.sig) is not None:
                continue
            recs = self._by_index.setdefault(z.sig.index, [])
            combos = [sig_g_comb(y, z) for y in recs]
            recs[:] = [y for y in recs if sig_divides(z.sig, y.sig) is None]
            recs.append(z)
            self.history.append(z)
            work.extend(combos)
        return True

    def is_sig_g_complete(self) -> bool:
        for recs in self._by_index.values():
            for i, a in enumerate(recs):
                for b in recs[i + 1:]:
                    if self.reducible(sig_g_comb(a, b).sig) is None:
                        return False
        return True


def f5_prepopulate(bank: SyzygyBank, F: Sequence[Poly], order: ModuleOrder, tracking: bool = False) -> SyzygyBank:
    """Insert the Koszul signatures lt(f_lo)*e_hi of all generator pairs (PoT only)."""
    if not order.is_pot:
        raise ValueError("F5 prepopulation requires PoT")
    from .combpairs import LabeledPoly

    n = len(F)
    ring = order.ring
    labeled = []
    for i, f in enumerate(F, start=1):
        vec = unit_vector(ring, n, i) if tracking else None
        labeled.append(LabeledPoly(Signature(1, ring.one, i), f, vec))
    for i in range(n):
        for j in range(i + 1, n):
            if not F[i] or not F[j]:
                continue
            lo, hi = (i, j) if order.unit_less(i + 1, j + 1) else (j, i)
            z = koszul(labeled[hi], labeled[lo], order)
            if z is not None:
                bank.insert(z)
    return bank
