"""Signature variants of Kandri-Rody--Kapur (``kk``) and Pan/Lichtblau (``pl``).

Both drivers share the queue, the syzygy bank and the reducer; they differ in
which pair polynomials they enqueue and in the discard rules applied after
reduction.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field, replace
from math import gcd
from typing import NamedTuple, Optional, Sequence

from .combpairs import (
    LabeledPoly,
    PairClass,
    PairData,
    SingularOperation,
    g_pol,
    g_pol_plan,
    lc_divisible,
    pair_data,
    s_pol,
)
from .polyring import Poly, Term, mono_gcd, term_div
from .reducer import (
    ReduceOptions,
    SigBasis,
    covered,
    regular_reduce,
    same_class_s_reducible,
    same_class_step,
    super_and_s_reducible,
    super_reducible,
)
from .sigspace import ModuleOrder, SigCmp, Signature, cmp_sig, mul_sig, sig_divides
from .syzbank import SyzygyBank, SyzygyRecord, f5_prepopulate, koszul
from .tracker import lead_term, unit_vector

ALGORITHMS = ("kk", "pl")
CRITERIA = ("cover", "super_discard", "coprime", "chain", "f5")


class InvariantViolation(AssertionError):
    """A runtime check on the algorithm state failed."""


class RunTimeout(RuntimeError):
    """The run exceeded ``EngineOptions.time_limit``; ``stats`` holds the partial counts."""

    def __init__(self, stats: "RunStats"):
        super().__init__(f"time limit exceeded after {stats.pairs_processed} pairs")
        self.stats = stats


@dataclass
class EngineOptions:
    algorithm: str = "kk"
    cover: bool = True
    super_discard: bool = True
    coprime: bool = True
    chain: bool = True
    f5: bool = True
    gpol_regular_only: bool = False
    # G-polynomials of singular pairs (never singular themselves).
    singular_gpol: bool = True
    # Experimental: also apply the cover test to G-entries (kk only).
    cover_gpol: bool = False
    # Drop a G-polynomial whose regular reduction is s-reducible by a basis
    # element in its own signature class.
    drop_reducible_gpol: bool = True
    # Continue reduction with non-singular steps inside the signature class.
    same_class_steps: bool = True
    reduce: ReduceOptions = field(default_factory=ReduceOptions)
    tracking: bool = False
    check: bool = True
    record_discards: bool = False
    # Wall-clock budget in seconds; None means unbounded.
    time_limit: Optional[float] = None

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")

    def without_criteria(self) -> "EngineOptions":
        return replace(self, **{c: False for c in CRITERIA})


@dataclass
class RunStats:
    pairs_generated: int = 0
    pairs_processed: int = 0
    discarded_by_syzygy: int = 0
    discarded_by_cover: int = 0
    discarded_by_super: int = 0
    discarded_by_reducible_gpol: int = 0
    discarded_as_duplicate: int = 0
    discarded_by_coprime: int = 0
    discarded_by_chain: int = 0
    reduced: int = 0
    reduced_to_zero: int = 0
    added: int = 0
    singular_ops: int = 0
    same_class_steps: int = 0
    wall_time: float = 0.0

    def triple(self) -> tuple[int, int, int]:
        """The (pairs / reduced / to zero) summary; pairs are queue pops."""
        return self.pairs_processed, self.reduced, self.reduced_to_zero

    @property
    def pairs_considered(self) -> int:
        """Queue pops plus pairs rejected by the coprime and chain filters before queueing."""
        return self.pairs_processed + self.discarded_by_coprime + self.discarded_by_chain

    def consistent(self) -> bool:
        return (
            self.pairs_processed == self.discarded_by_syzygy + self.discarded_by_cover + self.reduced
            and self.pairs_generated == self.pairs_processed
            and self.reduced == self.reduced_to_zero + self.discarded_by_super
            + self.discarded_by_reducible_gpol + self.discarded_as_duplicate + self.added
            and self.reduced_to_zero <= self.reduced
        )

    def counters(self) -> dict:
        d = dict(self.__dict__)
        d.pop("wall_time")
        d["pairs_considered"] = self.pairs_considered
        return d


class EntryKind(NamedTuple):
    kind: str  # "N", "S" or "G"
    i: int = -1
    j: int = -1

    def __str__(self):
        return self.kind if self.kind == "N" else f"{self.kind}({self.i + 1},{self.j + 1})"


@dataclass(slots=True)
class QueueEntry:
    """A queued element.

    Pair entries are lazy: ``poly`` stays None until the entry survives the
    signature-only tests, and ``plan`` holds what is needed to build it.
    """

    sig: Signature
    poly: Optional[Poly]
    kind: EntryKind
    vector: Optional[tuple] = None
    pair: Optional[PairData] = None
    plan: object = None


class SigQueue:
    """Priority queue on (module monomial, |coefficient|, insertion order).

    Duplicates (same signature, kind letter and polynomial) are detected
    with :meth:`is_duplicate` once an entry's polynomial is known.
    """

    def __init__(self, order: ModuleOrder):
        self.order = order
        self._heap: list = []
        self._seq = 0
        self._seen: set = set()

    def push(self, e: QueueEntry) -> None:
        self._seq += 1
        heapq.heappush(self._heap, (self.order.sig_key(e.sig), abs(e.sig.coeff), self._seq, e))

    def is_duplicate(self, e: QueueEntry) -> bool:
        key = (e.sig, e.kind.kind, frozenset(e.poly.coeffs.items()))
        if key in self._seen:
            return True
        self._seen.add(key)
        return False

    def pop(self) -> QueueEntry:
        if not self._heap:
            raise IndexError("pop from an empty queue")
        return heapq.heappop(self._heap)[-1]

    def __len__(self):
        return len(self._heap)


def pop_minimal(Q: SigQueue, order: Optional[ModuleOrder] = None) -> QueueEntry:
    return Q.pop()


@dataclass
class RunResult:
    basis: SigBasis
    bank: SyzygyBank
    stats: RunStats
    generators: list
    order: ModuleOrder
    options: EngineOptions
    discarded: list = field(default_factory=list)

    @property
    def tracking(self) -> bool:
        return self.options.tracking

    @property
    def polys(self) -> list[Poly]:
        return [g.poly for g in self.basis]

    @property
    def syzygy_history(self) -> list[SyzygyRecord]:
        return self.bank.history


def coprime_criterion(pd: PairData, f: LabeledPoly, g: LabeledPoly) -> bool:
    """Leading terms coprime as terms: monomial gcd 1 and coefficient gcd 1."""
    lf, lg = f.poly.lt, g.poly.lt
    return not any(mono_gcd(lf.mono, lg.mono)) and gcd(lf.coeff, lg.coeff) == 1


def _sig_le_dividing(s: Signature, sigma: Signature, order: ModuleOrder) -> bool:
    c = cmp_sig(s, sigma, order)
    if c is SigCmp.LT:
        return True
    return c is SigCmp.SIM and sig_divides(s, sigma) is not None


def chain_criterion(i: int, j: int, pd: PairData, G, pairs: dict, order: ModuleOrder) -> bool:
    """Discard S(i, j) through a third element k.

    Needs lt(g_k) | tdeg(i, j) as terms, both pairs (i, k) and (k, j) already
    generated as regular S-pairs, and their signatures, translated up to
    tdeg(i, j), at most sig(i, j) (strictly smaller or same class with a
    dividing coefficient).  ``pairs`` maps generated (a, b) with a < b to
    their PairData.
    """
    T = pd.tdeg
    sigma = pd.sig
    ring = order.ring
    guard = ring.guard
    pT = ring.pack(T.mono)
    cT = T.coeff
    for k, (pk, ck) in enumerate(zip(G.lead_packed, G.lead_coeff)):
        if (pT - pk) & guard or cT % ck or k == i or k == j:
            continue
        pik = pairs.get((i, k) if i < k else (k, i))
        if pik is None:
            continue
        pkj = pairs.get((k, j) if k < j else (j, k))
        if pkj is None:
            continue
        ok = True
        for p in (pik, pkj):
            if p.cls is not PairClass.REGULAR:
                ok = False
                break
            w = term_div(T, p.tdeg)
            if w is None or not _sig_le_dividing(mul_sig(w, p.sig), sigma, order):
                ok = False
                break
        if ok:
            return True
    return False


class _Run:
    def __init__(self, F: Sequence[Poly], opts: EngineOptions, order: ModuleOrder):
        if not F:
            raise ValueError("no generators")
        for f in F:
            if not f:
                raise ValueError("zero generator")
        self.F = list(F)
        self.opts = opts
        self.order = order
        self.ring = order.ring
        self.n = len(F)
        self.kk = opts.algorithm == "kk"
        self.G = SigBasis(order)
        self.bank = SyzygyBank(order)
        self.Q = SigQueue(order)
        self.stats = RunStats()
        self.pairs: dict = {}
        self.members: set = set()
        self.discarded: list = []
        self.gens = [
            LabeledPoly(Signature(1, self.ring.one, i), f,
                        unit_vector(self.ring, self.n, i) if opts.tracking else None)
            for i, f in enumerate(self.F, start=1)
        ]
        self.use_f5 = opts.f5 and order.is_pot

    def push(self, e: QueueEntry):
        self.Q.push(e)
        self.stats.pairs_generated += 1

    def _materialize(self, e: QueueEntry):
        if e.poly is not None:
            return
        gi, gj = self.G[e.kind.i], self.G[e.kind.j]
        if e.kind.kind == "S":
            h = s_pol(gi, gj, self.order, e.pair)
        else:
            h = g_pol(gi, gj, self.order, e.plan)
        e.poly, e.vector, e.plan = h.poly, h.vector, None

    def run(self) -> RunResult:
        t0 = time.perf_counter()
        if self.use_f5:
            f5_prepopulate(self.bank, self.F, self.order, self.opts.tracking)
        for g in self.gens:
            self.push(QueueEntry(g.sig, g.poly, EntryKind("N"), g.vector))
        last = None
        st = self.stats
        deadline = None if self.opts.time_limit is None else t0 + self.opts.time_limit
        while len(self.Q):
            if deadline is not None and time.perf_counter() > deadline:
                st.wall_time = time.perf_counter() - t0
                raise RunTimeout(st)
            e = self.Q.pop()
            key = self.order.sig_key(e.sig)
            if self.opts.check and last is not None and key < last:
                raise InvariantViolation("signature drop: popped signatures decreased")
            last = key
            if self.bank.reducible(e.sig) is not None:
                st.pairs_processed += 1
                st.discarded_by_syzygy += 1
                continue
            if self.kk and self.opts.cover and e.pair is not None and (
                e.kind.kind == "S" or (self.opts.cover_gpol and e.kind.kind == "G")
            ):
                pd = e.pair if e.kind.kind == "S" else replace(e.pair, sig=e.sig)
                if covered(pd, self.G, self.bank, self.order):
                    st.pairs_processed += 1
                    st.discarded_by_cover += 1
                    if self.opts.record_discards:
                        self._materialize(e)
                        self.discarded.append(("cover", LabeledPoly(e.sig, e.poly, e.vector)))
                    continue
            self._materialize(e)
            if self.Q.is_duplicate(e):
                st.pairs_generated -= 1
                continue
            st.pairs_processed += 1
            # Top reduction first: the discard tests only read the leading term,
            # so the tail is reduced only for elements that are kept.
            top_opts = replace(self.opts.reduce, tail=False)
            r = regular_reduce(LabeledPoly(e.sig, e.poly, e.vector), self.G, top_opts, self.order)
            st.reduced += 1
            if self.opts.check and r.sig != e.sig:
                raise InvariantViolation("reduction changed the signature")
            if not r.poly:
                st.reduced_to_zero += 1
                self.bank.insert(SyzygyRecord(r.sig, r.vector))
                continue
            if e.kind.kind == "G" and self.opts.drop_reducible_gpol and same_class_s_reducible(r, self.G):
                st.discarded_by_reducible_gpol += 1
                if self.opts.record_discards:
                    self.discarded.append(("gpol", r))
                continue
            if self.opts.super_discard and self._discard_after_reduction(e.kind.kind, r):
                st.discarded_by_super += 1
                if self.opts.record_discards:
                    self.discarded.append(("super", r))
                continue
            if self.opts.same_class_steps:
                r = self._reduce_in_class(r, top_opts)
                if not r.poly:
                    st.reduced_to_zero += 1
                    self.bank.insert(SyzygyRecord(r.sig, r.vector))
                    continue
            if self.opts.reduce.tail:
                r = regular_reduce(r, self.G, self.opts.reduce, self.order)
            key = (r.sig, frozenset(r.poly.coeffs.items()))
            if key in self.members:
                st.discarded_as_duplicate += 1
                continue
            self.members.add(key)
            self._add(r)
        st.wall_time = time.perf_counter() - t0
        if self.opts.check and not st.consistent():
            raise InvariantViolation(f"inconsistent statistics {st}")
        return RunResult(self.G, self.bank, st, self.F, self.order, self.opts, self.discarded)

    def _reduce_in_class(self, r: LabeledPoly, top_opts: ReduceOptions) -> LabeledPoly:
        while r.poly:
            nxt = same_class_step(r, self.G, top_opts.modular)
            if nxt is None:
                break
            self.stats.same_class_steps += 1
            r = regular_reduce(nxt, self.G, top_opts, self.order)
        return r

    def _discard_after_reduction(self, kind: str, r: LabeledPoly) -> bool:
        if self.kk or kind == "G":
            return super_and_s_reducible(r, self.G)
        return super_reducible(r, self.G)

    def _add(self, r: LabeledPoly):
        j = self.G.add(r)
        self.stats.added += 1
        if self.use_f5:
            for gen in self.gens:
                if self.order.unit_less(r.sig.index, gen.sig.index):
                    z = koszul(gen, r, self.order)
                    if z is not None:
                        self.bank.insert(z)
        for i in range(j):
            gi = self.G[i]
            pd = pair_data(gi, r, self.order)
            divisible = lc_divisible(gi, r)
            if self.kk:
                if pd.cls is PairClass.REGULAR:
                    self._s_pair(i, j, pd)
                if not divisible and self._wants_gpol(pd):
                    self._g_pair(i, j, pd)
            elif pd.cls is PairClass.SINGULAR:
                if not divisible and self.opts.singular_gpol:
                    self._g_pair(i, j, pd)
            elif divisible:
                self._s_pair(i, j, pd)
            else:
                self._g_pair(i, j, pd)

    def _wants_gpol(self, pd: PairData) -> bool:
        if pd.cls is PairClass.REGULAR:
            return True
        if self.opts.gpol_regular_only:
            return False
        return pd.cls is PairClass.SIM_NONSINGULAR or self.opts.singular_gpol

    def _s_pair(self, i: int, j: int, pd: PairData):
        gi, gj = self.G[i], self.G[j]
        if pd.cls is PairClass.SINGULAR:
            self.stats.singular_ops += 1
            raise InvariantViolation("S-polynomial requested for a singular pair")
        if self.opts.coprime and coprime_criterion(pd, gi, gj):
            z = koszul(gi, gj, self.order)
            if self.opts.check and (z is None or sig_divides(z.sig, pd.sig) is None):
                raise InvariantViolation("Koszul syzygy does not match the pair signature")
            self.bank.insert(z)
            self.pairs[(i, j)] = pd
            self.stats.discarded_by_coprime += 1
            return
        if self.kk and self.opts.chain and pd.cls is PairClass.REGULAR and chain_criterion(
            i, j, pd, self.G, self.pairs, self.order
        ):
            self.pairs[(i, j)] = pd
            self.stats.discarded_by_chain += 1
            return
        self.pairs[(i, j)] = pd
        self.push(QueueEntry(pd.sig, None, EntryKind("S", i, j), None, pd))

    def _g_pair(self, i: int, j: int, pd: PairData):
        plan = g_pol_plan(self.G[i], self.G[j], self.order)
        sig = plan[0]
        if self.opts.check and pd.sig is not None and cmp_sig(sig, pd.sig, self.order) is not SigCmp.SIM:
            raise InvariantViolation("G-polynomial signature not in the pair's class")
        self.push(QueueEntry(sig, None, EntryKind("G", i, j), None, pd, plan))


def run(F: Sequence[Poly], opts: Optional[EngineOptions] = None, order: Optional[ModuleOrder] = None) -> RunResult:
    opts = opts or EngineOptions()
    if not F:
        raise ValueError("no generators")
    if order is None:
        order = ModuleOrder(F[0].ring)
    return _Run(F, opts, order).run()


def run_kk(F: Sequence[Poly], opts: Optional[EngineOptions] = None, order: Optional[ModuleOrder] = None) -> RunResult:
    """Signature Kandri-Rody--Kapur: S- and G-polynomials, cover criterion."""
    opts = replace(opts or EngineOptions(), algorithm="kk")
    return run(F, opts, order)


def run_pl(F: Sequence[Poly], opts: Optional[EngineOptions] = None, order: Optional[ModuleOrder] = None) -> RunResult:
    """Signature Pan/Lichtblau: one SG-polynomial per non-singular pair."""
    opts = replace(opts or EngineOptions(), algorithm="pl")
    return run(F, opts, order)
