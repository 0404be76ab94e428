"""Labeled polynomials and the pair constructions: S-, G- and SG-polynomials."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .coeffring import xgcd
from .polyring import Monomial, Poly, Term, mono_div, mono_lcm, mono_mul, term_lcm
from .sigspace import ModuleOrder, SigCmp, Signature, cmp_sig, max_sig, mul_sig
from .tracker import ModuleVector, vec_axpy, vec_mul_term


class SingularOperation(ArithmeticError):
    """Raised when an operation would cancel the signature (a signature drop)."""


@dataclass(slots=True)
class LabeledPoly:
    """A module element known through its signature and polynomial part.

    ``vector`` is the full module representation, present only when tracking.
    """

    sig: Signature
    poly: Poly
    vector: Optional[ModuleVector] = None


class PairClass(enum.Enum):
    REGULAR = "regular"
    SIM_NONSINGULAR = "sim-nonsingular"
    SINGULAR = "singular"


@dataclass(frozen=True, slots=True)
class PairData:
    tdeg: Term
    mdeg: Monomial
    tf: Term
    tg: Term
    sig: Optional[Signature]
    cls: PairClass


def pair_data(f: LabeledPoly, g: LabeledPoly, order: ModuleOrder) -> PairData:
    """Term degree, cofactors, signature and class of the pair (f, g).

    The S-polynomial is ``tf*f - tg*g``; the pair signature is the leading
    module term of that combination, so it carries the sign of the subtraction.
    """
    lf, lg = f.poly.lt, g.poly.lt
    if lf is None or lg is None:
        raise ValueError("pair of a zero polynomial")
    T = term_lcm(lf, lg)
    tf = Term(T.coeff // lf.coeff, mono_div(T.mono, lf.mono))
    tg = Term(T.coeff // lg.coeff, mono_div(T.mono, lg.mono))
    A = mul_sig(tf, f.sig)
    B = mul_sig(tg, g.sig)
    c = cmp_sig(A, B, order)
    if c is SigCmp.GT:
        return PairData(T, T.mono, tf, tg, A, PairClass.REGULAR)
    if c is SigCmp.LT:
        return PairData(T, T.mono, tf, tg, B.scaled(-1), PairClass.REGULAR)
    d = A.coeff - B.coeff
    if not d:
        return PairData(T, T.mono, tf, tg, None, PairClass.SINGULAR)
    return PairData(T, T.mono, tf, tg, Signature(d, A.mono, A.index), PairClass.SIM_NONSINGULAR)


def s_pol(f: LabeledPoly, g: LabeledPoly, order: ModuleOrder, pd: Optional[PairData] = None) -> LabeledPoly:
    if pd is None:
        pd = pair_data(f, g, order)
    if pd.cls is PairClass.SINGULAR:
        raise SingularOperation("S-polynomial of a singular pair")
    tf, tg = pd.tf, pd.tg
    poly = f.poly.mul_term(tf.coeff, tf.mono).axpy(-tg.coeff, tg.mono, g.poly)
    vec = None
    if f.vector is not None and g.vector is not None:
        vec = vec_axpy(vec_mul_term(f.vector, tf.coeff, tf.mono), -tg.coeff, tg.mono, g.vector)
    return LabeledPoly(pd.sig, poly, vec)


def _comb_sig(u, nf, sf, v, ng, sg, order):
    U = Signature(u * sf.coeff, mono_mul(nf, sf.mono), sf.index) if u else None
    V = Signature(v * sg.coeff, mono_mul(ng, sg.mono), sg.index) if v else None
    if U is None:
        return V
    if V is None:
        return U
    return max_sig(U, V, order)


def g_pol_plan(f: LabeledPoly, g: LabeledPoly, order: ModuleOrder):
    """Bezout cofactors and signature of the G-polynomial, without building it.

    Returns ``(sig, (u, nf), (v, ng))`` where the G-polynomial is
    ``u*nf*f + v*ng*g``.  The canonical pair from :func:`xgcd` is used unless
    the two translated signatures sit on the same module monomial and cancel
    exactly; then the pair is shifted to ``(u + b/d, v - a/d)``, which keeps
    the Bezout identity and makes the signature coefficient nonzero.
    """
    lf, lg = f.poly.lt, g.poly.lt
    if lf is None or lg is None:
        raise ValueError("pair of a zero polynomial")
    a, b = lf.coeff, lg.coeff
    d, u, v = xgcd(a, b)
    M = mono_lcm(lf.mono, lg.mono)
    nf = mono_div(M, lf.mono)
    ng = mono_div(M, lg.mono)
    sig = _comb_sig(u, nf, f.sig, v, ng, g.sig, order)
    if sig is None:
        u += b // d
        v -= a // d
        sig = _comb_sig(u, nf, f.sig, v, ng, g.sig, order)
        if sig is None:
            raise SingularOperation("no non-cancelling Bezout pair")
    return sig, (u, nf), (v, ng)


def g_pol(f: LabeledPoly, g: LabeledPoly, order: ModuleOrder, plan=None) -> LabeledPoly:
    """G-polynomial with a Bezout pair chosen so the signature does not cancel."""
    sig, (u, nf), (v, ng) = plan or g_pol_plan(f, g, order)
    poly = f.poly.mul_term(u, nf).axpy(v, ng, g.poly)
    vec = None
    if f.vector is not None and g.vector is not None:
        vec = vec_axpy(vec_mul_term(f.vector, u, nf), v, ng, g.vector)
    return LabeledPoly(sig, poly, vec)


def lc_divisible(f: LabeledPoly, g: LabeledPoly) -> bool:
    """True when one leading coefficient divides the other."""
    a, b = f.poly.lc, g.poly.lc
    return b % a == 0 or a % b == 0


def sg_pol(f: LabeledPoly, g: LabeledPoly, order: ModuleOrder, pd: Optional[PairData] = None):
    """SG-polynomial: the S-polynomial if one leading coefficient divides the
    other, the G-polynomial otherwise.  Returns ``(element, "S" | "G")``."""
    if pd is None:
        pd = pair_data(f, g, order)
    if pd.cls is PairClass.SINGULAR:
        raise SingularOperation("SG-polynomial of a singular pair")
    if lc_divisible(f, g):
        return s_pol(f, g, order, pd), "S"
    return g_pol(f, g, order), "G"
