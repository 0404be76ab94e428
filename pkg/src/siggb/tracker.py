"""Module vectors: coordinates of basis elements and syzygies over the generators.

A module vector is a tuple of polynomials, one coordinate per generator.  The
engines carry vectors inline when tracking is on, so reconstruction is only a
matter of reading them back and checking them.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .polyring import Monomial, Poly, PolyRing
from .sigspace import ModuleOrder, Signature

ModuleVector = tuple  # tuple[Poly, ...]


class TrackingMissing(ValueError):
    pass


def unit_vector(ring: PolyRing, n: int, index: int) -> ModuleVector:
    """The unit vector e[index] (1-based) of length n."""
    z = ring.zero()
    return tuple(ring.const(1) if i == index - 1 else z for i in range(n))


def vec_axpy(v: ModuleVector, c: int, m: Monomial, w: ModuleVector) -> ModuleVector:
    return tuple(a.axpy(c, m, b) for a, b in zip(v, w))


def vec_mul_term(v: ModuleVector, c: int, m: Monomial) -> ModuleVector:
    return tuple(a.mul_term(c, m) for a in v)


def vec_mul_poly(v: ModuleVector, p: Poly) -> ModuleVector:
    return tuple(a * p for a in v)


def vec_sub(v: ModuleVector, w: ModuleVector) -> ModuleVector:
    return tuple(a - b for a, b in zip(v, w))


def lead_term(v: ModuleVector, order: ModuleOrder) -> Optional[Signature]:
    """Largest module term of v, or None for the zero vector."""
    best = None
    best_key = None
    for i, p in enumerate(v, start=1):
        for m, c in p.coeffs.items():
            k = order.key(m, i)
            if best_key is None or k > best_key:
                best_key = k
                best = Signature(c, m, i)
    return best


def eval_vector(v: ModuleVector, F: Sequence[Poly]) -> Poly:
    if len(v) != len(F):
        raise ValueError("vector length does not match the number of generators")
    ring = F[0].ring
    acc = ring.zero()
    for a, f in zip(v, F):
        if a:
            acc = acc + a * f
    return acc


def reconstruct(result):
    """Return ``(coord_matrix, syzygy_basis)`` from a tracked engine run.

    Row i of ``coord_matrix`` expresses basis element i in terms of the input
    generators.  ``syzygy_basis`` holds the vectors of the final syzygy bank,
    one per stored signature (reductions to zero, Koszul syzygies and
    sigG-combinations that were not superseded).
    """
    if not result.tracking:
        raise TrackingMissing("run was made without tracking")
    coords = [g.vector for g in result.basis]
    syz = [rec.vector for rec in result.bank]
    return coords, syz


def verify_tracking(basis, bank_records, generators: Sequence[Poly], order: ModuleOrder) -> bool:
    """Exact replay check of every stored vector.

    ``basis`` holds labeled polynomials and ``bank_records`` syzygy records;
    each must carry a vector whose evaluation is its polynomial part (zero for
    syzygies) and whose leading module term is the stored signature.
    """
    for g in basis:
        if g.vector is None:
            return False
        if eval_vector(g.vector, generators) != g.poly:
            return False
        if lead_term(g.vector, order) != g.sig:
            return False
    for z in bank_records:
        if z.vector is None:
            return False
        if eval_vector(z.vector, generators):
            return False
        if lead_term(z.vector, order) != z.sig:
            return False
    return True
