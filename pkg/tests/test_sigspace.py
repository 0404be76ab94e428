import pytest
from hypothesis import given, strategies as st

from siggb.polyring import PolyRing, Term
from siggb.sigspace import (
    ModuleOrder, SigCmp, Signature, add_sig_same_class, cmp_sig, format_sig, mul_sig, sig_divides,
)

R = PolyRing(["x", "y"])
sigs = st.builds(
    Signature,
    st.integers(-9, 9).filter(bool),
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(1, 3),
)
module_orders = st.sampled_from([ModuleOrder(R, k, d) for k in ("pot", "top") for d in (False, True)])


def S(c, mono, i):
    return Signature(c, mono, i)


def test_cmp_sig_examples():
    desc = ModuleOrder(R, "pot", descending=True)
    asc = ModuleOrder(R, "pot")
    assert cmp_sig(S(3, (1, 0), 1), S(2, (0, 1), 2), desc) is SigCmp.GT
    assert cmp_sig(S(3, (1, 0), 1), S(5, (1, 0), 1), asc) is SigCmp.SIM
    assert cmp_sig(S(1, (9, 0), 1), S(1, (0, 0), 2), asc) is SigCmp.LT


def test_top_compares_monomial_first():
    top = ModuleOrder(R, "top")
    assert cmp_sig(S(1, (1, 0), 1), S(1, (0, 0), 2), top) is SigCmp.GT
    assert cmp_sig(S(1, (1, 0), 1), S(1, (1, 0), 2), top) is SigCmp.LT


def test_mul_sig():
    assert mul_sig(Term(3, (1, 0)), S(1, (0, 0), 1)) == S(3, (1, 0), 1)
    s = S(4, (1, 1), 2)
    assert mul_sig(Term(1, (0, 0)), s) == s
    assert mul_sig(Term(-2, (0, 1)), S(3, (0, 0), 2)) == S(-6, (0, 1), 2)


def test_sig_divides():
    assert sig_divides(S(2, (1, 0), 1), S(6, (2, 1), 1)) == Term(3, (1, 1))
    assert sig_divides(S(2, (1, 0), 1), S(3, (2, 0), 1)) is None
    assert sig_divides(S(2, (1, 0), 1), S(2, (1, 0), 2)) is None
    s = S(5, (1, 2), 1)
    assert sig_divides(s, s) == Term(1, (0, 0))


def test_add_same_class():
    assert add_sig_same_class(S(3, (1, 0), 1), S(5, (1, 0), 1)) == S(8, (1, 0), 1)
    assert add_sig_same_class(S(3, (1, 0), 1), S(-3, (1, 0), 1)) is None
    assert add_sig_same_class(S(-1, (1, 0), 1), S(4, (1, 0), 1)) == S(3, (1, 0), 1)
    with pytest.raises(ValueError):
        add_sig_same_class(S(1, (1, 0), 1), S(1, (0, 1), 1))


@given(sigs, sigs, sigs, module_orders)
def test_cmp_sig_order_properties(s, t, u, order):
    st_, tu = cmp_sig(s, t, order), cmp_sig(t, u, order)
    assert cmp_sig(t, s, order).value == -st_.value
    assert (st_ is SigCmp.SIM) == ((s.mono, s.index) == (t.mono, t.index))
    if st_.value <= 0 and tu.value <= 0:
        assert cmp_sig(s, u, order).value <= 0
    if st_ is SigCmp.SIM and cmp_sig(s, u, order) is SigCmp.LT:
        assert cmp_sig(t, u, order) is SigCmp.LT


@given(sigs, sigs)
def test_sig_divides_quotient(s, t):
    q = sig_divides(s, t)
    if q is not None:
        assert mul_sig(q, s) == t


def test_format_sig():
    assert format_sig(S(-6, (0, 1), 2), R) == "-6*y*e[2]"
    assert format_sig(S(1, (0, 0), 1), R) == "1*e[1]"
