"""Exact coefficient domains: worked examples and ring-axiom properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinbott.config import CapExceededError, Caps
from spinbott.rings import (Cyclotomic, DescentError, GaloisActionError,
                            NotAUnitError, RingMismatchError, TruncatedPoly,
                            cyclotomic_descend, cyclotomic_mul, cyclotomic_polynomial,
                            euler_phi, format_cyclotomic, format_truncated,
                            galois_act, parse_cyclotomic, parse_truncated,
                            trunc_invert, trunc_mul)

fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)
orders = st.sampled_from([2, 3, 4, 5, 6, 7, 8, 9, 10, 12])


@st.composite
def cyclotomics(draw, order=None):
    k = order if order is not None else draw(orders)
    coeffs = draw(st.lists(fractions, min_size=euler_phi(k), max_size=euler_phi(k)))
    return Cyclotomic(k, coeffs)


@st.composite
def truncateds(draw, nvars=3):
    terms = draw(st.dictionaries(st.integers(0, (1 << nvars) - 1), fractions, max_size=6))
    return TruncatedPoly(nvars, terms)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert euler_phi(12) == 4


def test_cyclotomic_mul_examples():
    w3 = Cyclotomic.zeta(3)
    assert cyclotomic_mul(w3, w3) == Cyclotomic(3, [-1, -1])
    w4 = Cyclotomic.zeta(4)
    assert cyclotomic_mul(w4, w4) == -1
    one = Cyclotomic.from_const(3, 1)
    assert (one - w3) * (one - w3 * w3) == 3


def test_cyclotomic_order_mismatch():
    with pytest.raises(RingMismatchError):
        cyclotomic_mul(Cyclotomic.zeta(3), Cyclotomic.zeta(4))


def test_galois_examples():
    a = Cyclotomic(3, [2, 1])  # 2 + w
    assert galois_act(a, 2) == Cyclotomic(3, [1, -1])  # 1 - w
    assert galois_act(a, 1) == a
    assert galois_act(Cyclotomic.from_const(3, 3), 2) == 3
    with pytest.raises(GaloisActionError):
        galois_act(Cyclotomic.zeta(6), 3)


def test_descend_examples():
    w = Cyclotomic.zeta(3)
    assert cyclotomic_descend(w * (-3) * w * w) == -3
    assert cyclotomic_descend(Cyclotomic.from_const(5, 5)) == 5
    with pytest.raises(DescentError) as err:
        cyclotomic_descend(w)
    assert err.value.violating == 2


@given(cyclotomics(order=5), st.integers(1, 20), st.integers(1, 20))
@settings(max_examples=60)
def test_galois_composition(a, j1, j2):
    from math import gcd
    if gcd(j1, 5) != 1 or gcd(j2, 5) != 1:
        return
    assert galois_act(galois_act(a, j2), j1) == galois_act(a, (j1 * j2) % 5)


@given(st.data())
@settings(max_examples=80)
def test_descend_iff_invariant(data):
    from math import gcd
    a = data.draw(cyclotomics())
    k = a.order
    invariant = all(galois_act(a, j) == a for j in range(2, k) if gcd(j, k) == 1)
    if invariant:
        back = Cyclotomic.from_const(k, cyclotomic_descend(a))
        assert back == a
    else:
        with pytest.raises(DescentError):
            cyclotomic_descend(a)


@given(cyclotomics(order=7), cyclotomics(order=7), cyclotomics(order=7))
@settings(max_examples=50)
def test_cyclotomic_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a


def test_trunc_examples():
    one_x1 = TruncatedPoly(2, {0: 1, 1: 1})
    assert trunc_mul(one_x1, one_x1) == TruncatedPoly(2, {0: 1, 1: 2})
    one_x2 = TruncatedPoly(2, {0: 1, 2: 1})
    assert trunc_mul(one_x1, one_x2) == TruncatedPoly(2, {0: 1, 1: 1, 2: 1, 3: 1})
    x1x2 = TruncatedPoly(2, {3: 1})
    x1 = TruncatedPoly(2, {1: 1})
    assert trunc_mul(x1x2, x1) == TruncatedPoly(2, {})


def test_trunc_arity_mismatch():
    with pytest.raises(RingMismatchError):
        trunc_mul(TruncatedPoly(2, {0: 1}), TruncatedPoly(3, {0: 1}))


def test_trunc_invert_examples():
    a = TruncatedPoly(1, {0: 2, 1: 1})
    assert trunc_invert(a) == TruncatedPoly(1, {0: Fraction(1, 2), 1: Fraction(-1, 4)})
    assert trunc_invert(TruncatedPoly(1, {0: 1})) == 1
    b = TruncatedPoly(2, {0: 4, 1: 2, 2: 2, 3: 1})
    inv = trunc_invert(b)
    assert inv == TruncatedPoly(2, {0: Fraction(1, 4), 1: Fraction(-1, 8),
                                    2: Fraction(-1, 8), 3: Fraction(1, 16)})
    assert b * inv == 1


def test_trunc_invert_non_unit():
    with pytest.raises(NotAUnitError):
        trunc_invert(TruncatedPoly(2, {1: 1}))


@given(truncateds(), truncateds(), truncateds())
@settings(max_examples=50)
def test_trunc_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(truncateds())
@settings(max_examples=60)
def test_trunc_invert_roundtrip(a):
    if not a.is_unit():
        return
    assert a * trunc_invert(a) == 1


def test_caps():
    with pytest.raises(CapExceededError):
        Cyclotomic.zeta(33)
    with pytest.raises(CapExceededError):
        TruncatedPoly(9, {})
    Cyclotomic.zeta(33, caps=Caps(max_k=64))  # raised cap admits it


@given(cyclotomics())
@settings(max_examples=60)
def test_cyclotomic_text_roundtrip(a):
    assert parse_cyclotomic(format_cyclotomic(a)) == a


@given(truncateds())
@settings(max_examples=60)
def test_truncated_text_roundtrip(a):
    assert parse_truncated(format_truncated(a), a.nvars) == a


def test_parse_unreduced_literal():
    # inputs may be unreduced; storage is canonical mod the cyclotomic polynomial
    assert parse_cyclotomic("1 - 2*w + w^2@3") == Cyclotomic(3, [0, -3])
