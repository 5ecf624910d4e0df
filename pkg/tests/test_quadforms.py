"""Quadratic-form invariants: worked examples and number-theoretic properties."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinbott import linalg
from spinbott.quadforms import (INF, BWTriple, DegenerateFormError,
                                IncompleteScanError, InvalidPlaceError,
                                QuadraticForm, bw_class, diagonalize, discriminant,
                                format_form, hasse_witt, hilbert_symbol, hyperbolic,
                                is_orientable, parse_form, scale, square_free_part)

small_nonzero = st.fractions(min_value=-6, max_value=6, max_denominator=4).filter(bool)
small_places = st.sampled_from([2, 3, 5, 7, 11, INF])


def test_form_construction():
    q = QuadraticForm((1, Fraction(-2, 3)))
    assert q.rank == 2
    with pytest.raises(DegenerateFormError):
        QuadraticForm((1, 0))


def test_hyperbolic_and_scale():
    assert hyperbolic(1).diag == (1, -1)
    assert hyperbolic(2).diag == (1, -1, 1, -1)
    assert square_free_part(discriminant(hyperbolic(3))) == -1
    assert scale(hyperbolic(1), 3).diag == (3, -3)
    assert scale(QuadraticForm((1, 1)), -1).diag == (-1, -1)
    with pytest.raises(DegenerateFormError):
        scale(hyperbolic(1), 0)


def test_diagonalize_examples():
    half = Fraction(1, 2)
    form, basis = diagonalize([[0, half], [half, 0]], want_basis=True)
    assert sorted(square_free_part(a) for a in form.diag) == [-1, 1]
    gram = [[0, half], [half, 0]]
    check = linalg.mat_mul(linalg.transpose(basis), linalg.mat_mul(gram, basis))
    assert check == linalg.diag(list(form.diag))

    assert diagonalize([[1, 0], [0, 1]]).diag == (1, 1)
    assert diagonalize([[2, 1], [1, 2]]).diag == (2, Fraction(3, 2))
    with pytest.raises(DegenerateFormError):
        diagonalize([[1, 1], [1, 1]])


def test_hilbert_symbol_examples():
    assert hilbert_symbol(1, 7, 3) == 1
    assert hilbert_symbol(1, -5, 2) == 1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, -1, INF) == -1
    assert hilbert_symbol(2, 3, 3) == -1
    with pytest.raises(InvalidPlaceError):
        hilbert_symbol(1, 1, 4)


def test_hasse_witt_examples():
    assert all(hasse_witt(hyperbolic(1), p) == 1 for p in (2, 3, 5, INF))
    q = QuadraticForm((-1, -1))
    assert hasse_witt(q, 2) == -1
    assert hasse_witt(q, 3) == 1


def test_bw_class_examples():
    assert bw_class(hyperbolic(1), 10) == BWTriple(0, -1, ())
    assert bw_class(QuadraticForm((1,)), 10) == BWTriple(1, 1, ())
    assert bw_class(QuadraticForm((-1, -1)), 10) == BWTriple(0, 1, (2, INF))
    with pytest.raises(IncompleteScanError):
        bw_class(QuadraticForm((Fraction(1, 13), 1)), 7)


def test_bw_even_minus_count():
    rng = random.Random(5)
    for _ in range(25):
        q = QuadraticForm(tuple(rng.choice([1, -1, 2, -3, 5, -6]) for _ in range(3)))
        assert len(bw_class(q, 50).hasse_minus) % 2 == 0  # product formula


def test_orientability():
    for m in (1, 2, 3):
        ok, s = is_orientable(hyperbolic(m))
        assert ok and s == 1
    assert is_orientable(QuadraticForm((1, 1))) == (False, None)
    assert is_orientable(QuadraticForm((1,))) == (False, None)
    ok, s = is_orientable(QuadraticForm((2, -2)))
    assert ok and s == Fraction(1, 2)
    d = Fraction(-1) * 2 * -2
    assert s * s * d == 1


@given(small_nonzero, small_nonzero, small_places)
@settings(max_examples=100)
def test_hilbert_symmetry(a, b, p):
    assert hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p)


@given(small_nonzero, small_nonzero, small_nonzero, small_places)
@settings(max_examples=100)
def test_hilbert_bimultiplicative(a1, a2, b, p):
    assert (hilbert_symbol(a1 * a2, b, p)
            == hilbert_symbol(a1, b, p) * hilbert_symbol(a2, b, p))


@given(small_nonzero, small_nonzero)
@settings(max_examples=100)
def test_hilbert_product_formula(a, b):
    # numerators of value-bounded fractions reach 24, so scan primes to 23
    places = [2, 3, 5, 7, 11, 13, 17, 19, 23, INF]
    prod = 1
    for p in places:
        prod *= hilbert_symbol(a, b, p)
    assert prod == 1


def test_invariance_under_congruence():
    rng = random.Random(11)
    places = [2, 3, 5, 7, INF]
    for _ in range(15):
        q = QuadraticForm(tuple(rng.choice([1, -1, 2, -2, 3]) for _ in range(3)))
        while True:
            m = [[Fraction(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
            if linalg.det(m) != 0:
                break
        gram = linalg.mat_mul(linalg.transpose(m),
                              linalg.mat_mul(linalg.diag(list(q.diag)), m))
        q2, basis = diagonalize(gram, want_basis=True)
        check = linalg.mat_mul(linalg.transpose(basis), linalg.mat_mul(gram, basis))
        assert check == linalg.diag(list(q2.diag))
        assert square_free_part(discriminant(q2)) == square_free_part(discriminant(q))
        for p in places:
            assert hasse_witt(q2, p) == hasse_witt(q, p)


@given(st.lists(small_nonzero, min_size=1, max_size=4), small_nonzero)
@settings(max_examples=60)
def test_orientable_square_scaling(diag, c):
    q = QuadraticForm(tuple(diag))
    assert is_orientable(q)[0] == is_orientable(scale(q, c * c))[0]


def test_parse_format_roundtrip():
    q = parse_form("1,-1,2/3")
    assert q.diag == (1, -1, Fraction(2, 3))
    assert parse_form(format_form(q)) == q
