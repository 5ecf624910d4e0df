"""Graded Clifford modules, tensor powers, both Adams routes, the reduction."""

from fractions import Fraction

import pytest

from spinbott import linalg
from spinbott.modules import (GradedModule, PresentationError, adams_bar,
                              adams_character, adams_module_report, cycle_type,
                              hermitian_bott, is_end_iso, morita_reduce,
                              opposite_form_check, opposite_module, partitions,
                              spinor_rep, sym_character, tensor_power, twist_rep)
from spinbott.quadforms import QuadraticForm, scale


def test_spinor_rep_small():
    m1 = spinor_rep(1)
    assert m1.dims == (1, 1)
    # the two generators in 2x2 form
    assert m1.gens[0] == [[0, 1], [1, 0]]
    assert m1.gens[1] == [[0, -1], [1, 0]]
    # volume element acts as +1 on evens, -1 on odds
    assert m1.volume_matrix() == linalg.diag([1, -1])


def test_spinor_rep_surjective():
    m2 = spinor_rep(2)
    assert m2.dims == (2, 2)
    assert is_end_iso(m2)


def test_graded_module_validation():
    bad = GradedModule(QuadraticForm((1, -1)), (0, 1),
                       ([[0, 1], [1, 0]], [[0, 1], [1, 0]]))
    with pytest.raises(PresentationError):
        bad.validate()  # second generator squares to +1, not -1


def test_twist_rep():
    m1 = spinor_rep(1)
    t1 = twist_rep(m1, 1)
    assert t1.gens == m1.gens
    t2 = twist_rep(m1, 2)
    assert t2.form == scale(m1.form, 2)
    for gen, q in zip(t2.gens, t2.form.diag):
        assert linalg.mat_mul(gen, gen) == linalg.mat_scale(linalg.identity(2), q)
    assert is_end_iso(t2)


def test_opposite_module():
    m1 = spinor_rep(1)
    opp = opposite_module(m1)
    assert opp.form == scale(m1.form, -1)
    opp.validate()


def test_tensor_power_invariants():
    m1 = spinor_rep(1)
    tp = tensor_power(m1, 2)
    assert tp.dim == 4
    swap = tp.adjacents[0]
    assert linalg.mat_mul(swap, swap) == linalg.identity(4)
    # graded swap fixes 00, exchanges 01/10, negates 11
    assert swap[3][3] == -1 and swap[0][0] == 1
    for j, q in enumerate(m1.form.diag):
        sq = linalg.mat_mul(tp.diag_gens[j], tp.diag_gens[j])
        assert sq == linalg.mat_scale(linalg.identity(4), 2 * q)


def test_tensor_power_braid():
    tp = tensor_power(spinor_rep(1), 3)
    s1, s2 = tp.adjacents
    lhs = linalg.mat_mul(linalg.mat_mul(s1, s2), s1)
    rhs = linalg.mat_mul(linalg.mat_mul(s2, s1), s2)
    assert lhs == rhs
    cyc = tp.cycle_matrix()
    assert linalg.mat_mul(linalg.mat_mul(cyc, cyc), cyc) == linalg.identity(8)


def test_characters():
    assert sym_character((2,), (1, 1)) == 1
    assert sym_character((1, 1), (2,)) == -1
    assert sym_character((2, 1), (1, 1, 1)) == 2
    assert sym_character((2, 1), (3,)) == -1
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert cycle_type((1, 2, 0, 3)) == (3, 1)
    # column orthogonality at the identity: sum of squared dimensions = k!
    assert sum(sym_character(lam, (1,) * 4) ** 2 for lam in partitions(4)) == 24


def test_adams_bar_dimensions():
    vcm = adams_bar(spinor_rep(1), 3)
    assert vcm.total() == 8
    assert vcm.graded_dims[1] == vcm.graded_dims[2]  # prime k: conjugate eigenmodules
    vcm2 = adams_bar(spinor_rep(1), 2)
    assert vcm2.graded_dims == ((1, 1), (1, 1))


def test_adams_character_total_dimension():
    char = adams_character(spinor_rep(1), 3)
    total = sum(p.dim * (p.graded_mult[0] + p.graded_mult[1]) for p in char.pieces)
    assert total == 8
    # psi^2 = Sym^2 - Lambda^2: trivial rep weight +1, sign weight -1
    char2 = adams_character(spinor_rep(1), 2)
    weights = {p.partition: p.char_at_cycle for p in char2.pieces}
    assert weights == {(2,): 1, (1, 1): -1}


def test_morita_examples():
    m1 = spinor_rep(1)
    u = m1.volume_matrix()
    r = morita_reduce(m1.grading, u, m1)
    assert r.multiplicity == 1 and int(r) == 1

    double = GradedModule(m1.form, m1.grading * 2,
                          tuple([[g[r % 2][c % 2] if (r // 2 == c // 2) else 0
                                  for c in range(4)] for r in range(4)]
                                for g in m1.gens))
    r2 = morita_reduce(double.grading, double.volume_matrix(), m1)
    assert r2.multiplicity == 2

    tp = tensor_power(m1, 2)
    r3 = morita_reduce(tp.grading, tp.u_matrix(), twist_rep(m1, 2))
    assert r3.multiplicity == m1.dim  # dimension count: 4 = mult * 2


def test_morita_mismatch():
    m1 = spinor_rep(1)
    with pytest.raises(PresentationError):
        morita_reduce((0, 0, 1), linalg.diag([1, 1, -1]), m1)


@pytest.mark.parametrize("m,k", [(1, 2), (1, 3), (2, 2), (3, 2)])
def test_hermitian_bott_values(m, k):
    assert hermitian_bott(m, k) == k ** m


@pytest.mark.parametrize("m,k", [(1, 2), (1, 3), (2, 2)])
def test_opposite_form(m, k):
    assert opposite_form_check(m, k)


def test_multiplicativity():
    assert hermitian_bott(2, 2) == hermitian_bott(1, 2) * hermitian_bott(1, 2)


def test_adams_module_report_shape():
    rep = adams_module_report(1, 3)
    assert set(rep) == {"m", "k", "eigen_dims", "psi_bar", "psi_char",
                        "rho_k", "expected"}
    assert rep["psi_bar"] == rep["psi_char"]
    assert rep["rho_k"] == rep["expected"] == "3"


def test_twist_squares_on_random_vectors():
    import random
    rng = random.Random(7)
    m2 = spinor_rep(2)
    t3 = twist_rep(m2, 3)
    for _ in range(10):
        coords = [Fraction(rng.randint(-2, 2)) for _ in range(4)]
        fv = linalg.zeros(m2.dim)
        for c, gen in zip(coords, t3.gens):
            fv = linalg.mat_add(fv, linalg.mat_scale(gen, c))
        qv = sum(c * c * q for c, q in zip(coords, m2.form.diag))
        assert linalg.mat_mul(fv, fv) == linalg.mat_scale(linalg.identity(m2.dim), 3 * qv)


def test_prime_reduction_to_two_eigenmodules():
    # for prime k the weighted sum collapses to (first) - (second) eigenmodule
    for m, k in ((1, 3), (1, 2)):
        rep = adams_module_report(m, k)
        dims = rep["eigen_dims"]
        for block in (0, 1):
            reduced = dims[0][block] - dims[1][block]
            assert rep["psi_bar"][block] == reduced


def test_adams_agreement_full_grid():
    # completes the {2,3} x {1,2} grid beyond the acceptance triples
    rep = adams_module_report(2, 3)
    assert rep["psi_bar"] == rep["psi_char"]
    assert rep["rho_k"] == rep["expected"] == "9"
    dims = rep["eigen_dims"]
    assert dims[1] == dims[2]
    assert sum(d0 + d1 for d0, d1 in dims) == 64
