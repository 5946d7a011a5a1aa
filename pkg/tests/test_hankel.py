from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcarlitz.bernoulli import GeneralParams, beta_numbers, legendre_moment_qz
from qcarlitz.hankel import (
    HankelSpec,
    closed_form_shift,
    closed_form_z,
    determinant,
    general_det_closed_form,
    general_moment_matrix,
    hankel_det,
    pn_at_zero,
    pn_at_zero_closed,
    product_formula,
    shifted_det_formula,
)
from qcarlitz.orthopoly import hahn_recurrence, moments_from_recurrence
from qcarlitz.ratfunc import FieldQ, q, z


def leibniz(rows):
    # permutation expansion, the independent oracle for small matrices
    from itertools import permutations

    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=150)
@given(matrices)
def test_bareiss_matches_leibniz(rows):
    fracs = [[Fraction(v) for v in r] for r in rows]
    assert determinant(fracs) == leibniz(fracs)


def test_bareiss_needs_pivoting():
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[0, 0], [1, 2]]) == 0
    assert determinant([]) == 1


def test_symbolic_determinant():
    rows = [[q, 1, 0], [1, q, 1], [0, 1, q]]
    assert determinant(rows) == leibniz(rows)
    zrows = [[z, q], [1, z + 1]]
    assert determinant(zrows) == z * (z + 1) - q


def test_hankel_spec_validation():
    with pytest.raises(ValueError):
        HankelSpec([1, 2], 2, 0)
    with pytest.raises(ValueError):
        HankelSpec([1, 2, 3], -1)
    assert HankelSpec([1, 2, 3], 2).matrix() == [[1, 2], [2, 3]]
    assert HankelSpec([1, 2, 3, 4], 2, shift=1).matrix() == [[2, 3], [3, 4]]


@pytest.mark.parametrize("k", range(4))
def test_closed_forms(k):
    betas = beta_numbers(2 * 6 + 3)
    for n in range(7):
        assert hankel_det(betas, n, k) == closed_form_shift(k, n)


def test_small_closed_values():
    assert closed_form_shift(0, 2) == -1 / ((q + 1) ** 2 * (q**2 + q + 1))
    assert closed_form_shift(0, 0) == 1
    with pytest.raises(ValueError):
        closed_form_shift(4, 2)


def test_shift_four_is_computable():
    betas = beta_numbers(6)
    value = hankel_det(betas, 2, 4)
    assert value == betas[4] * betas[6] - betas[5] ** 2


def test_z_case():
    L = [legendre_moment_qz(m) for m in range(7)]
    for n in range(5):
        assert hankel_det(L, n, 0) == closed_form_z(n)


@pytest.mark.parametrize("c,d,shift", [(0, 0, 0), (0, 1, 1), (1, 1, 2)])
def test_moment_determinant_is_product_of_b(c, d, shift):
    rec = hahn_recurrence(c, d)
    mu = moments_from_recurrence(rec, 11)
    for n in range(6):
        assert hankel_det(mu, n, 0) == product_formula(rec, n)
        assert hankel_det(mu, n, 1) == shifted_det_formula(rec, n)
        assert pn_at_zero(rec, n) == pn_at_zero_closed(shift, n)


def test_pn_at_zero_closed_rejects_shift():
    with pytest.raises(ValueError):
        pn_at_zero_closed(3, 1)


@pytest.mark.parametrize("P", [GeneralParams(1, 1, 0, 0), GeneralParams(2, 1, 1, 0), GeneralParams(2, 2, 1, 1)], ids=str)
def test_general_det(P):
    for n in range(4):
        assert determinant(general_moment_matrix(P, n)) == general_det_closed_form(P, n)
