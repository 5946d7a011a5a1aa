from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcarlitz.bernoulli import (
    GeneralParams,
    beta_number,
    beta_numbers,
    beta_poly,
    beta_poly_closed,
    defining_residual,
    jackson_qintegral,
    legendre_moment,
    legendre_moment_closed,
    moment_general,
    normalization_constant,
    psi,
    shifted_ogf,
    unnormalized_moment,
    weight_polynomial,
)
from qcarlitz.qcombinat import qint
from qcarlitz.ratfunc import FieldQ, Poly, Series, q
from qcarlitz.verify import classical_bernoulli


def test_first_values():
    assert beta_number(0) == 1
    assert beta_number(1) == -1 / (q + 1)
    assert beta_number(2) == q / ((q + 1) * (q**2 + q + 1))


def test_classical_oracle_values():
    B = classical_bernoulli(8)
    assert B[:5] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    assert B[8] == Fraction(-1, 30)


@pytest.mark.parametrize("n", range(0, 15))
def test_q_equals_one(n):
    assert beta_number(n).eval(1) == classical_bernoulli(n)[n]


def test_odd_betas_are_not_zero():
    # unlike the classical case, odd indices survive for generic q
    assert beta_number(3) != 0
    assert beta_number(5) != 0


def test_negative_index():
    with pytest.raises(ValueError):
        beta_number(-1)


def test_defining_residual():
    assert defining_residual(0) == q - 1
    assert defining_residual(1) == 1
    assert all(defining_residual(n) == 0 for n in range(2, 12))


def test_psi_is_linear():
    a = Poly([1, 2, q])
    b = Poly([q, 0, 0, 3])
    assert psi(a + b) == psi(a) + psi(b)
    assert psi(a * q) == psi(a) * q


def test_shifted_ogf_factorization():
    # sum beta_n x^n = 1 + beta_1 x sum beta_{n+1}/beta_1 x^n; the factor x is needed
    N = 10
    B = shifted_ogf(0, N)
    B1 = shifted_ogf(1, N)
    assert B == Series.constant(1, N) + Series.x(N) * B1 * beta_number(1)
    assert B != Series.constant(1, N) + B1 * beta_number(1)


@pytest.mark.parametrize("n", range(0, 7))
def test_beta_poly_closed_form(n):
    assert beta_poly(n) == beta_poly_closed(n)


def test_beta_poly_at_zero():
    for n in range(6):
        assert beta_poly(n)(0) == beta_number(n)


@pytest.mark.parametrize("n", range(0, 8))
def test_legendre_moment_closed(n):
    assert legendre_moment(n) == legendre_moment_closed(n)


def _jackson_float(coeffs, b, qv, terms=200):
    # sum_k (1-q) b q^k f(b q^k), truncated
    f = lambda t: sum(float(c) * t**m for m, c in enumerate(coeffs))
    return sum((1 - qv) * b * qv**k * f(b * qv**k) for k in range(terms))


@pytest.mark.parametrize("coeffs", [[1], [0, 1], [2, -1, 3], [0, 0, 0, 1]])
@pytest.mark.parametrize("b", [1, 2, Fraction(-3, 2)])
def test_jackson_integral_against_geometric_sum(coeffs, b):
    qv = Fraction(1, 2)
    exact = jackson_qintegral(Poly(coeffs), 0, b).eval(qv)
    assert float(exact) == pytest.approx(_jackson_float(coeffs, float(b), float(qv)), rel=1e-12)


def test_jackson_monomial():
    assert jackson_qintegral(Poly([0, 0, 1]), 0, q) == q**3 / qint(3)


def test_general_params_validation():
    with pytest.raises(ValueError):
        GeneralParams(0, 1, 0, 0)
    with pytest.raises(ValueError):
        GeneralParams(1, 1, -1, 0)
    P = GeneralParams(1, 2, 0, 1)
    assert P.swap_ab() == GeneralParams(2, 1, 0, 1)
    assert P.swap_cd() == GeneralParams(1, 2, 1, 0)


def test_weight_with_desc_minus_one():
    # d = 0 contributes Desc(x, -1) = -1/x, absorbed into the power of x
    expo, w = weight_polynomial(GeneralParams(1, 1, 1, 0))
    assert expo == 1
    assert w == Poly([-1])


params = st.builds(
    GeneralParams,
    st.integers(1, 2),
    st.integers(1, 2),
    st.integers(0, 2),
    st.integers(0, 2),
)


@settings(max_examples=25, deadline=None)
@given(params, st.integers(0, 4))
def test_general_moment_symmetry(P, n):
    m = moment_general(n, P)
    assert m == moment_general(n, P.swap_ab())
    assert m == moment_general(n, P.swap_cd())


@settings(max_examples=20, deadline=None)
@given(params)
def test_general_moment_normalized(P):
    assert moment_general(0, P) == 1
    assert normalization_constant(P) == unnormalized_moment(0, P)


def test_normalization_specializations():
    assert normalization_constant(GeneralParams(1, 1, 0, 0)) == beta_number(0)
    assert normalization_constant(GeneralParams(1, 1, 0, 1)) == -beta_number(1)
    assert normalization_constant(GeneralParams(1, 1, 1, 1)) == beta_number(2)
