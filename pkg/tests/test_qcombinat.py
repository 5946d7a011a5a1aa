from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcarlitz.qcombinat import (
    QPochSpec,
    asc,
    desc,
    phi21_terminating,
    qbase,
    qbinom,
    qfact,
    qint,
    qpoch,
    qpoch_linear,
)
from qcarlitz.ratfunc import Poly, q, qpow
from math import comb


def test_qint_values():
    assert qint(0) == 0
    assert qint(1) == 1
    assert qint(3) == q**2 + q + 1
    assert qint(-1) == -1 / q


@given(st.integers(0, 12))
def test_qfact_at_one(n):
    import math

    assert qfact(n).eval(1) == math.factorial(n)


@settings(max_examples=40)
@given(st.integers(0, 10), st.integers(0, 10))
def test_qbinom_symmetry_and_pascal(n, m):
    m = min(m, n)
    assert qbinom(n, m) == qbinom(n, n - m)
    if 1 <= m < n:
        assert qbinom(n, m) == qbinom(n - 1, m - 1) + qpow(m) * qbinom(n - 1, m)
    assert qbinom(n, m).eval(1) == comb(n, m)


def test_qpoch_forms_agree():
    assert qpoch(QPochSpec(2, 3)) == qpoch(2, 3) == (1 - q**2) * (1 - q**3) * (1 - q**4)
    assert qpoch(5, 0) == 1
    assert qpoch(-2, 3) == 0
    with pytest.raises(ValueError):
        QPochSpec(1, -1)


@pytest.mark.parametrize("i,d", [(i, d) for d in range(5) for i in range(d + 1)])
def test_qbase_reduces_to_binomial(i, d):
    p = qbase(i, d)
    assert p.degree() == d
    for x in range(-3, 4):
        value = p.map_coeffs(lambda c: c.eval(1))(x)
        assert value == Fraction(comb_poly(i + x, d))


def comb_poly(n, d):
    out = Fraction(1)
    for t in range(d):
        out = out * (n - t) / (t + 1)
    return out


@pytest.mark.parametrize("k,a", [(0, 0), (1, 0), (2, 1), (3, 2), (4, 0)])
def test_qpoch_linear_at_integers(k, a):
    # at x = [m]_q the argument q^a(1 + (q-1)x) is q^(a+m)
    p = qpoch_linear(k, a)
    for m in range(4):
        assert p(qint(m)) == qpoch(a + m, k)


def test_asc_desc():
    assert asc(0) == Poly([1]) and desc(0) == Poly([1])
    assert desc(2)(qint(1)) == 0
    assert asc(2)(-qint(2) / qpow(2)) == 0
    with pytest.raises(ValueError):
        desc(-1)


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("top,bottom", [(1, 2), (2, 5), (3, 1), (0, 4), (-1, 2)])
def test_phi21_chu_vandermonde(n, top, bottom):
    # independent closed form: (c/b; q)_n b^n / (c; q)_n with b = q^top, c = q^bottom
    if qpoch(bottom, n) == 0:
        pytest.skip("bottom parameter hits a pole")
    expected = qpoch(bottom - top, n) * qpow(top * n) / qpoch(bottom, n)
    assert phi21_terminating(n, top, bottom) == expected


def test_phi21_rejects_negative():
    with pytest.raises(ValueError):
        phi21_terminating(-1, 1, 1)
