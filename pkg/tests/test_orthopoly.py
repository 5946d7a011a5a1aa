import pytest

from qcarlitz.bernoulli import GeneralParams, beta_number, legendre_moment_qz
from qcarlitz.orthopoly import (
    Hahn,
    Jacobi,
    Legendre,
    Recurrence,
    affine_moments,
    affine_transform,
    generate_polys,
    hahn_raw_recurrence,
    hahn_recurrence,
    hypergeometric_Pn,
    jacobi_b_closed,
    jacobi_recurrence,
    legendre_raw_recurrence,
    legendre_recurrence,
    moment_functional,
    moments_from_recurrence,
    recu00,
    recu01,
    recu11,
    recurrence_for,
)
from qcarlitz.ratfunc import FieldQ, Poly, q

SMALL = [GeneralParams(a, b, c, d) for a in (1, 2) for b in (1, 2) for c in (0, 1) for d in (0, 1)]


def brute_moments(rec, N):
    # oracle: mu_n is the constant term of x^n in the p-basis, via exact polynomial division
    polys = generate_polys(rec, N + 1)
    out = []
    for n in range(N):
        rem = Poly.monomial(n, rec.field.coerce(1))
        for k in range(n, 0, -1):
            c = rem[k]
            rem = rem - polys[k] * c
        out.append(rem[0])
    return out


def test_moments_by_iteration_match_basis_change():
    for rec in (hahn_recurrence(0, 0), hahn_recurrence(1, 1), jacobi_recurrence(SMALL[5])):
        assert moments_from_recurrence(rec, 8) == brute_moments(rec, 8)


def test_chebyshev_like_toy():
    # a_n = 0, b_n = 1: moments are Catalan numbers at even indices
    rec = Recurrence(lambda n: 0, lambda n: 1)
    mu = moments_from_recurrence(rec, 9)
    assert [mu[2 * k].eval(0) for k in range(5)] == [1, 1, 2, 5, 14]
    assert all(mu[2 * k + 1] == 0 for k in range(4))


@pytest.mark.parametrize("c,d,shift", [(0, 0, 0), (0, 1, 1), (1, 1, 2)])
def test_hahn_moments(c, d, shift):
    mu = moments_from_recurrence(hahn_recurrence(c, d), 12)
    assert mu == [beta_number(n + shift) / beta_number(shift) for n in range(12)]


@pytest.mark.parametrize("closed,cd", [(recu00, (0, 0)), (recu01, (0, 1)), (recu11, (1, 1))])
def test_specialized_closed_forms(closed, cd):
    general, special = hahn_recurrence(*cd), closed()
    for n in range(10):
        assert special.a(n) == general.a(n)
        if n:
            assert special.b(n) == general.b(n)


def test_affine_transform_moves_moments():
    raw = hahn_raw_recurrence(0, 1)
    A, B = q * (q - 1), q
    nu = moments_from_recurrence(raw, 8)
    assert affine_moments(nu, A, B) == moments_from_recurrence(affine_transform(raw, A, B), 8)


def test_legendre_closed_recurrence_matches_transform():
    closed = legendre_recurrence()
    moved = affine_transform(legendre_raw_recurrence(), q * (q - 1), q)
    for n in range(6):
        assert closed.a(n) == moved.a(n)
        if n:
            assert closed.b(n) == moved.b(n)


def test_legendre_moments_and_z_zero():
    mu = moments_from_recurrence(legendre_recurrence(), 8)
    for n in range(8):
        assert mu[n] == legendre_moment_qz(n)
        assert mu[n].subs_z(0) == beta_number(n)


@pytest.mark.parametrize("P", SMALL, ids=str)
def test_jacobi_b_closed(P):
    rec = jacobi_recurrence(P)
    for n in range(1, 6):
        assert rec.b(n) == jacobi_b_closed(P, n)


@pytest.mark.parametrize("c,d", [(0, 0), (0, 1), (1, 1)])
def test_hypergeometric_monic(c, d):
    ps = generate_polys(hahn_recurrence(c, d), 7)
    for n in range(7):
        P = hypergeometric_Pn(Hahn(c, d), n)
        assert P.degree() == n
        assert P.monic() == ps[n]


def test_legendre_hypergeometric_monic():
    ps = generate_polys(legendre_recurrence(), 5)
    for n in range(5):
        assert hypergeometric_Pn(Legendre(), n).monic() == ps[n]


@pytest.mark.parametrize("spec", [Hahn(0, 0), Hahn(1, 1), Legendre()] + [Jacobi(P) for P in SMALL[:6]], ids=repr)
def test_orthogonality_against_lower_powers(spec):
    form = moment_functional(spec)
    for n in range(1, 5):
        P = hypergeometric_Pn(spec, n)
        for k in range(n):
            assert form(P * Poly.monomial(k, 1)) == 0


def test_favard_positive_orthogonality_norms():
    # Psi(p_n^2) = b_1 ... b_n
    rec = hahn_recurrence(0, 1)
    form = moment_functional(Hahn(0, 1))
    ps = generate_polys(rec, 5)
    prod = FieldQ(1)
    for n in range(5):
        if n:
            prod = prod * rec.b(n)
        assert form(ps[n] * ps[n]) == prod


def test_recurrence_for_dispatch():
    assert recurrence_for(Hahn(0, 1)).a(3) == hahn_recurrence(0, 1).a(3)
    with pytest.raises(TypeError):
        recurrence_for("nope")
    with pytest.raises(ValueError):
        Hahn(-1, 0)


def test_b_index_checked():
    with pytest.raises(ValueError):
        hahn_recurrence(0, 0).b(0)
