"""Monic orthogonal polynomial families and their three-term recurrences.

Convention throughout: p_{n+1} = (a_n + x) p_n - b_n p_{n-1}, p_{-1} = 0,
p_0 = 1.  Recurrences written with ``+ (...) p_{n-1}`` therefore
store the negated coefficient as ``b_n``.

Families (``FamilySpec``):

* ``Hahn(c, d)``: q-Hahn polynomials evaluated at q(1 + (q-1)x)
* ``Legendre()``: big q-Legendre with parameter 1 + (q-1)z, z symbolic
* ``Jacobi(P)``: big q-Jacobi evaluated at q**a (1 + (q-1)x)
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Union

from .bernoulli import (
    GeneralParams,
    legendre_moment_qz,
    normalization_constant,
    psi,
    weight_polynomial,
)
from .qcombinat import qint, qpoch, qpoch_linear
from .ratfunc import FieldQ, FieldQZ, Poly, q, qpow, z

__all__ = [
    "Recurrence",
    "Hahn",
    "Legendre",
    "Jacobi",
    "FamilySpec",
    "affine_transform",
    "affine_moments",
    "hahn_raw_recurrence",
    "hahn_recurrence",
    "recu00",
    "recu01",
    "recu11",
    "legendre_raw_recurrence",
    "legendre_recurrence",
    "jacobi_raw_recurrence",
    "jacobi_recurrence",
    "jacobi_b_closed",
    "recurrence_for",
    "generate_polys",
    "moments_from_recurrence",
    "hypergeometric_Pn",
    "monic",
    "moment_functional",
    "legendre_nu",
]


class Recurrence:
    """Coefficient sequences n -> a_n (n >= 0) and n -> b_n (n >= 1).

    ``field`` is the scalar class (``FieldQ`` or ``FieldQZ``).  Coefficient
    functions must be pure; values are memoized per instance.
    """

    def __init__(self, a: Callable[[int], object], b: Callable[[int], object], field=FieldQ, name: str = ""):
        self._a = lru_cache(maxsize=None)(a)
        self._b = lru_cache(maxsize=None)(b)
        self.field = field
        self.name = name

    def a(self, n: int):
        return self.field.coerce(self._a(n))

    def b(self, n: int):
        if n < 1:
            raise ValueError("b_n is defined for n >= 1")
        return self.field.coerce(self._b(n))

    def coefficients(self, N: int) -> tuple[list, list]:
        """[a_0..a_{N-1}] and [b_1..b_{N-1}]."""
        return [self.a(n) for n in range(N)], [self.b(n) for n in range(1, N)]

    def __repr__(self):
        return f"Recurrence({self.name or '?'}, field={self.field.__name__})"


@dataclass(frozen=True)
class Hahn:
    c: int
    d: int

    def __post_init__(self):
        if self.c < 0 or self.d < 0:
            raise ValueError("Hahn parameters must be >= 0")


@dataclass(frozen=True)
class Legendre:
    pass


@dataclass(frozen=True)
class Jacobi:
    params: GeneralParams


FamilySpec = Union[Hahn, Legendre, Jacobi]


def affine_transform(rec: Recurrence, A, B) -> Recurrence:
    """Recurrence of p_n(x) = q_n(A x + B) / A**n."""
    if A == 0:
        raise ValueError("affine change of variables needs A != 0")
    A2 = A * A
    return Recurrence(
        lambda n: (rec.a(n) + B) / A,
        lambda n: rec.b(n) / A2,
        rec.field,
        f"affine({rec.name})",
    )


def affine_moments(nu: list, A, B) -> list:
    """mu_n = A**-n sum_k binom(n,k) (-B)**(n-k) nu_k."""
    out = []
    for n in range(len(nu)):
        total = 0
        for k in range(n + 1):
            total = comb(n, k) * (-B) ** (n - k) * nu[k] + total
        out.append(total / A**n)
    return out


# -- q-Hahn ------------------------------------------------------------------


def _one_minus(e: int) -> FieldQ:
    return 1 - qpow(e)


def _hahn_AC(c: int, d: int, n: int) -> tuple[FieldQ, FieldQ]:
    A = (
        _one_minus(n + d + 1) * _one_minus(n + c + 1) * _one_minus(n + c + d + 1)
        / (_one_minus(2 * n + c + d + 1) * _one_minus(2 * n + c + d + 2))
    )
    if n == 0:
        # the (1 - q**n) factor kills C_0; its denominator may be 0/0 here
        return A, FieldQ(0)
    C = -(
        qpow(n + c + d + 1) * _one_minus(n) * _one_minus(n + c) * _one_minus(n + d)
        / (_one_minus(2 * n + c + d) * _one_minus(2 * n + c + d + 1))
    )
    return A, C


def hahn_raw_recurrence(c: int, d: int) -> Recurrence:
    """Monic q-Hahn recurrence in the original variable: a_n = A_n + C_n - 1, b_n = A_{n-1} C_n."""
    return Recurrence(
        lambda n: sum(_hahn_AC(c, d, n)) - 1,
        lambda n: _hahn_AC(c, d, n - 1)[0] * _hahn_AC(c, d, n)[1],
        FieldQ,
        f"hahn-raw({c},{d})",
    )


def hahn_recurrence(c: int, d: int) -> Recurrence:
    """Recurrence after substituting q(1 + (q-1)x) for the variable."""
    rec = affine_transform(hahn_raw_recurrence(c, d), q * (q - 1), q)
    rec.name = f"hahn({c},{d})"
    return rec


def recu00() -> Recurrence:
    return Recurrence(
        lambda n: (qint(2 * n + 1) + qint(n + 1) - 3 * qint(n)) / ((1 + qpow(n)) * (1 + qpow(n + 1))),
        lambda n: -qpow(n - 1) * qint(n) ** 6
        / (qint(2 * n - 1) * qint(2 * n) ** 2 * qint(2 * n + 1)),
        FieldQ,
        "recu00",
    )


def recu01() -> Recurrence:
    general = hahn_recurrence(0, 1)
    return Recurrence(
        general.a,
        lambda n: -qpow(n) * qint(n) ** 3 * qint(n + 1) ** 3
        / (qint(2 * n) * qint(2 * n + 1) ** 2 * qint(2 * n + 2)),
        FieldQ,
        "recu01",
    )


def recu11() -> Recurrence:
    return Recurrence(
        lambda n: (q - 1) * qint(n + 1) * qint(n + 2) / ((1 + qpow(n + 1)) * (1 + qpow(n + 2))),
        lambda n: -qpow(n + 1) * qint(n) * qint(n + 1) ** 4 * qint(n + 2)
        / (qint(2 * n + 1) * qint(2 * n + 2) ** 2 * qint(2 * n + 3)),
        FieldQ,
        "recu11",
    )


# -- big q-Legendre ----------------------------------------------------------


def _legendre_AC(n: int) -> tuple[FieldQZ, FieldQZ]:
    c = 1 + (q - 1) * z
    A = (
        _one_minus(n + 1) ** 2 * (1 - c * qpow(n + 1))
        / (_one_minus(2 * n + 1) * _one_minus(2 * n + 2))
    )
    if n == 0:
        return A, FieldQZ(0)
    C = -(
        qpow(n + 1) * _one_minus(n) ** 2 * (_one_minus(n) + (q - 1) * z)
        / (_one_minus(2 * n) * _one_minus(2 * n + 1))
    )
    return A, C


def legendre_raw_recurrence() -> Recurrence:
    return Recurrence(
        lambda n: _legendre_AC(n)[0] + _legendre_AC(n)[1] - 1,
        lambda n: _legendre_AC(n - 1)[0] * _legendre_AC(n)[1],
        FieldQZ,
        "legendre-raw",
    )


def legendre_recurrence() -> Recurrence:
    """Closed-form monic recurrence for the z-family, scalars in FieldQZ."""

    def a(n):
        return (qint(2 * n + 1) + qint(n + 1) - 3 * qint(n) - 2 * qpow(n) * z) / (
            (1 + qpow(n)) * (1 + qpow(n + 1))
        )

    def b(n):
        return -(
            qpow(n - 1) * qint(n) ** 4 * (qint(n) - z) * (qint(n) + qpow(n) * z)
            / (qint(2 * n - 1) * qint(2 * n) ** 2 * qint(2 * n + 1))
        )

    return Recurrence(a, b, FieldQZ, "legendre")


def legendre_nu(n: int) -> FieldQZ:
    """Normalized Jackson q-integral moments q**n [n+1]_c / [n+1]_q, c = 1 + (q-1)z."""
    c = 1 + (q - 1) * z
    ck = sum((c**j for j in range(n + 1)), FieldQZ(0))
    return qpow(n) * ck / qint(n + 1)


# -- big q-Jacobi ------------------------------------------------------------


def _jacobi_AC(P: GeneralParams, n: int) -> tuple[FieldQ, FieldQ]:
    a, b, c, d = P.a, P.b, P.c, P.d
    s = a + b + c + d
    A = (
        _one_minus(n + a + d) * _one_minus(n + a + c) * _one_minus(n + s - 1)
        / (_one_minus(2 * n + s - 1) * _one_minus(2 * n + s))
    )
    if n == 0:
        return A, FieldQ(0)
    C = -(
        qpow(n + 2 * a + c + d - 1) * _one_minus(n) * _one_minus(n + b + d - 1) * _one_minus(n + b + c - 1)
        / (_one_minus(2 * n + s - 2) * _one_minus(2 * n + s - 1))
    )
    return A, C


def jacobi_raw_recurrence(P: GeneralParams) -> Recurrence:
    return Recurrence(
        lambda n: sum(_jacobi_AC(P, n)) - 1,
        lambda n: _jacobi_AC(P, n - 1)[0] * _jacobi_AC(P, n)[1],
        FieldQ,
        f"jacobi-raw{P}",
    )


def jacobi_recurrence(P: GeneralParams) -> Recurrence:
    """Recurrence after substituting q**a (1 + (q-1)x) for the variable."""
    A = qpow(P.a) * (q - 1)
    rec = affine_transform(jacobi_raw_recurrence(P), A, qpow(P.a))
    rec.name = f"jacobi{P}"
    return rec


def jacobi_b_closed(P: GeneralParams, n: int) -> FieldQ:
    a, b, c, d = P.a, P.b, P.c, P.d
    s = a + b + c + d
    top = (
        qint(n) * qint(a + c + n - 1) * qint(b + c + n - 1)
        * qint(a + d + n - 1) * qint(b + d + n - 1) * qint(s + n - 2)
    )
    bottom = qint(s + 2 * n - 3) * qint(s + 2 * n - 2) ** 2 * qint(s + 2 * n - 1)
    return -qpow(n + c + d - 1) * top / bottom


def recurrence_for(spec: FamilySpec) -> Recurrence:
    if isinstance(spec, Hahn):
        return hahn_recurrence(spec.c, spec.d)
    if isinstance(spec, Legendre):
        return legendre_recurrence()
    if isinstance(spec, Jacobi):
        return jacobi_recurrence(spec.params)
    raise TypeError(f"unknown family {spec!r}")


# -- polynomials and moments -------------------------------------------------


def generate_polys(rec: Recurrence, N: int) -> list[Poly]:
    """Monic p_0 .. p_{N-1}."""
    one = rec.field.coerce(1)
    x = Poly([0, one])
    prev, cur = Poly((), "x"), Poly([one])
    out = []
    for n in range(N):
        out.append(cur)
        b = rec.b(n) if n >= 1 else 0
        prev, cur = cur, (x + rec.a(n)) * cur - prev * b
    return out


def moments_from_recurrence(rec: Recurrence, N: int) -> list:
    """mu_0 .. mu_{N-1}: iterate multiplication by x on the p-basis, read the p_0 coordinate.

    x p_k = p_{k+1} - a_k p_k + b_k p_{k-1}.
    """
    zero = rec.field.coerce(0)
    vec = [rec.field.coerce(1)]
    out = []
    for n in range(N):
        out.append(vec[0])
        if n == N - 1:
            break
        # only coordinates that can still reach p_0 matter
        keep = min(len(vec) + 1, N - n)
        new = [zero] * keep
        for k, v in enumerate(vec):
            if v == 0:
                continue
            if k + 1 < keep:
                new[k + 1] = new[k + 1] + v
            if k < keep:
                new[k] = new[k] - rec.a(k) * v
            if k >= 1:
                new[k - 1] = new[k - 1] + rec.b(k) * v
        vec = new
    return out


def hypergeometric_Pn(spec: FamilySpec, n: int) -> Poly:
    """P_n from its terminating 3phi2 sum (not monic)."""
    if isinstance(spec, Hahn):
        theta, shift = spec.c + spec.d + 1, 1

        def bottom(k):
            return qpoch(1, k) * qpoch(spec.c + 1, k) * qpoch(spec.d + 1, k)

    elif isinstance(spec, Jacobi):
        P = spec.params
        theta, shift = P.a + P.b + P.c + P.d - 1, P.a

        def bottom(k):
            return qpoch(1, k) * qpoch(P.a + P.c, k) * qpoch(P.a + P.d, k)

    elif isinstance(spec, Legendre):
        theta, shift = 1, 1
        c = 1 + (q - 1) * z

        def bottom(k):
            out = qpoch(1, k) ** 2 * FieldQZ(1)
            for i in range(k):
                out = out * (1 - qpow(i + 1) * c)
            return out

    else:
        raise TypeError(f"unknown family {spec!r}")

    total = Poly((), "x")
    for k in range(n + 1):
        top = qpoch(-n, k) * qpoch(n + theta, k) * qpow(k)
        total = total + qpoch_linear(k, shift) * (top / bottom(k))
    return total


def monic(p: Poly) -> Poly:
    return p.monic()


def moment_functional(spec: FamilySpec) -> Callable[[Poly], object]:
    """The normalized linear form whose moments are the family's moments."""
    if isinstance(spec, Legendre):

        def legendre_form(p: Poly):
            total = FieldQZ(0)
            for n, c in enumerate(p.coeffs):
                if c != 0:
                    total = total + c * legendre_moment_qz(n)
            return total

        return legendre_form
    if isinstance(spec, Hahn):
        P = GeneralParams(1, 1, spec.c, spec.d)
    elif isinstance(spec, Jacobi):
        P = spec.params
    else:
        raise TypeError(f"unknown family {spec!r}")
    expo, weight = weight_polynomial(P)
    norm = normalization_constant(P)

    def general_form(p: Poly):
        return psi((weight * p).shift(expo)) / norm

    return general_form
