"""q-Bernoulli-Carlitz numbers, polynomials and the moment functional Psi.

``Psi`` is the linear form on polynomials in x with ``Psi(x**n) = beta_n``.
Everything else in this module is built from it: the q-Bernoulli
polynomials, their integral means (the big q-Legendre moments) and the
four-parameter moment family with its normalization constant.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .qcombinat import asc, desc, qbinom, qfact, qint
from .ratfunc import FieldQ, FieldQZ, Poly, Series, q, qpow

__all__ = [
    "GeneralParams",
    "beta_number",
    "beta_numbers",
    "defining_residual",
    "psi",
    "psi_qbase_closed",
    "psi_qbase_product_closed",
    "beta_poly",
    "beta_poly_closed",
    "ogf_truncation",
    "shifted_ogf",
    "functional_residual_ogf",
    "functional_residual_egf",
    "jackson_qintegral",
    "legendre_moment",
    "legendre_moment_closed",
    "legendre_moment_qz",
    "unnormalized_moment",
    "moment_general",
    "normalization_constant",
]


class _BetaCache:
    """Memo of beta_0..beta_n, filled in order under a lock."""

    def __init__(self):
        self._values: list[FieldQ] = [FieldQ(1)]
        self._lock = threading.Lock()

    def get(self, n: int) -> FieldQ:
        if n < len(self._values):
            return self._values[n]
        with self._lock:
            vals = self._values
            while len(vals) <= n:
                m = len(vals)
                rhs = FieldQ(1 if m == 1 else 0)
                for k in range(m):
                    rhs = rhs - comb(m, k) * qpow(k + 1) * vals[k]
                vals.append(rhs / (qpow(m + 1) - 1))
            return vals[n]


_BETA = _BetaCache()


def beta_number(n: int) -> FieldQ:
    """The q-Bernoulli-Carlitz number beta_n.

    Solved from q * sum_k binom(n,k) q**k beta_k - beta_n = [q-1, 1, 0, 0, ...][n].
    """
    if n < 0:
        raise ValueError("beta_n needs n >= 0")
    return _BETA.get(n)


def beta_numbers(n_max: int) -> list[FieldQ]:
    return [beta_number(n) for n in range(n_max + 1)]


def defining_residual(n: int) -> FieldQ:
    """Left side of the defining relation at index n (should be q-1, 1, 0, ...)."""
    total = FieldQ(0)
    for k in range(n + 1):
        total = total + comb(n, k) * qpow(k) * beta_number(k)
    return q * total - beta_number(n)


def psi(p: Poly):
    """Apply Psi coefficient-wise: sum_n c_n beta_n."""
    total = FieldQ(0)
    for n, c in enumerate(p.coeffs):
        if c != 0:
            total = c * beta_number(n) + total
    return total


def _check_index(i: int, d: int):
    if not 0 <= i <= d:
        raise ValueError(f"need 0 <= i <= d, got i={i}, d={d}")


def psi_qbase_closed(i: int, d: int) -> FieldQ:
    """Closed form of Psi(qbase(i, d))."""
    _check_index(i, d)
    m = d - i
    return (-1) ** m * qpow(-comb(m, 2)) / (qint(d + 1) * qbinom(d, i))


def psi_qbase_product_closed(i: int, d: int, j: int, e: int) -> FieldQ:
    """Closed form of Psi(qbase(i, d) * qbase(j, e))."""
    _check_index(i, d)
    _check_index(j, e)
    m, l = d - i, e - j
    expo = -comb(m, 2) + m * l - comb(l, 2)
    return (-1) ** (m + l) * qpow(expo) / (qint(d + e + 1) * qbinom(d + e, m + j))


def beta_poly(n: int) -> Poly:
    """beta_n(z) = Psi((z + (z(q-1) + 1) x)**n), a polynomial in z over Q(q)."""
    zpoly = Poly([0, 1], "z")
    slope = Poly([1, q - 1], "z")
    total = Poly((), "z")
    for k in range(n + 1):
        total = total + (zpoly ** (n - k)) * (slope**k) * (comb(n, k) * beta_number(k))
    return total


def beta_poly_closed(n: int) -> Poly:
    """Explicit sum (q-1)**-n sum_k binom(n,k) (-1)**(n-k) (k+1)/[k+1]_q (1+(q-1)z)**k."""
    c = Poly([1, q - 1], "z")
    total = Poly((), "z")
    for k in range(n + 1):
        total = total + c**k * ((-1) ** (n - k) * comb(n, k) * (k + 1) / qint(k + 1))
    return total * (1 / (q - 1) ** n)


def ogf_truncation(N: int) -> Series:
    return Series(beta_numbers(N - 1), N)


def shifted_ogf(shift: int, N: int) -> Series:
    """sum_n beta_{n+shift} / beta_shift x**n, truncated at order N."""
    base = beta_number(shift)
    return Series([beta_number(n + shift) / base for n in range(N)], N)


def functional_residual_ogf(N: int) -> Series:
    """(q/(1-x)) B(qx/(1-x)) - B(x) for the truncated ordinary generating series."""
    if N < 1:
        raise ValueError("order must be >= 1")
    B = ogf_truncation(N)
    one_minus_x = Series([1, -1], N)
    geom = one_minus_x.reciprocal()
    inner = Series.x(N) * geom * q
    return geom * q * B.substitute(inner) - B


def functional_residual_egf(N: int) -> Series:
    """q e^x B(qx) - B(x) with B the exponential generating series."""
    if N < 1:
        raise ValueError("order must be >= 1")
    B = Series([beta_number(n) / factorial(n) for n in range(N)], N)
    Bq = Series([beta_number(n) * qpow(n) / factorial(n) for n in range(N)], N)
    exp = Series([Fraction(1, factorial(n)) for n in range(N)], N)
    return exp * Bq * q - B


def jackson_qintegral(p: Poly, a, b):
    """Jackson q-integral of a polynomial from a to b.

    On monomials: integral of t**m d_q t = (b**(m+1) - a**(m+1)) / [m+1]_q.
    """
    total = FieldQ(0)
    for m, c in enumerate(p.coeffs):
        if c == 0:
            continue
        total = total + c * (b ** (m + 1) - a ** (m + 1)) / qint(m + 1)
    return total


def legendre_moment(n: int) -> Poly:
    """(1/z) * integral_0^z beta_n(y) dy, a polynomial in z."""
    bp = beta_poly(n)
    return Poly([c / (k + 1) for k, c in enumerate(bp.coeffs)], "z")


def legendre_moment_closed(n: int) -> Poly:
    """(q-1)**-n sum_k binom(n,k) (-1)**(n-k) [k+1]_c / [k+1]_q with c = 1 + (q-1) z."""
    c = Poly([1, q - 1], "z")
    total = Poly((), "z")
    for k in range(n + 1):
        ck = sum((c**j for j in range(k + 1)), Poly((), "z"))
        total = total + ck * ((-1) ** (n - k) * comb(n, k) / qint(k + 1))
    return total * (1 / (q - 1) ** n)


def legendre_moment_qz(n: int) -> FieldQZ:
    return FieldQZ.from_poly(legendre_moment(n))


@dataclass(frozen=True)
class GeneralParams:
    """Parameters (a, b, c, d) of the four-parameter family; a, b >= 1 and c, d >= 0."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or self.c < 0 or self.d < 0:
            raise ValueError(f"invalid parameters {self}")

    def swap_ab(self) -> "GeneralParams":
        return GeneralParams(self.b, self.a, self.c, self.d)

    def swap_cd(self) -> "GeneralParams":
        return GeneralParams(self.a, self.b, self.d, self.c)

    def __str__(self):
        return f"({self.a},{self.b},{self.c},{self.d})"


def weight_polynomial(P: GeneralParams) -> tuple[int, Poly]:
    """Split x**2 Asc(a-1) Asc(b-1) Desc(c-1) Desc(d-1) as (sign * x**e) * poly.

    Each Desc(x, -1) = -1/x lowers the x-power by one and flips the sign.
    Returns ``(e, signed_poly)`` so that the weight equals x**e * signed_poly.
    """
    sign, expo = 1, 2
    poly = asc(P.a - 1) * asc(P.b - 1)
    for k in (P.c, P.d):
        if k == 0:
            sign, expo = -sign, expo - 1
        else:
            poly = poly * desc(k - 1)
    return expo, poly * sign


def unnormalized_moment(n: int, P: GeneralParams) -> FieldQ:
    """Psi(x**(n+2) Asc(x,a-1) Asc(x,b-1) Desc(x,c-1) Desc(x,d-1))."""
    expo, poly = weight_polynomial(P)
    return psi(poly.shift(n + expo))


def normalization_constant(P: GeneralParams) -> FieldQ:
    a, b, c, d = P.a, P.b, P.c, P.d
    return (
        qpow(c * d)
        * qfact(b + d - 1)
        * qfact(b + c - 1)
        * qfact(a + c - 1)
        * qfact(a + d - 1)
        / qfact(a + b + c + d - 1)
    )


def moment_general(n: int, P: GeneralParams) -> FieldQ:
    return unnormalized_moment(n, P) / normalization_constant(P)
