"""Hankel determinants of moment sequences and their product formulas."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .bernoulli import GeneralParams, normalization_constant, unnormalized_moment
from .orthopoly import Recurrence, generate_polys
from .qcombinat import asc_value, desc_value, qfact, qint
from .ratfunc import FieldQ, FieldQZ, qpow, z

__all__ = [
    "HankelSpec",
    "determinant",
    "hankel_det",
    "product_formula",
    "qn_sequence",
    "shifted_det_formula",
    "pn_at_zero",
    "pn_at_zero_closed",
    "closed_form_shift",
    "closed_form_z",
    "general_moment_matrix",
    "general_det_closed_form",
]


@dataclass(frozen=True)
class HankelSpec:
    moments: tuple
    n: int
    shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "moments", tuple(self.moments))
        if self.n < 0 or self.shift < 0:
            raise ValueError("size and shift must be >= 0")
        if self.n and len(self.moments) < 2 * self.n - 1 + self.shift:
            raise ValueError(
                f"need {2 * self.n - 1 + self.shift} moments for n={self.n}, shift={self.shift}; "
                f"got {len(self.moments)}"
            )

    def matrix(self) -> list[list]:
        m, s = self.moments, self.shift
        return [[m[i + j + s] for j in range(self.n)] for i in range(self.n)]


def determinant(rows: Sequence[Sequence]):
    """Exact determinant by fraction-free (Bareiss) elimination with row pivoting.

    Every division is exact in the polynomial ring generated by the entries,
    which keeps z-polynomial entries polynomial all the way through.
    """
    n = len(rows)
    if n == 0:
        return FieldQ(1)
    M = [list(r) for r in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return M[k][k] * 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = pivot * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = t if prev is None else t / prev
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


def hankel_det(spec_or_moments, n: int | None = None, shift: int = 0):
    """det_{0<=i,j<n} moments[i + j + shift]."""
    spec = spec_or_moments if isinstance(spec_or_moments, HankelSpec) else HankelSpec(spec_or_moments, n, shift)
    return determinant(spec.matrix())


def product_formula(rec: Recurrence, n: int):
    """prod_{k=1}^{n-1} b_k**(n-k)."""
    out = rec.field.coerce(1)
    for k in range(1, n):
        out = out * rec.b(k) ** (n - k)
    return out


def qn_sequence(rec: Recurrence, N: int) -> list:
    """q_0 = 1, q_1 = -a_0, q_{n+1} = -a_n q_n - b_n q_{n-1}; returns q_0..q_{N-1}."""
    one = rec.field.coerce(1)
    out = [one]
    if N > 1:
        out.append(-rec.a(0))
    for n in range(1, N - 1):
        out.append(-rec.a(n) * out[n] - rec.b(n) * out[n - 1])
    return out[:N]


def shifted_det_formula(rec: Recurrence, n: int):
    """q_n * prod_{k=1}^{n-1} b_k**(n-k), the shift-1 Hankel determinant."""
    return qn_sequence(rec, n + 1)[n] * product_formula(rec, n)


def pn_at_zero(rec: Recurrence, n: int):
    return generate_polys(rec, n + 1)[n](0)


def pn_at_zero_closed(shift: int, n: int) -> FieldQ:
    """p_n(0) for the monic families with moments beta_{k+shift}/beta_shift, shift in 0..2."""
    binom = comb
    if shift == 0:
        return qpow(binom(n, 2)) * qfact(n) ** 3 / qfact(2 * n)
    if shift == 1:
        return qpow(binom(n + 1, 2)) * qfact(n) ** 2 * qfact(n + 1) / qfact(2 * n + 1)
    if shift == 2:
        return qfact(n) * qfact(n + 1) ** 2 / qfact(2 * n + 2) * ((-1) ** n + qpow(binom(n + 2, 2)))
    raise ValueError("closed p_n(0) known for shift 0, 1, 2 only")


def closed_form_shift(k: int, n: int) -> FieldQ:
    """Product formula for det beta_{i+j+k}, k in 0..3.

    The products only hold for n >= 1; n = 0 is the empty determinant.
    """
    if k not in (0, 1, 2, 3):
        raise ValueError(f"no closed form for shift {k}")
    f = qfact
    prod = FieldQ(1)
    if n == 0:
        return prod
    if k == 0:
        for i in range(1, n):
            prod = prod * f(i) ** 6 / (f(2 * i) * f(2 * i + 1))
        return (-1) ** comb(n, 2) * qpow(comb(n, 3)) * prod
    if k == 1:
        for i in range(1, n):
            prod = prod * f(i) ** 3 * f(i + 1) ** 3 / (f(2 * i + 1) * f(2 * i + 2))
        return (-1) ** comb(n + 1, 2) / qint(2) * qpow(comb(n + 1, 3)) * prod
    if k == 2:
        for i in range(1, n):
            prod = prod * f(i) * f(i + 1) ** 4 * f(i + 2) / (f(2 * i + 2) * f(2 * i + 3))
        return (-1) ** comb(n, 2) / (qint(2) * qint(3)) * qpow(comb(n + 2, 3)) * prod
    for i in range(1, n):
        prod = prod * f(i + 1) ** 3 * f(i + 2) ** 3 / (f(2 * i + 3) * f(2 * i + 4))
    extra = qpow(comb(n + 2, 2)) + (-1) ** n
    return (-1) ** comb(n + 1, 2) / (qint(3) ** 2 * qint(4)) * qpow(comb(n + 2, 3)) * extra * prod


def closed_form_z(n: int) -> FieldQZ:
    """Product formula for the Hankel determinant of the Legendre moments."""
    prod = FieldQZ(1)
    for i in range(1, n):
        prod = prod * (qfact(i) ** 4 / (qfact(2 * i) * qfact(2 * i + 1))) * asc_value(z, i) * desc_value(z, i)
    return prod * ((-1) ** comb(n, 2) * qpow(comb(n, 3)))


def general_moment_matrix(P: GeneralParams, n: int) -> list[list[FieldQ]]:
    """M(n): entries Psi(x**(i+j+2) Asc(x,a-1) Asc(x,b-1) Desc(x,c-1) Desc(x,d-1))."""
    entries = [unnormalized_moment(k, P) for k in range(max(2 * n - 1, 0))]
    return [[entries[i + j] for j in range(n)] for i in range(n)]


def general_det_closed_form(P: GeneralParams, n: int) -> FieldQ:
    a, b, c, d = P.a, P.b, P.c, P.d
    s = a + b + c + d
    prod = FieldQ(1)
    for i in range(1, n):
        top = (
            qint(i) * qint(a + c + i - 1) * qint(b + c + i - 1)
            * qint(a + d + i - 1) * qint(b + d + i - 1) * qint(s + i - 2)
        )
        bottom = qint(s + 2 * i - 3) * qint(s + 2 * i - 2) ** 2 * qint(s + 2 * i - 1)
        prod = prod * (top / bottom) ** (n - i)
    return (-qpow(c + d)) ** comb(n, 2) * qpow(comb(n, 3)) * normalization_constant(P) ** n * prod
