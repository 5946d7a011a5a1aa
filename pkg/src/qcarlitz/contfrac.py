"""Jacobi (J-) and Stieltjes (S-) continued fractions as truncated series.

J-fraction:  1 / (1 + a_0 x - b_1 x^2 / (1 + a_1 x - b_2 x^2 / (...)))
S-fraction:  1 / (1 + c_1 x / (1 + c_2 x / (1 + ...)))

Contraction of an S-fraction gives the J-fraction with a_0 = c_1,
a_n = c_{2n} + c_{2n+1}, b_n = c_{2n-1} c_{2n}.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .bernoulli import legendre_moment_qz, shifted_ogf
from .orthopoly import Recurrence, hahn_recurrence, legendre_recurrence
from .qcombinat import qint
from .ratfunc import FieldQ, FieldQZ, Series, qpow, z

__all__ = [
    "JFraction",
    "SFraction",
    "SERIES_IDS",
    "jfraction_series",
    "sfraction_series",
    "contract",
    "closed_c",
    "closed_sfraction",
    "moment_series",
    "recurrence_for_series",
]

SERIES_IDS = ("B", "B1", "B2", "Bz")


@dataclass(frozen=True)
class JFraction:
    """``a`` holds a_0, a_1, ...; ``b`` holds b_1, b_2, ... (so ``b[0]`` is b_1)."""

    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))

    @classmethod
    def from_recurrence(cls, rec: Recurrence, levels: int) -> "JFraction":
        return cls([rec.a(n) for n in range(levels)], [rec.b(n) for n in range(1, levels)])

    def a_at(self, n: int):
        return self.a[n] if n < len(self.a) else 0

    def b_at(self, n: int):
        return self.b[n - 1] if 1 <= n <= len(self.b) else 0


@dataclass(frozen=True)
class SFraction:
    """``c`` holds c_1, c_2, ... (so ``c[0]`` is c_1)."""

    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))

    def c_at(self, k: int):
        return self.c[k - 1] if 1 <= k <= len(self.c) else 0


def jfraction_series(J: JFraction, N: int, depth: int | None = None) -> Series:
    """Expand a J-fraction to order N, bottom-up from ``depth`` levels.

    Each level contributes a factor x^2, so ceil(N/2) + 1 levels are exact.
    """
    if N < 1:
        raise ValueError("order must be >= 1")
    if depth is None:
        depth = -(-N // 2) + 1
    x = Series.x(N)
    x2 = x * x
    tail = Series.constant(1, N)
    for k in range(depth - 1, -1, -1):
        denom = Series.constant(1, N) + x * J.a_at(k) - x2 * tail * J.b_at(k + 1)
        tail = denom.reciprocal()
    return tail


def sfraction_series(S: SFraction, N: int, depth: int | None = None) -> Series:
    """Expand an S-fraction to order N from ``depth`` levels (N + 1 by default)."""
    if N < 1:
        raise ValueError("order must be >= 1")
    if depth is None:
        depth = N + 1
    x = Series.x(N)
    tail = Series.constant(1, N)
    for k in range(depth, 0, -1):
        tail = (Series.constant(1, N) + x * tail * S.c_at(k)).reciprocal()
    return tail


def contract(S: SFraction) -> JFraction:
    """J-fraction equal to the finite S-fraction (c_k = 0 past the stored ones)."""
    m = len(S.c)
    if m == 0:
        return JFraction((), ())
    a = [S.c_at(1)]
    n = 1
    while 2 * n <= m:
        a.append(S.c_at(2 * n) + S.c_at(2 * n + 1))
        n += 1
    b = [S.c_at(2 * n - 1) * S.c_at(2 * n) for n in range(1, m // 2 + 1)]
    return JFraction(a, b)


def closed_c(series_id: str, k: int):
    """Closed-form S-fraction coefficient c_k (k >= 1) for B, B1, B2 or Bz."""
    if k < 1:
        raise ValueError("c_k is defined for k >= 1")
    n, odd = (k + 1) // 2, k % 2 == 1
    if series_id == "B":
        if odd:
            return qpow(n - 1) * qint(n) ** 2 / ((qpow(n) + 1) * qint(2 * n - 1))
        return -qint(n) ** 2 / ((qpow(n) + 1) * qint(2 * n + 1))
    if series_id == "B1":
        if odd:
            return qpow(n) * qint(n) ** 2 * qint(n + 1) / (qint(2 * n) * qint(2 * n + 1))
        return -qint(n) * qint(n + 1) ** 2 / (qint(2 * n + 1) * qint(2 * n + 2))
    if series_id == "B2":
        lo = qpow(comb(n + 1, 2)) + (-1) ** (n + 1)
        hi = qpow(comb(n + 2, 2)) + (-1) ** (n + 2)
        if odd:
            return qint(n) * qint(n + 1) ** 2 / (qint(2 * n + 1) * qint(2 * n + 2)) * hi / lo
        return -qpow(n + 1) * qint(n + 1) ** 2 * qint(n + 2) / (qint(2 * n + 2) * qint(2 * n + 3)) * lo / hi
    if series_id == "Bz":
        if odd:
            return qpow(n - 1) * qint(n) * (qint(n) - z) / ((qpow(n) + 1) * qint(2 * n - 1))
        return -qint(n) * (qint(n) + qpow(n) * z) / ((qpow(n) + 1) * qint(2 * n + 1))
    raise ValueError(f"unknown series {series_id!r}; expected one of {SERIES_IDS}")


def closed_sfraction(series_id: str, length: int) -> SFraction:
    """c_1 .. c_length."""
    return SFraction([closed_c(series_id, k) for k in range(1, length + 1)])


def recurrence_for_series(series_id: str) -> Recurrence:
    if series_id == "B":
        return hahn_recurrence(0, 0)
    if series_id == "B1":
        return hahn_recurrence(0, 1)
    if series_id == "B2":
        return hahn_recurrence(1, 1)
    if series_id == "Bz":
        return legendre_recurrence()
    raise ValueError(f"unknown series {series_id!r}; expected one of {SERIES_IDS}")


def moment_series(series_id: str, N: int) -> Series:
    """The moment generating series computed directly from beta_n (or the Legendre moments)."""
    if series_id == "B":
        return shifted_ogf(0, N)
    if series_id == "B1":
        return shifted_ogf(1, N)
    if series_id == "B2":
        return shifted_ogf(2, N)
    if series_id == "Bz":
        return Series([legendre_moment_qz(n) for n in range(N)], N)
    raise ValueError(f"unknown series {series_id!r}; expected one of {SERIES_IDS}")
