"""q-integers, q-factorials, q-binomials, q-Pochhammer symbols and friends.

All results are exact ``FieldQ`` values or polynomials in x over ``FieldQ``.
Pochhammer arguments are restricted to powers ``q**m`` (``QPochSpec``) or to
the affine argument ``q**a * (1 + (q - 1) x)`` used by the orthogonal
polynomial families.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ratfunc import FieldQ, Poly, q, qpow

__all__ = [
    "QPochSpec",
    "qint",
    "qfact",
    "qbinom",
    "qpoch",
    "qpoch_linear",
    "qbase",
    "asc",
    "desc",
    "asc_value",
    "desc_value",
    "phi21_terminating",
]

ONE = FieldQ(1)


@lru_cache(maxsize=None)
def qint(n: int) -> FieldQ:
    """[n]_q = (q**n - 1)/(q - 1); negative n allowed."""
    if n >= 0:
        return FieldQ([1] * n)
    return (qpow(n) - 1) / (q - 1)


@lru_cache(maxsize=None)
def qfact(n: int) -> FieldQ:
    if n < 0:
        raise ValueError(f"q-factorial of negative integer {n}")
    if n == 0:
        return ONE
    return qfact(n - 1) * qint(n)


@lru_cache(maxsize=None)
def qbinom(n: int, m: int) -> FieldQ:
    if not 0 <= m <= n:
        raise ValueError(f"q-binomial needs 0 <= m <= n, got n={n}, m={m}")
    return qfact(n) / (qfact(m) * qfact(n - m))


@dataclass(frozen=True)
class QPochSpec:
    """The symbol (q**base_exponent ; q)_length."""

    base_exponent: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("Pochhammer length must be >= 0")


def qpoch(spec: QPochSpec | int, length: int | None = None) -> FieldQ:
    """(q**m; q)_k = prod_{i<k} (1 - q**(m+i)).

    Accepts either a ``QPochSpec`` or the pair ``(m, k)``.
    """
    if not isinstance(spec, QPochSpec):
        spec = QPochSpec(spec, length)
    return _qpoch(spec.base_exponent, spec.length)


@lru_cache(maxsize=None)
def _qpoch(m: int, k: int) -> FieldQ:
    out = ONE
    for i in range(k):
        out = out * (1 - qpow(m + i))
    return out


@lru_cache(maxsize=None)
def qpoch_linear(k: int, a_shift: int) -> Poly:
    """(q**a (1 + (q-1) x); q)_k as a degree-k polynomial in x."""
    out = Poly([ONE])
    for i in range(k):
        c = qpow(a_shift + i)
        out = out * Poly([1 - c, -c * (q - 1)])
    return out


@lru_cache(maxsize=None)
def qbase(i: int, d: int) -> Poly:
    """q-analogue of the binomial polynomial binom(i + x, d).

    (1/[d]!_q) * prod_{t=i-d+1}^{i} ([t]_q + q**t x)
    """
    if i < 0 or d < 0:
        raise ValueError("qbase needs i, d >= 0")
    out = Poly([ONE])
    for t in range(i - d + 1, i + 1):
        out = out * Poly([qint(t), qpow(t)])
    return out * (1 / qfact(d))


@lru_cache(maxsize=None)
def asc(a: int) -> Poly:
    """Asc(x, a) = prod_{i=1}^{a} ([i]_q + q**i x)."""
    if a < 0:
        raise ValueError("asc needs a >= 0")
    out = Poly([ONE])
    for i in range(1, a + 1):
        out = out * Poly([qint(i), qpow(i)])
    return out


@lru_cache(maxsize=None)
def desc(a: int) -> Poly:
    """Desc(x, a) = prod_{i=1}^{a} ([i]_q - x)."""
    if a < 0:
        raise ValueError("desc needs a >= 0 (Desc(x, -1) is handled by moment_general)")
    out = Poly([ONE])
    for i in range(1, a + 1):
        out = out * Poly([qint(i), -1])
    return out


def asc_value(value, a: int):
    """Asc evaluated at a scalar (e.g. the symbolic z)."""
    out = ONE
    for i in range(1, a + 1):
        out = out * (value * qpow(i) + qint(i))
    return out


def desc_value(value, a: int):
    out = ONE
    for i in range(1, a + 1):
        out = out * (-value + qint(i))
    return out


def phi21_terminating(n: int, top_exp: int, bottom_exp: int) -> FieldQ:
    """Terminating sum  sum_k (q^-n, q^top; q)_k q^k / (q, q^bottom; q)_k,  k = 0..n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = FieldQ(0)
    for k in range(n + 1):
        top = _qpoch(-n, k) * _qpoch(top_exp, k)
        if top == 0:
            continue
        total = total + top * qpow(k) / (_qpoch(1, k) * _qpoch(bottom_exp, k))
    return total
