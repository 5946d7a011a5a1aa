"""Exact scalar arithmetic.

Four value types live here:

``FieldQ``
    reduced rational functions of ``q`` over the rationals.  Numerator and
    denominator are ``flint.fmpq_poly``; the denominator is monic and coprime
    to the numerator, so equality is structural.
``FieldQZ``
    rational functions of ``z`` whose coefficients are ``FieldQ`` values
    (a tower, not a bivariate fraction field).
``Poly``
    dense univariate polynomials over any of the scalar domains
    (``Fraction``, ``FieldQ``, ``FieldQZ``).  Used for polynomials in ``x``
    and for polynomials in ``z``.
``Series``
    power series truncated at a fixed order.

Integers passed into ``Poly`` or ``Series`` are promoted to ``Fraction`` so
that ``1 / c`` never falls back to float division.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Any, Callable, Iterable, Sequence

import flint

__all__ = [
    "PoleError",
    "SeriesError",
    "FieldQ",
    "FieldQZ",
    "Poly",
    "Series",
    "poly_gcd",
    "q",
    "z",
    "qpow",
]

_P = flint.fmpq_poly


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at one of its poles."""


class SeriesError(ValueError):
    """Raised for order mismatches and non-invertible series."""


def _fmpq(v) -> flint.fmpq:
    if isinstance(v, flint.fmpq):
        return v
    v = Fraction(v)
    return flint.fmpq(v.numerator, v.denominator)


def _frac(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _qpoly(obj) -> flint.fmpq_poly:
    if isinstance(obj, _P):
        return obj
    if isinstance(obj, (int, Fraction, flint.fmpq, flint.fmpz)):
        return _P([_fmpq(obj)])
    return _P([_fmpq(c) for c in obj])


def _qpoly_key(p: flint.fmpq_poly) -> tuple:
    return tuple((int(c.p), int(c.q)) for c in p.coeffs())


# ---------------------------------------------------------------------------
# FieldQ
# ---------------------------------------------------------------------------


class FieldQ:
    """An element of Q(q), kept in lowest terms with a monic denominator.

    >>> (q**2 - 1) / (q - 1) == q + 1
    True
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Any = 0, den: Any = 1):
        num = _qpoly(num)
        den = _qpoly(den)
        if den.is_zero():
            raise ZeroDivisionError("FieldQ with zero denominator")
        if num.is_zero():
            self.num, self.den = _P(), _P([1])
            return
        g = num.gcd(den)
        if g.degree() > 0:
            num = num // g
            den = den // g
        lc = den[den.degree()]
        if lc != 1:
            num = num / lc
            den = den / lc
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: flint.fmpq_poly, den: flint.fmpq_poly) -> "FieldQ":
        # caller guarantees coprime num/den and monic den
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def coerce(cls, value) -> "FieldQ":
        if isinstance(value, FieldQ):
            return value
        if isinstance(value, (int, Fraction)):
            return cls._raw(_qpoly(value), _P([1])) if value else cls._raw(_P(), _P([1]))
        raise TypeError(f"cannot coerce {type(value).__name__} to FieldQ")

    @classmethod
    def from_coeffs(cls, num: Sequence, den: Sequence = (1,)) -> "FieldQ":
        """Build from ascending coefficient lists (ints, Fractions or "p/q" strings)."""
        return cls(_qpoly([Fraction(c) for c in num]), _qpoly([Fraction(c) for c in den]))

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def is_constant(self) -> bool:
        return self.den.degree() == 0 and self.num.degree() <= 0

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return _frac(self.num[0])

    def num_coeffs(self) -> list[Fraction]:
        return [_frac(c) for c in self.num.coeffs()]

    def den_coeffs(self) -> list[Fraction]:
        return [_frac(c) for c in self.den.coeffs()]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = FieldQ.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return FieldQ(self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        if g.degree() > 0:
            d1 = self.den // g
            d2 = other.den // g
            return FieldQ(self.num * d2 + other.num * d1, self.den * d2)
        return FieldQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldQ._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = FieldQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = FieldQ.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = FieldQ.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return FieldQ._raw(_P(), _P([1]))
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = n1.gcd(d2)
        g2 = n2.gcd(d1)
        if g1.degree() > 0:
            n1, d2 = n1 // g1, d2 // g1
        if g2.degree() > 0:
            n2, d1 = n2 // g2, d1 // g2
        # quotients of monic polynomials by monic gcds stay monic
        return FieldQ._raw(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "FieldQ":
        if self.num.is_zero():
            raise ZeroDivisionError("FieldQ division by zero")
        lc = self.num[self.num.degree()]
        return FieldQ._raw(self.den / lc, self.num / lc)

    def __truediv__(self, other):
        try:
            other = FieldQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = FieldQ.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return FieldQ._raw(self.num**n, self.den**n)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        try:
            other = FieldQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant()) if not self.num.is_zero() else hash(0)
        return hash((_qpoly_key(self.num), _qpoly_key(self.den)))

    # -- evaluation ---------------------------------------------------------

    def eval(self, v) -> Fraction:
        """Value at ``q = v``; raises :class:`PoleError` at a genuine pole."""
        v = _fmpq(v)
        d = self.den(v)
        if d == 0:
            raise PoleError(f"pole of {self} at q = {_frac(v)}")
        return _frac(self.num(v) / d)

    # -- rendering ----------------------------------------------------------

    def integer_parts(self) -> tuple[list[int], list[int]]:
        """Numerator and denominator scaled to coprime integer coefficient lists."""
        nc = self.num_coeffs() or [Fraction(0)]
        dc = self.den_coeffs()
        scale = 1
        for c in nc + dc:
            scale = lcm(scale, c.denominator)
        ni = [int(c * scale) for c in nc]
        di = [int(c * scale) for c in dc]
        content = 0
        for c in ni + di:
            content = gcd(content, c)
        return [c // content for c in ni], [c // content for c in di]

    def __str__(self):
        ni, di = self.integer_parts()
        top = _render_int_poly(ni, "q")
        if di == [1]:
            return top
        if " " in top:
            top = f"({top})"
        return f"{top} / {_paren(_render_int_poly(di, 'q'))}"

    def __repr__(self):
        return f"FieldQ({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "num": [rational_to_json(c) for c in self.num_coeffs()] or [0],
            "den": [rational_to_json(c) for c in self.den_coeffs()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FieldQ":
        return cls.from_coeffs(
            [rational_from_json(c) for c in data["num"]],
            [rational_from_json(c) for c in data["den"]],
        )


def rational_to_json(c: Fraction):
    """Integers stay JSON numbers; other rationals become "p/q" strings."""
    c = Fraction(c)
    if c.denominator == 1:
        return c.numerator
    return f"{c.numerator}/{c.denominator}"


def rational_from_json(v) -> Fraction:
    return Fraction(v) if isinstance(v, int) else Fraction(str(v))


def _render_int_poly(cs: Sequence[int], var: str) -> str:
    terms = []
    for k in range(len(cs) - 1, -1, -1):
        c = cs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _paren(s: str) -> str:
    if " " in s or s.startswith("-"):
        return f"({s})"
    return s


q = FieldQ([0, 1])


def qpow(n: int) -> FieldQ:
    """``q**n`` for any integer ``n``."""
    if n >= 0:
        return FieldQ._raw(_P([0] * n + [1]), _P([1]))
    return FieldQ._raw(_P([1]), _P([0] * (-n) + [1]))


# ---------------------------------------------------------------------------
# Poly
# ---------------------------------------------------------------------------


def _promote(c):
    return Fraction(c) if isinstance(c, int) else c


class Poly:
    """Dense univariate polynomial with coefficients in ascending degree.

    The coefficient domain is whatever the coefficients are; mixing
    ``Fraction``, ``FieldQ`` and ``FieldQZ`` promotes upward through the
    scalar operators.  ``var`` is only used for display.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        cs = [_promote(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "x") -> "Poly":
        return cls([0] * k + [c], var)

    @classmethod
    def gen(cls, var: str = "x") -> "Poly":
        return cls([0, 1], var)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _wrap(self, other):
        if isinstance(other, Poly):
            return other
        return Poly([other], self.var)

    def __add__(self, other):
        other = self._wrap(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return Poly((), self.var)
            return Poly([c * other for c in self.coeffs], self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.var)
        out = [None] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                t = ca * cb
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return Poly([Fraction(0) if c is None else c for c in out], self.var)

    def __rmul__(self, other):
        if other == 0:
            return Poly((), self.var)
        return Poly([other * c for c in self.coeffs], self.var)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly([1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by ``var**k``."""
        if not self.coeffs:
            return self
        return Poly([Fraction(0)] * k + list(self.coeffs), self.var)

    def map_coeffs(self, f: Callable) -> "Poly":
        return Poly([f(c) for c in self.coeffs], self.var)

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __divmod__(self, other: "Poly"):
        other = self._wrap(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        inv = 1 / other.leading()
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly((), self.var), self
        quo = [Fraction(0)] * (dq + 1)
        m = len(other.coeffs) - 1
        for k in range(dq, -1, -1):
            c = rem[k + m] * inv
            quo[k] = c
            if c == 0:
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return Poly(quo, self.var), Poly(rem[:m], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        inv = 1 / self.leading()
        return Poly([c * inv for c in self.coeffs[:-1]] + [Fraction(1)], self.var)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        try:
            return self == Poly([other], self.var)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            cs = str(c)
            if not mono:
                parts.append(f"[{cs}]")
            else:
                parts.append(f"[{cs}]*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm (coefficients must form a field)."""
    while b.coeffs:
        a, b = b, a % b
    return a.monic()


# ---------------------------------------------------------------------------
# FieldQZ
# ---------------------------------------------------------------------------


def _zpoly(coeffs) -> Poly:
    return Poly([FieldQ.coerce(c) if isinstance(c, (int, Fraction)) else c for c in coeffs], "z")


_ONE_Z = None  # set after class definition


class FieldQZ:
    """An element of Q(q)(z): numerator/denominator are polynomials in z over FieldQ.

    Reduced by the gcd over Q(q) with a monic denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Any = 0, den: Any = 1):
        num = self._as_zpoly(num)
        den = self._as_zpoly(den)
        if den.is_zero():
            raise ZeroDivisionError("FieldQZ with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly((), "z"), _ONE_Z
            return
        if den.degree() > 0:
            quo, rem = divmod(num, den)
            if rem.is_zero():
                num, den = quo, _ONE_Z
            else:
                g = poly_gcd(num, den)
                if g.degree() > 0:
                    num = num // g
                    den = den // g
        lc = den.leading()
        if lc != 1:
            inv = 1 / lc
            num = num * inv
            den = den.monic()
        self.num, self.den = num, den

    @staticmethod
    def _as_zpoly(obj) -> Poly:
        if isinstance(obj, Poly):
            return _zpoly(obj.coeffs)
        if isinstance(obj, (int, Fraction, FieldQ)):
            return _zpoly([obj])
        return _zpoly(obj)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "FieldQZ":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def coerce(cls, value) -> "FieldQZ":
        if isinstance(value, FieldQZ):
            return value
        if isinstance(value, (int, Fraction, FieldQ)):
            return cls._raw(_zpoly([value]), _ONE_Z)
        raise TypeError(f"cannot coerce {type(value).__name__} to FieldQZ")

    @classmethod
    def from_poly(cls, p: Poly) -> "FieldQZ":
        return cls._raw(_zpoly(p.coeffs), _ONE_Z)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError("FieldQZ value is not a polynomial in z")
        return self.num

    def __add__(self, other):
        try:
            other = FieldQZ.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den.degree() == 0:
                return FieldQZ._raw(self.num + other.num, _ONE_Z)
            return FieldQZ(self.num + other.num, self.den)
        return FieldQZ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldQZ._raw(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = FieldQZ.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = FieldQZ.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (FieldQ, int, Fraction)):
            if other == 0:
                return FieldQZ._raw(Poly((), "z"), _ONE_Z)
            return FieldQZ._raw(self.num * FieldQ.coerce(other), self.den)
        try:
            other = FieldQZ.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return FieldQZ._raw(Poly((), "z"), _ONE_Z)
        if self.den.degree() == 0 and other.den.degree() == 0:
            return FieldQZ._raw(self.num * other.num, _ONE_Z)
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = poly_gcd(n1, d2)
        g2 = poly_gcd(n2, d1)
        if g1.degree() > 0:
            n1, d2 = n1 // g1, d2 // g1
        if g2.degree() > 0:
            n2, d1 = n2 // g2, d1 // g2
        return FieldQZ._raw(n1 * n2, (d1 * d2).monic())

    __rmul__ = __mul__

    def inverse(self) -> "FieldQZ":
        if self.num.is_zero():
            raise ZeroDivisionError("FieldQZ division by zero")
        inv = 1 / self.num.leading()
        return FieldQZ._raw(self.den * inv, self.num.monic())

    def __truediv__(self, other):
        if isinstance(other, (FieldQ, int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("FieldQZ division by zero")
            return FieldQZ._raw(self.num * (1 / FieldQ.coerce(other)), self.den)
        try:
            other = FieldQZ.coerce(other)
        except TypeError:
            return NotImplemented
        if other.den.degree() == 0 and self.den.degree() == 0 and other.num.degree() > 0:
            # exact polynomial division is the common case (Bareiss steps)
            quo, rem = divmod(self.num, other.num)
            if rem.is_zero():
                return FieldQZ._raw(quo, _ONE_Z)
            return FieldQZ(self.num, other.num)
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = FieldQZ.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return FieldQZ._raw(self.num**n, self.den**n)

    def __eq__(self, other):
        try:
            other = FieldQZ.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den.degree() == 0 and self.num.degree() <= 0:
            return hash(self.num[0]) if self.num.coeffs else hash(0)
        return hash((self.num, self.den))

    def subs_z(self, value) -> FieldQ:
        """Substitute ``z = value`` (a FieldQ or rational)."""
        value = FieldQ.coerce(value)
        d = self.den(value)
        if d == 0:
            raise PoleError(f"pole of {self} at z = {value}")
        return FieldQ.coerce(self.num(value)) / d

    def __str__(self):
        top = _render_z_poly(self.num)
        if self.den.degree() == 0:
            return top
        return f"{_paren(top)} / {_paren(_render_z_poly(self.den))}"

    def __repr__(self):
        return f"FieldQZ({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "num": [FieldQ.coerce(c).to_json() for c in self.num.coeffs] or [FieldQ().to_json()],
            "den": [FieldQ.coerce(c).to_json() for c in self.den.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FieldQZ":
        return cls(
            Poly([FieldQ.from_json(c) for c in data["num"]], "z"),
            Poly([FieldQ.from_json(c) for c in data["den"]], "z"),
        )


def _render_z_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    if p.degree() == 0:
        return str(p.coeffs[0])
    parts = []
    for k in range(p.degree(), -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        cs = str(c)
        if not mono:
            parts.append(_paren(cs) if parts else cs)
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{_paren(cs)}*{mono}")
    return " + ".join(parts)


_ONE_Z = Poly([FieldQ.coerce(1)], "z")

z = FieldQZ(Poly([0, 1], "z"))


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------


class Series:
    """Power series in x truncated at a fixed order N (coefficients of x^0..x^(N-1))."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_promote(c) for c in coeffs]
        if order is not None:
            cs = cs[:order] + [Fraction(0)] * (order - len(cs))
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "Series":
        return cls(p.coeffs, order)

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        return cls([c], order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls([0, 1], order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: "Series"):
        if not isinstance(other, Series):
            return Series([other], self.order)
        if other.order != self.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([c * other for c in self.coeffs])
        other = self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n):
            acc = Fraction(0)
            for i in range(k + 1):
                if a[i] != 0 and b[k - i] != 0:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out)

    def __rmul__(self, other):
        return Series([other * c for c in self.coeffs])

    def reciprocal(self) -> "Series":
        if not self.coeffs:
            return self
        c0 = self.coeffs[0]
        if c0 == 0:
            raise SeriesError("reciprocal of a series with zero constant term")
        inv0 = 1 / c0
        out = [inv0]
        for k in range(1, self.order):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i] != 0:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-acc * inv0)
        return Series(out)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * self._check(other).reciprocal()
        return self * (1 / other)

    def substitute(self, inner: "Series") -> "Series":
        """Composition ``self(inner(x))``; ``inner`` must have zero constant term."""
        inner = self._check(inner)
        if inner.order and inner.coeffs[0] != 0:
            raise SeriesError("inner series must have zero constant term")
        acc = Series([], self.order)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Series({[str(c) for c in self.coeffs]!r})"
