"""Exact scalars: Gaussian rationals a + b*i with a, b in Q.

``fractions.Fraction`` plays the role of the arbitrary-precision rational;
:class:`GaussianRational` pairs two of them.  Everything is exact.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "GaussianRational",
    "as_scalar",
    "double_factorial",
    "format_rational",
    "parse_scalar",
    "ZERO",
    "ONE",
    "I",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class GaussianRational:
    """Immutable element of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        # skips conversion; both arguments must already be Fractions
        z = object.__new__(cls)
        object.__setattr__(z, "re", re)
        object.__setattr__(z, "im", im)
        return z

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianRational._raw(self.re * other, self.im * other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            return GaussianRational._raw(a * c, a * d)
        if not d:
            return GaussianRational._raw(a * c, b * c)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """``z * conj(z)``, a non-negative rational."""
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def inv(self) -> "GaussianRational":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        if not self.im:
            return GaussianRational._raw(1 / self.re, self.im)
        n = self.norm()
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational._raw(self.re / other, self.im / other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- text -------------------------------------------------------------
    def __repr__(self):
        return f"GaussianRational({str(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Rational)):
        return GaussianRational._raw(Fraction(x), Fraction(0))
    return NotImplemented


def as_scalar(x) -> GaussianRational:
    """Convert int, Fraction, numeric string or GaussianRational to Q(i)."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, (int, Rational)):
        return GaussianRational._raw(Fraction(x), Fraction(0))
    if isinstance(x, complex) or isinstance(x, float):
        raise TypeError("floating point values are not exact scalars")
    raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def double_factorial(b: int) -> int:
    """``b!! = b (b-2) (b-4) ...`` with ``0!! = (-1)!! = 1``."""
    if not isinstance(b, int):
        raise TypeError("double_factorial needs an integer")
    if b < -1:
        raise ValueError(f"double factorial undefined for {b} < -1")
    out = 1
    while b > 1:
        out *= b
        b -= 2
    return out


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(z: GaussianRational) -> str:
    """Canonical text form: ``3/2``, ``-i``, ``1/2*i``, ``1/2-3/4*i``."""
    re_, im = z.re, z.im
    if not im:
        return format_rational(re_)
    if im == 1:
        im_txt = "i"
    elif im == -1:
        im_txt = "-i"
    else:
        im_txt = format_rational(im) + "*i"
    if not re_:
        return im_txt
    if im_txt.startswith("-"):
        return format_rational(re_) + im_txt
    return format_rational(re_) + "+" + im_txt


_SCALAR_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)(?:\s*/\s*(\d+))?\s*(\*\s*i)?|(i))\s*"
)


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``a``, ``a/b``, ``a/b+c/d*i``, ``-i`` and similar.

    Terms are summed, so ``1+2+i`` is accepted; every term is a rational
    optionally followed by ``*i``, or a bare ``i``.
    """
    if not isinstance(text, str):
        raise TypeError("parse_scalar expects a string")
    pos, total = 0, ZERO
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty scalar")
    first = True
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _SCALAR_TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"bad scalar syntax at position {pos}: {text!r}")
        sign, num, den, star_i, bare_i = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator at position {pos}: {text!r}")
        s = -1 if sign == "-" else 1
        if bare_i:
            term = GaussianRational(0, s)
        else:
            if den is not None and int(den) == 0:
                raise ValueError(f"zero denominator in {text!r}")
            val = Fraction(int(num), int(den) if den else 1) * s
            term = GaussianRational(0, val) if star_i else GaussianRational(val)
        total = total + term
        pos = m.end()
        first = False
    return total
