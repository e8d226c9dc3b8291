"""Exact scalars over the Gaussian rationals, the ground field of the library.

Every quantity in the library is a ``GaussianRational``: a complex number
``a + b*i`` whose real and imaginary parts are exact ``fractions.Fraction``
values.  Arithmetic never rounds and division by zero raises immediately.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from math import isqrt

_TOKEN = _re.compile(
    r"^(?P<re>[+-]?\d+(?:/\d+)?)"
    r"(?:(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)\*i)?$"
)


class GaussianRational:
    """An exact complex scalar ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def parse(cls, token: str) -> "GaussianRational":
        """Parse ``p/q``, ``p/q+r/s*i`` or ``p/q-r/s*i`` (integers allowed)."""
        m = _TOKEN.match(token.strip())
        if m is None:
            raise ValueError(f"not a Gaussian-rational token: {token!r}")
        re_part = Fraction(m.group("re"))
        im_part = Fraction(0)
        if m.group("im") is not None:
            im_part = Fraction(m.group("im"))
            if m.group("sign") == "-":
                im_part = -im_part
        return cls(re_part, im_part)

    # -- formatting --------------------------------------------------

    def token(self) -> str:
        """Render in the exchange format ``p/q`` / ``p/q±r/s*i``."""
        re_tok = f"{self.re.numerator}/{self.re.denominator}"
        if self.im == 0:
            return re_tok
        sign = "+" if self.im > 0 else "-"
        im = abs(self.im)
        return f"{re_tok}{sign}{im.numerator}/{im.denominator}*i"

    def __repr__(self):
        return self.token()

    __str__ = __repr__

    # -- arithmetic --------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.im == 0 and other.im == 0:
            return GaussianRational(self.re * other.re)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in the Gaussian rationals")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- structure ---------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """The field norm ``re**2 + im**2`` (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def sort_key(self):
        """A total order used only for deterministic output."""
        return (self.re, self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gr(value) -> GaussianRational:
    """Coerce ints, Fractions, tokens or pairs into a GaussianRational."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    if isinstance(value, str):
        return GaussianRational.parse(value)
    if isinstance(value, tuple) and len(value) == 2:
        return GaussianRational(value[0], value[1])
    raise TypeError(f"cannot coerce {value!r} to GaussianRational")


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def gaussian_sqrt(value: GaussianRational) -> GaussianRational | None:
    """A square root of ``value`` in the Gaussian rationals, or None.

    When a root exists, the one with ``(re, im)`` lexicographically largest
    is returned, so the choice is deterministic.
    """
    if value.im == 0:
        if value.re >= 0:
            r = rational_sqrt(value.re)
            return None if r is None else GaussianRational(r)
        r = rational_sqrt(-value.re)
        return None if r is None else GaussianRational(0, r)
    n = rational_sqrt(value.norm())
    if n is None:
        return None
    half = (value.re + n) / 2
    u = rational_sqrt(half)
    if u is None or u == 0:
        return None
    v = value.im / (2 * u)
    root = GaussianRational(u, v)
    other = -root
    return root if root.sort_key() >= other.sort_key() else other
