"""Exact scalars: Gaussian rationals (complex numbers with Fraction parts).

Everything downstream of the symbolic pipelines (polynomials, rational
functions, truncated series, linear solving) is built over this field, so
arithmetic here must be exact and closed.  GaussianRational is immutable and
hashable; operations never fall back to floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot build an exact rational from {v!r}")


class GaussianRational:
    """An element re + im*i of Q(i), with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_value(v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, (int, Fraction, str)):
            return GaussianRational(_frac(v))
        if isinstance(v, tuple) and len(v) == 2:
            return GaussianRational(_frac(v[0]), _frac(v[1]))
        raise TypeError(f"cannot coerce {v!r} to GaussianRational")

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def is_rational(self) -> bool:
        return not self.im

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def inv(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- comparisons / hashing ----------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- exact square root ----------------------------------------------------

    def sqrt_exact(self) -> "GaussianRational | None":
        """The principal square root, if it exists in Q(i), else None.

        Principal branch: nonnegative real part; on the imaginary axis,
        nonnegative imaginary part.
        """
        if self.is_zero():
            return ZERO
        if not self.im:
            a = self.re
            if a > 0:
                s = _sqrt_fraction(a)
                return GaussianRational(s) if s is not None else None
            s = _sqrt_fraction(-a)
            return GaussianRational(0, s) if s is not None else None
        # w = c + d i with c^2 - d^2 = re, 2cd = im; |w|^2 = sqrt(re^2+im^2)
        m = _sqrt_fraction(self.re * self.re + self.im * self.im)
        if m is None:
            return None
        c2 = (self.re + m) / 2
        c = _sqrt_fraction(c2)
        if c is None or c == 0:
            return None
        d = self.im / (2 * c)
        if c > 0 or (c == 0 and d >= 0):
            return GaussianRational(c, d)
        return GaussianRational(-c, -d)

    # -- conversion / display --------------------------------------------------

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __complex__(self) -> complex:
        return self.to_complex()

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i" if abs(self.im) != 1 else ("i" if self.im > 0 else "-i")
        im = self.im
        sign = "+" if im > 0 else "-"
        mag = abs(im)
        istr = "i" if mag == 1 else f"{mag}*i"
        return f"({self.re} {sign} {istr})"


def _sqrt_fraction(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative Fraction, or None."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    p, s = q.numerator, q.denominator
    rp, rs = math.isqrt(p), math.isqrt(s)
    if rp * rp != p or rs * rs != s:
        return None
    return Fraction(rp, rs)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def QQi(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, Fractions, or 'p/q' strings."""
    return GaussianRational(_frac(re), _frac(im))


# ---------------------------------------------------------------------------
# Coefficient-domain protocol.  Polynomials, series and the multivariate
# layer are generic over a domain object so the same code runs exactly over
# Q(i) or approximately over complex floats.
# ---------------------------------------------------------------------------


class ExactDomain:
    """Field operations for GaussianRational coefficients."""

    name = "QQi"
    exact = True

    zero = ZERO
    one = ONE

    @staticmethod
    def convert(v):
        return GaussianRational.from_value(v)

    @staticmethod
    def is_zero(a) -> bool:
        return a.is_zero()

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def eq(a, b) -> bool:
        return a == b

    @staticmethod
    def to_complex(a) -> complex:
        return a.to_complex()


class FloatDomain:
    """Field operations for complex-float coefficients."""

    name = "CC"
    exact = False

    zero = 0j
    one = 1 + 0j

    # near-zero cutoff relative to typical magnitudes handled by callers;
    # this absolute default only prunes true numerical dust
    tol = 1e-13

    @staticmethod
    def convert(v):
        if isinstance(v, GaussianRational):
            return v.to_complex()
        return complex(v)

    @classmethod
    def is_zero(cls, a) -> bool:
        return abs(a) <= cls.tol

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def neg(a):
        return -a

    @classmethod
    def eq(cls, a, b) -> bool:
        return abs(a - b) <= cls.tol * max(1.0, abs(a), abs(b))

    @staticmethod
    def to_complex(a) -> complex:
        return complex(a)


QQI_DOMAIN = ExactDomain()
CC_DOMAIN = FloatDomain()
