"""Rational functions num/den in canonical form.

Canonical means: num and den coprime, den monic.  Two equal rational
functions therefore have identical representations, so == is structural.
"""

from __future__ import annotations

from .poly import FieldOps, Poly, QQI_FIELD


class RationalFunction:
    """An element of F(x) kept in canonical (coprime, monic-denominator) form."""

    __slots__ = ("num", "den", "field")

    def __init__(self, num: Poly, den: Poly | None = None, _canonical=False):
        if not isinstance(num, Poly):
            raise TypeError("num must be a Poly")
        field = num.field
        if den is None:
            den = Poly([field.one], field)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            g = num.gcd(den)
            if not g.is_zero() and g.degree() > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.lead()
            if not (lead - field.one).is_zero():
                num = num.scale(field.one / lead)
                den = den.monic()
        self.num = num
        self.den = den
        self.field = field

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def from_const(c, field: FieldOps = QQI_FIELD) -> "RationalFunction":
        return RationalFunction(Poly([c], field))

    @staticmethod
    def x(field: FieldOps = QQI_FIELD) -> "RationalFunction":
        return RationalFunction(Poly.x(field))

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def order_at_infinity(self) -> int:
        """deg den - deg num: the order of infinity as a zero."""
        if self.num.is_zero():
            raise ValueError("order at infinity of the zero function")
        return self.den.degree() - self.num.degree()

    # -- field arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        return RationalFunction(Poly([other], self.field))

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, xval):
        n = self.num(xval)
        d = self.den(xval)
        if isinstance(xval, complex):
            return n / d
        if d.is_zero():
            raise ZeroDivisionError("evaluation at a pole")
        return n / d

    # -- comparisons ---------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, (RationalFunction, Poly, int)):
            return NotImplemented
        o = self._coerce(other)
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        return self.format("x")

    def format(self, var: str) -> str:
        if self.den.is_one():
            return self.num.format(var)
        n = self.num.format(var)
        d = self.den.format(var)
        return f"({n})/({d})"

    def __repr__(self):
        return f"RationalFunction({self.format('x')})"


def normalize(num: Poly, den: Poly) -> RationalFunction:
    """Canonical coprime, monic-denominator form of num/den."""
    return RationalFunction(num, den)
