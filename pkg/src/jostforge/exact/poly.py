"""Dense univariate polynomials over an exact coefficient field.

Coefficients are stored lowest degree first.  The code is duck-typed over the
coefficient field: any element type with +, -, *, /, unary -, == and an
``is_zero()`` method works, so the same class serves Q(i)[x] and, for the
symbolic spectral-parameter path, (Q(i)(t))[x].
"""

from __future__ import annotations

from .scalars import GaussianRational, ONE, ZERO


class FieldOps:
    """Identity elements plus a converter for one coefficient field."""

    def __init__(self, zero, one, convert=None, name="field"):
        self.zero = zero
        self.one = one
        self.convert = convert or (lambda v: v)
        self.name = name

    def __repr__(self):
        return f"FieldOps({self.name})"


QQI_FIELD = FieldOps(ZERO, ONE, GaussianRational.from_value, name="QQi")


class Poly:
    """A polynomial with exact coefficients, lowest degree first.

    >>> p = Poly([1, 2, 1])           # 1 + 2x + x^2
    >>> p.degree()
    2
    >>> print(p * Poly([-1, 1]))      # (x - 1)(x + 1)^2
    x^3 + x^2 - x - 1
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field: FieldOps = QQI_FIELD):
        conv = field.convert
        cs = [conv(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def lead(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def coeff(self, n: int):
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.field.zero

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and (self.coeffs[0] - self.field.one).is_zero()

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def constant(c, field: FieldOps = QQI_FIELD) -> "Poly":
        return Poly([c], field)

    @staticmethod
    def x(field: FieldOps = QQI_FIELD) -> "Poly":
        return Poly([field.zero, field.one], field)

    @staticmethod
    def from_roots(roots, field: FieldOps = QQI_FIELD) -> "Poly":
        p = Poly([field.one], field)
        for r in roots:
            p = p * Poly([-field.convert(r), field.one], field)
        return p

    # -- ring arithmetic -------------------------------------------------------

    def _check(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly([other], self.field)

    def __add__(self, other):
        o = self._check(other)
        n = max(len(self.coeffs), len(o.coeffs))
        z = self.field.zero
        cs = [self.coeff(i) + o.coeff(i) for i in range(n)]
        return Poly(cs, self.field) if n else Poly([z], self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        o = self._check(other)
        if self.is_zero() or o.is_zero():
            return Poly([], self.field)
        z = self.field.zero
        out = [z] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly([self.field.one], self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "Poly":
        c = self.field.convert(c)
        return Poly([a * c for a in self.coeffs], self.field)

    # -- euclidean structure ---------------------------------------------------

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [self.field.zero] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = other.lead()
        dn = len(other.coeffs)
        while len(rem) >= dn:
            c = rem[-1] / dlead
            k = len(rem) - dn
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * b
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly(q, self.field), Poly(rem, self.field)

    def __floordiv__(self, other):
        return self.divmod(self._check(other))[0]

    def __mod__(self, other):
        return self.divmod(self._check(other))[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.lead()
        return Poly([c / lead for c in self.coeffs], self.field)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, self._check(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    # -- calculus and evaluation -------------------------------------------------

    def derivative(self) -> "Poly":
        if len(self.coeffs) <= 1:
            return Poly([], self.field)
        one = self.field.one
        n_elt = one
        cs = []
        for k in range(1, len(self.coeffs)):
            cs.append(self.coeffs[k] * n_elt)
            n_elt = n_elt + one
        return Poly(cs, self.field)

    def __call__(self, xval):
        xval = self.field.convert(xval) if not isinstance(xval, complex) else xval
        acc = self.field.zero if not isinstance(xval, complex) else 0j
        for c in reversed(self.coeffs):
            term = c.to_complex() if isinstance(xval, complex) else c
            acc = acc * xval + term
        return acc

    def shift(self, a) -> "Poly":
        """Taylor shift: the polynomial p(x + a)."""
        a = self.field.convert(a)
        out = Poly([], self.field)
        xa = Poly([a, self.field.one], self.field)
        for c in reversed(self.coeffs):
            out = out * xa + Poly([c], self.field)
        return out

    def root_multiplicity(self, s) -> int:
        """Multiplicity of s as a root (0 if not a root)."""
        s = self.field.convert(s)
        p = self
        m = 0
        while not p.is_zero() and p(s).is_zero():
            p = p.deflate(s)
            m += 1
        return m

    def deflate(self, s) -> "Poly":
        """Synthetic division by (x - s); requires s to be a root."""
        s = self.field.convert(s)
        out = [self.field.zero] * (len(self.coeffs) - 1)
        acc = self.field.zero
        for k in range(len(self.coeffs) - 1, 0, -1):
            acc = acc * s + self.coeffs[k]
            out[k - 1] = acc
        rem = acc * s + self.coeffs[0]
        if not rem.is_zero():
            raise ValueError("deflation at a non-root")
        return Poly(out, self.field)

    # -- comparisons / display ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = self._check(other)
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all((a - b).is_zero() for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def to_complex_coeffs(self) -> list[complex]:
        return [c.to_complex() for c in self.coeffs]

    def __str__(self):
        return self.format("x")

    def format(self, var: str) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            cs = str(c)
            if k == 0:
                term = cs
            else:
                xpow = var if k == 1 else f"{var}^{k}"
                if cs == "1":
                    term = xpow
                elif cs == "-1":
                    term = f"-{xpow}"
                else:
                    term = f"{cs}*{xpow}"
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"Poly({self.format('x')})"
