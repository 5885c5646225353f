"""Truncated Laurent series with explicit truncation bookkeeping.

A series is stored in a local parameter t: t = x - center at a finite
center, t = 1/x at infinity (so "descending powers of x").  Every operation
records the order through which the result is guaranteed; reading past that
order raises TruncationError instead of silently returning garbage.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussianRational, ONE, ZERO
from .ratfunc import RationalFunction

INF = "inf"


class TruncationError(Exception):
    """A coefficient beyond the guaranteed truncation order was requested."""


class LaurentSeries:
    __slots__ = ("center", "min_order", "coeffs", "trunc_order")

    def __init__(self, center, min_order: int, coeffs, trunc_order: int):
        if center is not INF:
            center = GaussianRational.from_value(center)
        coeffs = tuple(GaussianRational.from_value(c) for c in coeffs)
        if coeffs and len(coeffs) != trunc_order - min_order + 1:
            raise ValueError("coefficient list must cover min_order..trunc_order")
        self.center = center
        self.min_order = min_order
        self.coeffs = coeffs
        self.trunc_order = trunc_order

    # -- construction ------------------------------------------------------

    @staticmethod
    def zero(center, trunc_order: int) -> "LaurentSeries":
        return LaurentSeries(center, 0, (), trunc_order)

    @staticmethod
    def constant(c, center, trunc_order: int) -> "LaurentSeries":
        c = GaussianRational.from_value(c)
        if c.is_zero():
            return LaurentSeries.zero(center, trunc_order)
        return LaurentSeries(center, 0, (c,) + (ZERO,) * trunc_order, trunc_order)

    # -- coefficient access ----------------------------------------------------

    def coeff(self, order: int) -> GaussianRational:
        """Coefficient of t^order (t the local parameter)."""
        if order > self.trunc_order:
            raise TruncationError(
                f"order {order} beyond guaranteed truncation {self.trunc_order}"
            )
        if not self.coeffs or order < self.min_order:
            return ZERO
        return self.coeffs[order - self.min_order]

    def coeff_x_power(self, power: int) -> GaussianRational:
        """Coefficient of x^power (at infinity) or (x-center)^power (finite)."""
        return self.coeff(-power) if self.center is INF else self.coeff(power)

    def leading_order(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return self.min_order + i
        return None

    def is_zero_through_truncation(self) -> bool:
        return self.leading_order() is None

    # -- arithmetic ------------------------------------------------------------

    def _align(self, other: "LaurentSeries"):
        if self.center is INF:
            if other.center is not INF:
                raise ValueError("series centers differ")
        elif other.center is INF or self.center != other.center:
            raise ValueError("series centers differ")

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._align(other)
        trunc = min(self.trunc_order, other.trunc_order)
        if not self.coeffs and not other.coeffs:
            return LaurentSeries.zero(self.center, trunc)
        lo = min(
            self.min_order if self.coeffs else trunc,
            other.min_order if other.coeffs else trunc,
        )
        cs = [self.coeff(k) + other.coeff(k) for k in range(lo, trunc + 1)]
        return LaurentSeries(self.center, lo, cs, trunc)

    def __neg__(self):
        return LaurentSeries(
            self.center, self.min_order, [-c for c in self.coeffs], self.trunc_order
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._align(other)
        if not self.coeffs or not other.coeffs:
            # zero through truncation; guarantee follows the product rule with
            # the zero factor treated as having its full guaranteed depth
            lo_s = self.min_order if self.coeffs else 0
            lo_o = other.min_order if other.coeffs else 0
            trunc = min(self.trunc_order + lo_o, other.trunc_order + lo_s)
            return LaurentSeries.zero(self.center, trunc)
        lo = self.min_order + other.min_order
        trunc = min(
            self.trunc_order + other.min_order, other.trunc_order + self.min_order
        )
        n = trunc - lo + 1
        out = [ZERO] * n
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            oa = self.min_order + i
            for j, b in enumerate(other.coeffs):
                k = oa + other.min_order + j - lo
                if 0 <= k < n:
                    out[k] = out[k] + a * b
        return LaurentSeries(self.center, lo, out, trunc)

    def scale(self, c) -> "LaurentSeries":
        c = GaussianRational.from_value(c)
        return LaurentSeries(
            self.center, self.min_order, [a * c for a in self.coeffs], self.trunc_order
        )

    def shift_orders(self, k: int) -> "LaurentSeries":
        """Multiply by t^k."""
        return LaurentSeries(
            self.center, self.min_order + k, self.coeffs, self.trunc_order + k
        )

    def inverse(self) -> "LaurentSeries":
        m = self.leading_order()
        if m is None:
            raise ZeroDivisionError("inverse of a series that is zero through truncation")
        depth = self.trunc_order - m
        lead = self.coeff(m)
        # 1 + w with w of positive order, known through depth
        w = [self.coeff(m + 1 + j) / lead for j in range(depth)]
        geo = _one_plus_w_power(w, depth, alpha=-1)
        cs = [c / lead for c in geo]
        return LaurentSeries(self.center, -m, cs, -m + depth).shift_orders(0)

    def __truediv__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self * other.inverse()

    def derivative_t(self) -> "LaurentSeries":
        """Formal d/dt."""
        cs = []
        for i, c in enumerate(self.coeffs):
            n = self.min_order + i
            cs.append(c * GaussianRational(n))
        if self.coeffs:
            return LaurentSeries(self.center, self.min_order - 1, cs, self.trunc_order - 1)
        return LaurentSeries.zero(self.center, self.trunc_order - 1)

    # -- display -------------------------------------------------------------

    def __repr__(self):
        var = "1/x" if self.center is INF else (
            "x" if (self.center == ZERO) else f"(x-{self.center})"
        )
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            n = self.min_order + i
            if n == 0:
                terms.append(str(c))
            else:
                terms.append(f"({c})*{var}^{n}")
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O({var}^{self.trunc_order + 1})>"


def _one_plus_w_power(w: list, depth: int, alpha) -> list[GaussianRational]:
    """Coefficients (orders 0..depth) of (1 + w)^alpha, w = sum w[j] t^(j+1).

    alpha is an integer or Fraction; uses the binomial series with truncated
    convolution powers of w.
    """
    out = [ONE] + [ZERO] * depth
    wpow = [ONE] + [ZERO] * depth  # running w^n, starting at n = 0
    binom = Fraction(1)
    alpha = Fraction(alpha)
    for n in range(1, depth + 1):
        binom = binom * (alpha - (n - 1)) / n
        # wpow <- wpow * w (orders up to depth)
        new = [ZERO] * (depth + 1)
        for i in range(depth + 1):
            if wpow[i].is_zero():
                continue
            for j, wj in enumerate(w):
                k = i + j + 1
                if k <= depth:
                    new[k] = new[k] + wpow[i] * wj
        wpow = new
        if all(c.is_zero() for c in wpow):
            break
        b = GaussianRational(binom)
        for k in range(depth + 1):
            out[k] = out[k] + b * wpow[k]
    return out


def series_sqrt(s: LaurentSeries) -> LaurentSeries:
    """Square root of a Laurent series, principal branch on the leading term.

    The result squared reproduces s through the guaranteed truncation order.
    Requires an even leading order and a leading coefficient that is a
    perfect square in Q(i).
    """
    m = s.leading_order()
    if m is None:
        raise ValueError("square root of a series that is zero through truncation")
    if m % 2:
        raise ValueError("odd leading order: no square root in the Laurent field")
    lead = s.coeff(m)
    root = lead.sqrt_exact()
    if root is None:
        raise ValueError(f"leading coefficient {lead} has no exact square root in Q(i)")
    depth = s.trunc_order - m
    w = [s.coeff(m + 1 + j) / lead for j in range(depth)]
    half = _one_plus_w_power(w, depth, alpha=Fraction(1, 2))
    cs = [root * c for c in half]
    return LaurentSeries(s.center, m // 2, cs, m // 2 + depth)


def laurent_expand(f: RationalFunction, at, through_order: int) -> LaurentSeries:
    """Laurent expansion of a rational function at a finite point or infinity.

    `through_order` is in the local parameter: at a finite center it is the
    highest included power of (x - center); at infinity it is the highest
    included power of 1/x (so x^-2 terms are included when through_order=2).

    >>> from .poly import Poly
    >>> f = RationalFunction(Poly([1]), Poly([0, 1]))     # 1/x
    >>> laurent_expand(f, 0, 3).coeff(-1)
    GaussianRational(Fraction(1, 1), Fraction(0, 1))
    """
    if f.is_zero():
        return LaurentSeries.zero(at if at is INF else at, through_order)
    num, den = f.num, f.den
    field = f.field
    if at is INF:
        delta = den.degree() - num.degree()
        nrev = list(reversed(num.coeffs))
        drev = list(reversed(den.coeffs))
        depth = through_order - delta
        if depth < 0:
            raise ValueError("through_order is above the leading order at infinity")
        q = _power_series_div(nrev, drev, depth)
        return LaurentSeries(INF, delta, q, through_order)
    s = GaussianRational.from_value(at)
    m = den.root_multiplicity(s)
    dred = den
    for _ in range(m):
        dred = dred.deflate(s)
    depth = through_order + m
    nsh = num.shift(s).coeffs
    dsh = dred.shift(s).coeffs
    if depth < 0:
        raise ValueError("through_order is above the leading order at the pole")
    q = _power_series_div(list(nsh), list(dsh), depth)
    ser = LaurentSeries(s, 0, q, depth)
    return ser.shift_orders(-m)


def _power_series_div(a: list, b: list, depth: int) -> list[GaussianRational]:
    """Coefficients 0..depth of (sum a_j t^j)/(sum b_j t^j), b[0] != 0."""
    b0 = b[0]
    if b0.is_zero():
        raise ZeroDivisionError("power series division needs a unit constant term")
    out = []
    for n in range(depth + 1):
        acc = a[n] if n < len(a) else ZERO
        for j in range(max(0, n - len(b) + 1), n):
            acc = acc - out[j] * b[n - j]
        out.append(acc / b0)
    return out
