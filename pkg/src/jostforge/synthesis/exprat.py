"""Exp-rational algebra: ratios of polynomials in x, E_1..E_n and k.

E_j stands for e^{2i k_j x} with a fixed spectral point k_j in the upper half
plane, so d/dx E_j = (2 i k_j) E_j and, as x -> +inf, E_j -> 0 while
|E_j| -> inf as x -> -inf at rate 2 Im k_j.  Closed-form reflectionless Jost
solutions and potentials live in this algebra.

Coefficients come from one of two domains: exact Gaussian rationals (when the
spectral data is exact) or complex floats.  Canonical form clears
denominators, shifts E-monomial units so every E exponent is nonnegative with
zero minimum, cancels the multivariate gcd (exact domain), and scales the
denominator's lex-leading coefficient to 1.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact.scalars import CC_DOMAIN, QQI_DOMAIN, GaussianRational

Monomial = tuple  # exponent tuple aligned with ExpRing.var_names


class ExpRing:
    """Ring context: spectral points, coefficient domain, optional symbol k.

    Exponentials are stored over a lattice basis of frequencies: with exact
    spectral points the additive group generated by {k_j} inside Q(i) is
    computed, so rationally related points (say k_2 = 2 k_1) share a basis
    frequency and identities like E_2 = E_1^2 hold automatically.  Variable
    layout in exponent tuples: (x, F_1, ..., F_m[, k]) with F_l = e^{2i g_l x}.
    """

    def __init__(self, kvals, domain=QQI_DOMAIN, with_k: bool = True):
        self.domain = domain
        self.kvals = tuple(domain.convert(v) for v in kvals)
        self.n = len(self.kvals)
        self.with_k = with_k
        if domain.exact:
            self.basis, self.coords = _frequency_lattice(self.kvals)
        else:
            self.basis = list(self.kvals)
            self.coords = [
                [1 if l == j else 0 for l in range(self.n)] for j in range(self.n)
            ]
        self.m = len(self.basis)
        self.nvars = 1 + self.m + (1 if with_k else 0)
        self.k_index = 1 + self.m if with_k else None
        # d/dx multiplier for each basis frequency
        two_i = domain.convert(GaussianRational(0, 2))
        self.e_rates = tuple(domain.mul(two_i, g) for g in self.basis)
        self.var_names = ["x"] + [f"F{l + 1}" for l in range(self.m)] + (
            ["k"] if with_k else []
        )

    def compatible(self, other: "ExpRing") -> bool:
        return (
            self.n == other.n
            and self.with_k == other.with_k
            and self.domain is other.domain
            and all(self.domain.eq(a, b) for a, b in zip(self.kvals, other.kvals))
        )

    # -- element constructors ---------------------------------------------

    def zero_mono(self) -> Monomial:
        return (0,) * self.nvars

    def poly(self, terms: dict) -> "MPoly":
        return MPoly(self, terms)

    def const(self, c) -> "MPoly":
        c = self.domain.convert(c)
        if self.domain.is_zero(c):
            return MPoly(self, {})
        return MPoly(self, {self.zero_mono(): c})

    def one(self) -> "MPoly":
        return self.const(self.domain.one)

    def var(self, index: int) -> "MPoly":
        mono = [0] * self.nvars
        mono[index] = 1
        return MPoly(self, {tuple(mono): self.domain.one})

    def x(self) -> "MPoly":
        return self.var(0)

    def E(self, j: int) -> "MPoly":
        """e^{2i k_j x} for j in 1..n, expressed over the frequency basis."""
        mono = [0] * self.nvars
        for l, e in enumerate(self.coords[j - 1]):
            mono[1 + l] = e
        return MPoly(self, {tuple(mono): self.domain.one})

    def k(self) -> "MPoly":
        if not self.with_k:
            raise ValueError("ring was built without the spectral symbol k")
        return self.var(self.k_index)


def _frequency_lattice(kvals):
    """Basis of the additive group generated by exact spectral points.

    Views Q(i) as Q^2, clears denominators, and reduces the integer vectors
    to a Hermite-style echelon basis; returns (basis frequencies, integer
    coordinates of each k_j in that basis).
    """
    if not kvals:
        return [], []
    dens = []
    for kv in kvals:
        dens.append(kv.re.denominator)
        dens.append(kv.im.denominator)
    d = 1
    for q in dens:
        d = d * q // _gcd_int(d, q)
    vecs = [(int(kv.re * d), int(kv.im * d)) for kv in kvals]
    b0 = None  # echelon row with nonzero first component
    b1 = None  # echelon row (0, positive)
    for v in vecs:
        x, y = v
        if x:
            if b0 is None:
                b0 = (x, y)
                x, y = 0, 0
            else:
                g, s, t = _xgcd(b0[0], x)
                nb0 = (s * b0[0] + t * x, s * b0[1] + t * y)
                x, y = 0, (b0[0] // g) * y - (x // g) * b0[1]
                b0 = nb0
        if y:
            b1 = (0, abs(y)) if b1 is None else (0, _gcd_int(b1[1], y))
    if b0 is not None and b0[0] < 0:
        b0 = (-b0[0], -b0[1])
    if b0 is not None and b1 is not None:
        b0 = (b0[0], b0[1] % b1[1])
    basis = [b for b in (b0, b1) if b is not None]
    coords = [_lattice_coords(b0, b1, v) for v in vecs]
    from fractions import Fraction as _F

    gs = [GaussianRational(_F(b[0], d), _F(b[1], d)) for b in basis]
    return gs, coords


def _lattice_coords(b0, b1, v):
    """Integer coordinates of v in the echelon basis (guaranteed to exist)."""
    x, y = v
    coords = []
    if b0 is not None:
        q, r = divmod(x, b0[0])
        if r:
            raise ArithmeticError("vector outside generated lattice")
        coords.append(q)
        x -= q * b0[0]
        y -= q * b0[1]
    if b1 is not None:
        q, r = divmod(y, b1[1])
        if r:
            raise ArithmeticError("vector outside generated lattice")
        coords.append(q)
        y -= q * b1[1]
    if x or y:
        raise ArithmeticError("vector outside generated lattice")
    return coords


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _xgcd(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _mono_sort_key(ring: ExpRing, mono: Monomial):
    """Lex order: E exponents first, then x, then k."""
    e_part = mono[1 : 1 + ring.m]
    k_part = (mono[ring.k_index],) if ring.with_k else ()
    return e_part + (mono[0],) + k_part


class MPoly:
    """Multivariate polynomial over the ring's coefficient domain."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ExpRing, terms: dict):
        dom = ring.domain
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if not dom.is_zero(c)}

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in m) for m in self.terms)

    def const_value(self):
        if self.is_zero():
            return self.ring.domain.zero
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def degree_in(self, v: int) -> int:
        if not self.terms:
            return -1
        return max(m[v] for m in self.terms)

    def min_exponent(self, v: int) -> int:
        if not self.terms:
            return 0
        return min(m[v] for m in self.terms)

    def leading(self) -> tuple[Monomial, object]:
        mono = max(self.terms, key=lambda m: _mono_sort_key(self.ring, m))
        return mono, self.terms[mono]

    # -- arithmetic -----------------------------------------------------------

    def _chk(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.ring is not self.ring and not self.ring.compatible(other.ring):
                raise ValueError("mixed exp-rational rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        o = self._chk(other)
        dom = self.ring.domain
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = dom.add(out.get(m, dom.zero), c)
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        dom = self.ring.domain
        return MPoly(self.ring, {m: dom.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._chk(other))

    def __rsub__(self, other):
        return self._chk(other) - self

    def __mul__(self, other):
        o = self._chk(other)
        dom = self.ring.domain
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                prod = dom.mul(c1, c2)
                out[m] = dom.add(out.get(m, dom.zero), prod)
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, nexp: int):
        if nexp < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while nexp:
            if nexp & 1:
                out = out * base
            base = base * base
            nexp >>= 1
        return out

    def scale(self, c) -> "MPoly":
        dom = self.ring.domain
        c = dom.convert(c)
        return MPoly(self.ring, {m: dom.mul(v, c) for m, v in self.terms.items()})

    def shift_var(self, v: int, amount: int) -> "MPoly":
        """Multiply by var_v^amount (amount may be negative for E variables)."""
        out = {}
        for m, c in self.terms.items():
            mm = list(m)
            mm[v] += amount
            out[tuple(mm)] = c
        return MPoly(self.ring, out)

    def derivative_x(self) -> "MPoly":
        """d/dx with the exponential rule d/dx E_j = (2 i k_j) E_j."""
        ring = self.ring
        dom = ring.domain
        out: dict = {}

        def acc(m, c):
            if dom.is_zero(c):
                return
            out[m] = dom.add(out.get(m, dom.zero), c)

        for m, c in self.terms.items():
            if m[0] > 0:
                mm = list(m)
                mm[0] -= 1
                acc(tuple(mm), dom.mul(c, dom.convert(m[0])))
            rate_total = dom.zero
            for j in range(ring.m):
                if m[1 + j]:
                    rate_total = dom.add(
                        rate_total, dom.mul(ring.e_rates[j], dom.convert(m[1 + j]))
                    )
            if not dom.is_zero(rate_total):
                acc(m, dom.mul(c, rate_total))
        return MPoly(ring, out)

    def derivative_k(self) -> "MPoly":
        """Formal d/dk (E_j and x are k-independent)."""
        ring = self.ring
        if not ring.with_k:
            return MPoly(ring, {})
        dom = ring.domain
        ki = ring.k_index
        out: dict = {}
        for m, c in self.terms.items():
            if m[ki] > 0:
                mm = list(m)
                mm[ki] -= 1
                key = tuple(mm)
                val = dom.mul(c, dom.convert(m[ki]))
                out[key] = dom.add(out.get(key, dom.zero), val)
        return MPoly(ring, out)

    def substitute_k(self, kval) -> "MPoly":
        """Evaluate the k symbol at a scalar, keeping x and E symbolic."""
        ring = self.ring
        if not ring.with_k:
            return self
        dom = ring.domain
        kval = dom.convert(kval)
        ki = ring.k_index
        out: dict = {}
        for m, c in self.terms.items():
            v = c
            e = m[ki]
            while e:
                v = dom.mul(v, kval)
                e -= 1
            mm = list(m)
            mm[ki] = 0
            key = tuple(mm)
            out[key] = dom.add(out.get(key, dom.zero), v)
        return MPoly(ring, out)

    # -- exact division and gcd (exact domain) -----------------------------------

    def exact_div(self, other: "MPoly") -> "MPoly":
        o = self._chk(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        dom = self.ring.domain
        rem = MPoly(self.ring, dict(self.terms))
        out: dict = {}
        omono, ocoeff = o.leading()
        while not rem.is_zero():
            rmono, rcoeff = rem.leading()
            qmono = tuple(a - b for a, b in zip(rmono, omono))
            if any(e < 0 for e in qmono):
                raise ValueError("inexact multivariate division")
            qc = dom.div(rcoeff, ocoeff)
            out[qmono] = dom.add(out.get(qmono, dom.zero), qc)
            rem = rem - MPoly(self.ring, {qmono: qc}) * o
        return MPoly(self.ring, out)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            try:
                other = self._chk(other)
            except (ValueError, TypeError):
                return NotImplemented
        diff = self - other
        return diff.is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- evaluation ----------------------------------------------------------------

    def eval_numeric(self, xval, kval=None):
        """Numeric value at x (scalar or numpy array), with E_j = e^{2ik_jx}."""
        import numpy as np

        ring = self.ring
        dom = ring.domain
        xv = np.asarray(xval, dtype=complex)
        evals = [
            np.exp(dom.to_complex(ring.e_rates[j]) * xv) for j in range(ring.m)
        ]
        acc = np.zeros_like(xv)
        for m, c in self.terms.items():
            term = np.full_like(xv, dom.to_complex(c))
            if m[0]:
                term = term * xv ** m[0]
            for j in range(ring.m):
                if m[1 + j]:
                    term = term * evals[j] ** m[1 + j]
            if ring.with_k and m[ring.k_index]:
                if kval is None:
                    raise ValueError("expression depends on k; supply kval")
                term = term * complex(kval) ** m[ring.k_index]
            acc = acc + term
        if np.ndim(xval) == 0:
            return complex(acc)
        return acc

    # -- display --------------------------------------------------------------------

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda mc: _mono_sort_key(self.ring, mc[0]),
            reverse=True,
        )

    def format(self, e_names=None, latex=False) -> str:
        if self.is_zero():
            return "0"
        ring = self.ring
        dom = ring.domain
        names = list(ring.var_names)
        if e_names:
            names[1 : 1 + ring.m] = e_names
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in enumerate(m):
                if not e:
                    continue
                nm = names[v]
                if e == 1:
                    factors.append(nm)
                elif latex:
                    factors.append(f"{nm}^{{{e}}}")
                else:
                    factors.append(f"{nm}^{e}")
            cs = _coeff_str(dom, c)
            if factors:
                body = ("" if latex else "*").join(factors) if latex else "*".join(factors)
                if cs == "1":
                    term = body
                elif cs == "-1":
                    term = f"-{body}"
                else:
                    sep = " " if latex else "*"
                    term = f"{cs}{sep}{body}"
            else:
                term = cs
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"MPoly({self.format()})"


def _coeff_str(dom, c) -> str:
    if dom.exact:
        return str(c)
    z = complex(c)
    if z.imag == 0:
        return repr(z.real)
    return f"({z.real!r}{z.imag:+}j)"


def mpoly_gcd(p: MPoly, q: MPoly) -> MPoly:
    """Multivariate gcd over the exact domain (primitive PRS); 1 if float."""
    ring = p.ring
    if not ring.domain.exact:
        return ring.one()
    if p.is_zero():
        return _normalize_lead(q)
    if q.is_zero():
        return _normalize_lead(p)
    if p.is_constant() or q.is_constant():
        return ring.one()
    # deterministic main variable: the present variable with the smallest
    # positive maximum degree (ties -> lowest index)
    cands = []
    for v in range(ring.nvars):
        d = max(p.degree_in(v), q.degree_in(v))
        if d > 0:
            cands.append((d, v))
    d, v = min(cands)
    cp, pp = _content_primitive(p, v)
    cq, qq = _content_primitive(q, v)
    cont = mpoly_gcd(cp, cq)
    a, b = pp, qq
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while True:
        if b.is_zero():
            g = a
            break
        if b.degree_in(v) == 0:
            g = ring.one()
            break
        r = _pseudo_rem(a, b, v)
        if r.is_zero():
            g = b
            break
        _, r = _content_primitive(r, v)
        a, b = b, r
    _, g = _content_primitive(g, v)
    return _normalize_lead(cont * g)


def _normalize_lead(p: MPoly) -> MPoly:
    if p.is_zero():
        return p
    _, lc = p.leading()
    return p.scale(p.ring.domain.div(p.ring.domain.one, lc))


def _univariate(p: MPoly, v: int) -> dict[int, MPoly]:
    ring = p.ring
    out: dict[int, dict] = {}
    for m, c in p.terms.items():
        mm = list(m)
        e = mm[v]
        mm[v] = 0
        out.setdefault(e, {})[tuple(mm)] = c
    return {e: MPoly(ring, t) for e, t in out.items()}


def _content_primitive(p: MPoly, v: int) -> tuple[MPoly, MPoly]:
    coeffs = list(_univariate(p, v).values())
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = mpoly_gcd(cont, c)
        if cont.is_constant():
            cont = p.ring.one()
            break
    return cont, p.exact_div(cont)


def _pseudo_rem(a: MPoly, b: MPoly, v: int) -> MPoly:
    """Pseudo-remainder of a by b in the variable v (leading-term elimination).

    Only used inside the primitive PRS, where any lc(b)^j multiple of the
    remainder is equivalent after content normalization.
    """
    ub = _univariate(b, v)
    db = max(ub)
    lcb = ub[db]
    rem = a
    while not rem.is_zero():
        urem = _univariate(rem, v)
        dr = max(urem)
        if dr < db:
            break
        rem = rem * lcb - (urem[dr] * b).shift_var(v, dr - db)
    return rem


class ExpRational:
    """num/den over MPoly, kept in canonical form."""

    __slots__ = ("num", "den", "ring")

    def __init__(self, num: MPoly, den: MPoly | None = None, _canonical=False):
        ring = num.ring
        if den is None:
            den = ring.one()
        if den.is_zero():
            raise ZeroDivisionError("exp-rational with zero denominator")
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den
        self.ring = ring

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def from_scalar(c, ring: ExpRing) -> "ExpRational":
        return ExpRational(ring.const(c))

    # -- queries ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # -- arithmetic ----------------------------------------------------------------

    def _chk(self, other) -> "ExpRational":
        if isinstance(other, ExpRational):
            return other
        if isinstance(other, MPoly):
            return ExpRational(other)
        return ExpRational(self.ring.const(other))

    def __add__(self, other):
        o = self._chk(other)
        if self.den == o.den:
            return ExpRational(self.num + o.num, self.den)
        return ExpRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ExpRational(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-self._chk(other))

    def __rsub__(self, other):
        return self._chk(other) - self

    def __mul__(self, other):
        o = self._chk(other)
        return ExpRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "ExpRational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return ExpRational(self.den, self.num)

    def __truediv__(self, other):
        return self * self._chk(other).inv()

    def __rtruediv__(self, other):
        return self._chk(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return ExpRational(self.num**n, self.den**n)

    def scale(self, c) -> "ExpRational":
        return ExpRational(self.num.scale(c), self.den)

    def derivative_x(self) -> "ExpRational":
        return ExpRational(
            self.num.derivative_x() * self.den - self.num * self.den.derivative_x(),
            self.den * self.den,
        )

    def derivative_k(self) -> "ExpRational":
        return ExpRational(
            self.num.derivative_k() * self.den - self.num * self.den.derivative_k(),
            self.den * self.den,
        )

    def substitute_k(self, kval) -> "ExpRational":
        return ExpRational(self.num.substitute_k(kval), self.den.substitute_k(kval))

    # -- equality --------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, (ExpRational, MPoly, int)):
            return NotImplemented
        o = self._chk(other)
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    # -- analysis -----------------------------------------------------------------------

    def limit_at_infinity(self, direction: int):
        """Limit as x -> +inf (direction=+1) or x -> -inf (direction=-1).

        Returns an ExpRational free of x and E (a rational function of k
        alone, as an ExpRational on the same ring), or raises if the limit
        does not exist in this algebra (oscillatory or divergent).
        """
        num_part = _extremal_part(self.num, direction)
        den_part = _extremal_part(self.den, direction)
        nw, nphase, npoly = num_part
        dw, dphase, dpoly = den_part
        # weight w: |E^m| ~ e^{-2 w x}; bigger w decays faster at +inf
        tol = 0 if self.ring.domain.exact else 1e-9
        if direction > 0:
            if nw > dw + tol:
                return ExpRational.from_scalar(self.ring.domain.zero, self.ring)
            if nw < dw - tol:
                raise ValueError("expression diverges as x -> +inf")
        else:
            if nw < dw - tol:
                return ExpRational.from_scalar(self.ring.domain.zero, self.ring)
            if nw > dw + tol:
                raise ValueError("expression diverges as x -> -inf")
        if not _phase_eq(self.ring, nphase, dphase):
            raise ValueError("oscillatory leading behavior; no limit")
        ndeg = max(m[0] for m in npoly.terms)
        ddeg = max(m[0] for m in dpoly.terms)
        if ndeg < ddeg:
            return ExpRational.from_scalar(self.ring.domain.zero, self.ring)
        if ndeg > ddeg:
            raise ValueError("polynomially divergent leading behavior")
        ntop = _x_leading_kpart(npoly, ndeg)
        dtop = _x_leading_kpart(dpoly, ddeg)
        return ExpRational(ntop, dtop)

    def eval_numeric(self, xval, kval=None, pole_tol: float = 1e-12):
        """Evaluate numerically; scalar x returns complex and raises near poles."""
        import numpy as np

        n = self.num.eval_numeric(xval, kval)
        d = self.den.eval_numeric(xval, kval)
        scale = _den_scale(self.den, xval, kval)
        if np.ndim(xval) == 0:
            if abs(d) <= pole_tol * max(scale, 1e-300):
                raise PoleEvaluation(f"denominator vanishes near x={xval}")
            return n / d
        mask = np.abs(d) <= pole_tol * np.maximum(scale, 1e-300)
        with np.errstate(divide="ignore", invalid="ignore"):
            vals = np.where(mask, np.nan + 0j, n / np.where(mask, 1.0, d))
        return vals, mask

    # -- display -------------------------------------------------------------------------

    def format(self, e_names=None, latex=False) -> str:
        if self.den == self.ring.one():
            return self.num.format(e_names, latex)
        n = self.num.format(e_names, latex)
        d = self.den.format(e_names, latex)
        if latex:
            return f"\\frac{{{n}}}{{{d}}}"
        return f"({n})/({d})"

    def __repr__(self):
        return f"ExpRational({self.format()})"


class PoleEvaluation(Exception):
    """Scalar evaluation requested at (or numerically at) a pole."""


def _den_scale(den: MPoly, xval, kval):
    """Magnitude scale of the denominator's terms (for pole detection)."""
    import numpy as np

    ring = den.ring
    dom = ring.domain
    xv = np.asarray(xval, dtype=complex)
    acc = np.zeros(xv.shape, dtype=float)
    evals = [np.exp(dom.to_complex(ring.e_rates[j]) * xv) for j in range(ring.m)]
    for m, c in den.terms.items():
        term = np.full(xv.shape, abs(dom.to_complex(c)))
        if m[0]:
            term = term * np.abs(xv) ** m[0]
        for j in range(ring.m):
            if m[1 + j]:
                term = term * np.abs(evals[j]) ** m[1 + j]
        if ring.with_k and m[ring.k_index]:
            term = term * abs(complex(kval)) ** m[ring.k_index]
        acc = acc + term
    return acc if acc.ndim else float(acc)


def _canonicalize(num: MPoly, den: MPoly) -> tuple[MPoly, MPoly]:
    ring = num.ring
    if num.is_zero():
        return num, ring.one()
    # E-monomials are units: shift so min exponent over num+den is 0 per E_j
    for j in range(ring.m):
        v = 1 + j
        shift = min(num.min_exponent(v), den.min_exponent(v))
        if shift:
            num = num.shift_var(v, -shift)
            den = den.shift_var(v, -shift)
    if ring.domain.exact:
        g = mpoly_gcd(num, den)
        if not g.is_constant():
            num = num.exact_div(g)
            den = den.exact_div(g)
    _, lc = den.leading()
    inv = ring.domain.div(ring.domain.one, lc)
    return num.scale(inv), den.scale(inv)


def _extremal_part(p: MPoly, direction: int):
    """(weight, phase, subpoly in x,k) of the dominant E-group at x->±inf.

    Weight of a monomial is sum_j m_j Im(k_j): at +inf the smallest weight
    dominates, at -inf the largest.  The returned subpoly keeps x and k
    exponents of the dominant group only.
    """
    ring = p.ring
    dom = ring.domain
    if p.is_zero():
        raise ValueError("no limit data for the zero polynomial")
    exact = dom.exact

    def weight_phase(m):
        if exact:
            w = Fraction(0)
            ph = Fraction(0)
            for j in range(ring.m):
                w += Fraction(m[1 + j]) * ring.basis[j].im
                ph += Fraction(m[1 + j]) * ring.basis[j].re
            return w, ph
        w = 0.0
        ph = 0.0
        for j in range(ring.m):
            w += m[1 + j] * complex(ring.basis[j]).imag
            ph += m[1 + j] * complex(ring.basis[j]).real
        return w, ph

    annotated = [(weight_phase(m), m, c) for m, c in p.terms.items()]
    if direction > 0:
        wstar = min(a[0][0] for a in annotated)
    else:
        wstar = max(a[0][0] for a in annotated)
    if not exact:
        sel = [a for a in annotated if abs(a[0][0] - wstar) < 1e-9]
    else:
        sel = [a for a in annotated if a[0][0] == wstar]
    phases = [a[0][1] for a in sel]
    ref = phases[0]
    if any(not _phase_eq(ring, ph, ref) for ph in phases[1:]):
        raise ValueError("dominant terms oscillate with different phases")
    sub = {}
    for (_, _), m, c in sel:
        mm = list(m)
        for j in range(ring.m):
            mm[1 + j] = 0
        key = tuple(mm)
        sub[key] = dom.add(sub.get(key, dom.zero), c)
    return wstar, ref, MPoly(ring, sub)


def _phase_eq(ring: ExpRing, a, b) -> bool:
    if ring.domain.exact:
        return a == b
    return abs(a - b) < 1e-9


def _x_leading_kpart(p: MPoly, deg: int) -> MPoly:
    """Drop x from the degree-`deg` slice, keeping the k dependence."""
    ring = p.ring
    dom = ring.domain
    out = {}
    for m, c in p.terms.items():
        if m[0] != deg:
            continue
        mm = list(m)
        mm[0] = 0
        key = tuple(mm)
        out[key] = dom.add(out.get(key, dom.zero), c)
    return MPoly(ring, out)
