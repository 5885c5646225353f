"""Residue linear forms at zeros of the transmission denominator a(k).

At a zero k_j of multiplicity nu, the circle integral of M(x;kappa) /
((k+kappa) a(kappa)) reduces to a linear combination of the Jost-derivative
unknowns N_j^r(x), r < nu.  The combination is computed by truncated series
division: the kappa-jet of M (known through the b-jet), the principal part of
1/a (known through the a-jet), and the geometric expansion of 1/(k+kappa).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..exact.scalars import GaussianRational
from .exprat import ExpRational, ExpRing


@dataclass(frozen=True)
class SpectralEntry:
    """One bound state: location, multiplicity, and the jets that matter.

    a_jet holds a^(nu)(k_j) .. a^(2 nu - 1)(k_j); b_jet holds
    b(k_j) .. b^(nu-1)(k_j).  Extra trailing a-jet entries are accepted.
    """

    k: object
    nu: int
    a_jet: tuple
    b_jet: tuple

    def __post_init__(self):
        if self.nu < 1:
            raise ValueError("multiplicity must be positive")
        if len(self.a_jet) < self.nu:
            raise ValueError("a-jet must supply orders nu..2nu-1")
        if len(self.b_jet) < self.nu:
            raise ValueError("b-jet must supply orders 0..nu-1")


@dataclass(frozen=True)
class ResidueForm:
    """Linear form sum_m coeff[m] * N_j^m with coefficients rational in k."""

    j: int
    coeffs: tuple  # tuple of ExpRational (k-dependent), index m = 0..nu-1


def _domain_fraction(dom, q: Fraction):
    return dom.convert(GaussianRational(q))


def _inv_a_principal(dom, entry: SpectralEntry) -> list:
    """Coefficients T_{-nu+m}, m = 0..nu-1, of 1/a at the zero.

    a(kappa) = sum_{m>=0} alpha_m t^{nu+m}, alpha_m = a^(nu+m)/(nu+m)!.
    """
    nu = entry.nu
    alphas = []
    for m in range(nu):
        fact = _domain_fraction(dom, Fraction(1, _factorial(nu + m)))
        alphas.append(dom.mul(dom.convert(entry.a_jet[m]), fact))
    if dom.is_zero(alphas[0]):
        raise ValueError(
            "leading a-jet entry vanishes: multiplicity is not the declared one"
        )
    inv = [dom.div(dom.one, alphas[0])]
    for n in range(1, nu):
        acc = dom.zero
        for j in range(1, n + 1):
            acc = dom.add(acc, dom.mul(alphas[j], inv[n - j]))
        inv.append(dom.neg(dom.div(acc, alphas[0])))
    return inv


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def residue_at(ring: ExpRing, j: int, entry: SpectralEntry) -> ResidueForm:
    """Residue of M/((k+kappa) a(kappa)) at kappa = k_j, as a form in N_j^m.

    The spectral symbol k stays symbolic; the coefficients are exp-rationals
    depending on k only.
    """
    dom = ring.domain
    nu = entry.nu
    kj = dom.convert(entry.k)
    inv = _inv_a_principal(dom, entry)  # T_{-nu+m}

    def T(order: int):
        # order in [-nu, -1]
        return inv[order + nu]

    # geo_m(k) = (-1)^m / (k + k_j)^{m+1}
    kplus = ring.k() + ring.const(kj)
    geo = []
    sign = 1
    denpow = ring.one()
    for m in range(nu):
        denpow = denpow * kplus
        geo.append(ExpRational(ring.const(dom.convert(sign)), denpow))
        sign = -sign

    # S_{-1-r} = sum_{m=0}^{nu-1-r} T_{-1-r-m} geo_m
    S = []
    for r in range(nu):
        acc = ExpRational.from_scalar(dom.zero, ring)
        for m in range(nu - r):
            acc = acc + geo[m] * ring.const(T(-1 - r - m))
        S.append(acc)

    coeffs = []
    for m in range(nu):
        acc = ExpRational.from_scalar(dom.zero, ring)
        for r in range(m, nu):
            w = dom.mul(
                dom.convert(entry.b_jet[r - m]),
                _domain_fraction(dom, Fraction(comb(r, m), _factorial(r))),
            )
            acc = acc + S[r] * ring.const(w)
        coeffs.append(acc)
    return ResidueForm(j, tuple(coeffs))


def potential_weights(ring: ExpRing, entry: SpectralEntry) -> list:
    """Scalar weights U_m with (1/pi) * circle integral of M/a = sum U_m N_j^m."""
    dom = ring.domain
    nu = entry.nu
    inv = _inv_a_principal(dom, entry)
    two_i = dom.convert(GaussianRational(0, 2))
    out = []
    for m in range(nu):
        acc = dom.zero
        for r in range(m, nu):
            w = dom.mul(
                dom.convert(entry.b_jet[r - m]),
                _domain_fraction(dom, Fraction(comb(r, m), _factorial(r))),
            )
            # T_{-1-r}
            acc = dom.add(acc, dom.mul(w, inv[nu - 1 - r]))
        out.append(dom.mul(two_i, acc))
    return out
