"""Exact-core tests: scalars, polynomials, rational functions, series, solve.

Oracles are independent of the code paths they check: naive Cramer solve,
squaring a square root, re-summing finite Laurent expansions, and values
frozen from an offline computer-algebra session.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jostforge.exact import (
    GaussianRational,
    I,
    INF,
    LaurentSeries,
    Poly,
    QQi,
    RationalFunction,
    TruncationError,
    laurent_expand,
    normalize,
    series_sqrt,
    solve_linear_exact,
)
from jostforge.exact.scalars import QQI_DOMAIN


def rf(num, den=None):
    return RationalFunction(Poly(num), Poly(den) if den is not None else None)


small_rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
gaussians = st.builds(GaussianRational, small_rationals, small_rationals)


class TestScalars:
    def test_field_ops(self):
        a = QQi("1/2", "1/3")
        b = QQi(2, -1)
        assert a + b == QQi("5/2", "-2/3")
        assert a * b == QQi(Fraction(4, 3), Fraction(1, 6))
        assert (a / b) * b == a
        assert -a + a == QQi(0)
        assert I * I == QQi(-1)

    def test_pow_and_inverse(self):
        z = QQi(1, 1)
        assert z**2 == QQi(0, 2)
        assert z**-2 == QQi(0, 2).inv()
        with pytest.raises(ZeroDivisionError):
            QQi(0).inv()

    @given(gaussians, gaussians)
    def test_mul_commutes(self, a, b):
        assert a * b == b * a

    @given(gaussians)
    def test_sqrt_of_square_exists(self, a):
        r = (a * a).sqrt_exact()
        assert r is not None
        assert r * r == a * a

    def test_sqrt_principal_branch(self):
        assert QQi(4).sqrt_exact() == QQi(2)
        assert QQi(-4).sqrt_exact() == QQi(0, 2)
        assert QQi(0, 2).sqrt_exact() == QQi(1, 1)
        assert QQi(2).sqrt_exact() is None
        assert QQi("9/4").sqrt_exact() == QQi("3/2")


class TestPoly:
    def test_arith_and_divmod(self):
        p = Poly([1, 2, 1])
        q = Poly([1, 1])
        assert p == q * q
        quo, rem = p.divmod(q)
        assert quo == q and rem.is_zero()
        assert (p * q).exact_div(q) == p

    def test_gcd(self):
        p = Poly([-1, 0, 1])  # x^2 - 1
        q = Poly([1, 2, 1])   # (x+1)^2
        assert p.gcd(q) == Poly([1, 1])

    def test_shift_and_deflate(self):
        p = Poly.from_roots([2, 2, -1])
        assert p.root_multiplicity(2) == 2
        assert p.root_multiplicity(QQi(-1)) == 1
        assert p.root_multiplicity(5) == 0
        assert p.shift(2)(QQi(0)) == p(QQi(2))

    def test_derivative(self):
        p = Poly([5, 0, 3, 1])  # 5 + 3x^2 + x^3
        assert p.derivative() == Poly([0, 6, 3])


class TestNormalize:
    def test_common_factor_cancellation(self):
        # (2x + 2)/(2x^2 + 2x) -> 1/x
        f = normalize(Poly([2, 2]), Poly([0, 2, 2]))
        assert f == rf([1], [0, 1])

    def test_identity_case(self):
        p = Poly([3, 0, 7])
        assert normalize(p, Poly([1])) == RationalFunction(p)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            normalize(Poly([1]), Poly([]))

    def test_canonical_den_monic(self):
        f = normalize(Poly([1]), Poly([0, 3]))
        assert f.den == Poly([0, 1])
        assert f.num == Poly([Fraction(1, 3)])

    def test_slow_decay_partial_fractions_combined(self):
        # -5/16/x^2 - 5/16/(x-1)^2 - 7/8/x + 5/24/(x-1), combined over the
        # common denominator.  Expected num/den frozen from an offline CAS:
        # (-32x^3 + 44x^2 - 12x - 15) / (48 x^2 (x-1)^2), then monic-scaled.
        u = (
            rf(["-5/16"], [0, 0, 1])
            + rf(["-5/16"], [1, -2, 1])
            + rf(["-7/8"], [0, 1])
            + rf(["5/24"], [-1, 1])
        )
        den = Poly([0, 0, 1]) * Poly([1, -2, 1])
        num = Poly([-15, -12, 44, -32]).scale(Fraction(1, 48))
        assert u == RationalFunction(num, den)
        assert u.den == (Poly([0, 1]) ** 2 * Poly([-1, 1]) ** 2)

    @given(
        st.lists(small_rationals, min_size=1, max_size=3),
        st.lists(small_rationals, min_size=1, max_size=3),
        st.lists(small_rationals, min_size=1, max_size=3),
    )
    @settings(max_examples=60, deadline=None)
    def test_product_cancellation(self, pc, qc, rc):
        p, q, r = Poly(pc), Poly(qc), Poly(rc)
        if q.is_zero() or r.is_zero():
            return
        assert normalize(p * q, q * r) == normalize(p, r)


class TestLaurentExpand:
    def test_simple_pole_at_zero(self):
        s = laurent_expand(rf([1], [0, 1]), 0, 3)
        assert s.coeff(-1) == QQi(1)
        assert all(s.coeff(j).is_zero() for j in range(0, 4))

    def test_double_pole_finite(self):
        s = laurent_expand(rf([-2], [1, -2, 1]), 1, 2)
        assert s.coeff(-2) == QQi(-2)
        assert s.coeff(-1).is_zero()

    def test_slow_decay_tail_at_infinity(self):
        # order-0 coefficient 0; the 1/x coefficient is the tail weight -2/3
        # (forced by the case-(b) consistency of this potential; see the
        # analyzer tests).
        u = (
            rf(["-5/16"], [0, 0, 1])
            + rf(["-5/16"], [1, -2, 1])
            + rf(["-7/8"], [0, 1])
            + rf(["5/24"], [-1, 1])
        )
        s = laurent_expand(u, INF, 3)
        assert s.coeff_x_power(0).is_zero()
        assert s.coeff_x_power(-1) == QQi("-2/3")

    def test_resummation_exact_for_monomial_denominators(self):
        # 3/(x-2)^2 + x: expansion at 2 is a finite Laurent polynomial;
        # re-summing it reproduces f exactly at sample points.
        f = rf([3], [4, -4, 1]) + rf([0, 1])
        s = laurent_expand(f, 2, 5)
        for xv in (QQi(3), QQi("7/2"), QQi(-1)):
            t = xv - QQi(2)
            acc = QQi(0)
            for order in range(s.min_order, s.trunc_order + 1):
                acc = acc + s.coeff(order) * t**order
            assert acc == f(xv)

    def test_expansion_matches_series_division_identity(self):
        # (1+x)/(1-x) at 0: coefficients 1, 2, 2, 2, ...
        s = laurent_expand(rf([1, 1], [1, -1]), 0, 4)
        assert [s.coeff(j) for j in range(5)] == [QQi(1)] + [QQi(2)] * 4

    def test_growth_at_infinity(self):
        # x^2/(x-1) at infinity: x + 1 + 1/x + ...
        s = laurent_expand(rf([0, 0, 1], [-1, 1]), INF, 2)
        assert s.coeff_x_power(1) == QQi(1)
        assert s.coeff_x_power(0) == QQi(1)
        assert s.coeff_x_power(-1) == QQi(1)

    def test_truncation_is_loud(self):
        s = laurent_expand(rf([1], [0, 1]), 0, 2)
        with pytest.raises(TruncationError):
            s.coeff(3)


class TestSeriesSqrt:
    def test_constant(self):
        s = LaurentSeries.constant(4, 0, 4)
        r = series_sqrt(s)
        assert r.coeff(0) == QQi(2)

    def test_binomial_tail(self):
        # sqrt(1 + 2/x) = 1 + 1/x - 1/(2x^2) + ...
        s = laurent_expand(rf([2, 1], [0, 1]), INF, 2)
        r = series_sqrt(s)
        assert r.coeff_x_power(0) == QQi(1)
        assert r.coeff_x_power(-1) == QQi(1)
        assert r.coeff_x_power(-2) == QQi("-1/2")
        sq = r * r
        for j in range(sq.min_order, sq.trunc_order + 1):
            assert sq.coeff(j) == s.coeff(j)

    def test_odd_leading_order_rejected(self):
        s = laurent_expand(rf([1], [0, 1]), 0, 3)
        with pytest.raises(ValueError):
            series_sqrt(s)

    @given(
        st.lists(small_rationals, min_size=1, max_size=4),
        st.integers(min_value=-2, max_value=2),
    )
    @settings(max_examples=60, deadline=None)
    def test_square_of_sqrt_reproduces_input(self, cs, lead2):
        # build an even-leading-order series with a perfect-square lead
        coeffs = [QQi(9)] + [QQi(c) for c in cs]
        s = LaurentSeries(0, 2 * lead2, coeffs, 2 * lead2 + len(cs))
        r = series_sqrt(s)
        sq = r * r
        for j in range(sq.min_order, sq.trunc_order + 1):
            assert sq.coeff(j) == s.coeff(j)


def cramer_oracle(A, b):
    """Naive Cramer-rule solve for small square exact systems; None if det=0."""

    def det(M):
        n = len(M)
        if n == 1:
            return M[0][0]
        acc = QQi(0)
        sign = QQi(1)
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for row in M[1:]]
            acc = acc + sign * M[0][j] * det(minor)
            sign = -sign
        return acc

    d = det(A)
    if d.is_zero():
        return None
    out = []
    for j in range(len(A)):
        Mj = [row[:j] + [b[i]] + row[j + 1 :] for i, row in enumerate(A)]
        out.append(det(Mj) / d)
    return out


class TestSolveLinearExact:
    def test_identity(self):
        b = [QQi(3), QQi(-1, 2)]
        sol = solve_linear_exact([[1, 0], [0, 1]], b, QQI_DOMAIN)
        assert sol.is_unique and sol.particular == b

    def test_inconsistent(self):
        sol = solve_linear_exact([[1], [1]], [QQi(1), QQi(2)], QQI_DOMAIN)
        assert sol.is_inconsistent

    def test_parametric(self):
        sol = solve_linear_exact([[1, 1]], [QQi(1)], QQI_DOMAIN)
        assert sol.kind == "parametric"
        assert len(sol.nullspace) == 1
        v = sol.nullspace[0]
        assert (v[0] + v[1]).is_zero()

    @given(
        st.integers(min_value=1, max_value=4),
        st.data(),
    )
    @settings(max_examples=40, deadline=None)
    def test_agrees_with_cramer(self, n, data):
        A = [
            [data.draw(gaussians) for _ in range(n)]
            for _ in range(n)
        ]
        b = [data.draw(gaussians) for _ in range(n)]
        expected = cramer_oracle(A, b)
        sol = solve_linear_exact(A, b, QQI_DOMAIN)
        if expected is None:
            assert not sol.is_unique
        else:
            assert sol.is_unique
            assert sol.particular == expected
