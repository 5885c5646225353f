"""Closed-form reflectionless potentials and Jost solutions from spectral data.

Pipeline: residue linear forms -> square linear system for the N_j^r(x)
unknowns over the exp-rational algebra -> exact solve -> psi(x;k) and u(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ..exact.scalars import CC_DOMAIN, QQI_DOMAIN, GaussianRational
from .exprat import ExpRational, ExpRing, MPoly
from .residue import ResidueForm, SpectralEntry, potential_weights, residue_at


class SpectralData:
    """Bound-state data (k_j, nu_j, a-jet, b-jet) driving the synthesis.

    Chooses the exact coefficient domain when every number is a Gaussian
    rational, the float domain otherwise.
    """

    def __init__(self, entries):
        entries = tuple(entries)
        ks = [e.k for e in entries]
        if len({_key(k) for k in ks}) != len(ks):
            raise ValueError("bound-state locations must be pairwise distinct")
        exact = all(
            isinstance(e.k, GaussianRational)
            and all(isinstance(v, GaussianRational) for v in e.a_jet)
            and all(isinstance(v, GaussianRational) for v in e.b_jet)
            for e in entries
        )
        self.domain = QQI_DOMAIN if exact else CC_DOMAIN
        for e in entries:
            im = e.k.im if exact else complex(e.k).imag
            if not im > 0:
                raise ValueError("bound states must lie in the open upper half plane")
            if self.domain.is_zero(self.domain.convert(e.a_jet[0])):
                raise ValueError("leading a-jet entry must be nonzero")
        self.entries = entries
        self.ring = ExpRing([e.k for e in entries], self.domain, with_k=True)

    @property
    def total_multiplicity(self) -> int:
        return sum(e.nu for e in self.entries)

    def unknowns(self):
        """Deterministic unknown order: j ascending, then derivative order."""
        return [(j, r) for j, e in enumerate(self.entries) for r in range(e.nu)]


def _key(k):
    if isinstance(k, GaussianRational):
        return (k.re, k.im)
    z = complex(k)
    return (z.real, z.imag)


@dataclass
class BoundStateSystem:
    """The square linear system for the N_j^r unknowns."""

    data: SpectralData
    unknowns: list
    rows: list          # rows of ExpRational coefficients, unknown order
    rhs: list           # ExpRational right-hand sides
    residue_forms: list  # per entry, ResidueForm with symbolic k

    def check_solution(self, solution: dict) -> bool:
        for row, rhs in zip(self.rows, self.rhs):
            acc = ExpRational.from_scalar(self.data.domain.zero, self.data.ring)
            for coef, key in zip(row, self.unknowns):
                acc = acc + coef * solution[key]
            if not (acc - rhs).is_zero():
                return False
        return True


def assemble_system(data: SpectralData) -> BoundStateSystem:
    """Equations: derivatives of the projected relation at each bound state.

    For entry i and derivative order s < nu_i, differentiate
    N(x;k) e^{-2ikx} = 1 - sum_j R_j(k) s times in k and set k = k_i, using
    d/dk (N e^{-2ikx}) = (dN/dk - 2ix N) e^{-2ikx}.
    """
    ring = data.ring
    dom = data.domain
    forms = [residue_at(ring, j, e) for j, e in enumerate(data.entries)]
    unknowns = data.unknowns()
    index = {key: p for p, key in enumerate(unknowns)}
    rows = []
    rhs = []
    minus_2i = dom.convert(GaussianRational(0, -2))
    for i, ei in enumerate(data.entries):
        ki = dom.convert(ei.k)
        e_inv = ExpRational(ring.one(), ring.E(i + 1))
        for s in range(ei.nu):
            row = [ExpRational.from_scalar(dom.zero, ring) for _ in unknowns]
            # left side: sum_m C(s,m) (-2ix)^{s-m} N_i^m e^{-2ik_i x}
            for m in range(s + 1):
                factor = ring.const(dom.convert(comb(s, m)))
                p = s - m
                if p:
                    factor = factor * (ring.x().scale(minus_2i)) ** p
                row[index[(i, m)]] = row[index[(i, m)]] + ExpRational(factor) * e_inv
            # right side: delta_{s,0} - sum_j d^s/dk^s R_j at k_i; move the
            # unknown parts to the left
            for form in forms:
                for m, g in enumerate(form.coeffs):
                    gs = g
                    for _ in range(s):
                        gs = gs.derivative_k()
                    row[index[(form.j, m)]] = row[index[(form.j, m)]] + gs.substitute_k(ki)
            rows.append(row)
            rhs.append(
                ExpRational.from_scalar(dom.one if s == 0 else dom.zero, ring)
            )
    return BoundStateSystem(data, unknowns, rows, rhs, forms)


def _det_subset(rows: list[list[MPoly]], ring: ExpRing) -> MPoly:
    """Determinant of a square MPoly matrix by subset dynamic programming."""
    n = len(rows)
    if n == 0:
        return ring.one()
    states = {0: ring.one()}
    for r in range(n):
        new: dict[int, MPoly] = {}
        for mask, val in states.items():
            for c in range(n):
                bit = 1 << c
                if mask & bit:
                    continue
                entry = rows[r][c]
                if entry.is_zero():
                    continue
                # parity of inversions added by mapping row r to column c
                higher = bin(mask >> (c + 1)).count("1")
                term = val * entry
                if higher % 2:
                    term = -term
                key = mask | bit
                new[key] = new[key] + term if key in new else term
        states = new
        if not states:
            return ring.const(ring.domain.zero)
    return states[(1 << n) - 1]


def solve_system(system: BoundStateSystem) -> dict:
    """Exact determinant-based solve; keys are (j, r), values ExpRational.

    The result is verified by substitution before being returned.
    """
    data = system.data
    ring = data.ring
    n = len(system.unknowns)
    if n == 0:
        return {}
    # clear denominators row by row
    cleared = []
    rhs_cleared = []
    for row, rhs in zip(system.rows, system.rhs):
        mult = ring.one()
        for entry in row:
            mult = mult * entry.den
        mult = mult * rhs.den
        new_row = []
        for entry in row:
            term = entry.num
            for other in row:
                if other is not entry:
                    term = term * other.den
            term = term * rhs.den
            new_row.append(term)
        tail = rhs.num
        for other in row:
            tail = tail * other.den
        cleared.append(new_row)
        rhs_cleared.append(tail)
    det = _det_subset(cleared, ring)
    if det.is_zero():
        raise ValueError("singular bound-state system: invalid spectral data")
    solution = {}
    for col, key in enumerate(system.unknowns):
        replaced = [
            [rhs_cleared[r] if c == col else cleared[r][c] for c in range(n)]
            for r in range(n)
        ]
        solution[key] = ExpRational(_det_subset(replaced, ring), det)
    if not system.check_solution(solution):
        raise AssertionError("solved bound-state system failed back-substitution")
    return solution


@dataclass
class JostExpression:
    """psi(x;k) = psi_hat(x;k) * e^{ikx}, with psi_hat exp-rational."""

    psi_hat: ExpRational

    @property
    def ring(self) -> ExpRing:
        return self.psi_hat.ring

    def eval(self, x, k):
        import numpy as np

        base = self.psi_hat.eval_numeric(x, kval=k)
        phase = np.exp(1j * complex(k) * np.asarray(x, dtype=complex))
        if np.ndim(x) == 0:
            return complex(base * phase)
        vals, mask = base
        return vals * phase, mask

    def format(self, e_names=None, latex=False) -> str:
        body = self.psi_hat.format(e_names=e_names, latex=latex)
        if latex:
            return f"\\left({body}\\right) e^{{i k x}}"
        return f"({body}) * exp(i*k*x)"


def jost_psi_expr(data: SpectralData, solution: dict) -> JostExpression:
    """psi from the solved system: e^{-2ikx} N = 1 - sum of residue forms."""
    ring = data.ring
    acc = ExpRational.from_scalar(ring.domain.one, ring)
    forms = [residue_at(ring, j, e) for j, e in enumerate(data.entries)]
    for form in forms:
        for m, g in enumerate(form.coeffs):
            acc = acc - g * solution[(form.j, m)]
    return JostExpression(acc)


def potential_expr(data: SpectralData, solution: dict) -> ExpRational:
    """u(x): x-derivative of the weighted sum of bound-state unknowns."""
    ring = data.ring
    acc = ExpRational.from_scalar(ring.domain.zero, ring)
    for j, entry in enumerate(data.entries):
        for m, w in enumerate(potential_weights(ring, entry)):
            acc = acc + solution[(j, m)] * ring.const(w)
    return acc.derivative_x()


def asymptotic_leading(expr: JostExpression, direction: int) -> ExpRational:
    """Limit of psi e^{-ikx} as x -> direction * inf (a rational function of k)."""
    return expr.psi_hat.limit_at_infinity(direction)


def synthesize(data: SpectralData):
    """One-call pipeline: (solution map, JostExpression, potential)."""
    system = assemble_system(data)
    solution = solve_system(system)
    psi = jost_psi_expr(data, solution)
    u = potential_expr(data, solution)
    return solution, psi, u


def schrodinger_residual(psi: JostExpression, u: ExpRational) -> ExpRational:
    """psi'' + (k^2 + u) psi as an element of the algebra (zero iff exact solution).

    With psi = psi_hat e^{ikx} the identity reduces to
    psi_hat'' + 2ik psi_hat' + u psi_hat = 0.
    """
    ring = psi.ring
    ph = psi.psi_hat
    two_i = ring.const(GaussianRational(0, 2)) if ring.domain.exact else ring.const(2j)
    kfac = ExpRational(two_i * ring.k())
    return ph.derivative_x().derivative_x() + kfac * ph.derivative_x() + u * ph
