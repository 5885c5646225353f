"""Exact linear solving over any coefficient field with duck-typed arithmetic.

Returns a solution-set descriptor rather than raising on rank deficiency:
inconsistency and parametric families are ordinary answers here.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class LinearSolution:
    """Outcome of solving A x = b over a field.

    kind is one of "unique", "parametric", "inconsistent".  For parametric
    systems, the solution set is particular + span(nullspace).
    """

    kind: str
    particular: list = field(default_factory=list)
    nullspace: list = field(default_factory=list)
    pivots: list = field(default_factory=list)

    @property
    def is_unique(self) -> bool:
        return self.kind == "unique"

    @property
    def is_inconsistent(self) -> bool:
        return self.kind == "inconsistent"


def solve_linear_exact(A, b, field) -> LinearSolution:
    """Gauss-Jordan elimination of the rectangular system A x = b.

    A is a list of rows, b a list; entries must support +, -, *, /,
    unary - and is_zero().  `field` supplies zero/one for padding.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if len(b) != m:
        raise ValueError("right-hand side length mismatch")
    conv = field.convert
    rows = [[conv(x) for x in row] + [conv(b[i])] for i, row in enumerate(A)]
    for row in rows:
        if len(row) != n + 1:
            raise ValueError("ragged matrix")

    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if not rows[i][c].is_zero()), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(m):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break

    for i in range(r, m):
        if not rows[i][n].is_zero():
            return LinearSolution("inconsistent", pivots=pivots)

    zero, one = field.zero, field.one
    particular = [zero] * n
    for i, c in enumerate(pivots):
        particular[c] = rows[i][n]

    free = [c for c in range(n) if c not in pivots]
    if not free:
        return LinearSolution("unique", particular, [], pivots)

    nullspace = []
    for fc in free:
        v = [zero] * n
        v[fc] = one
        for i, c in enumerate(pivots):
            v[c] = -rows[i][fc]
        nullspace.append(v)
    return LinearSolution("parametric", particular, nullspace, pivots)
