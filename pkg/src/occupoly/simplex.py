"""Exact linear programming over the rationals.

Dense two-phase simplex with Bland's rule, all arithmetic in
fractions.Fraction.  Intended for the small, possibly degenerate LPs that
chamber realizability and hull certificates produce; exactness matters more
than speed there, and Bland's rule guarantees termination under degeneracy.

Problems are stated as

    maximize  c . x   subject to   A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class InfeasibleError(RuntimeError):
    """The constraint system has no nonnegative solution."""


class UnboundedError(RuntimeError):
    """The objective is unbounded above on the feasible set."""


@dataclass
class LPResult:
    value: Fraction
    x: tuple[Fraction, ...]


def _frac_matrix(rows):
    return [[Fraction(v) for v in row] for row in rows]


class _Tableau:
    """Simplex tableau: rows satisfy sum_j rows[i][j] x_j = rows[i][-1]."""

    def __init__(self, rows, basis):
        self.rows = rows
        self.basis = basis

    def reduced_costs(self, cost):
        # z = red[-1] + sum_j red[j] x_j with red zero on basic columns.
        red = list(cost) + [ZERO]
        for i, jb in enumerate(self.basis):
            f = red[jb]
            if f != 0:
                row = self.rows[i]
                for j in range(len(red) - 1):
                    red[j] -= f * row[j]
                red[-1] += f * row[-1]
        return red

    def pivot(self, i, j, red):
        row = self.rows[i]
        piv = row[j]
        inv = ONE / piv
        self.rows[i] = [v * inv for v in row]
        row = self.rows[i]
        for k, other in enumerate(self.rows):
            if k != i and other[j] != 0:
                f = other[j]
                self.rows[k] = [a - f * b for a, b in zip(other, row)]
        f = red[j]
        if f != 0:
            for idx in range(len(red) - 1):
                red[idx] -= f * row[idx]
            red[-1] += f * row[-1]
        self.basis[i] = j

    def optimize(self, red, blocked=()):
        """Bland's rule: smallest improving column, smallest-ratio then
        smallest-basis-index leaving row.  Mutates rows/basis/red in place."""
        ncols = len(red) - 1
        while True:
            enter = -1
            for j in range(ncols):
                if j not in blocked and red[j] > 0:
                    enter = j
                    break
            if enter < 0:
                return
            leave = -1
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                raise UnboundedError("objective unbounded above")
            self.pivot(leave, enter, red)


def solve_lp(objective, A_ub=None, b_ub=None, A_eq=None, b_eq=None) -> LPResult:
    """Maximize objective . x subject to A_ub x <= b_ub, A_eq x = b_eq, x >= 0."""
    A_ub = _frac_matrix(A_ub or [])
    b_ub = [Fraction(v) for v in (b_ub or [])]
    A_eq = _frac_matrix(A_eq or [])
    b_eq = [Fraction(v) for v in (b_eq or [])]
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("constraint matrix/rhs length mismatch")
    cost = [Fraction(v) for v in objective]
    n = len(cost)
    for row in A_ub + A_eq:
        if len(row) != n:
            raise ValueError("constraint row length != objective length")

    m_ub, m_eq = len(A_ub), len(A_eq)
    nslack = m_ub
    # Column layout: x (n) | slacks (m_ub) | artificials (assigned below).
    rows = []
    basis = []
    art_cols = []
    ncols = n + nslack
    pending = []  # (coeffs incl slack, rhs, needs_artificial)
    for i in range(m_ub):
        coeffs = list(A_ub[i]) + [ZERO] * nslack
        coeffs[n + i] = ONE
        rhs = b_ub[i]
        if rhs < 0:
            coeffs = [-v for v in coeffs]
            rhs = -rhs
            pending.append((coeffs, rhs, True))
        else:
            pending.append((coeffs, rhs, False))
    for i in range(m_eq):
        coeffs = list(A_eq[i]) + [ZERO] * nslack
        rhs = b_eq[i]
        if rhs < 0:
            coeffs = [-v for v in coeffs]
            rhs = -rhs
        pending.append((coeffs, rhs, True))

    n_art = sum(1 for _, _, need in pending if need)
    total = ncols + n_art
    art_at = ncols
    for idx, (coeffs, rhs, need) in enumerate(pending):
        full = coeffs + [ZERO] * n_art
        if need:
            full[art_at] = ONE
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        else:
            # slack is basic (rhs >= 0 and slack coefficient is +1)
            basis.append(n + idx)
        rows.append(full + [rhs])

    tab = _Tableau(rows, basis)

    if art_cols:
        phase1 = [ZERO] * total
        for j in art_cols:
            phase1[j] = Fraction(-1)
        red = tab.reduced_costs(phase1)
        tab.optimize(red)
        if red[-1] < 0:
            raise InfeasibleError("no feasible point")
        art_set = set(art_cols)
        drop_rows = []
        for i in range(len(tab.rows)):
            if tab.basis[i] in art_set:
                row = tab.rows[i]
                enter = next(
                    (j for j in range(ncols) if row[j] != 0), None
                )
                if enter is None:
                    drop_rows.append(i)  # redundant 0 = 0 row
                else:
                    tab.pivot(i, enter, red)
        for i in reversed(drop_rows):
            del tab.rows[i]
            del tab.basis[i]
        # drop artificial columns entirely
        keep = [j for j in range(total) if j not in art_set]
        remap = {j: k for k, j in enumerate(keep)}
        tab.rows = [[row[j] for j in keep] + [row[-1]] for row in tab.rows]
        tab.basis = [remap[j] for j in tab.basis]
        total = ncols

    red = tab.reduced_costs(cost + [ZERO] * (total - n))
    tab.optimize(red)

    x = [ZERO] * n
    for i, jb in enumerate(tab.basis):
        if jb < n:
            x[jb] = tab.rows[i][-1]
    return LPResult(value=red[-1], x=tuple(x))


def lp_feasible(A_ub=None, b_ub=None, A_eq=None, b_eq=None) -> bool:
    """Feasibility of {A_ub x <= b_ub, A_eq x = b_eq, x >= 0}."""
    ncols = 0
    for mat in (A_ub, A_eq):
        if mat:
            ncols = len(mat[0])
            break
    try:
        solve_lp([ZERO] * ncols, A_ub, b_ub, A_eq, b_eq)
        return True
    except InfeasibleError:
        return False
