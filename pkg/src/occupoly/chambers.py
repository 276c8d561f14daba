"""Realizable sequences of energetically lowest configurations.

A generic increasing one-particle spectrum h_1 < h_2 < ... < h_d orders all
N-particle configurations by total energy.  The first r configurations of
that order form a sequence; the set of monotone spectra realizing a fixed
sequence is a polyhedral chamber.  A sequence is realizable iff its chamber
has nonempty interior, which we decide exactly: maximize the margin delta
subject to

    h_1 = 0,  h_k <= h_{k+1},  h_d - h_1 <= 1,
    E(seq_{j+1}) - E(seq_j) >= delta          (j = 1..r-1),
    E(t) - E(seq_r) >= delta                  (t outside the sequence),

over rational h; the sequence is realizable iff delta* > 0.  All arithmetic
is exact (fractions.Fraction), so chamber boundaries are never blurred by
rounding.

Outside rows are imposed only for configurations t whose every lower Gale
cover already lies in the sequence: for monotone h the remaining rows are
nonnegative combinations of chain rows and kept rows, so the reduced LP has
the same optimum (reduce_rows=False keeps the full system for cross-checks).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fock import (
    CapacityError,
    Configuration,
    ProblemDims,
    enumerate_configs,
    gale_lower_covers,
    gale_minimum,
    gale_upper_covers,
    validate_config,
)
from .simplex import solve_lp

DEFAULT_SEQUENCE_R_CAP = 9

Row = tuple[tuple[int, ...], int]  # (coefficients over h_1..h_d then delta, rhs)


@dataclass(frozen=True)
class Chamber:
    """Margin LP for one sequence: rows are `coeffs . (h, delta) <= rhs`."""

    sequence: tuple[Configuration, ...]
    chain_rows: tuple[Row, ...]
    gap_rows: tuple[Row, ...]
    outside_rows: tuple[Row, ...]
    normalization_row: Row
    slack: Fraction

    @property
    def feasible(self) -> bool:
        return self.slack > 0


def _energy_coeffs(config: Configuration, d: int) -> list[int]:
    v = [0] * d
    for k in config:
        v[k - 1] = 1
    return v


def _outside_configs(
    sequence: tuple[Configuration, ...],
    dims: ProblemDims,
    reduce_rows: bool,
    configs: list[Configuration] | None = None,
) -> list[Configuration]:
    if configs is None:
        configs = enumerate_configs(dims)
    chosen = set(sequence)
    complement = [t for t in configs if t not in chosen]
    if not reduce_rows:
        return complement
    comp = set(complement)
    return [t for t in complement if not any(c in comp for c in gale_lower_covers(t))]


def _chamber_rows(sequence, dims, reduce_rows, configs=None):
    d = dims.d
    chain = []
    for k in range(1, d):
        coeffs = [0] * (d + 1)
        coeffs[k - 1] = 1
        coeffs[k] = -1
        chain.append((tuple(coeffs), 0))
    norm = [0] * (d + 1)
    norm[d - 1] = 1
    norm[0] -= 1
    normalization = (tuple(norm), 1)
    gaps = []
    for a, b in zip(sequence, sequence[1:]):
        ea, eb = _energy_coeffs(a, d), _energy_coeffs(b, d)
        coeffs = [x - y for x, y in zip(ea, eb)] + [1]
        gaps.append((tuple(coeffs), 0))
    outside = []
    last = _energy_coeffs(sequence[-1], d)
    for t in _outside_configs(sequence, dims, reduce_rows, configs):
        et = _energy_coeffs(t, d)
        coeffs = [x - y for x, y in zip(last, et)] + [1]
        outside.append((tuple(coeffs), 0))
    return tuple(chain), tuple(gaps), tuple(outside), normalization


def _solve_margin(chain, gaps, outside, normalization, d) -> Fraction:
    # Variables: h_2..h_d, delta (h_1 = 0 substituted; the chain makes all
    # h_k >= 0, so x >= 0 loses nothing).
    nvars = d
    A, b = [], []
    for coeffs, rhs in (*chain, *gaps, *outside, normalization):
        A.append(list(coeffs[1:d]) + [coeffs[d]])
        b.append(rhs)
    objective = [0] * (nvars - 1) + [1]
    res = solve_lp(objective, A_ub=A, b_ub=b)
    return res.value


def chamber(
    sequence,
    dims: ProblemDims,
    *,
    reduce_rows: bool = True,
    configs: list[Configuration] | None = None,
) -> Chamber:
    """Build and solve the margin LP for a candidate sequence."""
    sequence = tuple(tuple(c) for c in sequence)
    if not sequence:
        raise ValueError("empty sequence")
    if len(set(sequence)) != len(sequence):
        raise ValueError("sequence repeats a configuration")
    for c in sequence:
        validate_config(c, dims.d)
        if len(c) != dims.N:
            raise ValueError(f"configuration {c} has wrong particle number")
    chain, gaps, outside, normalization = _chamber_rows(
        sequence, dims, reduce_rows, configs
    )
    slack = _solve_margin(chain, gaps, outside, normalization, dims.d)
    return Chamber(
        sequence=sequence,
        chain_rows=chain,
        gap_rows=gaps,
        outside_rows=outside,
        normalization_row=normalization,
        slack=slack,
    )


def chamber_feasible(
    sequence,
    dims: ProblemDims,
    *,
    reduce_rows: bool = True,
    configs: list[Configuration] | None = None,
) -> tuple[bool, Fraction]:
    """Is the sequence realizable as the r strictly lowest configurations?

    Returns (realizable, delta*) where delta* is the best energy margin a
    normalized monotone spectrum can enforce; realizable iff delta* > 0.
    """
    ch = chamber(sequence, dims, reduce_rows=reduce_rows, configs=configs)
    return ch.feasible, ch.slack


def enumerate_sequences(
    dims: ProblemDims,
    *,
    r_cap: int = DEFAULT_SEQUENCE_R_CAP,
    reduce_rows: bool = True,
) -> list[tuple[Configuration, ...]]:
    """All realizable sequences of the r lowest configurations, DFS order.

    Candidates at each step are restricted to configurations whose lower
    Gale covers are all chosen (anything else is provably unrealizable), but
    every extension is still certified by the exact margin LP.
    """
    if dims.r > r_cap:
        raise CapacityError(f"r={dims.r} exceeds sequence cap {r_cap}")
    configs = enumerate_configs(dims)
    results: list[tuple[Configuration, ...]] = []
    chosen: list[Configuration] = []
    chosen_set: set[Configuration] = set()
    frontier: set[Configuration] = {gale_minimum(dims)}

    def extend() -> None:
        if len(chosen) == dims.r:
            results.append(tuple(chosen))
            return
        for cand in sorted(frontier):
            ok, _ = chamber_feasible(
                chosen + [cand], dims, reduce_rows=reduce_rows, configs=configs
            )
            if not ok:
                continue
            saved = frontier.copy()
            frontier.remove(cand)
            chosen.append(cand)
            chosen_set.add(cand)
            for up in gale_upper_covers(cand, dims.d):
                if up not in chosen_set and all(
                    lo in chosen_set for lo in gale_lower_covers(up)
                ):
                    frontier.add(up)
            extend()
            chosen.pop()
            chosen_set.remove(cand)
            frontier.clear()
            frontier.update(saved)

    extend()
    return results
