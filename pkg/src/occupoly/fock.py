"""Configurations of N fermions in d orbitals and the Gale order on them.

A configuration is the canonical form of a Slater determinant: a strictly
increasing tuple of orbital indices from 1..d.  Configurations are compared
in the Gale order (componentwise, after both are sorted ascending), which is
exactly the dominance order induced by any monotone one-particle spectrum:
if a <= b in the Gale order then sum(h[a]) <= sum(h[b]) for every increasing h.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

Configuration = tuple[int, ...]

DEFAULT_CONFIG_CAP = 10**6


class CapacityError(RuntimeError):
    """Requested enumeration exceeds the configured size cap."""


@dataclass(frozen=True)
class ProblemDims:
    """Particle number N, orbital count d, and weight support size r."""

    N: int
    d: int
    r: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.N < self.d:
            raise ValueError(f"need 1 <= N < d, got N={self.N}, d={self.d}")
        if not 1 <= self.r <= math.comb(self.d, self.N):
            raise ValueError(
                f"need 1 <= r <= C(d,N)={math.comb(self.d, self.N)}, got r={self.r}"
            )

    @property
    def num_configs(self) -> int:
        return math.comb(self.d, self.N)

    @property
    def minimal_regime(self) -> bool:
        # The regime in which vertex/facet combinatorics stabilize:
        # enough particles and enough orbitals for all r lowest sequences.
        return self.N >= self.r - 1 and self.d >= self.N + self.r - 1


def validate_config(config: Configuration, d: int) -> None:
    if len(config) == 0:
        raise ValueError("empty configuration")
    if any(k < 1 or k > d for k in config):
        raise ValueError(f"orbital index out of range 1..{d}: {config}")
    if any(a >= b for a, b in zip(config, config[1:])):
        raise ValueError(f"configuration must be strictly increasing: {config}")


def enumerate_configs(dims: ProblemDims, cap: int = DEFAULT_CONFIG_CAP) -> list[Configuration]:
    """All N-particle configurations in lexicographic order."""
    total = dims.num_configs
    if total > cap:
        raise CapacityError(f"C({dims.d},{dims.N}) = {total} exceeds cap {cap}")
    return [tuple(c) for c in itertools.combinations(range(1, dims.d + 1), dims.N)]


def config_energy(config: Configuration, h):
    """Sum of one-particle levels over the occupied orbitals.

    Works for any numeric dtype (floats, Fractions) since it only adds.
    """
    return sum(h[k - 1] for k in config)


def gale_leq(a: Configuration, b: Configuration) -> bool:
    """Componentwise order on ascending tuples: a <= b iff a_k <= b_k for all k."""
    if len(a) != len(b):
        raise ValueError("configurations must have the same particle number")
    return all(x <= y for x, y in zip(a, b))


def gale_minimum(dims: ProblemDims) -> Configuration:
    """The unique Gale-least configuration (1, 2, ..., N)."""
    return tuple(range(1, dims.N + 1))


def gale_lower_covers(config: Configuration) -> list[Configuration]:
    """Configurations covered by `config`: decrement one entry by 1."""
    out = []
    prev = 0
    for i, k in enumerate(config):
        if k - 1 > prev:
            out.append(config[:i] + (k - 1,) + config[i + 1 :])
        prev = k
    return out


def gale_upper_covers(config: Configuration, d: int) -> list[Configuration]:
    """Configurations covering `config`: increment one entry by 1."""
    out = []
    n = len(config)
    for i, k in enumerate(config):
        nxt = config[i + 1] if i + 1 < n else d + 1
        if k + 1 < nxt and k + 1 <= d:
            out.append(config[:i] + (k + 1,) + config[i + 1 :])
    return out
