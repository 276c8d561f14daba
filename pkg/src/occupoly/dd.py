"""Exact conversion between half-space and generator views of polyhedra.

Double description over rationals: a cone {x : A x >= 0} is maintained as a
lineality basis plus extreme rays while rows of A are folded in one at a
time.  While a row cuts the lineality space one basis vector turns into a
ray and everything else is projected onto the row's hyperplane; after that
each row splits the rays into kept / tight / dropped and adjacent
kept-dropped pairs combine into new tight rays.  Adjacency is decided
combinatorially from the sets of rows tight at each ray.

Polytope conversions ride on the cone core through homogenization: vertex
enumeration lifts {A x <= b} to {(t, x) : t >= 0, t b - A x >= 0}, facet
enumeration runs on the polar side, feeding generator rows (1, p) and
(0, r) in as inequalities.  Everything is Fraction arithmetic; outputs are
scaled to primitive integer vectors and sorted, so results are exact and
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), ZERO)


def primitive(vec) -> Vector:
    """Scale a rational vector to coprime integer entries, keeping sign."""
    den = 1
    for v in vec:
        f = Fraction(v)
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(Fraction(v) * den) for v in vec]
    g = 0
    for i in ints:
        g = gcd(g, abs(i))
    if g > 1:
        ints = [i // g for i in ints]
    return tuple(Fraction(i) for i in ints)


class _Ray:
    __slots__ = ("vec", "tight")

    def __init__(self, vec: Vector, tight: int):
        self.vec = vec
        self.tight = tight  # bitmask of rows tight at this ray


def _adjacent(p: _Ray, n: _Ray, rays: list[_Ray]) -> bool:
    common = p.tight & n.tight
    for q in rays:
        if q is p or q is n:
            continue
        if common & ~q.tight == 0:
            return False
    return True


def dd_cone(rows, dim: int) -> tuple[list[Vector], list[Vector]]:
    """Minimal generators (lineality basis, extreme rays) of {x : rows . x >= 0}.

    The returned cone is span(lineality) + nonnegative combinations of rays;
    the lineality list is empty exactly when the cone is pointed.
    """
    rows = [tuple(Fraction(v) for v in row) for row in rows]
    for row in rows:
        if len(row) != dim:
            raise ValueError("row length does not match dimension")
    lineality: list[Vector] = [
        tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)
    ]
    rays: list[_Ray] = []
    for idx, a in enumerate(rows):
        bit = 1 << idx
        lin_prods = [_dot(a, l) for l in lineality]
        pivot = next((j for j, p in enumerate(lin_prods) if p != 0), None)
        if pivot is not None:
            l0, p0 = lineality[pivot], lin_prods[pivot]
            new_lin = []
            for j, l in enumerate(lineality):
                if j == pivot:
                    continue
                p = lin_prods[j]
                new_lin.append(
                    primitive(tuple(x - (p / p0) * y for x, y in zip(l, l0)))
                    if p != 0
                    else l
                )
            lineality = new_lin
            seen = bit - 1  # tight at every earlier row, cut by this one
            new_ray = l0 if p0 > 0 else tuple(-x for x in l0)
            for r in rays:
                p = _dot(a, r.vec)
                if p != 0:
                    r.vec = primitive(
                        tuple(x - (p / p0) * y for x, y in zip(r.vec, l0))
                    )
                r.tight |= bit
            rays.append(_Ray(primitive(new_ray), seen))
            continue
        # lineality untouched: classic ray step
        pos, zero, neg = [], [], []
        for r in rays:
            p = _dot(a, r.vec)
            if p > 0:
                pos.append((r, p))
            elif p < 0:
                neg.append((r, p))
            else:
                r.tight |= bit
                zero.append(r)
        if not neg:
            rays = [r for r, _ in pos] + zero
            continue
        combos = []
        for rp, pp in pos:
            for rn, pn in neg:
                if not _adjacent(rp, rn, rays):
                    continue
                vec = primitive(
                    tuple(pp * xn - pn * xp for xp, xn in zip(rp.vec, rn.vec))
                )
                combos.append(_Ray(vec, (rp.tight & rn.tight) | bit))
        rays = [r for r, _ in pos] + zero + combos
    lin_out = sorted(primitive(l) for l in lineality)
    ray_out = sorted(r.vec for r in rays)
    return lin_out, ray_out


def facet_enumeration(points, rays=()):
    """Irredundant H-form of conv(points) + cone(rays).

    Returns (facets, equations): facets as (a, b) meaning a.x <= b, equations
    as (a, b) meaning a.x = b (present when the hull is not full-dimensional).
    """
    points = [tuple(Fraction(v) for v in p) for p in points]
    if not points:
        raise ValueError("need at least one point")
    dim = len(points[0])
    rows = [(Fraction(1),) + p for p in points]
    rows += [(ZERO,) + tuple(Fraction(v) for v in r) for r in rays]
    lin, extreme = dd_cone(rows, dim + 1)
    equations = []
    for z in lin:
        c0, c = z[0], z[1:]
        if any(c):
            equations.append((primitive(tuple(-x for x in c)), c0))
        elif c0 != 0:
            raise AssertionError("impossible lineality in polar cone")
    facets = []
    for z in extreme:
        c0, c = z[0], z[1:]
        if not any(c):
            continue  # the trivially valid row 1 >= 0
        facets.append((tuple(-x for x in c), c0))
    return sorted(facets), sorted(equations)


def vertex_enumeration(A_ub, b_ub, A_eq=(), b_eq=()):
    """All vertices and extreme rays of {x : A_ub x <= b_ub, A_eq x = b_eq}.

    Raises ValueError if the set contains a line (no vertex then).
    """
    rows = []
    dim = None
    for a, b in zip(A_ub, b_ub):
        a = tuple(Fraction(v) for v in a)
        dim = len(a) if dim is None else dim
        rows.append((Fraction(b),) + tuple(-x for x in a))
    for a, b in zip(A_eq, b_eq):
        a = tuple(Fraction(v) for v in a)
        dim = len(a) if dim is None else dim
        rows.append((Fraction(b),) + tuple(-x for x in a))
        rows.append((-Fraction(b),) + a)
    if dim is None:
        raise ValueError("no constraints given")
    rows.append((Fraction(1),) + (ZERO,) * dim)
    lin, extreme = dd_cone(rows, dim + 1)
    if lin:
        raise ValueError("polyhedron contains a line; no vertices exist")
    vertices, rec_rays = [], []
    for z in extreme:
        t, x = z[0], z[1:]
        if t > 0:
            vertices.append(tuple(v / t for v in x))
        else:
            rec_rays.append(x)
    return sorted(vertices), sorted(rec_rays)
