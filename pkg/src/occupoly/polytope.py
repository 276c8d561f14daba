"""Spectral polytopes of weighted fermionic ensembles.

Fix N particles on d orbitals and a nonincreasing weight vector w of length
r summing to one.  Consider all N-particle density operators whose spectrum
is majorized by w; the occupation spectra of their one-particle reduced
density matrices sweep out a permutation-invariant polytope.  This module
computes that polytope exactly:

* generating vertices: one candidate per realizable sequence of the r
  energetically lowest configurations, namely the sorted orbital occupations
  of the ensemble that puts weight w_j on the j-th configuration;
* the full polytope is the majorization down-closure of the convex hull of
  the generating vertices (together with all coordinate permutations), which
  turns membership into a small exact feasibility LP;
* irredundant facet systems: the inequalities "coeffs . sorted(spectrum)
  <= rhs" that membership requires beyond the background facts (entries
  sorted, nonnegative, summing to N), found by double description in
  partial-sum coordinates and cross-certified against the generator hull
  by an exact LP at every vertex of the region they cut out;
* symbolic facet systems: the same inequalities with the right-hand side
  reconstructed as an integer affine function of the weights by exact
  interpolation across several rational weight samples.

Everything runs in Fraction arithmetic; floats only enter through explicit
conversion helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chambers import enumerate_sequences
from .dd import facet_enumeration, primitive, vertex_enumeration
from .fock import ProblemDims
from .simplex import lp_feasible, solve_lp

ZERO = Fraction(0)
ONE = Fraction(1)

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), ZERO)


def sorted_desc(vec) -> tuple[Fraction, ...]:
    return tuple(sorted((Fraction(v) for v in vec), reverse=True))


def partial_sums(vec) -> tuple[Fraction, ...]:
    """Running sums of all but the last entry (the full total is implied)."""
    out, acc = [], ZERO
    for v in vec[:-1]:
        acc += Fraction(v)
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class WeightVector:
    """Nonincreasing nonnegative rationals summing to one."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("empty weight vector")
        if any(v < 0 for v in vals):
            raise ValueError("weights must be nonnegative")
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise ValueError("weights must be nonincreasing")
        if sum(vals) != 1:
            raise ValueError(f"weights must sum to one, got {sum(vals)!s}")

    @property
    def r(self) -> int:
        return len(self.values)

    @classmethod
    def exact(cls, values) -> "WeightVector":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def from_floats(cls, values, *, tol: float = 1e-6) -> "WeightVector":
        """Rationalize decimal inputs; renormalize if the sum is off by <= tol."""
        vals = [Fraction(str(float(v))) for v in values]
        total = sum(vals)
        if total != 1:
            if abs(float(total) - 1.0) > tol:
                raise ValueError(f"weights sum to {float(total)!r}, not 1")
            if total == 0:
                raise ValueError("weights sum to zero")
            vals = [v / total for v in vals]
        return cls(tuple(vals))

    @classmethod
    def prime_base(cls, r: int, p: int) -> "WeightVector":
        """w_j proportional to p^(r-j): strictly decreasing, exact, generic."""
        den = p**r - 1
        return cls(tuple(Fraction(p ** (r - j) * (p - 1), den) for j in range(1, r + 1)))

    @classmethod
    def dyadic(cls, r: int) -> "WeightVector":
        return cls.prime_base(r, 2)

    def to_floats(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.values)


# ----------------------------------------------------------------------
# vertices


def occupations_from_sequence(sequence, w: WeightVector, d: int):
    """Orbital occupations of the ensemble weighting the j-th configuration by w_j."""
    sequence = tuple(tuple(c) for c in sequence)
    if len(sequence) != w.r:
        raise ValueError("sequence length must match the number of weights")
    occ = [ZERO] * d
    for wj, config in zip(w.values, sequence):
        for k in config:
            occ[k - 1] += wj
    return tuple(occ)


def vertex_from_sequence(sequence, w: WeightVector, d: int):
    return sorted_desc(occupations_from_sequence(sequence, w, d))


def generating_vertices(w: WeightVector, dims: ProblemDims, *, sequences=None):
    """Distinct sorted occupation vectors over all realizable sequences.

    Their permutation orbits, convex hull, and majorization down-closure
    give the whole spectral polytope.  Ordered descending-lexicographically.
    """
    if w.r != dims.r:
        raise ValueError("weight vector length must equal dims.r")
    if sequences is None:
        sequences = enumerate_sequences(dims)
    verts = {vertex_from_sequence(s, w, dims.d) for s in sequences}
    return sorted(verts, reverse=True)


@dataclass(frozen=True)
class SymbolicVertex:
    """Weight-independent form of a generating vertex.

    Row k of the occupancy table flags which of the r configurations hold
    orbital k; instantiating at w sums the flagged weights per row and sorts.
    Rows are stored lexicographically decreasing, so the table itself does
    not depend on the numeric weights.
    """

    rows: tuple[tuple[int, ...], ...]

    def instantiate(self, w: WeightVector):
        if w.r != len(self.rows[0]):
            raise ValueError("weight vector length must match occupancy width")
        return sorted_desc(
            sum((wj for wj, f in zip(w.values, row) if f), ZERO) for row in self.rows
        )


def symbolic_vertices(dims: ProblemDims, *, sequences=None):
    if sequences is None:
        sequences = enumerate_sequences(dims)
    tables = set()
    for seq in sequences:
        members = [set(c) for c in seq]
        rows = sorted(
            (tuple(int(k in m) for m in members) for k in range(1, dims.d + 1)),
            reverse=True,
        )
        tables.add(tuple(rows))
    return [SymbolicVertex(rows=t) for t in sorted(tables, reverse=True)]


# ----------------------------------------------------------------------
# majorization and membership


def is_majorized(x, y, *, tol: float | None = None) -> bool:
    """Does y majorize x: sorted partial sums of x dominated, totals equal.

    Exact rational comparison by default; pass tol for float inputs.
    """
    if len(x) != len(y):
        raise ValueError("vectors must have equal length")
    if tol is None:
        xs = sorted((Fraction(v) for v in x), reverse=True)
        ys = sorted((Fraction(v) for v in y), reverse=True)
        px = py = ZERO
        for a, b in zip(xs[:-1], ys[:-1]):
            px += a
            py += b
            if px > py:
                return False
        return px + xs[-1] == py + ys[-1]
    xs = sorted((float(v) for v in x), reverse=True)
    ys = sorted((float(v) for v in y), reverse=True)
    px = py = 0.0
    for a, b in zip(xs[:-1], ys[:-1]):
        px += a
        py += b
        if px > py + tol:
            return False
    return abs((px + xs[-1]) - (py + ys[-1])) <= tol


def rado_membership(lam, w: WeightVector, dims: ProblemDims, *, generators=None) -> bool:
    """Exact membership of a spectrum in the polytope.

    True iff the sorted spectrum is majorized by some convex combination of
    the generating vertices, decided by a rational feasibility LP.  The
    input must be exact (ints, Fractions, or Fraction-convertible); floats
    are taken at their exact binary value.
    """
    lam = sorted_desc(lam)
    if len(lam) != dims.d:
        raise ValueError("spectrum length must equal the number of orbitals")
    if sum(lam) != dims.N:
        return False
    if generators is None:
        generators = generating_vertices(w, dims)
    B = [partial_sums(g) for g in generators]
    s = partial_sums(lam)
    K = len(generators)
    A_ub = [[-B[k][j] for k in range(K)] for j in range(dims.d - 1)]
    b_ub = [-s[j] for j in range(dims.d - 1)]
    return lp_feasible(A_ub=A_ub, b_ub=b_ub, A_eq=[[ONE] * K], b_eq=[ONE])


# ----------------------------------------------------------------------
# facets


@dataclass(frozen=True)
class Facet:
    """Orbit inequality: coeffs . sorted(spectrum) <= rhs, coeffs nonincreasing.

    By the rearrangement inequality this single row bounds every coordinate
    permutation of the spectrum at once.
    """

    coeffs: tuple[Fraction, ...]
    rhs: Fraction

    def slack(self, lam_sorted) -> Fraction:
        return self.rhs - _dot(self.coeffs, lam_sorted)

    def describe(self) -> str:
        terms = " + ".join(
            f"{c!s} lam_{i}" for i, c in enumerate(self.coeffs, start=1) if c != 0
        )
        return f"{terms or '0'} <= {self.rhs!s}"


@dataclass(frozen=True)
class FacetSystem:
    """Complete membership description at fixed numeric weights.

    A spectrum lies in the polytope iff its entries sum to N, are
    nonnegative, and the sorted spectrum satisfies every row in `facets`.
    The rows list exactly the inequalities irredundant beyond those
    background facts; sortedness, nonnegativity, and the trace themselves
    are enforced by `contains` but never listed.  Rows are gauged so the
    smallest coefficient is zero (the trace absorbs constant shifts) and
    scaled to primitive integer coefficients.
    """

    dims: ProblemDims
    weights: WeightVector
    facets: tuple[Facet, ...]
    certified: bool

    def slacks(self, lam) -> list[Fraction]:
        ls = sorted_desc(lam)
        if len(ls) != self.dims.d:
            raise ValueError("spectrum length must equal the number of orbitals")
        return [f.slack(ls) for f in self.facets]

    def contains(self, lam, *, tol=ZERO) -> bool:
        tol = Fraction(tol)
        ls = sorted_desc(lam)
        if len(ls) != self.dims.d:
            raise ValueError("spectrum length must equal the number of orbitals")
        trace_gap = sum(ls) - self.dims.N
        if trace_gap > tol or -trace_gap > tol:
            return False
        if ls[-1] < -tol:
            return False
        return all(f.slack(ls) >= -tol for f in self.facets)

    def to_dict(self) -> dict:
        return {
            "N": self.dims.N,
            "d": self.dims.d,
            "r": self.dims.r,
            "weights": [str(v) for v in self.weights.values],
            "facets": [
                {"coeffs": [str(c) for c in f.coeffs], "rhs": str(f.rhs)}
                for f in self.facets
            ],
            "certified": self.certified,
        }


def _background_rows(d: int, N):
    """H-form, in partial-sum coordinates, of all sorted nonnegative vectors
    with total N: the concavity chain (sortedness) plus the bounded tail
    (smallest entry nonnegative)."""
    A, b = [], []
    for i in range(1, d):
        row = [ZERO] * (d - 1)
        rhs = ZERO
        row[i - 1] = Fraction(-2)
        if i - 2 >= 0:
            row[i - 2] = ONE
        if i < d - 1:
            row[i] = ONE
        else:
            rhs = Fraction(-N)
        A.append(row)
        b.append(rhs)
    tail = [ZERO] * (d - 1)
    tail[d - 2] = ONE
    A.append(tail)
    b.append(Fraction(N))
    return A, b


def _implied_by_background(c, rhs, bg_rows) -> bool:
    A, b = bg_rows
    n = len(A[0])
    # maximize c . s over the sorted background region; x >= 0 is harmless
    # extra slack here only if it could cut the maximizer, but every sorted
    # nonnegative spectrum has nonnegative partial sums anyway.
    res = solve_lp(list(c), A_ub=A, b_ub=b)
    assert len(res.x) == n
    return res.value <= rhs


def _canonical_row(avec, rhs):
    # Scale so the coefficient vector is primitive integer; the bound keeps
    # whatever denominator the weights force on it.
    scaled = primitive(avec)
    i = next(i for i, v in enumerate(avec) if v != 0)
    return scaled, Fraction(rhs) * scaled[i] / avec[i]




def _majorized_by_hull(s, B) -> bool:
    """Is the partial-sum point s dominated by a convex mix of the rows of B?"""
    K = len(B)
    n = len(s)
    A_ub = [[-B[k][j] for k in range(K)] for j in range(n)]
    b_ub = [-x for x in s]
    return lp_feasible(A_ub=A_ub, b_ub=b_ub, A_eq=[[ONE] * K], b_eq=[ONE])


def facets_numeric(
    w: WeightVector,
    dims: ProblemDims,
    *,
    certify: bool = True,
    cross_check: bool = False,
    sequences=None,
) -> FacetSystem:
    """Irredundant inequalities of the polytope at numeric weights.

    The polytope is the majorization down-closure of the generator hull, so
    on sorted spectra it is the region below the hull corner (partial sums
    dominated by a convex combination of generator partial sums) that also
    satisfies the background facts.  Double description gives the corner's
    rows; every facet of the region is then either a corner row or a
    background row, so sequentially deleting rows that an exact LP proves
    redundant leaves the unique irredundant system, from which the
    background rows are excluded by convention.  With certify=True each
    reported row is LP-maximized over the region and the maximizer is
    checked to be dominated by a convex combination of the generators,
    certifying the row is tight on the actual polytope.  cross_check=True
    additionally recomputes the system by exact vertex enumeration of the
    region plus a second hull pass, verifies every region vertex against
    the generator hull, and requires both row sets to agree; this is
    exponentially more expensive and meant for small cases.
    """
    d = dims.d
    gens = generating_vertices(w, dims, sequences=sequences)
    B = [partial_sums(g) for g in gens]
    rays = [
        tuple(-ONE if j == i else ZERO for j in range(d - 1)) for i in range(d - 1)
    ]
    corner, eqs = facet_enumeration(B, rays=rays)
    if eqs:
        raise AssertionError("hull corner unexpectedly degenerate")
    bg = _background_rows(d, dims.N)
    candidates = []
    for c, c0 in corner:
        if any(x < 0 for x in c):
            raise AssertionError("corner row with a negative coefficient")
        if not _implied_by_background(c, c0, bg):
            candidates.append((tuple(c), Fraction(c0)))
    candidates.sort(reverse=True)
    kept = list(candidates)
    for row in candidates:
        others = [x for x in kept if x != row]
        A = [list(c) for c, _ in others] + [list(rw) for rw in bg[0]]
        b = [rh for _, rh in others] + list(bg[1])
        res = solve_lp(list(row[0]), A_ub=A, b_ub=b)
        if res.value <= row[1]:
            kept = others
    if certify:
        A_full = [list(c) for c, _ in kept] + [list(rw) for rw in bg[0]]
        b_full = [rh for _, rh in kept] + list(bg[1])
        for c, c0 in kept:
            res = solve_lp(list(c), A_ub=A_full, b_ub=b_full)
            if res.value != c0 or not _majorized_by_hull(res.x, B):
                raise RuntimeError(
                    "hull reduction failed: a reported row is not tight on "
                    "the generator hull's down-closure"
                )
    if cross_check:
        A = [list(c) for c, _ in kept] + [list(rw) for rw in bg[0]]
        b = [rh for _, rh in kept] + list(bg[1])
        verts, rec = vertex_enumeration(A, b)
        if rec:
            raise AssertionError("sorted region unexpectedly unbounded")
        for v in verts:
            if not _majorized_by_hull(v, B):
                raise RuntimeError(
                    f"hull reduction failed: sorted point {tuple(map(str, v))} "
                    "escapes the generator hull"
                )
        rows, eqs = facet_enumeration(verts)
        if eqs:
            raise RuntimeError(
                "the polytope is not full-dimensional at these weights; "
                "no unique irredundant row system exists"
            )
        rechecked = {
            _canonical_row(c, c0)
            for c, c0 in rows
            if not _implied_by_background(c, c0, bg)
        }
        if rechecked != {_canonical_row(c, c0) for c, c0 in kept}:
            raise RuntimeError(
                "row elimination and vertex enumeration disagree on the "
                "irredundant system"
            )
    facets = []
    for c, c0 in kept:
        avec = [sum(c[i:], ZERO) for i in range(d - 1)] + [ZERO]
        coeffs, rhs = _canonical_row(avec, c0)
        for g in gens:
            if _dot(coeffs, g) > rhs:
                raise AssertionError("row invalid on a generator")
        facets.append(Facet(coeffs=coeffs, rhs=rhs))
    facets.sort(key=lambda f: (f.coeffs, f.rhs), reverse=True)
    return FacetSystem(dims=dims, weights=w, facets=tuple(facets), certified=certify)


@dataclass(frozen=True)
class MembershipResult:
    """Verdict with per-row slacks and the violated constraints rendered."""

    member: bool
    slacks: tuple[Fraction, ...]
    violated: tuple[str, ...]


def membership(
    lam, dims: ProblemDims, w: WeightVector, *, system: FacetSystem | None = None,
    tol=ZERO,
) -> MembershipResult:
    """Does the spectrum lie in the polytope, and which rows reject it.

    Background facts (trace, nonnegativity) are reported alongside facet
    rows when violated; slacks list only the facet rows, in system order."""
    if system is None:
        system = facets_numeric(w, dims)
    tol = Fraction(tol)
    ls = sorted_desc(lam)
    if len(ls) != dims.d:
        raise ValueError("spectrum length must equal the number of orbitals")
    violated = []
    trace_gap = sum(ls) - dims.N
    if trace_gap > tol or -trace_gap > tol:
        violated.append(f"sum(lam) == {dims.N}")
    if ls[-1] < -tol:
        violated.append("lam_i >= 0")
    slacks = tuple(f.slack(ls) for f in system.facets)
    for facet, s in zip(system.facets, slacks):
        if s < -tol:
            violated.append(facet.describe())
    return MembershipResult(
        member=not violated, slacks=slacks, violated=tuple(violated)
    )


# ----------------------------------------------------------------------
# symbolic facets


@dataclass(frozen=True)
class SymbolicFacet:
    """Orbit inequality with weight-affine right-hand side.

    coeffs . sorted(spectrum) <= offset + weight_coeffs . w, all integer.
    The last weight coefficient is gauged to zero using sum(w) = 1.
    """

    coeffs: tuple[int, ...]
    offset: int
    weight_coeffs: tuple[int, ...]

    def rhs(self, w: WeightVector) -> Fraction:
        return self.offset + _dot(
            (Fraction(c) for c in self.weight_coeffs), w.values
        )

    def instantiate(self, w: WeightVector) -> Facet:
        return Facet(coeffs=tuple(Fraction(c) for c in self.coeffs), rhs=self.rhs(w))

    def describe(self) -> str:
        lhs = " + ".join(
            f"{c} lam_{i}" if c != 1 else f"lam_{i}"
            for i, c in enumerate(self.coeffs, start=1)
            if c != 0
        )
        rhs_terms = [str(self.offset)] if self.offset else []
        rhs_terms += [
            f"{c} w_{j}" if c != 1 else f"w_{j}"
            for j, c in enumerate(self.weight_coeffs, start=1)
            if c != 0
        ]
        return f"{lhs or '0'} <= {' + '.join(rhs_terms) or '0'}"


@dataclass(frozen=True)
class SymbolicFacetSystem:
    dims: ProblemDims
    facets: tuple[SymbolicFacet, ...]

    def instantiate(self, w: WeightVector) -> FacetSystem:
        if w.r != self.dims.r:
            raise ValueError("weight vector length must equal dims.r")
        rows = tuple(f.instantiate(w) for f in self.facets)
        return FacetSystem(dims=self.dims, weights=w, facets=rows, certified=False)

    def to_dict(self) -> dict:
        return {
            "N": self.dims.N,
            "d": self.dims.d,
            "r": self.dims.r,
            "facets": [
                {
                    "coeffs": list(f.coeffs),
                    "offset": f.offset,
                    "weight_coeffs": list(f.weight_coeffs),
                }
                for f in self.facets
            ],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "SymbolicFacetSystem":
        dims = ProblemDims(
            N=int(payload["N"]), d=int(payload["d"]), r=int(payload["r"])
        )
        rows = tuple(
            SymbolicFacet(
                coeffs=tuple(int(c) for c in f["coeffs"]),
                offset=int(f["offset"]),
                weight_coeffs=tuple(int(c) for c in f["weight_coeffs"]),
            )
            for f in payload["facets"]
        )
        return cls(dims=dims, facets=rows)


def _solve_linear(A, b):
    n = len(b)
    rows = [list(map(Fraction, A[i])) + [Fraction(b[i])] for i in range(n)]
    m = len(rows[0]) - 1
    if any(len(r) != m + 1 for r in rows):
        raise ValueError("ragged system")
    piv_cols = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if piv is None:
            raise RuntimeError("singular interpolation system")
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        piv_cols.append(col)
        r += 1
        if r == n:
            break
    if r < m:
        raise RuntimeError("singular interpolation system")
    x = [ZERO] * m
    for i, col in enumerate(piv_cols):
        x[col] = rows[i][m] / rows[i][col]
    return x


def facets_symbolic(dims: ProblemDims, *, certify: bool = True) -> SymbolicFacetSystem:
    """Facet system with exact weight-affine right-hand sides.

    Computes numeric systems at r+3 distinct generic rational weight
    vectors, matches rows across samples by their integer coefficient
    vectors, interpolates rhs = offset + weight_coeffs . w from the first r
    samples, verifies the fit on the remaining three, and requires every
    interpolated quantity to be an integer.  Raises RuntimeError if the
    samples disagree about the set of rows or the fit fails.
    """
    r = dims.r
    primes = _PRIMES[: r + 3]
    samples = [WeightVector.prime_base(r, p) for p in primes]
    sequences = enumerate_sequences(dims)
    systems = [
        facets_numeric(w, dims, certify=certify, sequences=sequences)
        for w in samples
    ]

    def key(f: Facet):
        scaled = primitive(f.coeffs)
        if scaled != f.coeffs:
            raise AssertionError("facet coefficients are not primitive integers")
        return tuple(int(c) for c in f.coeffs)

    keyed = []
    for sys in systems:
        keyed.append({key(f): f.rhs for f in sys.facets})
        if len(keyed[-1]) != len(sys.facets):
            raise RuntimeError("duplicate coefficient vectors in one sample")
    keys = set(keyed[0])
    for k2 in keyed[1:]:
        if set(k2) != keys:
            raise RuntimeError(
                "weight samples disagree about the facet rows; "
                "the dimensions do not admit one symbolic system"
            )
    out = []
    for coeffs in keys:
        rhss = [km[coeffs] for km in keyed]
        A = [[ONE] + list(samples[i].values[: r - 1]) for i in range(r)]
        sol = _solve_linear(A, rhss[:r])
        for i in range(r, r + 3):
            fit = sol[0] + _dot(sol[1:], samples[i].values[: r - 1])
            if fit != rhss[i]:
                raise RuntimeError(
                    "right-hand side is not affine in the weights across samples"
                )
        if any(v.denominator != 1 for v in sol):
            raise RuntimeError("interpolated right-hand side is not integral")
        out.append(
            SymbolicFacet(
                coeffs=coeffs,
                offset=int(sol[0]),
                weight_coeffs=tuple(int(v) for v in sol[1:]) + (0,),
            )
        )
    out.sort(key=lambda f: (f.coeffs, f.offset, f.weight_coeffs), reverse=True)
    return SymbolicFacetSystem(dims=dims, facets=tuple(out))


# ----------------------------------------------------------------------
# dimension shifts and counting conventions


def lift_facet_particle(facet):
    """Row of the (N+1, d+1) polytope from a row of the (N, d) one: the
    leading coefficient repeats and raises the offset."""
    if isinstance(facet, SymbolicFacet):
        top = facet.coeffs[0]
        return SymbolicFacet(
            coeffs=(top,) + facet.coeffs,
            offset=facet.offset + top,
            weight_coeffs=facet.weight_coeffs,
        )
    top = facet.coeffs[0]
    return Facet(coeffs=(top,) + facet.coeffs, rhs=facet.rhs + top)


def lift_facet_orbital(facet):
    """Row of the (N, d+1) polytope from a row of the (N, d) one: a trailing
    zero coefficient is appended and the bound is unchanged."""
    if isinstance(facet, SymbolicFacet):
        return SymbolicFacet(
            coeffs=facet.coeffs + (0,),
            offset=facet.offset,
            weight_coeffs=facet.weight_coeffs,
        )
    return Facet(coeffs=facet.coeffs + (ZERO,), rhs=facet.rhs)


def reference_dims(r: int) -> ProblemDims:
    """Smallest particle and orbital numbers at which the length-r structure
    is fully resolved; counting conventions below are taken here."""
    N = max(r - 1, 2)
    d = max(N + r - 1, N + 1)
    return ProblemDims(N=N, d=d, r=r)


def generating_vertex_count(r: int, *, weights: WeightVector | None = None) -> int:
    dims = reference_dims(r)
    w = weights if weights is not None else WeightVector.dyadic(r)
    return len(generating_vertices(w, dims))


def facet_count(
    r: int, *, weights: WeightVector | None = None, certify: bool = True
) -> int:
    """Number of irredundant inequalities at the reference dims (background
    facts excluded by construction)."""
    dims = reference_dims(r)
    w = weights if weights is not None else WeightVector.dyadic(r)
    system = facets_numeric(w, dims, certify=certify)
    return len(system.facets)
