"""Spectral projection, relaxed and fixed-spectrum functionals.

Oracles: an exact active-set KKT solve in rational arithmetic for the
vector projection, a convex reference solve for the matrix projection,
closed-form linear minimization, and the dense many-fermion module for
end-to-end energies.
"""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from occupoly.fock import ProblemDims
from occupoly.functional import (
    FunctionalResult,
    InfeasibleError,
    SolverOptions,
    SpectralSet,
    ew_via_convex,
    f_w,
    fbar_w,
    project_occupation_vector,
    project_spectral,
    spectral_lmo_value,
)
from occupoly.manybody import (
    DegenerateBoundaryError,
    OneBodyOperator,
    OneRDM,
    build_hamiltonian,
    ew_exact,
    gamma_min,
    one_rdm,
    random_interaction,
    random_one_body,
    random_weights,
)
from occupoly.polytope import WeightVector

F = Fraction


def exact_projection_oracle(y, w):
    """Projection of descending y onto {x descending : x majorized by w},
    in exact arithmetic by exhaustive search: the correction z = y - x is
    constant on consecutive blocks with nonincreasing block values (the
    isotonic-fit structure), and on the optimum each block value is the
    block mean of y - w.  Enumerating all block partitions and keeping the
    feasible candidate nearest to y therefore recovers the projection."""
    y = [F(v) for v in y]
    w = [F(v) for v in w]
    n = len(y)
    best = None
    for cuts in itertools.product((0, 1), repeat=n - 1):
        blocks = []
        start = 0
        for i, c in enumerate(cuts, start=1):
            if c:
                blocks.append((start, i))
                start = i
        blocks.append((start, n))
        vals = [
            (sum(y[lo:hi]) - sum(w[lo:hi])) / (hi - lo) for lo, hi in blocks
        ]
        if any(a < b for a, b in zip(vals, vals[1:])):
            continue
        x = list(y)
        for (lo, hi), v in zip(blocks, vals):
            for k in range(lo, hi):
                x[k] = y[k] - v
        # feasibility: descending, partial sums below w's, equal totals
        if any(a < b for a, b in zip(x, x[1:])):
            continue
        run_x, run_w, feas = F(0), F(0), True
        for k in range(n):
            run_x += x[k]
            run_w += w[k]
            if run_x > run_w if k < n - 1 else run_x != run_w:
                feas = False
                break
        if not feas:
            continue
        dist = sum((a - b) ** 2 for a, b in zip(x, y))
        if best is None or dist < best[0]:
            best = (dist, tuple(x))
    return best[1]


def random_feasible_rdm(dims, w, rng):
    """Contraction of a random spectral-set ensemble: always feasible."""
    D = dims.num_configs
    q, _ = np.linalg.qr(rng.standard_normal((D, D)))
    w_pad = np.zeros(D)
    for j, v in enumerate(w.values[:D]):
        w_pad[j] = float(v)
    G = (q * w_pad) @ q.T
    return one_rdm(G, dims), G


# ----------------------------------------------------------------------
# projections


def test_vector_projection_against_exact_oracle():
    rng = np.random.default_rng(3)
    for _ in range(60):
        n = int(rng.integers(2, 6))
        y = sorted((F(int(v), 16) for v in rng.integers(-8, 24, size=n)), reverse=True)
        w_raw = sorted((F(int(v), 16) for v in rng.integers(0, 16, size=n)), reverse=True)
        total = sum(w_raw)
        if total == 0:
            continue
        w = [v / total for v in w_raw]
        # match totals so the fixed-trace projection is the whole story
        shift = (sum(y) - 1) / n
        y = [v - shift for v in y]
        got = project_occupation_vector(
            np.array([float(v) for v in y]), np.array([float(v) for v in w])
        )
        want = exact_projection_oracle(y, w)
        assert np.max(np.abs(got - np.array([float(v) for v in want]))) < 1e-12


def test_vector_projection_fixed_point():
    w = np.array([0.6, 0.4, 0.0])
    x = np.array([0.5, 0.3, 0.2])  # already majorized
    assert np.allclose(project_occupation_vector(x, w), x)


def test_matrix_projection_known_value():
    """Projecting the pure state diag(1,0,0) onto spectra majorized by
    (0.6, 0.4, 0) gives spectrum (0.6, 0.2, 0.2): the top eigenvalue is
    clipped and the remainder spreads evenly (isotonic fit), closer in
    Frobenius norm than (0.6, 0.4, 0)."""
    w = WeightVector.exact((F(3, 5), F(2, 5)))
    got = project_spectral(np.diag([1.0, 0.0, 0.0]), w)
    eigs = np.sort(np.linalg.eigvalsh(got))[::-1]
    assert np.max(np.abs(eigs - np.array([0.6, 0.2, 0.2]))) < 1e-12
    # and it beats the naive clip
    naive = np.diag([0.6, 0.4, 0.0])
    assert np.linalg.norm(got - np.diag([1.0, 0, 0])) < np.linalg.norm(
        naive - np.diag([1.0, 0, 0])
    )


def test_matrix_projection_idempotent_and_invariant():
    rng = np.random.default_rng(21)
    w = WeightVector.exact((F(1, 2), F(1, 3), F(1, 6)))
    A = rng.standard_normal((4, 4))
    X = (A + A.T) / 8.0 + np.eye(4) / 4.0
    P = project_spectral(X, w)
    P2 = project_spectral(P, w)
    assert np.max(np.abs(P - P2)) < 1e-10
    s = SpectralSet(dims=ProblemDims(N=1, d=4), weights=w)
    # eigenbasis is preserved: P commutes with X
    assert np.max(np.abs(P @ X - X @ P)) < 1e-10


def test_matrix_projection_contains():
    rng = np.random.default_rng(22)
    w = WeightVector.exact((F(2, 3), F(1, 3)))
    dims = ProblemDims(N=2, d=4, r=2)
    s = SpectralSet(dims=dims, weights=w)
    D = s.space_dim
    A = rng.standard_normal((D, D))
    X = (A + A.T) / 10.0
    X = X - np.eye(D) * (np.trace(X) - 1.0) / D  # unit trace
    P = project_spectral(X, w)
    assert s.contains(P)
    assert not s.contains(X + np.eye(D))


def test_matrix_projection_rejects_non_hermitian():
    w = WeightVector.exact((1,))
    with pytest.raises(ValueError):
        project_spectral(np.array([[0.0, 1.0], [0.0, 0.0]]), w)


# ----------------------------------------------------------------------
# linear minimization oracle


def test_lmo_value_exact():
    """min Tr[A X] over the spectral set pairs largest weights with lowest
    eigenvalues; verified against brute minimization over random points."""
    rng = np.random.default_rng(33)
    w = WeightVector.exact((F(1, 2), F(3, 10), F(1, 5)))
    for _ in range(10):
        D = 4
        A = rng.standard_normal((D, D))
        A = A + A.T
        lo = spectral_lmo_value(A, w)
        eigs = np.linalg.eigvalsh(A)
        want = 0.5 * eigs[0] + 0.3 * eigs[1] + 0.2 * eigs[2]
        assert abs(lo - want) < 1e-12
        # every random spectral-set point scores at least lo
        w_pad = np.array([0.5, 0.3, 0.2, 0.0])
        for _ in range(20):
            q, _ = np.linalg.qr(rng.standard_normal((D, D)))
            X = (q * w_pad) @ q.T
            assert float(np.sum(A * X)) >= lo - 1e-10


# ----------------------------------------------------------------------
# relaxed functional


def test_fbar_zero_interaction_is_zero():
    rng = np.random.default_rng(41)
    dims = ProblemDims(N=2, d=3, r=2)
    w = WeightVector.exact((F(7, 10), F(3, 10)))
    gamma, _ = random_feasible_rdm(dims, w, rng)
    from occupoly.manybody import TwoBodyInteraction

    res = fbar_w(gamma, TwoBodyInteraction.zero(3), w, return_details=True)
    assert isinstance(res, FunctionalResult)
    assert abs(res.value) < 1e-9
    assert res.converged and res.gap is not None


def test_fbar_bounded_by_known_ensemble():
    """fbar at the contraction of a known ensemble never exceeds that
    ensemble's interaction energy (it minimizes over a larger set)."""
    rng = np.random.default_rng(43)
    dims = ProblemDims(N=2, d=4, r=2)
    w = WeightVector.exact((F(3, 5), F(2, 5)))
    V = random_interaction(4, rng, scale=0.7)
    from occupoly.manybody import build_hamiltonian as _bh

    H_V = _bh(OneBodyOperator(np.zeros((4, 4))), V, dims)
    for _ in range(5):
        gamma, G = random_feasible_rdm(dims, w, rng)
        known = float(np.sum(H_V * G))
        val, _ = fbar_w(gamma, V, w)
        assert val <= known + 1e-6


def test_fbar_envelope_identity_at_minimizer():
    """E_w = Tr[h gamma*] + fbar(gamma*) at the exact minimizer's
    contraction: the relaxed functional closes the energy gap exactly."""
    rng = np.random.default_rng(47)
    count = 0
    while count < 5:
        d = int(rng.integers(3, 5))
        N = int(rng.integers(2, min(d, 4)))
        r = int(rng.integers(1, 4))
        dims = ProblemDims(N=N, d=d, r=r)
        h = random_one_body(d, rng)
        V = random_interaction(d, rng, scale=0.5)
        w = random_weights(r, rng)
        H = build_hamiltonian(h, V, dims)
        try:
            G = gamma_min(H, w)
        except DegenerateBoundaryError:
            continue
        count += 1
        gamma = one_rdm(G, dims)
        e_exact = ew_exact(H, w)
        val, _ = fbar_w(gamma, V, w)
        one_body = float(np.real(np.sum(h.matrix.conj().T * gamma.matrix)))
        assert abs(one_body + val - e_exact) < 1e-6 * (1 + abs(e_exact))


def test_fbar_infeasible_rejected():
    dims = ProblemDims(N=2, d=3, r=2)
    w = WeightVector.exact((F(7, 10), F(3, 10)))
    # occupations (1, 1, 0) need w_1 = 1; infeasible here
    gamma = OneRDM(matrix=np.diag([1.0, 1.0, 0.0]), particle_number=2)
    from occupoly.manybody import TwoBodyInteraction

    with pytest.raises(InfeasibleError):
        fbar_w(gamma, TwoBodyInteraction.zero(3), w)


def test_solver_options_validation():
    with pytest.raises(ValueError):
        SolverOptions(tolerance=0.0)
    with pytest.raises(ValueError):
        SolverOptions(restart_count=0)


# ----------------------------------------------------------------------
# fixed-spectrum functional and the envelope


def test_envelope_inequality_random():
    """fbar <= f_w + 1e-6 on random feasible reduced matrices."""
    rng = np.random.default_rng(53)
    dims = ProblemDims(N=2, d=4, r=2)
    w = WeightVector.exact((F(3, 5), F(2, 5)))
    V = random_interaction(4, rng, scale=0.6)
    for _ in range(5):
        gamma, _ = random_feasible_rdm(dims, w, rng)
        lower, _ = fbar_w(gamma, V, w)
        upper = f_w(gamma, V, w)
        assert lower <= upper + 1e-6


def test_f_w_zero_interaction():
    rng = np.random.default_rng(59)
    dims = ProblemDims(N=2, d=3, r=2)
    w = WeightVector.exact((F(7, 10), F(3, 10)))
    gamma, _ = random_feasible_rdm(dims, w, rng)
    from occupoly.manybody import TwoBodyInteraction

    res = f_w(gamma, TwoBodyInteraction.zero(3), w, return_details=True)
    assert abs(res.value) < 1e-9
    assert res.affine_residual < 1e-6


def test_f_w_feasible_value_is_achievable():
    """f_w at the contraction of a known spectrum-w ensemble is at most
    that ensemble's energy (the known ensemble is a feasible point)."""
    rng = np.random.default_rng(61)
    dims = ProblemDims(N=2, d=4, r=2)
    w = WeightVector.exact((F(3, 5), F(2, 5)))
    V = random_interaction(4, rng, scale=0.7)
    H_V = build_hamiltonian(OneBodyOperator(np.zeros((4, 4))), V, dims)
    gamma, G = random_feasible_rdm(dims, w, rng)
    known = float(np.sum(H_V * G))
    val = f_w(gamma, V, w)
    assert val <= known + 1e-6


# ----------------------------------------------------------------------
# energy routes


def test_route_agreement_random():
    rng = np.random.default_rng(67)
    done = 0
    while done < 8:
        N = int(rng.integers(2, 4))
        d = int(rng.integers(N + 1, 6))
        r = int(rng.integers(1, 4))
        dims = ProblemDims(N=N, d=d, r=r)
        h = random_one_body(d, rng)
        V = random_interaction(d, rng, scale=0.5)
        w = random_weights(r, rng)
        H = build_hamiltonian(h, V, dims)
        exact = ew_exact(H, w)
        convex = ew_via_convex(h, V, w, dims)
        assert abs(convex - exact) <= 1e-6 * (1 + abs(exact))
        done += 1


def test_route_agreement_details():
    dims = ProblemDims(N=2, d=3, r=2)
    h = OneBodyOperator(np.diag([0.0, 1.0, 2.0]))
    w = WeightVector.exact((F(7, 10), F(3, 10)))
    res = ew_via_convex(h, None, w, dims, return_details=True)
    assert isinstance(res, FunctionalResult)
    assert res.converged
    assert abs(res.value - 1.3) < 1e-6
