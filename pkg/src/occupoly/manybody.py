"""Dense many-fermion oracle on the wedge space of N orbitals out of d.

Second quantization with explicit fermionic signs, exact diagonalization,
weighted minimizing ensembles, one-particle reduced density matrices, and
natural occupation numbers.  Everything is dense and meant for desk scale
(configuration-space dimension capped at a few thousand); this module is
the ground truth the polytope and functional layers are validated against.

Basis and sign convention: configurations are ascending orbital tuples in
lexicographic order, and the basis state for (k_1 < ... < k_N) is
a^dag_{k_1} ... a^dag_{k_N} |vac>.  Acting with a_q or a^dag_q picks up
(-1)^m where m counts occupied orbitals strictly below q, i.e. the number
of transpositions needed to move the operator to its slot.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .fock import CapacityError, ProblemDims, enumerate_configs
from .polytope import WeightVector

HERMITICITY_TOL = 1e-12
DENSITY_TOL = 1e-10
RDM_TOL = 1e-9
BOUNDARY_GAP = 1e-9
DEFAULT_SPACE_CAP = 5000


class DegenerateBoundaryError(ValueError):
    """The eigenvalue gap at the edge of the weight support vanishes, so the
    minimizing ensemble is not unique."""


def _as_square(matrix, name: str) -> np.ndarray:
    arr = np.asarray(matrix)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {arr.shape}")
    return arr


def _check_hermitian(arr: np.ndarray, tol: float, name: str) -> None:
    if np.max(np.abs(arr - arr.conj().T)) > tol:
        raise ValueError(f"{name} is not Hermitian within {tol}")


@dataclass(frozen=True)
class OneBodyOperator:
    """d x d Hermitian single-orbital operator."""

    matrix: np.ndarray

    def __post_init__(self):
        arr = _as_square(self.matrix, "one-body matrix")
        _check_hermitian(arr, HERMITICITY_TOL, "one-body matrix")
        object.__setattr__(self, "matrix", arr)

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def diagonal(cls, values) -> "OneBodyOperator":
        return cls(np.diag(np.asarray(values, dtype=float)))


@dataclass(frozen=True)
class TwoBodyInteraction:
    """Pair interaction tensor V[p,q,r,s] (0-based orbitals).

    The operator it encodes is (1/4) sum_{pqrs} V[p,q,r,s]
    a^dag_p a^dag_q a_s a_r, so the tensor must be antisymmetric in (p,q)
    and in (r,s) and Hermitian under (p,q)<->(r,s) conjugation.
    """

    tensor: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.tensor)
        if arr.ndim != 4 or len(set(arr.shape)) != 1:
            raise ValueError(f"interaction tensor must be d^4, got shape {arr.shape}")
        if np.max(np.abs(arr + arr.transpose(1, 0, 2, 3))) > HERMITICITY_TOL:
            raise ValueError("interaction tensor is not antisymmetric in the first pair")
        if np.max(np.abs(arr + arr.transpose(0, 1, 3, 2))) > HERMITICITY_TOL:
            raise ValueError("interaction tensor is not antisymmetric in the second pair")
        if np.max(np.abs(arr - arr.transpose(2, 3, 0, 1).conj())) > HERMITICITY_TOL:
            raise ValueError("interaction tensor is not Hermitian")
        object.__setattr__(self, "tensor", arr)

    @property
    def d(self) -> int:
        return self.tensor.shape[0]

    @classmethod
    def zero(cls, d: int) -> "TwoBodyInteraction":
        return cls(np.zeros((d, d, d, d)))

    @classmethod
    def from_sparse(cls, d: int, entries) -> "TwoBodyInteraction":
        """Build the full tensor from entries (p, q, r, s, value), 1-based
        orbitals, expanding antisymmetry and Hermiticity automatically."""
        vals = [complex(e[4]) for e in entries]
        dtype = complex if any(v.imag != 0 for v in vals) else float
        arr = np.zeros((d, d, d, d), dtype=dtype)
        for (p, q, r, s, _), v in zip(entries, vals):
            if not all(1 <= k <= d for k in (p, q, r, s)):
                raise ValueError(f"orbital index out of range in entry {(p, q, r, s)}")
            if p == q or r == s:
                raise ValueError("diagonal pair entries are identically zero")
            v = v if dtype is complex else v.real
            images = {}
            for (a, b, c, e), sign in (
                ((p, q, r, s), 1),
                ((q, p, r, s), -1),
                ((p, q, s, r), -1),
                ((q, p, s, r), 1),
            ):
                images[(a - 1, b - 1, c - 1, e - 1)] = sign * v
                conj = v.conjugate() if dtype is complex else v
                images.setdefault((c - 1, e - 1, a - 1, b - 1), sign * conj)
            for idx, value in images.items():
                if arr[idx] != 0 and abs(arr[idx] - value) > HERMITICITY_TOL:
                    raise ValueError(f"conflicting duplicate entry at {idx}")
                arr[idx] = value
        return cls(arr)


@dataclass(frozen=True)
class DensityOperator:
    """Hermitian positive-semidefinite matrix with unit trace on the
    configuration space."""

    matrix: np.ndarray

    def __post_init__(self):
        arr = _as_square(self.matrix, "density matrix")
        _check_hermitian(arr, DENSITY_TOL, "density matrix")
        if abs(np.trace(arr) - 1.0) > DENSITY_TOL:
            raise ValueError("density matrix trace must be 1")
        if np.linalg.eigvalsh(arr)[0] < -DENSITY_TOL:
            raise ValueError("density matrix must be positive semidefinite")
        object.__setattr__(self, "matrix", arr)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class OneRDM:
    """One-particle reduced density matrix: Hermitian, 0 <= gamma <= 1,
    trace equal to the particle number."""

    matrix: np.ndarray
    particle_number: int

    def __post_init__(self):
        arr = _as_square(self.matrix, "reduced density matrix")
        _check_hermitian(arr, RDM_TOL, "reduced density matrix")
        eigs = np.linalg.eigvalsh(arr)
        if eigs[0] < -RDM_TOL or eigs[-1] > 1.0 + RDM_TOL:
            raise ValueError("reduced density matrix eigenvalues must lie in [0, 1]")
        if abs(np.trace(arr).real - self.particle_number) > RDM_TOL:
            raise ValueError("reduced density matrix trace must equal the particle number")
        object.__setattr__(self, "matrix", arr)

    @property
    def d(self) -> int:
        return self.matrix.shape[0]


# ----------------------------------------------------------------------
# configuration bookkeeping


def config_index(config, dims: ProblemDims) -> int:
    """Position of an ascending orbital tuple in the lexicographic basis."""
    config = tuple(config)
    idx = 0
    prev = 0
    remaining = dims.N
    for k in config:
        for skipped in range(prev + 1, k):
            idx += comb(dims.d - skipped, remaining - 1)
        prev = k
        remaining -= 1
    return idx


def basis_state(config, dims: ProblemDims) -> np.ndarray:
    """Unit vector of the configuration in the lexicographic basis."""
    vec = np.zeros(comb(dims.d, dims.N))
    vec[config_index(config, dims)] = 1.0
    return vec


def _annihilate(mask: int, q: int):
    """Apply a_q to an occupation bitmask; None if empty, else (sign, mask)."""
    bit = 1 << (q - 1)
    if not mask & bit:
        return None
    below = bin(mask & (bit - 1)).count("1")
    return (-1) ** below, mask & ~bit


def _create(mask: int, p: int):
    """Apply a^dag_p to an occupation bitmask; None if occupied."""
    bit = 1 << (p - 1)
    if mask & bit:
        return None
    below = bin(mask & (bit - 1)).count("1")
    return (-1) ** below, mask | bit


def _config_mask(config) -> int:
    mask = 0
    for k in config:
        mask |= 1 << (k - 1)
    return mask


# ----------------------------------------------------------------------
# Hamiltonian assembly and diagonalization


def build_hamiltonian(
    h: OneBodyOperator,
    V: TwoBodyInteraction | None,
    dims: ProblemDims,
    *,
    space_cap: int = DEFAULT_SPACE_CAP,
) -> np.ndarray:
    """Matrix of h + V on the N-particle configuration space.

    Entries follow the lexicographic configuration basis and the ordered
    creation-operator sign convention described in the module docstring.
    """
    if h.d != dims.d:
        raise ValueError("one-body dimension must match the orbital count")
    if V is not None and V.d != dims.d:
        raise ValueError("interaction dimension must match the orbital count")
    D = comb(dims.d, dims.N)
    if D > space_cap:
        raise CapacityError(
            f"configuration space dimension {D} exceeds the cap {space_cap}"
        )
    configs = enumerate_configs(dims)
    index = {_config_mask(c): i for i, c in enumerate(configs)}
    complex_input = np.iscomplexobj(h.matrix) or (
        V is not None and np.iscomplexobj(V.tensor)
    )
    H = np.zeros((D, D), dtype=complex if complex_input else float)
    hm = h.matrix
    for k, config in enumerate(configs):
        mask = _config_mask(config)
        # one-body: move one particle from q to p (p = q included)
        for q in config:
            sign_q, reduced = _annihilate(mask, q)
            for p in range(1, dims.d + 1):
                if hm[p - 1, q - 1] == 0:
                    continue
                created = _create(reduced, p)
                if created is None:
                    continue
                sign_p, final = created
                H[index[final], k] += sign_q * sign_p * hm[p - 1, q - 1]
        if V is None:
            continue
        vt = V.tensor
        # two-body: remove the pair r < s, insert the pair p < q; the
        # 1/4 prefactor cancels against the four equal ordered variants
        for ri in range(len(config)):
            for si in range(ri + 1, len(config)):
                r, s = config[ri], config[si]
                sign_r, m1 = _annihilate(mask, r)
                sign_s, m2 = _annihilate(m1, s)
                for p in range(1, dims.d + 1):
                    cp = _create(m2, p)
                    if cp is None:
                        continue
                    for q in range(p + 1, dims.d + 1):
                        if vt[p - 1, q - 1, r - 1, s - 1] == 0:
                            continue
                        cq = _create(m2, q)
                        if cq is None:
                            continue
                        sign_q, m3 = cq
                        cp2 = _create(m3, p)
                        if cp2 is None:
                            continue
                        sign_p, final = cp2
                        H[index[final], k] += (
                            sign_r
                            * sign_s
                            * sign_q
                            * sign_p
                            * vt[p - 1, q - 1, r - 1, s - 1]
                        )
    return H


def spectrum(H) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and orthonormal eigenvector columns."""
    arr = _as_square(H, "Hamiltonian")
    _check_hermitian(arr, max(HERMITICITY_TOL, 1e-12 * max(1.0, float(np.max(np.abs(arr))))), "Hamiltonian")
    energies, vectors = np.linalg.eigh(arr)
    return energies, vectors


def _support_size(w: WeightVector) -> int:
    support = [j for j, v in enumerate(w.values, start=1) if v > 0]
    return support[-1] if support else 0


def gamma_min(H, w: WeightVector) -> DensityOperator:
    """Minimizing ensemble: weight w_j on the j-th lowest eigenstate.

    Raises DegenerateBoundaryError when the spectrum is degenerate across
    the edge of the weight support, where the minimizer is not unique.
    """
    energies, vectors = spectrum(H)
    D = len(energies)
    r_eff = _support_size(w)
    if r_eff > D:
        raise ValueError("weight support exceeds the configuration space")
    if r_eff < D and energies[r_eff] - energies[r_eff - 1] <= BOUNDARY_GAP:
        raise DegenerateBoundaryError(
            f"eigenvalue gap {energies[r_eff] - energies[r_eff - 1]:.3e} at the "
            f"weight-support boundary (levels {r_eff}, {r_eff + 1}) is below "
            f"{BOUNDARY_GAP}; the minimizing ensemble is not unique"
        )
    out = np.zeros((D, D), dtype=vectors.dtype)
    for j in range(r_eff):
        v = vectors[:, j]
        out += float(w.values[j]) * np.outer(v, v.conj())
    return DensityOperator(out)


def ew_exact(H, w: WeightVector) -> float:
    """Weighted sum of the lowest eigenvalues: sum_j w_j E_j, E ascending."""
    energies, _ = spectrum(H)
    r_eff = _support_size(w)
    if r_eff > len(energies):
        raise ValueError("weight support exceeds the configuration space")
    return float(sum(float(w.values[j]) * energies[j] for j in range(r_eff)))


# ----------------------------------------------------------------------
# reduction to one particle


def one_rdm(gamma: DensityOperator | np.ndarray, dims: ProblemDims) -> OneRDM:
    """Contract an N-particle density operator to its one-particle matrix:
    entry (p, q) is the expectation of a^dag_q a_p."""
    arr = gamma.matrix if isinstance(gamma, DensityOperator) else np.asarray(gamma)
    configs = enumerate_configs(dims)
    D = comb(dims.d, dims.N)
    if arr.shape != (D, D):
        raise ValueError("density matrix shape does not match the configuration space")
    index = {_config_mask(c): i for i, c in enumerate(configs)}
    out = np.zeros((dims.d, dims.d), dtype=arr.dtype)
    # gamma_pq = Tr[G a^dag_q a_p] = sum_{JK} G[K,J] <J| a^dag_q a_p |K>
    for k, config in enumerate(configs):
        mask = _config_mask(config)
        for p in config:
            sign_p, reduced = _annihilate(mask, p)
            for q in range(1, dims.d + 1):
                created = _create(reduced, q)
                if created is None:
                    continue
                sign_q, final = created
                out[p - 1, q - 1] += sign_p * sign_q * arr[k, index[final]]
    matrix = out if np.iscomplexobj(out) else out.astype(float)
    return OneRDM(matrix=matrix, particle_number=dims.N)


def natural_occupations(gamma: OneRDM | np.ndarray) -> np.ndarray:
    """Eigenvalues of a one-particle matrix, sorted descending."""
    arr = gamma.matrix if isinstance(gamma, OneRDM) else np.asarray(gamma)
    return np.linalg.eigvalsh(arr)[::-1]


# ----------------------------------------------------------------------
# seeded random instances


def random_one_body(d: int, rng: np.random.Generator, *, scale: float = 1.0) -> OneBodyOperator:
    """Symmetric Gaussian matrix, the standard dense random one-body input."""
    a = rng.standard_normal((d, d))
    return OneBodyOperator(scale * (a + a.T) / 2.0)


def random_interaction(
    d: int, rng: np.random.Generator, *, scale: float = 1.0
) -> TwoBodyInteraction:
    """Random real pair interaction with the full tensor symmetries."""
    t = rng.standard_normal((d, d, d, d))
    t = t - t.transpose(1, 0, 2, 3)
    t = t - t.transpose(0, 1, 3, 2)
    t = (t + t.transpose(2, 3, 0, 1)) / 2.0
    return TwoBodyInteraction(scale * t / 4.0)


def random_weights(r: int, rng: np.random.Generator) -> WeightVector:
    """Flat Dirichlet draw sorted descending, rationalized exactly."""
    draw = sorted(rng.dirichlet(np.ones(r)), reverse=True)
    return WeightVector.from_floats([round(float(x), 12) for x in draw])
