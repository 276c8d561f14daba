"""Command-line interface.

JSON on stdout is the canonical output (schema version 1, keys sorted, no
timestamps, so identical configuration and seed give byte-identical
bytes); CSV is emitted only for figure data.  Symbolic facet systems are
cached per (N, d, r) under a content hash; corrupted entries are
recomputed with a warning.  Exit codes: 0 ok/member, 1 non-member or
property failure, 2 usage or capacity errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .fock import CapacityError, ProblemDims
from .polytope import (
    SymbolicFacetSystem,
    WeightVector,
    facets_numeric,
    facets_symbolic,
    generating_vertices,
    lift_facet_orbital,
    lift_facet_particle,
    membership,
    symbolic_vertices,
)

SCHEMA = 1
DEFAULT_R_CAP = 9
DEFAULT_SPACE_CAP = 5000
CACHE_ENV = "OCCUPOLY_CACHE_DIR"


class UsageError(ValueError):
    """Bad or inconsistent command-line input."""


@dataclass
class RunConfig:
    """Everything a subcommand needs, resolved from flags and environment."""

    dims: ProblemDims | None = None
    weights: WeightVector | None = None
    space_cap: int = DEFAULT_SPACE_CAP
    r_cap: int = DEFAULT_R_CAP
    cache_dir: Path = field(default_factory=lambda: _default_cache_dir())
    output: str | None = None
    seed: int = 0
    threads: int = 1
    verify: bool = False

    def __post_init__(self):
        if self.space_cap <= 0 or self.r_cap <= 0:
            raise UsageError("caps must be positive")
        if self.threads < 1:
            raise UsageError("thread count must be positive")

    def require_dims(self) -> ProblemDims:
        if self.dims is None:
            raise UsageError("this command needs --N and --d")
        if self.dims.r > self.r_cap:
            raise CapacityError(
                f"r={self.dims.r} exceeds the configured cap {self.r_cap}"
            )
        return self.dims

    def require_weights(self) -> WeightVector:
        if self.weights is None:
            raise UsageError("this command needs --w")
        return self.weights


# ----------------------------------------------------------------------
# parsing helpers


def _default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "occupoly"


def _parse_exact(token: str) -> Fraction:
    token = token.strip()
    try:
        return Fraction(token)
    except ValueError:
        return Fraction(str(float(token)))


def parse_weights(text: str) -> WeightVector:
    """Comma-separated decimals (or fractions); normalized to unit sum when
    within 1e-6, rejected otherwise."""
    values = [_parse_exact(t) for t in text.split(",") if t.strip()]
    if not values:
        raise UsageError("empty weight vector")
    total = sum(values)
    if abs(float(total) - 1.0) > 1e-6:
        raise UsageError(f"weights sum to {float(total)}, not 1 within 1e-6")
    try:
        return WeightVector.exact(tuple(v / total for v in values))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_vector(text: str) -> tuple[Fraction, ...]:
    return tuple(_parse_exact(t) for t in text.split(",") if t.strip())


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _load_one_body(args, d: int):
    from .manybody import OneBodyOperator

    if getattr(args, "h_diag", None):
        diag = [float(x) for x in args.h_diag.split(",")]
        if len(diag) != d:
            raise UsageError("--h-diag length must equal d")
        return OneBodyOperator(np.diag(diag))
    if getattr(args, "h_file", None):
        payload = _load_json(args.h_file)
        mat = np.array(payload["matrix"], dtype=float)
        if "matrix_imag" in payload:
            mat = mat + 1j * np.array(payload["matrix_imag"], dtype=float)
        return OneBodyOperator(mat)
    raise UsageError("provide --h-diag or --h-file")


def _load_interaction(args, d: int):
    from .manybody import TwoBodyInteraction

    if getattr(args, "v_file", None):
        payload = _load_json(args.v_file)
        entries = [tuple(e) for e in payload["entries"]]
        return TwoBodyInteraction.from_sparse(int(payload.get("d", d)), entries)
    return TwoBodyInteraction.zero(d)


def _emit(payload: dict, config: RunConfig) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if config.output and config.output != "-":
        Path(config.output).write_text(text)
    else:
        sys.stdout.write(text)


def _dims_payload(dims: ProblemDims) -> dict:
    return {"N": dims.N, "d": dims.d, "r": dims.r}


def _error_payload(message: str, kind: str) -> dict:
    return {"schema": SCHEMA, "error": {"kind": kind, "message": message}}


# ----------------------------------------------------------------------
# symbolic facet cache


def _canonical(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _cache_path(cache_dir: Path, dims: ProblemDims) -> Path:
    return cache_dir / f"facets-N{dims.N}-d{dims.d}-r{dims.r}.json"


def _write_cache(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    record = {
        "schema": SCHEMA,
        "sha256": hashlib.sha256(_canonical(payload).encode()).hexdigest(),
        "payload": payload,
    }
    path.write_text(json.dumps(record, indent=2, sort_keys=True) + "\n")


def load_symbolic_system(
    dims: ProblemDims, cache_dir: Path, *, verify: bool = False
) -> tuple[SymbolicFacetSystem, dict]:
    """Cached symbolic facet system plus cache metadata.

    A hash mismatch or unreadable entry triggers recomputation with a
    warning; --verify re-derives and compares against the cached payload."""
    path = _cache_path(cache_dir, dims)
    cached_payload = None
    status = "cold"
    if path.exists():
        try:
            record = json.loads(path.read_text())
            payload = record["payload"]
            digest = hashlib.sha256(_canonical(payload).encode()).hexdigest()
            if digest != record.get("sha256"):
                raise ValueError("content hash mismatch")
            cached_payload = payload
            status = "warm"
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            print(
                f"warning: cache entry {path} is corrupted ({exc}); recomputing",
                file=sys.stderr,
            )
            status = "recomputed"
    if cached_payload is not None and not verify:
        return SymbolicFacetSystem.from_dict(cached_payload), {
            "cache": status,
            "verified": False,
        }
    system = facets_symbolic(dims)
    payload = system.to_dict()
    if verify and cached_payload is not None:
        if _canonical(payload) != _canonical(cached_payload):
            raise RuntimeError(
                "cache verification failed: cached facet system differs "
                "from the recomputed one"
            )
        return system, {"cache": status, "verified": True}
    _write_cache(path, payload)
    return system, {"cache": status, "verified": verify}


# ----------------------------------------------------------------------
# facet rendering


def _facet_records(system: SymbolicFacetSystem, up: SymbolicFacetSystem) -> list[dict]:
    """JSON rows with the particle-number coefficient re-verified per row:
    a row whose particle-lift is a facet one particle up scales with N;
    a row unchanged (orbital lift) one particle up does not."""
    up_rows = {(f.coeffs, f.offset, f.weight_coeffs) for f in up.facets}
    records = []
    for f in system.facets:
        lifted = lift_facet_particle(f)
        padded = lift_facet_orbital(f)
        if (lifted.coeffs, lifted.offset, lifted.weight_coeffs) in up_rows:
            nc = int(f.coeffs[0])
        elif (padded.coeffs, padded.offset, padded.weight_coeffs) in up_rows:
            nc = 0
        else:
            nc = None
        a0 = f.offset if nc is None else f.offset - nc * system.dims.N
        coeffs = list(f.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        records.append(
            {
                "c": coeffs,
                "a0": a0,
                "a": list(f.weight_coeffs),
                "nc": nc,
                "render": _render_row(f.coeffs, nc, a0, f.weight_coeffs),
                "normalization": _render_rhs(nc, a0, f.weight_coeffs).replace(" ", "")
                + " form",
            }
        )
    return records


def _render_rhs(nc, a0: int, wc) -> str:
    parts = []
    if nc:
        parts.append(f"{nc}N" if nc != 1 else "N")
    if a0 or not parts:
        if parts:
            parts.append(f"+ {a0}" if a0 >= 0 else f"- {-a0}")
        else:
            parts.append(str(a0))
    for j, c in enumerate(wc, start=1):
        if c == 0:
            continue
        mag = f"{abs(c)} w{j}" if abs(c) != 1 else f"w{j}"
        parts.append(f"+ {mag}" if c > 0 else f"- {mag}")
    return " ".join(parts).replace("+ -", "- ")


def _render_row(coeffs, nc, a0: int, wc) -> str:
    lhs = " + ".join(
        f"{c} lam{i}" if c != 1 else f"lam{i}"
        for i, c in enumerate(coeffs, start=1)
        if c != 0
    )
    return f"{lhs or '0'} <= {_render_rhs(nc, a0, wc)}"


def _vertex_entry(row, r: int) -> str:
    flags = [j for j, f in enumerate(row, start=1) if f]
    if not flags:
        return "0"
    if len(flags) == r:
        return "1"
    return "+".join(f"w{j}" for j in flags)


# ----------------------------------------------------------------------
# subcommands


def cmd_sequences(config: RunConfig, args) -> int:
    from .chambers import enumerate_sequences

    dims = config.require_dims()
    seqs = enumerate_sequences(dims, r_cap=config.r_cap)
    payload = {
        "schema": SCHEMA,
        "dims": _dims_payload(dims),
        "count": len(seqs),
        "sequences": [[sorted(c) for c in seq] for seq in seqs],
    }
    _emit(payload, config)
    return 0


def cmd_vertices(config: RunConfig, args) -> int:
    dims = config.require_dims()
    verts = symbolic_vertices(dims)
    records = []
    for v in verts:
        rec = {
            "occupancy": [list(row) for row in v.rows],
            "entries": [_vertex_entry(row, dims.r) for row in v.rows],
        }
        if config.weights is not None:
            inst = v.instantiate(config.weights)
            rec["numeric"] = [float(x) for x in inst]
            rec["numeric_exact"] = [str(x) for x in inst]
        records.append(rec)
    payload = {
        "schema": SCHEMA,
        "dims": _dims_payload(dims),
        "count": len(records),
        "vertices": records,
    }
    if config.weights is not None:
        payload["weights"] = [str(v) for v in config.weights.values]
        payload["distinct_numeric"] = len(
            generating_vertices(config.weights, dims)
        )
    _emit(payload, config)
    return 0


def cmd_facets(config: RunConfig, args) -> int:
    dims = config.require_dims()
    system, meta = load_symbolic_system(
        dims, config.cache_dir, verify=config.verify
    )
    up_dims = ProblemDims(N=dims.N + 1, d=dims.d + 1, r=dims.r)
    up, _ = load_symbolic_system(up_dims, config.cache_dir)
    # cache status goes to stderr so warm and cold runs stay byte-identical
    print(f"cache: {meta['cache']}", file=sys.stderr)
    if meta["verified"]:
        print("cache: verified against recomputation", file=sys.stderr)
    payload = {
        "schema": SCHEMA,
        "dims": _dims_payload(dims),
        "count": len(system.facets),
        "facets": _facet_records(system, up),
    }
    if config.weights is not None:
        numeric = facets_numeric(config.weights, dims)
        payload["weights"] = [str(v) for v in config.weights.values]
        payload["numeric_facets"] = [
            {
                "coeffs": [str(c) for c in f.coeffs],
                "rhs": str(f.rhs),
                "rhs_float": float(f.rhs),
                "render": f.describe(),
            }
            for f in numeric.facets
        ]
        payload["numeric_count"] = len(numeric.facets)
    _emit(payload, config)
    return 0


def cmd_member(config: RunConfig, args) -> int:
    dims = config.require_dims()
    w = config.require_weights()
    lam = parse_vector(args.lam)
    if len(lam) != dims.d:
        raise UsageError("--lam length must equal d")
    system = facets_numeric(w, dims)
    result = membership(lam, dims, w, system=system, tol=Fraction(1, 10**9))
    payload = {
        "schema": SCHEMA,
        "dims": _dims_payload(dims),
        "weights": [str(v) for v in w.values],
        "lam": [str(v) for v in lam],
        "member": result.member,
        "slacks": [
            {
                "facet": f.describe(),
                "slack": str(s),
                "slack_float": float(s),
            }
            for f, s in zip(system.facets, result.slacks)
        ],
        "violated": list(result.violated),
    }
    _emit(payload, config)
    return 0 if result.member else 1


def cmd_spectrum(config: RunConfig, args) -> int:
    from .manybody import build_hamiltonian, spectrum

    dims = config.require_dims()
    h = _load_one_body(args, dims.d)
    V = _load_interaction(args, dims.d)
    H = build_hamiltonian(h, V, dims, space_cap=config.space_cap)
    energies, _ = spectrum(H)
    payload = {
        "schema": SCHEMA,
        "dims": _dims_payload(dims),
        "count": len(energies),
        "energies": [float(e) for e in energies],
    }
    _emit(payload, config)
    return 0


def cmd_energy(config: RunConfig, args) -> int:
    from .functional import SolverOptions, ew_via_convex
    from .manybody import (
        build_hamiltonian,
        ew_exact,
        gamma_min,
        natural_occupations,
        one_rdm,
    )

    dims = config.require_dims()
    w = config.require_weights()
    h = _load_one_body(args, dims.d)
    V = _load_interaction(args, dims.d)
    H = build_hamiltonian(h, V, dims, space_cap=config.space_cap)
    exact = ew_exact(H, w)
    opts = SolverOptions(seed=config.seed)
    convex = ew_via_convex(h, V, w, dims, opts)
    payload = {
        "schema": SCHEMA,
        "dims": _dims_payload(dims),
        "weights": [str(v) for v in w.values],
        "exact": exact,
        "convex": convex,
        "difference": abs(exact - convex),
        "agree": abs(exact - convex) <= 1e-6 * (1 + abs(exact)),
    }
    if not args.no_occupations:
        rdm = one_rdm(gamma_min(H, w), dims)
        payload["occupations"] = [float(x) for x in natural_occupations(rdm)]
    _emit(payload, config)
    return 0


def cmd_functional(config: RunConfig, args) -> int:
    from .functional import InfeasibleError, SolverOptions, f_w, fbar_w
    from .manybody import OneRDM

    dims = config.require_dims()
    w = config.require_weights()
    gamma_payload = _load_json(args.gamma_file)
    mat = np.array(gamma_payload["matrix"], dtype=float)
    if "matrix_imag" in gamma_payload:
        mat = mat + 1j * np.array(gamma_payload["matrix_imag"], dtype=float)
    gamma = OneRDM(matrix=mat, particle_number=dims.N)
    V = _load_interaction(args, dims.d)
    opts = SolverOptions(seed=config.seed)
    try:
        if args.mode == "relaxed":
            res = fbar_w(gamma, V, w, opts, return_details=True)
            payload = {
                "schema": SCHEMA,
                "mode": "relaxed",
                "value": res.value,
                "residual": res.affine_residual,
                "gap": res.gap,
                "iterations": res.iterations,
            }
        else:
            res = f_w(gamma, V, w, opts, return_details=True)
            payload = {
                "schema": SCHEMA,
                "mode": "orbit",
                "value": res.value,
                "residual": res.affine_residual,
            }
    except InfeasibleError as exc:
        _emit(_error_payload(str(exc), "infeasible"), config)
        return 1
    payload["dims"] = _dims_payload(dims)
    payload["weights"] = [str(v) for v in w.values]
    _emit(payload, config)
    return 0


def cmd_figure_s1(config: RunConfig, args) -> int:
    from .figures import figure_data, render_png, write_csv

    weight_list = [parse_weights(part) for part in args.w_list.split(";") if part]
    h_diag = [float(x) for x in args.h_diag.split(",")]
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    data = figure_data(weight_list, N=args.N or 2, d=args.d or 3, h_diag=h_diag)
    csv_path = out_dir / "figure_s1.csv"
    write_csv(data, csv_path)
    png_path = None
    if not args.no_plot:
        png_path = out_dir / "figure_s1.png"
        render_png(data, png_path)
    payload = {
        "schema": SCHEMA,
        "csv": str(csv_path),
        "png": str(png_path) if png_path else None,
        "series": [
            {
                "label": s.label,
                "vertex_count": len(s.boundary),
                "minimizer": [s.minimizer[0], s.minimizer[1]],
            }
            for s in data
        ],
    }
    _emit(payload, config)
    return 0


def cmd_validate(config: RunConfig, args) -> int:
    from .functional import SolverOptions, ew_via_convex
    from .manybody import (
        DegenerateBoundaryError,
        build_hamiltonian,
        ew_exact,
        gamma_min,
        natural_occupations,
        one_rdm,
        random_interaction,
        random_one_body,
        random_weights,
    )

    trials = args.trials
    rng = np.random.default_rng(config.seed)
    checks = {
        "variational_principle": {"passed": 0, "failed": 0},
        "polytope_consistency": {"passed": 0, "failed": 0},
        "route_agreement": {"passed": 0, "failed": 0},
    }
    failures = []
    done = 0
    while done < trials:
        N = int(rng.integers(2, 4))
        d = int(rng.integers(N + 1, 6))
        r = int(rng.integers(1, 4))
        dims = ProblemDims(N=N, d=d, r=r)
        h = random_one_body(d, rng)
        V = random_interaction(d, rng, scale=0.5)
        w = random_weights(r, rng)
        H = build_hamiltonian(h, V, dims, space_cap=config.space_cap)
        try:
            g = gamma_min(H, w)
        except DegenerateBoundaryError:
            continue
        done += 1
        exact = ew_exact(H, w)
        # variational principle: random ensembles never undercut the
        # weighted ground energy
        ok = True
        D = H.shape[0]
        w_pad = np.zeros(D)
        for j, v in enumerate(w.values[:D]):
            w_pad[j] = float(v)
        for _ in range(3):
            q, _ = np.linalg.qr(rng.standard_normal((D, D)))
            ens = (q * w_pad) @ q.T
            energy = float(np.real(np.sum(H.conj() * ens)))
            if energy < exact - 1e-9:
                ok = False
        _tally(checks["variational_principle"], ok, failures,
               f"variational: dims={dims} energy undercut")
        # polytope consistency: the minimizing ensemble's occupations
        # lie inside the polytope
        rdm = one_rdm(g, dims)
        occ = [round(float(x), 15) for x in natural_occupations(rdm)]
        system = facets_numeric(w, dims)
        ok = system.contains(occ, tol=Fraction(1, 10**9))
        _tally(checks["polytope_consistency"], ok, failures,
               f"polytope: dims={dims} occupations outside")
        # route agreement: convex minimization matches exact diagonalization
        convex = ew_via_convex(h, V, w, dims, SolverOptions(seed=config.seed))
        ok = abs(convex - exact) <= 1e-6 * (1 + abs(exact))
        _tally(checks["route_agreement"], ok, failures,
               f"routes: dims={dims} |{convex} - {exact}|")
    all_ok = not failures
    payload = {
        "schema": SCHEMA,
        "trials": trials,
        "seed": config.seed,
        "checks": [
            {"name": name, **counts} for name, counts in sorted(checks.items())
        ] if trials else [],
        "failures": failures,
        "ok": all_ok,
    }
    _emit(payload, config)
    return 0 if all_ok else 1


def _tally(counter: dict, ok: bool, failures: list, message: str) -> None:
    if ok:
        counter["passed"] += 1
    else:
        counter["failed"] += 1
        failures.append(message)


# ----------------------------------------------------------------------
# argument wiring


def _add_common(p: argparse.ArgumentParser, *, dims: bool = True) -> None:
    if dims:
        p.add_argument("--N", type=int, help="particle number")
        p.add_argument("--d", type=int, help="orbital count")
        p.add_argument("--r", type=int, help="ensemble length (defaults to len(w))")
    p.add_argument("--w", type=str, help="weights, comma-separated, sum 1")
    p.add_argument("--out", type=str, help="output file (default stdout)")
    p.add_argument("--cache-dir", type=str, help=f"cache dir (default ${CACHE_ENV} or ~/.cache/occupoly)")
    p.add_argument("--space-cap", type=int, default=DEFAULT_SPACE_CAP,
                   help="largest allowed configuration count")
    p.add_argument("--r-cap", type=int, default=DEFAULT_R_CAP,
                   help="largest allowed ensemble length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1,
                   help="worker bound (solvers are single-threaded)")
    p.add_argument("--verify", action="store_true",
                   help="re-derive cached results and compare")


def _add_hamiltonian(p: argparse.ArgumentParser) -> None:
    p.add_argument("--h-diag", type=str, help="diagonal one-body energies")
    p.add_argument("--h-file", type=str, help="JSON file with one-body matrix")
    p.add_argument("--v-file", type=str, help="JSON file with sparse interaction")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="occupoly",
        description="Spectral polytopes of weighted fermionic ensembles: "
        "vertices, facets, membership, and cross-validated energies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sequences", help="realizable configuration sequences")
    _add_common(p)

    p = sub.add_parser("vertices", help="generating vertices, symbolic and numeric")
    _add_common(p)

    p = sub.add_parser("facets", help="facet system, symbolic (cached) and numeric")
    _add_common(p)

    p = sub.add_parser("member", help="polytope membership with slacks")
    _add_common(p)
    p.add_argument("--lam", type=str, required=True,
                   help="occupation vector, comma-separated")

    p = sub.add_parser("spectrum", help="many-body spectrum of h + V")
    _add_common(p)
    _add_hamiltonian(p)

    p = sub.add_parser("energy", help="weighted ground energy, both routes")
    _add_common(p)
    _add_hamiltonian(p)
    p.add_argument("--no-occupations", action="store_true",
                   help="skip the minimizer's natural occupations")

    p = sub.add_parser("functional", help="universal functional at a reduced matrix")
    _add_common(p)
    p.add_argument("--mode", choices=("relaxed", "orbit"), default="relaxed",
                   help="relaxed = convex lower envelope, orbit = fixed-spectrum upper bound")
    p.add_argument("--gamma-file", type=str, required=True,
                   help="JSON file with the one-particle matrix")
    p.add_argument("--v-file", type=str, help="JSON file with sparse interaction")

    p = sub.add_parser("figure-s1", help="planar polytope figure data (CSV + PNG)")
    _add_common(p)
    p.add_argument("--w-list", type=str,
                   default="1,0,0;0.7,0.3,0;0.5,0.3,0.2",
                   help="semicolon-separated weight vectors")
    p.add_argument("--h-diag", type=str, default="0,1,2")
    p.add_argument("--out-dir", type=str, default=".",
                   help="directory for figure_s1.csv and figure_s1.png")
    p.add_argument("--no-plot", action="store_true",
                   help="write only the CSV")

    p = sub.add_parser("validate", help="cross-module property suite")
    _add_common(p)
    p.add_argument("--trials", type=int, default=20)

    return parser


def _config_from(args) -> RunConfig:
    dims = None
    if getattr(args, "N", None) is not None and getattr(args, "d", None) is not None:
        w = parse_weights(args.w) if getattr(args, "w", None) else None
        r = getattr(args, "r", None)
        if r is None:
            r = w.r if w is not None else 1
        dims = ProblemDims(N=args.N, d=args.d, r=r)
    elif getattr(args, "w", None):
        pass
    weights = parse_weights(args.w) if getattr(args, "w", None) else None
    cache_dir = Path(args.cache_dir) if getattr(args, "cache_dir", None) else _default_cache_dir()
    return RunConfig(
        dims=dims,
        weights=weights,
        space_cap=args.space_cap,
        r_cap=args.r_cap,
        cache_dir=cache_dir,
        output=getattr(args, "out", None),
        seed=args.seed,
        threads=args.threads,
        verify=args.verify,
    )


_HANDLERS = {
    "sequences": cmd_sequences,
    "vertices": cmd_vertices,
    "facets": cmd_facets,
    "member": cmd_member,
    "spectrum": cmd_spectrum,
    "energy": cmd_energy,
    "functional": cmd_functional,
    "figure-s1": cmd_figure_s1,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    from .manybody import DegenerateBoundaryError

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from(args)
        return _HANDLERS[args.command](config, args)
    except DegenerateBoundaryError as exc:
        sys.stdout.write(
            json.dumps(
                _error_payload(str(exc), "degenerate"), indent=2, sort_keys=True
            )
            + "\n"
        )
        return 2
    except (UsageError, ValueError) as exc:
        sys.stdout.write(
            json.dumps(_error_payload(str(exc), "usage"), indent=2, sort_keys=True)
            + "\n"
        )
        return 2
    except CapacityError as exc:
        sys.stdout.write(
            json.dumps(_error_payload(str(exc), "capacity"), indent=2, sort_keys=True)
            + "\n"
        )
        return 2
    except RuntimeError as exc:
        sys.stdout.write(
            json.dumps(_error_payload(str(exc), "failure"), indent=2, sort_keys=True)
            + "\n"
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
