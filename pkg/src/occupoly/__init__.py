"""Spectral polytopes of weighted fermionic ensembles.

Occupation-number polytopes for ensembles whose spectrum is majorized by
a fixed weight vector: vertex and facet enumeration in exact arithmetic,
membership tests, the exact many-fermion reference solver, and convex /
fixed-spectrum functionals of the one-particle reduced matrix.
"""

from .chambers import Chamber, chamber, chamber_feasible, enumerate_sequences
from .fock import (
    CapacityError,
    ProblemDims,
    config_energy,
    enumerate_configs,
    gale_leq,
)
from .functional import (
    FunctionalResult,
    InfeasibleError,
    SolverOptions,
    SpectralSet,
    ew_via_convex,
    f_w,
    fbar_w,
    project_spectral,
    spectral_lmo_value,
)
from .manybody import (
    DegenerateBoundaryError,
    DensityOperator,
    OneBodyOperator,
    OneRDM,
    TwoBodyInteraction,
    build_hamiltonian,
    ew_exact,
    gamma_min,
    natural_occupations,
    one_rdm,
    spectrum,
)
from .polytope import (
    Facet,
    FacetSystem,
    MembershipResult,
    SymbolicFacet,
    SymbolicFacetSystem,
    SymbolicVertex,
    WeightVector,
    facet_count,
    facets_numeric,
    facets_symbolic,
    generating_vertex_count,
    generating_vertices,
    is_majorized,
    membership,
    rado_membership,
    reference_dims,
    symbolic_vertices,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "Chamber",
    "DegenerateBoundaryError",
    "DensityOperator",
    "Facet",
    "FacetSystem",
    "FunctionalResult",
    "InfeasibleError",
    "MembershipResult",
    "OneBodyOperator",
    "OneRDM",
    "ProblemDims",
    "SolverOptions",
    "SpectralSet",
    "SymbolicFacet",
    "SymbolicFacetSystem",
    "SymbolicVertex",
    "TwoBodyInteraction",
    "WeightVector",
    "build_hamiltonian",
    "chamber",
    "chamber_feasible",
    "config_energy",
    "enumerate_configs",
    "enumerate_sequences",
    "ew_exact",
    "ew_via_convex",
    "f_w",
    "facet_count",
    "facets_numeric",
    "facets_symbolic",
    "fbar_w",
    "gale_leq",
    "gamma_min",
    "generating_vertex_count",
    "generating_vertices",
    "is_majorized",
    "membership",
    "natural_occupations",
    "one_rdm",
    "project_spectral",
    "rado_membership",
    "reference_dims",
    "spectral_lmo_value",
    "spectrum",
    "symbolic_vertices",
]
