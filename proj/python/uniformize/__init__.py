"""Conformal deformation of graph models of Gromov hyperbolic spaces."""

from ._core import (
    DeformedSpace,
    EuclideanGrid,
    Graph,
    HyperbolicTiling,
    RandomGnp,
    RegularTree,
    UniformizeError,
    boundary_comparison,
    check_boundary_lower_bound,
    check_diameter,
    check_harnack,
    check_lemma_3_3,
    deform,
    distances,
    estimate_delta,
    generate,
    run_cli,
    sample_pairs,
    set_thread_count,
    verify_gehring_hayman,
    verify_uniform,
)

__all__ = [
    "DeformedSpace",
    "EuclideanGrid",
    "Graph",
    "HyperbolicTiling",
    "RandomGnp",
    "RegularTree",
    "UniformizeError",
    "boundary_comparison",
    "check_boundary_lower_bound",
    "check_diameter",
    "check_harnack",
    "check_lemma_3_3",
    "deform",
    "distances",
    "estimate_delta",
    "generate",
    "run_cli",
    "sample_pairs",
    "set_thread_count",
    "verify_gehring_hayman",
    "verify_uniform",
]
