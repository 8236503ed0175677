"""Openness and L2 classification of sums of adjoint orbits in su(m) and
products of conjugacy classes in SU(m), with a randomized numeric oracle."""

from ._core import (  # noqa: F401
    brute_force_max_crossing,
    brute_force_min_crossing,
    centralizer_dim,
    classify,
    corank,
    corank_one_shapes,
    crossing_bound,
    haar_sample,
    l2_check,
    max_crossing,
    min_crossing,
    n_psi_size,
    numeric_classify,
    open_check,
    partitions,
    phi_size,
    proper_shapes,
    rank_lower_bound,
    scan,
    singular_witness,
    su_classify,
    verify_witness,
)

__all__ = [
    "brute_force_max_crossing",
    "brute_force_min_crossing",
    "centralizer_dim",
    "classify",
    "corank",
    "corank_one_shapes",
    "crossing_bound",
    "haar_sample",
    "l2_check",
    "max_crossing",
    "min_crossing",
    "n_psi_size",
    "numeric_classify",
    "open_check",
    "partitions",
    "phi_size",
    "proper_shapes",
    "rank_lower_bound",
    "scan",
    "singular_witness",
    "su_classify",
    "verify_witness",
]
