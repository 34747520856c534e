"""Kleshchev multipartitions, the Fock space crystal and canonical bases.

Multipartitions are lists of partitions, e.g. ``[[2, 1], [1]]``. Charges are
lists of integers, one per component. Laurent coefficients are returned as
``{exponent: integer}`` dictionaries.
"""

from ._kleshchev import (
    ConventionError,
    ResourceCapExceeded,
    __version__,
    branch,
    canonical_basis,
    crystal_dot,
    decomposition_matrix_csv,
    decomposition_matrix_json,
    dim_simple,
    e_action,
    e_tilde,
    epsilon,
    f_action,
    f_tilde,
    is_kleshchev,
    kleshchev_multipartitions,
    phi,
    residue,
    run_cli,
    verify,
)

__all__ = [
    "ConventionError",
    "ResourceCapExceeded",
    "__version__",
    "branch",
    "canonical_basis",
    "crystal_dot",
    "decomposition_matrix_csv",
    "decomposition_matrix_json",
    "dim_simple",
    "e_action",
    "e_tilde",
    "epsilon",
    "f_action",
    "f_tilde",
    "is_kleshchev",
    "kleshchev_multipartitions",
    "phi",
    "residue",
    "run_cli",
    "verify",
]
