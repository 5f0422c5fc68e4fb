"""Exact computation in Kiselman semigroups K_n.

Words are lists of letters (ints in 1..n), contents are lists of distinct
letters, matrices are lists of rows of python ints, and algebra elements are
lists of (word, coefficient-string) pairs.
"""

from ._kiselman import (
    ResourceLimitError,
    automorphism_count,
    cayley_csv,
    cayley_dot,
    corner_dimensions,
    elements_json,
    enumerate_semigroup,
    faithfulness,
    green_singletons,
    idempotent,
    idempotent_system_ok,
    idempotents,
    is_canonical,
    kappa_json,
    kappa_prime,
    kiselman_projection,
    length_bound,
    multiply,
    nilpotent_block,
    normalize,
    power_to_idempotent,
    primitive_idempotent,
    projective_module,
    psi,
    run_checks,
    sharpness_word,
    size,
)

__all__ = [
    "ResourceLimitError",
    "automorphism_count",
    "cayley_csv",
    "cayley_dot",
    "corner_dimensions",
    "elements_json",
    "enumerate_semigroup",
    "faithfulness",
    "green_singletons",
    "idempotent",
    "idempotent_system_ok",
    "idempotents",
    "is_canonical",
    "kappa_json",
    "kappa_prime",
    "kiselman_projection",
    "length_bound",
    "multiply",
    "nilpotent_block",
    "normalize",
    "power_to_idempotent",
    "primitive_idempotent",
    "projective_module",
    "psi",
    "run_checks",
    "sharpness_word",
    "size",
]

__version__ = "1.0.0"
