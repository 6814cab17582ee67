"""Thompson's group F acting on cabled Temperley-Lieb vectors.

Elements are written as tree pairs ``top/bottom`` such as
``((.,.),.)/(.,(.,.))`` or as words in the named elements A, B, D
(``"A^2 B^-1"``). Coefficients are exact rational functions of delta.
"""

from ._core import (
    DomainError,
    Element,
    RationalFunction,
    ResourceCapError,
    an_decay,
    brute_force_coefficient,
    coeff,
    coeff_numeric,
    delta_root,
    gram_numeric,
    lemma43_threshold,
    min_eigenvalue,
    multiply_rewrite,
    power_A,
    run_cli,
    sigma,
    sigma_limit_threshold,
)

__all__ = [
    "DomainError",
    "Element",
    "RationalFunction",
    "ResourceCapError",
    "an_decay",
    "brute_force_coefficient",
    "coeff",
    "coeff_numeric",
    "delta_root",
    "gram_numeric",
    "lemma43_threshold",
    "min_eigenvalue",
    "multiply_rewrite",
    "power_A",
    "run_cli",
    "sigma",
    "sigma_limit_threshold",
]
