"""Walk counts in affine Weyl alcoves and on the circle.

Points are passed as text in mathematical units ("3/2,1/2"), m as m2 = 2m.
Families: "A", "B", "C", "D", "circle"; steps: "positive", "standard", "diagonal".
"""

from ._alcove import (
    ArgumentError,
    PrecisionError,
    ResourceError,
    UnsupportedError,
    approx_coeff,
    asymptotic,
    count_dp,
    count_exact,
    exact_coeff,
    identity_suite,
    run_cli,
    solve_saddle,
)

__all__ = [
    "ArgumentError",
    "PrecisionError",
    "ResourceError",
    "UnsupportedError",
    "approx_coeff",
    "asymptotic",
    "count_dp",
    "count_exact",
    "exact_coeff",
    "identity_suite",
    "run_cli",
    "solve_saddle",
]
