"""c-boomerang uniformity of polynomials over finite fields."""

from ._core import (
    CboomError,
    applicable_bound,
    bct_entry,
    dickson,
    factor_degrees,
    fixture_names,
    run_cli,
    uniformity,
    verify_fixture,
)

__all__ = [
    "CboomError",
    "applicable_bound",
    "bct_entry",
    "dickson",
    "factor_degrees",
    "fixture_names",
    "run_cli",
    "uniformity",
    "verify_fixture",
]
