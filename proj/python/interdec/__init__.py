"""Exact interaction decompositions of projector families, measures and split functors.

Matrices cross the boundary as lists of rows of ``fractions.Fraction``.
"""

from ._core import (
    check_functorial,
    check_intersection,
    check_presheafable,
    check_split_intersection,
    compute_s,
    conditional_expectation,
    decompose,
    decompose_measure,
    decompose_split,
    is_product,
    mobius,
    run,
    sum_of_components,
)

__all__ = [
    "check_functorial",
    "check_intersection",
    "check_presheafable",
    "check_split_intersection",
    "compute_s",
    "conditional_expectation",
    "decompose",
    "decompose_measure",
    "decompose_split",
    "is_product",
    "mobius",
    "run",
    "sum_of_components",
]
