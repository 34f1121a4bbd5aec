"""Exact trapezoid measures, fractal slice sets and gasket projections.

Rationals cross the boundary as fractions.Fraction. Permutations are lists of
1-based images, or one of the names "identity", "reversal", "composite",
"digit-swap:m" (pass n for the sized ones).
"""

from ._core import (
    alpha_exhaustive,
    alpha_heuristic,
    alpha_scan,
    anchor_points,
    area,
    area_oracle,
    canonical_class,
    cantor_measure_closed,
    composite_sigma,
    decay_fit,
    digit_swap_perm,
    digit_swap_real,
    exp_power_integral,
    favard,
    gasket_anchors,
    lemma1_check,
    lemma2_check,
    partial_cantor,
    partial_cantor_measure,
    permutation,
    plan_composite,
    project_slope,
    projection_measure,
    render_gasket_svg,
    render_trapezoid_svg,
    slice,
    slice_measure_closed,
    slice_profile,
    slice_set,
    weighted_sum_identity,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
