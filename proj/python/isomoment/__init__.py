"""Exact sphere moments, orbit statistics, and the vortex-gas partition
function.

Exact values come back as :class:`fractions.Fraction` (or as
:class:`PiScaled`, an exact rational times a power of sqrt(pi)); Monte Carlo
estimators return an :class:`MCEstimate` carrying the standard error and the
seed that produced it.
"""

from ._core import (
    DEFAULT_SEED,
    MCEstimate,
    PiScaled,
    axis_moment,
    check_2f1_identity,
    compositions,
    dh_moment,
    i_mn,
    i_mn_closed,
    i_mn_expand,
    mc_orbit_hypothesis,
    mc_orthogonality,
    mc_projected_moment,
    mixed_moment,
    pfaffian,
    quad_axis_moment,
    sample_orbit,
    sphere_volume,
    z_closed,
    z_series,
)

__all__ = [
    "DEFAULT_SEED",
    "MCEstimate",
    "PiScaled",
    "axis_moment",
    "check_2f1_identity",
    "compositions",
    "dh_moment",
    "i_mn",
    "i_mn_closed",
    "i_mn_expand",
    "mc_orbit_hypothesis",
    "mc_orthogonality",
    "mc_projected_moment",
    "mixed_moment",
    "pfaffian",
    "quad_axis_moment",
    "sample_orbit",
    "sphere_volume",
    "z_closed",
    "z_series",
]

__version__ = "1.0.0"
