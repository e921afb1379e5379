"""Closed-form piecewise attractor synthesis with a logistic-map carrier.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface. Trajectories are (n, 4) float arrays with columns
t, x, y, z; maxima are (m, 2) arrays with columns t, value.
"""

from ._core import (
    DivergenceError,
    InsufficientDataError,
    TieError,
    bifurcation_scan,
    carrier_sequence,
    compare,
    detect_period,
    first_return_map,
    integrate,
    junction_gaps,
    logistic_step,
    lyapunov_estimate,
    min_separation,
    synthesize,
    x_maxima,
)

__version__ = "0.1.0"

__all__ = [
    "DivergenceError",
    "InsufficientDataError",
    "TieError",
    "bifurcation_scan",
    "carrier_sequence",
    "compare",
    "detect_period",
    "first_return_map",
    "integrate",
    "junction_gaps",
    "logistic_step",
    "lyapunov_estimate",
    "min_separation",
    "synthesize",
    "x_maxima",
]
