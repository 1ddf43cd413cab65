"""Input validation helpers shared by the estimator and the CLI."""

import math

import numpy as np
from sklearn.utils.validation import check_array

from .model import MixingParams

THETA_ALIASES = {"pi/3": math.pi / 3, "pi/4": math.pi / 4}


def parse_theta(value) -> float:
    """Angle in radians; the literal tokens ``pi/3`` and ``pi/4`` are accepted."""
    if isinstance(value, str):
        token = value.strip()
        if token in THETA_ALIASES:
            return THETA_ALIASES[token]
        return float(token)
    return float(value)


def check_mixing_params(m1, m2, theta) -> MixingParams:
    """Build a scalar :class:`MixingParams`, raising ``ValueError`` on bad input."""
    try:
        m1, m2, theta = float(m1), float(m2), parse_theta(theta)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"mixing parameters must be real numbers: {exc}") from None
    return MixingParams(m1, m2, theta)


def check_momentum_time(X) -> np.ndarray:
    """Validate an ``(n_samples, 2)`` array of ``(momentum, time)`` rows."""
    X = check_array(X, dtype=np.float64, ensure_2d=True, ensure_all_finite=True)
    if X.shape[1] != 2:
        raise ValueError(f"expected 2 columns (momentum, time), got {X.shape[1]}")
    if np.any(X < 0):
        raise ValueError("momentum and time must be nonnegative")
    return X
