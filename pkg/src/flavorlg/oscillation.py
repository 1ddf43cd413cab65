"""Flavor transition and survival probabilities, exact QFT and the QM limit.

Trigonometric arguments rely on double-precision argument reduction; results
lose accuracy once ``|omega * t|`` exceeds about 1e8.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bogoliubov import BogoliubovPair
from .model import KinematicPoint, MixingParams


@dataclass(frozen=True)
class ProbabilityPair:
    transition: float
    survival: float


def _check_time(t):
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0) or not np.all(np.isfinite(t_arr)):
        raise ValueError(f"time must be finite and nonnegative, got {t!r}")


def qft_transition(params: MixingParams, kin: KinematicPoint, bog: BogoliubovPair, t):
    s2 = np.square(params.sin_2theta)
    return s2 * (
        bog.u_sq * np.square(np.sin(kin.omega_minus * t))
        + bog.v_sq * np.square(np.sin(kin.omega_plus * t))
    )


def qm_transition(params: MixingParams, kin: KinematicPoint, t):
    return np.square(params.sin_2theta) * np.square(np.sin(kin.omega_minus * t))


def qft_probability(
    params: MixingParams, kin: KinematicPoint, bog: BogoliubovPair, t
) -> ProbabilityPair:
    """Flavor-charge expectation values of the field-theoretic treatment.

    ``transition = sin^2(2 theta) [|U|^2 sin^2(w- t) + |V|^2 sin^2(w+ t)]``;
    the survival value is ``1 - transition``.
    """
    _check_time(t)
    q = qft_transition(params, kin, bog, t)
    return ProbabilityPair(transition=q, survival=1.0 - q)


def qm_probability(params: MixingParams, kin: KinematicPoint, t) -> ProbabilityPair:
    """Pontecorvo probability ``sin^2(2 theta) sin^2(w- t)``."""
    _check_time(t)
    p = qm_transition(params, kin, t)
    return ProbabilityPair(transition=p, survival=1.0 - p)
