"""Bogoliubov coefficient magnitudes between the two mass representations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import KinematicPoint, MixingParams


@dataclass(frozen=True)
class BogoliubovPair:
    """``|U_k|``, ``|V_k|`` and the amplitude prefactor ``A_k``.

    ``u_abs**2 + v_abs**2 == 1`` up to rounding, and ``v_abs**2 <= 1/2``.
    """

    u_abs: float
    v_abs: float
    a_k: float

    @property
    def u_sq(self):
        return self.u_abs**2

    @property
    def v_sq(self):
        return self.v_abs**2


def bogoliubov_pair(params: MixingParams, kin: KinematicPoint) -> BogoliubovPair:
    """Evaluate ``|U_k|``, ``|V_k|`` and ``A_k`` literally from their closed forms.

    Only magnitudes are returned; the phases never enter the oscillation
    formulas.
    """
    m1, m2, k = params.m1, params.m2, kin.k
    e1 = kin.omega1 + m1
    e2 = kin.omega2 + m2
    a_k = np.sqrt((e1 / (2.0 * kin.omega1)) * (e2 / (2.0 * kin.omega2)))
    u_abs = a_k * (1.0 + np.square(k) / (e1 * e2))
    v_abs = a_k * (k / e1 - k / e2)
    # m2 >= m1 makes e2 >= e1 monotonically in floating point, so v_abs >= 0
    assert np.all(v_abs >= 0), "negative |V_k|: mass ordering violated"
    return BogoliubovPair(u_abs=u_abs, v_abs=v_abs, a_k=a_k)
