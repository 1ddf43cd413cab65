"""Mixing parameters, flavor-basis mass entries and per-momentum kinematics.

Natural units throughout (hbar = c = 1): masses, momenta and energies share
one arbitrary unit and time carries its inverse.

All fields may be Python floats or numpy arrays that broadcast against each
other, so the same objects serve single-point evaluation and vectorized
sampling.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HALF_PI = 0.5 * np.pi


@dataclass(frozen=True)
class MixingParams:
    """Physical parameter set of two-flavor mixing.

    Parameters
    ----------
    m1, m2 : float or array_like
        Masses of the two mass eigenstates, ``0 < m1 <= m2``.
    theta : float or array_like
        Mixing angle in radians, ``0 <= theta <= pi/2``.

    Inputs that violate the ordering are rejected rather than swapped.
    """

    m1: float
    m2: float
    theta: float

    def __post_init__(self):
        m1 = np.asarray(self.m1, dtype=float)
        m2 = np.asarray(self.m2, dtype=float)
        theta = np.asarray(self.theta, dtype=float)
        if not (np.all(np.isfinite(m1)) and np.all(np.isfinite(m2)) and np.all(np.isfinite(theta))):
            raise ValueError("m1, m2 and theta must be finite")
        if np.any(m1 <= 0):
            raise ValueError(f"m1 must be positive, got {self.m1!r}")
        if np.any(m2 < m1):
            raise ValueError(f"ordering convention requires m2 >= m1, got m1={self.m1!r}, m2={self.m2!r}")
        if np.any(theta < 0) or np.any(theta > HALF_PI):
            raise ValueError(f"theta must lie in [0, pi/2], got {self.theta!r}")

    @property
    def sqrt_m1m2(self):
        return np.sqrt(self.m1 * self.m2)

    @property
    def sin_2theta(self):
        return np.sin(2.0 * np.asarray(self.theta, dtype=float))

    def with_theta(self, theta) -> MixingParams:
        return MixingParams(self.m1, self.m2, theta)


@dataclass(frozen=True)
class FlavorMasses:
    """Entries of the symmetric flavor-basis mass matrix ``[[m_e, m_emu], [m_emu, m_mu]]``."""

    m_e: float
    m_mu: float
    m_emu: float

    def matrix(self) -> np.ndarray:
        return np.array([[self.m_e, self.m_emu], [self.m_emu, self.m_mu]], dtype=float)


@dataclass(frozen=True)
class KinematicPoint:
    k: float
    k_tilde: float
    omega1: float
    omega2: float
    omega_minus: float
    omega_plus: float


def derive_flavor_masses(params: MixingParams) -> FlavorMasses:
    """Invert the Pontecorvo rotation of ``diag(m1, m2)``.

    The result satisfies ``tan(2 theta) = 2 m_emu / (m_mu - m_e)`` and
    ``m_e + m_mu = m1 + m2``.
    """
    c = np.cos(params.theta)
    s = np.sin(params.theta)
    m_e = params.m1 * c**2 + params.m2 * s**2
    m_mu = params.m1 * s**2 + params.m2 * c**2
    m_emu = (params.m2 - params.m1) * s * c
    return FlavorMasses(m_e, m_mu, m_emu)


def kinematics(params: MixingParams, k) -> KinematicPoint:
    """Energies of both mass eigenstates at momentum magnitude ``k``.

    Parameters
    ----------
    params : MixingParams
    k : float or array_like
        Momentum magnitude, ``k >= 0``.

    Returns
    -------
    KinematicPoint
        With ``omega_minus = (omega2 - omega1)/2`` and
        ``omega_plus = (omega1 + omega2)/2``.
    """
    k_arr = np.asarray(k, dtype=float)
    if np.any(k_arr < 0) or not np.all(np.isfinite(k_arr)):
        raise ValueError(f"momentum must be finite and nonnegative, got {k!r}")
    m1, m2 = params.m1, params.m2
    omega1 = np.hypot(k, m1)
    omega2 = np.hypot(k, m2)
    # difference of square roots rewritten to avoid cancellation at large k
    omega_minus = 0.5 * (m2 - m1) * (m2 + m1) / (omega1 + omega2)
    omega_plus = 0.5 * (omega1 + omega2)
    return KinematicPoint(
        k=k,
        k_tilde=k / params.sqrt_m1m2,
        omega1=omega1,
        omega2=omega2,
        omega_minus=omega_minus,
        omega_plus=omega_plus,
    )


def kinematics_from_k_tilde(params: MixingParams, k_tilde) -> KinematicPoint:
    """Same as :func:`kinematics` with the momentum given as ``k / sqrt(m1 m2)``."""
    return kinematics(params, np.multiply(k_tilde, params.sqrt_m1m2))
