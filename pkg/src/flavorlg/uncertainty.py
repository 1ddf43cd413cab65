"""Flavor-mass uncertainty: variances, the commutator magnitude and the F functionals.

The Robertson-Schroedinger product ``sigma_Q^2 sigma_M^2 >= |<[Q_sigma, Q_M]>|^2 / 4``
carries a common factor ``m_emu^2`` on both sides. The F functionals
below divide it out and are dimensionless.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bogoliubov import BogoliubovPair
from .model import KinematicPoint, MixingParams, derive_flavor_masses
from .oscillation import qft_probability, qm_probability, qm_transition


@dataclass(frozen=True)
class UncertaintyRecord:
    sigma_q_sq: float
    sigma_m_sq: float
    c_of_t: float
    f_value: float


def sigma_m_sq(params: MixingParams):
    """Variance of the mass charge in a flavor state, ``m_emu^2`` (mass^2 units)."""
    return np.square(derive_flavor_masses(params).m_emu)


def flavor_variance(prob):
    """``survival (1 - survival)``, formed as ``survival * transition``.

    Writing ``1 - survival`` would cancel catastrophically for small transitions.
    """
    return prob.survival * prob.transition


def commutator_c(params: MixingParams, kin: KinematicPoint, bog: BogoliubovPair, t):
    """Dimensionless commutator magnitude ``C(t)``.

    ``|<[Q_sigma(t), Q_M]>| = m_emu C(t)`` with
    ``C(t) = sin(2 theta) | |U|^2 sin(2 w- t) + |V|^2 sin(2 w+ t) |``.
    """
    return params.sin_2theta * np.abs(
        bog.u_sq * np.sin(2.0 * kin.omega_minus * t)
        + bog.v_sq * np.sin(2.0 * kin.omega_plus * t)
    )


def qm_commutator_c(params: MixingParams, kin: KinematicPoint, t):
    # |V| -> 0 limit of commutator_c; its square is the QM transition at 2t
    return params.sin_2theta * np.abs(np.sin(2.0 * kin.omega_minus * t))


def f_qft(params: MixingParams, kin: KinematicPoint, bog: BogoliubovPair, t) -> UncertaintyRecord:
    """Uncertainty residual ``Q_ss (1 - Q_ss) - C^2 / 4`` of the exact theory."""
    c = commutator_c(params, kin, bog, t)
    var_q = flavor_variance(qft_probability(params, kin, bog, t))
    return UncertaintyRecord(
        sigma_q_sq=var_q,
        sigma_m_sq=sigma_m_sq(params),
        c_of_t=c,
        f_value=var_q - 0.25 * np.square(c),
    )


def f_qm(params: MixingParams, kin: KinematicPoint, t) -> UncertaintyRecord:
    """Quantum-mechanical residual ``P(t) (1 - P(t)) - P(2t) / 4``.

    ``P(2t)`` enters at first power, the exact ``|V| -> 0`` limit of
    ``C(t)^2 / 4``. It vanishes identically at maximal mixing.
    """
    var_q = flavor_variance(qm_probability(params, kin, t))
    return UncertaintyRecord(
        sigma_q_sq=var_q,
        sigma_m_sq=sigma_m_sq(params),
        c_of_t=qm_commutator_c(params, kin, t),
        f_value=var_q - 0.25 * qm_transition(params, kin, 2.0 * np.asarray(t, dtype=float)),
    )
