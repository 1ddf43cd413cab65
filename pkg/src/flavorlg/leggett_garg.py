"""Wigner-form Leggett-Garg functionals and their gap to the uncertainty bound.

The protocol is fixed: a muon neutrino is produced at ``t0 = 0`` and the
dichotomic flavor charge is measured at ``t`` and ``2t`` with outcomes
``m0 = m1 = m2 = +1``. A positive W signals violation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bogoliubov import BogoliubovPair
from .model import KinematicPoint, MixingParams
from .oscillation import qft_probability, qft_transition, qm_probability, qm_transition
from .uncertainty import f_qft, f_qm

VIOLATION_TOL = 1e-12


@dataclass(frozen=True)
class LGRecord:
    w_value: float
    f_value: float
    gap: float
    violated: bool


def _record(w, f) -> LGRecord:
    return LGRecord(w_value=w, f_value=f, gap=f - w, violated=np.asarray(w) > VIOLATION_TOL)


def w_qft(params: MixingParams, kin: KinematicPoint, bog: BogoliubovPair, t) -> LGRecord:
    """``W = Q_ee(t) Q_mue(t) - Q_mue(2t)`` paired with ``F_QFT``."""
    prob = qft_probability(params, kin, bog, t)
    later = qft_transition(params, kin, bog, 2.0 * np.asarray(t, dtype=float))
    w = prob.survival * prob.transition - later
    return _record(w, f_qft(params, kin, bog, t).f_value)


def w_qm(params: MixingParams, kin: KinematicPoint, t) -> LGRecord:
    """Quantum-mechanical ``W = P_ee(t) P_mue(t) - P_mue(2t)`` paired with ``F_QM``.

    The gap equals ``3/4 P(2t)`` exactly.
    """
    prob = qm_probability(params, kin, t)
    later = qm_transition(params, kin, 2.0 * np.asarray(t, dtype=float))
    w = prob.survival * prob.transition - later
    return _record(w, f_qm(params, kin, t).f_value)


def qft_gap_closed_form(params: MixingParams, kin: KinematicPoint, bog: BogoliubovPair, t):
    """Manifestly nonnegative form of ``F_QFT - W_QFT``.

    ``sin^2(2 theta)/4 [|U|^2 |V|^2 (p - q)^2 + 3 |V|^2 q^2 + 3 |U|^2 p^2]``
    with ``p = sin(2 w- t)`` and ``q = sin(2 w+ t)``. The doubled phases are
    required; with ``w+- t`` the expression does not match the direct
    difference.
    """
    p = np.sin(2.0 * kin.omega_minus * t)
    q = np.sin(2.0 * kin.omega_plus * t)
    u2, v2 = bog.u_sq, bog.v_sq
    return 0.25 * np.square(params.sin_2theta) * (
        u2 * v2 * np.square(p - q) + 3.0 * v2 * np.square(q) + 3.0 * u2 * np.square(p)
    )


def qft_gap_expanded_form(params: MixingParams, kin: KinematicPoint, bog: BogoliubovPair, t):
    """Intermediate form of the same gap, before using ``|U|^2 + |V|^2 = 1``."""
    p = np.sin(2.0 * kin.omega_minus * t)
    q = np.sin(2.0 * kin.omega_plus * t)
    u2, v2 = bog.u_sq, bog.v_sq
    return 0.25 * np.square(params.sin_2theta) * (
        np.square(p) * u2 * (4.0 - u2) + np.square(q) * v2 * (4.0 - v2) - 2.0 * u2 * v2 * p * q
    )
