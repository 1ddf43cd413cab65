"""Randomized identity suite: algebraic identities and bounds checked over seeded draws.

Draw ranges: ``m1`` in [0.1, 50], ``m2`` in [m1, 50 m1], ``theta`` in
[0, pi/2], ``k_tilde`` log-uniform in [1e-3, 1e3], ``t`` in [0, 10].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bogoliubov import bogoliubov_pair
from .leggett_garg import qft_gap_closed_form, qft_gap_expanded_form, w_qft, w_qm
from .model import MixingParams, derive_flavor_masses, kinematics_from_k_tilde
from .oscillation import qft_transition, qm_transition
from .uncertainty import commutator_c


@dataclass(frozen=True)
class IdentityResult:
    name: str
    samples: int
    worst: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.worst <= self.tolerance)


@dataclass(frozen=True)
class VerifyOutcome:
    suite: str
    samples: int
    seed: int
    results: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def report(self) -> str:
        lines = [f"suite {self.suite}: samples={self.samples} seed={self.seed}"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status}  {r.name:28s} worst={r.worst:.3e}  tol={r.tolerance:.0e}")
        lines.append("ALL PASS" if self.passed else "FAILED")
        return "\n".join(lines)


def draw_samples(samples: int, seed: int):
    """Seeded parameter draws; returns ``(params, k_tilde, t)`` arrays."""
    rng = np.random.default_rng(seed)
    m1 = rng.uniform(0.1, 50.0, samples)
    m2 = m1 * rng.uniform(1.0, 50.0, samples)
    theta = rng.uniform(0.0, 0.5 * np.pi, samples)
    k_tilde = 10.0 ** rng.uniform(-3.0, 3.0, samples)
    t = rng.uniform(0.0, 10.0, samples)
    return MixingParams(m1, m2, theta), k_tilde, t


def _rel(diff, scale):
    diff = np.abs(diff)
    return np.where(scale > 0, diff / np.where(scale > 0, scale, 1.0), diff)


def _worst(x) -> float:
    return float(np.max(x)) if np.size(x) else 0.0


def identity_residuals(params: MixingParams, k_tilde, t, gap_form=qft_gap_closed_form):
    """Worst residual per identity over broadcast sample arrays.

    ``gap_form`` is swappable so a wrong closed form can be shown to fail.
    Relative residuals of a difference are scaled by the magnitude of its
    operands, since ``F - W`` cancels between two O(1) numbers.
    """
    kin = kinematics_from_k_tilde(params, k_tilde)
    bog = bogoliubov_pair(params, kin)
    fm = derive_flavor_masses(params)
    s2 = np.square(params.sin_2theta)
    t2 = 2.0 * t

    lg_qft = w_qft(params, kin, bog, t)
    lg_qm = w_qm(params, kin, t)
    q = qft_transition(params, kin, bog, t)
    p = qm_transition(params, kin, t)
    p2 = qm_transition(params, kin, t2)
    c = commutator_c(params, kin, bog, t)
    closed = gap_form(params, kin, bog, t)
    direct = lg_qft.f_value - lg_qft.w_value
    operand_scale = np.maximum(np.abs(closed), np.abs(lg_qft.f_value) + np.abs(lg_qft.w_value))

    mats = np.stack([np.stack([fm.m_e, fm.m_emu], -1), np.stack([fm.m_emu, fm.m_mu], -1)], -2)
    eig = np.linalg.eigvalsh(mats)
    split = params.m2 > params.m1
    angle = 0.5 * np.arctan2(2.0 * fm.m_emu, fm.m_mu - fm.m_e)

    omega_minus_alt = np.where(kin.omega_minus > 0, kin.omega_minus, 1.0)
    p_period = qm_transition(params, kin, t + np.pi / omega_minus_alt)

    return {
        "flavor_trace": (_worst(_rel(fm.m_e + fm.m_mu - params.m1 - params.m2, params.m1 + params.m2)), 1e-12),
        "flavor_eigenvalues": (_worst(np.maximum(_rel(eig[:, 0] - params.m1, params.m1),
                                                 _rel(eig[:, 1] - params.m2, params.m2))), 1e-10),
        "flavor_angle": (_worst(np.abs(angle - params.theta)[split]), 1e-10),
        "kinematic_identity": (_worst(_rel(np.square(kin.omega_plus) - np.square(kin.omega_minus)
                                           - kin.omega1 * kin.omega2, kin.omega1 * kin.omega2)), 1e-12),
        "bogoliubov_normalization": (_worst(np.abs(bog.u_sq + bog.v_sq - 1.0)), 1e-12),
        "bogoliubov_v_sq_bound": (_worst(np.maximum(bog.v_sq - 0.5, 0.0)), 1e-12),
        "commutator_bound": (_worst(np.maximum(c - params.sin_2theta, 0.0)), 1e-12),
        "f_qft_positivity": (_worst(np.maximum(-lg_qft.f_value, 0.0)), 1e-12),
        "f_qm_positivity": (_worst(np.maximum(-lg_qm.f_value, 0.0)), 1e-12),
        "qm_gap_identity": (_worst(np.abs(lg_qm.f_value - lg_qm.w_value - 0.75 * p2)), 1e-12),
        "qft_gap_identity": (_worst(_rel(direct - closed, operand_scale)), 1e-10),
        "qft_gap_nonnegative": (_worst(np.maximum(-closed, 0.0)), 1e-12),
        "qft_gap_expanded_form": (_worst(_rel(direct - qft_gap_expanded_form(params, kin, bog, t),
                                              operand_scale)), 1e-10),
        "upper_bound_qft": (_worst(np.maximum(lg_qft.w_value - lg_qft.f_value, 0.0)), 1e-12),
        "upper_bound_qm": (_worst(np.maximum(lg_qm.w_value - lg_qm.f_value, 0.0)), 1e-12),
        "qft_qm_proximity": (_worst(np.maximum(np.abs(q - p) - s2 * bog.v_sq, 0.0)), 1e-12),
        "qm_limit_commutator": (_worst(np.maximum(np.abs(np.square(c) - p2)
                                                  - 4.0 * s2 * bog.v_sq * bog.u_sq, 0.0)), 1e-12),
        "qm_periodicity": (_worst(np.abs(p_period - p)[kin.omega_minus > 0]), 1e-9),
    }


def run_verify(samples: int = 10_000, seed: int = 0, gap_form=qft_gap_closed_form) -> VerifyOutcome:
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    params, k_tilde, t = draw_samples(samples, seed)
    residuals = identity_residuals(params, k_tilde, t, gap_form=gap_form)
    results = tuple(
        IdentityResult(name=name, samples=samples, worst=worst, tolerance=tol)
        for name, (worst, tol) in residuals.items()
    )
    return VerifyOutcome(suite="identities", samples=samples, seed=seed, results=results)
