import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from flavorlg import MixingParams, bogoliubov_pair, kinematics  # noqa: E402

# Reference point m1=3, m2=20, theta=pi/3, k=sqrt(60) (k_tilde=1), t=1.
# Frozen from tests/oracle.py (mpmath, 50 digits).
REF = {
    "m_e": 15.75,
    "m_mu": 7.25,
    "m_emu": 7.3612159321677284975,
    "omega1": 8.3066238629180748526,
    "omega2": 21.44761058952721661,
    "omega_minus": 6.5704933633045708785,
    "omega_plus": 14.877117226222645731,
    "a_k": 0.81093210690497955355,
    "u_abs": 0.9147574326234115827,
    "v_abs": 0.40400351416816242674,
    "q_transition": 0.11715769731128035939,
    "q_transition_2t": 0.30679811618891847308,
    "p_transition": 0.060224620464784296362,
    "p_transition_2t": 0.2215544556717915029,
    "c_of_t": 0.25310116942726131859,
    "f_qft": 0.087416720780636960337,
    "w_qft": -0.20336634491691970285,
    "f_qm": 0.0012090016367091051589,
    "w_qm": -0.16495684011713452202,
    "gap_qft": 0.29078306569755666319,
    "sin_2wm_t": 0.54351259497432256273,
    "sin_2wp_t": -0.99587182414768303794,
}

REF_PARAMS = (3.0, 20.0, math.pi / 3)
REF_K = math.sqrt(60.0)


@pytest.fixture
def ref_params():
    return MixingParams(*REF_PARAMS)


@pytest.fixture
def ref_point(ref_params):
    kin = kinematics(ref_params, REF_K)
    return ref_params, kin, bogoliubov_pair(ref_params, kin)


@pytest.fixture
def rng():
    return np.random.default_rng(20211206)


def random_params(rng, n, m_lo=0.1, m_hi=50.0, ratio_hi=50.0):
    m1 = rng.uniform(m_lo, m_hi, n)
    m2 = m1 * rng.uniform(1.0, ratio_hi, n)
    theta = rng.uniform(0.0, 0.5 * np.pi, n)
    return MixingParams(m1, m2, theta)


CRITERIA_LINES = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the assertion stays in the test."""

    def record(label, ok, detail):
        CRITERIA_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA_LINES:
            terminalreporter.write_line(line)
