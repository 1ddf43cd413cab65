"""Two-flavor neutrino oscillations in field theory and quantum mechanics.

Bogoliubov coefficients, transition probabilities, the flavor-mass
uncertainty functionals F and the Wigner-form Leggett-Garg functionals W,
plus sweeps, maximum search and an identity verification suite.
"""

from .bogoliubov import BogoliubovPair, bogoliubov_pair
from .estimator import LeggettGargTransformer
from .leggett_garg import LGRecord, qft_gap_closed_form, w_qft, w_qm
from .model import (
    FlavorMasses,
    KinematicPoint,
    MixingParams,
    derive_flavor_masses,
    kinematics,
    kinematics_from_k_tilde,
)
from .oscillation import ProbabilityPair, qft_probability, qm_probability
from .sweep import (
    EVAL_COLUMNS,
    EvalRecord,
    ExtremumReport,
    SweepSpec,
    SweepSpecError,
    evaluate,
    evaluate_point,
    find_maximum,
    limit_diagnostics,
    run_sweep,
)
from .uncertainty import UncertaintyRecord, commutator_c, f_qft, f_qm, sigma_m_sq
from .verify import VerifyOutcome, run_verify

__version__ = "0.1.0"

__all__ = [
    "BogoliubovPair",
    "EVAL_COLUMNS",
    "EvalRecord",
    "ExtremumReport",
    "FlavorMasses",
    "KinematicPoint",
    "LGRecord",
    "LeggettGargTransformer",
    "MixingParams",
    "ProbabilityPair",
    "SweepSpec",
    "SweepSpecError",
    "UncertaintyRecord",
    "VerifyOutcome",
    "bogoliubov_pair",
    "commutator_c",
    "derive_flavor_masses",
    "evaluate",
    "evaluate_point",
    "f_qft",
    "f_qm",
    "find_maximum",
    "kinematics",
    "kinematics_from_k_tilde",
    "limit_diagnostics",
    "qft_gap_closed_form",
    "qft_probability",
    "qm_probability",
    "run_sweep",
    "run_verify",
    "sigma_m_sq",
    "w_qft",
    "w_qm",
]
