"""Grid sweeps, bracketed maximum search and QFT/QM limit diagnostics."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import astuple, dataclass, field, fields

import numpy as np

from .bogoliubov import bogoliubov_pair
from .leggett_garg import w_qft, w_qm
from .model import HALF_PI, KinematicPoint, MixingParams, kinematics, kinematics_from_k_tilde
from .oscillation import qft_transition, qm_transition
from .uncertainty import commutator_c

AXES = ("k_tilde", "time", "theta")
SPACINGS = ("linear", "logarithmic")
QUANTITIES = ("w_qft", "w_qm", "f_qft", "f_qm")

# Records are always computed in blocks aligned on this size, so the output
# does not depend on how blocks are spread over workers.
BLOCK_SIZE = 256
GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class SweepSpecError(ValueError):
    """Invalid sweep definition; ``field`` names the offending entry."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


@dataclass(frozen=True)
class EvalRecord:
    k_tilde: float
    k: float
    t: float
    theta: float
    q_transition: float
    p_transition: float
    w_qft: float
    w_qm: float
    f_qft: float
    f_qm: float
    c_of_t: float
    u_sq: float
    v_sq: float


EVAL_COLUMNS = tuple(f.name for f in fields(EvalRecord))


@dataclass(frozen=True)
class SweepSpec:
    """One-dimensional sweep over ``k_tilde``, ``time`` or ``theta``.

    The coordinates not being swept are taken from ``params``, ``t`` and
    ``k_tilde``. When sweeping ``theta`` the angle in ``params`` is ignored.
    """

    axis: str
    min: float
    max: float
    steps: int
    params: MixingParams
    spacing: str = "linear"
    t: float = 1.0
    k_tilde: float = 1.0

    def __post_init__(self):
        if self.axis not in AXES:
            raise SweepSpecError("axis", f"must be one of {AXES}, got {self.axis!r}")
        if self.spacing not in SPACINGS:
            raise SweepSpecError("spacing", f"must be one of {SPACINGS}, got {self.spacing!r}")
        if not isinstance(self.steps, (int, np.integer)) or isinstance(self.steps, bool):
            raise SweepSpecError("steps", f"must be an integer, got {self.steps!r}")
        if self.steps < 2:
            raise SweepSpecError("steps", f"must be >= 2, got {self.steps}")
        if not (math.isfinite(self.min) and math.isfinite(self.max)):
            raise SweepSpecError("min", "range endpoints must be finite")
        if not self.min < self.max:
            raise SweepSpecError("min", f"min < max required, got [{self.min}, {self.max}]")
        if self.spacing == "logarithmic" and self.min <= 0:
            raise SweepSpecError("min", "logarithmic spacing requires min > 0")
        if self.min < 0:
            raise SweepSpecError("min", f"{self.axis} must be nonnegative")
        if self.axis == "theta" and self.max > HALF_PI:
            raise SweepSpecError("max", "theta must not exceed pi/2")
        if not (math.isfinite(self.t) and self.t >= 0):
            raise SweepSpecError("t", f"fixed time must be finite and nonnegative, got {self.t}")
        if not (math.isfinite(self.k_tilde) and self.k_tilde >= 0):
            raise SweepSpecError("k_tilde", f"fixed k_tilde must be finite and nonnegative, got {self.k_tilde}")

    def grid(self) -> np.ndarray:
        if self.spacing == "logarithmic":
            return np.geomspace(self.min, self.max, self.steps)
        return np.linspace(self.min, self.max, self.steps)

    def coordinates(self, x):
        """Map swept-axis values ``x`` to ``(params, k_tilde, t)`` arrays."""
        x = np.asarray(x, dtype=float)
        if self.axis == "k_tilde":
            return self.params, x, np.full_like(x, self.t)
        if self.axis == "time":
            return self.params, np.full_like(x, self.k_tilde), x
        return self.params.with_theta(x), np.full_like(x, self.k_tilde), np.full_like(x, self.t)


@dataclass(frozen=True)
class ExtremumReport:
    """Grid-resolution maximum of one quantity along a sweep.

    ``bracket`` is the pair of grid neighbours around the best grid point;
    the golden-section search never leaves it. The maximum is global only
    up to the grid resolution.
    """

    quantity: str
    arg_at_max: float
    max_value: float
    bracket: tuple
    refined: bool
    tolerance_used: float
    coarse_arg: float = field(default=math.nan)
    coarse_value: float = field(default=math.nan)
    final_width: float = field(default=math.nan)


def evaluate(params: MixingParams, k_tilde, t) -> dict:
    """All record columns at broadcast ``(params, k_tilde, t)``.

    Returns a dict keyed by :data:`EVAL_COLUMNS` holding numpy arrays.
    """
    k_tilde = np.asarray(k_tilde, dtype=float)
    if np.any(k_tilde < 0):
        raise ValueError("k_tilde must be nonnegative")
    return _evaluate_kin(params, kinematics_from_k_tilde(params, k_tilde), t)


def evaluate_at_k(params: MixingParams, k, t) -> dict:
    """Like :func:`evaluate` with the absolute momentum ``k``."""
    return _evaluate_kin(params, kinematics(params, k), t)


def _evaluate_kin(params: MixingParams, kin: KinematicPoint, t) -> dict:
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValueError("t must be nonnegative")
    bog = bogoliubov_pair(params, kin)
    lg_qft = w_qft(params, kin, bog, t)
    lg_qm = w_qm(params, kin, t)
    shape = np.broadcast_shapes(np.shape(kin.k), np.shape(t), np.shape(params.m1),
                                np.shape(params.m2), np.shape(params.theta))
    cols = {
        "k_tilde": kin.k_tilde,
        "k": kin.k,
        "t": t,
        "theta": params.theta,
        "q_transition": qft_transition(params, kin, bog, t),
        "p_transition": qm_transition(params, kin, t),
        "w_qft": lg_qft.w_value,
        "w_qm": lg_qm.w_value,
        "f_qft": lg_qft.f_value,
        "f_qm": lg_qm.f_value,
        "c_of_t": commutator_c(params, kin, bog, t),
        "u_sq": bog.u_sq,
        "v_sq": bog.v_sq,
    }
    return {name: np.broadcast_to(np.asarray(val, dtype=float), shape) for name, val in cols.items()}


def evaluate_point(params: MixingParams, t: float, k_tilde=None, k=None) -> EvalRecord:
    """Single record; give exactly one of ``k_tilde`` or ``k``."""
    if (k_tilde is None) == (k is None):
        raise ValueError("give exactly one of k_tilde or k")
    cols = evaluate(params, k_tilde, t) if k is None else evaluate_at_k(params, k, t)
    return EvalRecord(**{name: float(cols[name]) for name in EVAL_COLUMNS})


def _evaluate_block(spec: SweepSpec, x: np.ndarray) -> np.ndarray:
    params, k_tilde, t = spec.coordinates(x)
    cols = evaluate(params, k_tilde, t)
    return np.column_stack([cols[name] for name in EVAL_COLUMNS])


def sweep_array(spec: SweepSpec, n_workers: int = 1) -> np.ndarray:
    """Sweep as an ``(steps, 13)`` array in :data:`EVAL_COLUMNS` order."""
    x = spec.grid()
    blocks = [x[i:i + BLOCK_SIZE] for i in range(0, len(x), BLOCK_SIZE)]
    if n_workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            parts = list(pool.map(lambda b: _evaluate_block(spec, b), blocks))
    else:
        parts = [_evaluate_block(spec, b) for b in blocks]
    return np.vstack(parts)


def run_sweep(spec: SweepSpec, n_workers: int = 1) -> list[EvalRecord]:
    """Evaluate every grid point of ``spec`` in ascending axis order.

    Output is a pure function of ``spec``; ``n_workers`` only changes how
    fixed blocks of the grid are scheduled.
    """
    table = sweep_array(spec, n_workers=n_workers)
    return [EvalRecord(*map(float, row)) for row in table]


def records_to_array(records) -> np.ndarray:
    return np.array([astuple(r) for r in records], dtype=float).reshape(-1, len(EVAL_COLUMNS))


def golden_section_max(func, lo: float, hi: float, tol: float, max_iter: int = 500):
    """Golden-section search for a maximum of a unimodal ``func`` on ``[lo, hi]``.

    Returns ``(x_best, f_best, lo, hi)`` where ``hi - lo <= tol`` on exit
    unless ``max_iter`` ran out first.
    """
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    f1, f2 = func(x1), func(x2)
    n = 0
    while hi - lo > tol and n < max_iter:
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - GOLDEN * (hi - lo)
            f1 = func(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + GOLDEN * (hi - lo)
            f2 = func(x2)
        n += 1
    if f1 >= f2:
        return x1, f1, lo, hi
    return x2, f2, lo, hi


def find_maximum(spec: SweepSpec, quantity: str, refine_tol: float = 1e-10,
                 n_workers: int = 1) -> ExtremumReport:
    """Locate the largest value of ``quantity`` along the sweep.

    A coarse scan over the grid picks the best point (smallest coordinate on
    ties within 1e-15); golden-section search then refines inside the two
    neighbouring grid cells. The refined point is kept only if it is at
    least as good as the coarse one.
    """
    if quantity not in QUANTITIES:
        raise ValueError(f"quantity must be one of {QUANTITIES}, got {quantity!r}")
    if not refine_tol > 0:
        raise ValueError(f"refine_tol must be positive, got {refine_tol}")
    x = spec.grid()
    values = sweep_array(spec, n_workers=n_workers)[:, EVAL_COLUMNS.index(quantity)]
    best = int(np.flatnonzero(values >= values.max() - 1e-15)[0])
    lo = x[max(best - 1, 0)]
    hi = x[min(best + 1, len(x) - 1)]

    def objective(xi):
        params, k_tilde, t = spec.coordinates(np.array([xi]))
        return float(evaluate(params, k_tilde, t)[quantity][0])

    x_ref, f_ref, g_lo, g_hi = golden_section_max(objective, float(lo), float(hi), refine_tol)
    refined = f_ref >= values[best]
    return ExtremumReport(
        quantity=quantity,
        arg_at_max=float(x_ref) if refined else float(x[best]),
        max_value=float(f_ref) if refined else float(values[best]),
        bracket=(float(lo), float(hi)),
        refined=bool(refined),
        tolerance_used=float(refine_tol),
        coarse_arg=float(x[best]),
        coarse_value=float(values[best]),
        final_width=float(g_hi - g_lo),
    )


def limit_diagnostics(params: MixingParams, t: float, k_tilde_list) -> list[tuple]:
    """QFT/QM transition deviation against its envelope ``sin^2(2 theta) |V|^2``.

    Returns ``(k_tilde, |Q - P|, envelope)`` per point and raises
    ``ArithmeticError`` if a deviation exceeds its envelope by more than 1e-12.
    """
    k_tilde = np.asarray(list(k_tilde_list), dtype=float)
    if k_tilde.size == 0 or np.any(k_tilde <= 0):
        raise ValueError("k_tilde_list must be nonempty with positive entries")
    cols = evaluate(params, k_tilde, t)
    dev = np.abs(cols["q_transition"] - cols["p_transition"])
    bound = np.square(params.sin_2theta) * cols["v_sq"]
    bad = dev > bound + 1e-12
    if np.any(bad):
        i = int(np.flatnonzero(bad)[0])
        raise ArithmeticError(
            f"deviation {dev[i]:.3e} exceeds envelope {bound[i]:.3e} at k_tilde={k_tilde[i]}"
        )
    return [(float(a), float(b), float(c)) for a, b, c in zip(k_tilde, dev, bound)]
