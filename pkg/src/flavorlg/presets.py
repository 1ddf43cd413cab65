"""Parameter sets of the published figures and the default k_tilde grid."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import MixingParams
from .sweep import SweepSpec

DEFAULT_GRID = {"min": 0.05, "max": 10.0, "steps": 2001, "spacing": "logarithmic"}


@dataclass(frozen=True)
class FigurePreset:
    id: str
    params: MixingParams
    t: float
    quantities: tuple

    def sweep_spec(self, steps: int = DEFAULT_GRID["steps"]) -> SweepSpec:
        return SweepSpec(
            axis="k_tilde",
            min=DEFAULT_GRID["min"],
            max=DEFAULT_GRID["max"],
            steps=steps,
            spacing=DEFAULT_GRID["spacing"],
            params=self.params,
            t=self.t,
        )


FIGURES = {
    "fig1": FigurePreset("fig1", MixingParams(3.0, 20.0, math.pi / 3), 1.0, ("w_qft", "w_qm")),
    "fig2a": FigurePreset("fig2a", MixingParams(3.0, 40.0, math.pi / 3), 1.0, ("w_qft", "f_qft")),
    "fig2b": FigurePreset("fig2b", MixingParams(3.0, 40.0, math.pi / 3), 1.0, ("w_qm", "f_qm")),
    "fig3a": FigurePreset("fig3a", MixingParams(3.0, 40.0, math.pi / 4), 1.0, ("w_qft", "f_qft")),
    "fig3b": FigurePreset("fig3b", MixingParams(3.0, 40.0, math.pi / 4), 1.0, ("w_qm", "f_qm")),
}
