import math

import numpy as np
import pytest

from conftest import REF, REF_PARAMS
from flavorlg import MixingParams, SweepSpec, SweepSpecError, evaluate_point, find_maximum, limit_diagnostics, run_sweep
from flavorlg.presets import FIGURES
from flavorlg.sweep import EVAL_COLUMNS, golden_section_max, records_to_array, sweep_array

FIG1 = MixingParams(*REF_PARAMS)


def spec(**kw):
    base = dict(axis="k_tilde", min=0.05, max=10.0, steps=2001, spacing="logarithmic", params=FIG1, t=1.0)
    base.update(kw)
    return SweepSpec(**base)


@pytest.mark.parametrize(
    "kw, field",
    [
        (dict(min=1.0, max=1.0), "min"),
        (dict(steps=1), "steps"),
        (dict(min=0.0), "min"),  # log spacing
        (dict(axis="mass"), "axis"),
        (dict(spacing="cubic"), "spacing"),
        (dict(axis="theta", min=0.0, max=2.0, spacing="linear"), "max"),
        (dict(t=-1.0), "t"),
    ],
)
def test_invalid_spec(kw, field):
    with pytest.raises(SweepSpecError) as err:
        spec(**kw)
    assert err.value.field == field


def test_no_mixing_sweep_is_zero():
    records = run_sweep(spec(steps=3, params=MixingParams(3.0, 20.0, 0.0)))
    assert len(records) == 3
    for r in records:
        assert r.w_qft == r.w_qm == r.f_qft == r.f_qm == 0.0


def test_grid_order_and_count():
    records = run_sweep(spec())
    assert len(records) == 2001
    k = [r.k_tilde for r in records]
    assert k == sorted(k)
    assert k[0] == 0.05 and k[-1] == pytest.approx(10.0, rel=1e-15)


def test_record_at_unit_k_tilde_matches_oracle():
    # [0.1, 10] with 2001 log points puts grid index 1000 on k_tilde = 1
    records = run_sweep(spec(min=0.1))
    r = records[1000]
    assert r.k_tilde == pytest.approx(1.0, rel=1e-15)
    for name in ("q_transition", "p_transition", "w_qft", "w_qm", "f_qft", "f_qm", "c_of_t"):
        assert getattr(r, name) == pytest.approx(REF[name], abs=1e-9)


def test_default_grid_row_near_unit_k_tilde():
    # the default grid has no row at exactly k_tilde = 1; compare the nearest row pointwise
    import oracle

    records = run_sweep(spec())
    r = min(records, key=lambda rec: abs(rec.k_tilde - 1.0))
    ref = oracle.point(3, 20, oracle.PI / 3, oracle.mpf(r.k), 1)
    for name in ("q_transition", "w_qft", "w_qm", "f_qft", "f_qm", "c_of_t"):
        assert getattr(r, name) == pytest.approx(float(ref[name]), abs=1e-9)


@pytest.mark.parametrize("axis, lo, hi", [("time", 0.0, 10.0), ("theta", 0.0, math.pi / 2)])
def test_other_axes(axis, lo, hi):
    s = spec(axis=axis, min=lo, max=hi, steps=101, spacing="linear", k_tilde=1.0)
    table = sweep_array(s)
    col = EVAL_COLUMNS.index("t" if axis == "time" else "theta")
    np.testing.assert_array_equal(table[:, col], s.grid())
    point = evaluate_point(MixingParams(3.0, 20.0, math.pi / 3), 1.0, k_tilde=1.0)
    if axis == "time":
        row = table[np.argmin(np.abs(table[:, col] - 1.0))]
        assert row[EVAL_COLUMNS.index("w_qft")] == pytest.approx(point.w_qft, abs=1e-12)


def test_worker_count_does_not_change_output():
    s = spec(steps=1500)
    base = sweep_array(s, n_workers=1)
    for n in (2, 3, 8):
        assert sweep_array(s, n_workers=n).tobytes() == base.tobytes()


def test_records_roundtrip():
    s = spec(steps=50)
    assert records_to_array(run_sweep(s)).tobytes() == sweep_array(s).tobytes()


def test_golden_section_on_parabola():
    x, fx, lo, hi = golden_section_max(lambda x: -(x - 0.3) ** 2, 0.0, 1.0, 1e-10)
    assert abs(x - 0.3) < 1e-9
    assert hi - lo <= 1e-10


class TestFindMaximum:
    def test_fig1_ordering(self):
        s = spec()
        qft = find_maximum(s, "w_qft", refine_tol=1e-10)
        qm = find_maximum(s, "w_qm", refine_tol=1e-10)
        assert qft.max_value > qm.max_value > 0

    def test_refinement_soundness(self):
        s = spec()
        for q in ("w_qft", "w_qm", "f_qft", "f_qm"):
            rep = find_maximum(s, q, refine_tol=1e-9)
            assert rep.max_value >= rep.coarse_value - 1e-15
            assert rep.bracket[0] <= rep.arg_at_max <= rep.bracket[1]
            assert rep.final_width <= 1e-9
            table = sweep_array(s)[:, EVAL_COLUMNS.index(q)]
            assert rep.max_value >= table.max() - 1e-15

    def test_no_mixing_maxima_are_zero(self):
        s = spec(params=MixingParams(3.0, 20.0, 0.0), steps=101)
        for q in ("w_qft", "w_qm", "f_qft", "f_qm"):
            assert find_maximum(s, q).max_value == 0.0

    def test_maximal_mixing(self):
        s = FIGURES["fig3a"].sweep_spec()
        assert find_maximum(s, "w_qm").max_value <= 1e-12
        assert find_maximum(s, "w_qft").max_value > 0

    def test_tie_break_smallest_coordinate(self):
        s = spec(params=MixingParams(3.0, 20.0, 0.0), steps=11)
        assert find_maximum(s, "w_qft").coarse_arg == 0.05

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            find_maximum(spec(), "entropy")
        with pytest.raises(ValueError):
            find_maximum(spec(), "w_qft", refine_tol=0.0)


def test_deviation_concentrates_near_geometric_mean():
    table = sweep_array(spec())
    dev = np.abs(table[:, EVAL_COLUMNS.index("w_qft")] - table[:, EVAL_COLUMNS.index("w_qm")])
    assert 0.2 <= table[np.argmax(dev), 0] <= 5.0


class TestLimitDiagnostics:
    def test_infrared(self):
        ((_, dev, bound),) = limit_diagnostics(FIG1, 1.0, [1e-6])
        assert dev < 1e-10
        assert dev <= bound + 1e-12

    def test_ultraviolet(self):
        ((_, dev, bound),) = limit_diagnostics(FIG1, 1.0, [100.0])
        assert dev < 1e-2
        m1, m2 = 3.0, 20.0
        assert bound == pytest.approx(0.75 * ((m2 - m1) / (2 * 100 * math.sqrt(60))) ** 2, rel=1e-2)

    def test_degenerate(self):
        rows = limit_diagnostics(MixingParams(4.0, 4.0, 0.5), 2.0, np.geomspace(1e-3, 1e3, 50))
        assert all(dev == 0.0 for _, dev, _ in rows)

    def test_rejects_empty_or_nonpositive(self):
        with pytest.raises(ValueError):
            limit_diagnostics(FIG1, 1.0, [])
        with pytest.raises(ValueError):
            limit_diagnostics(FIG1, 1.0, [0.0])
