import numpy as np
import pytest

from flavorlg.verify import draw_samples, run_verify
from test_leggett_garg import wrong_phase_gap


def test_passes_on_ten_thousand_samples():
    outcome = run_verify(samples=10_000, seed=123)
    assert outcome.passed, outcome.report()


def test_failure_detected_for_single_phase_gap():
    outcome = run_verify(samples=2_000, seed=0, gap_form=wrong_phase_gap)
    assert not outcome.passed
    failed = {r.name for r in outcome.results if not r.passed}
    assert "qft_gap_identity" in failed


def test_draw_ranges():
    params, k_tilde, t = draw_samples(5_000, 1)
    assert np.all((params.m1 >= 0.1) & (params.m1 <= 50))
    assert np.all((params.m2 >= params.m1) & (params.m2 <= 50 * params.m1))
    assert np.all((params.theta >= 0) & (params.theta <= np.pi / 2))
    assert np.all((k_tilde >= 1e-3) & (k_tilde <= 1e3))
    assert np.all((t >= 0) & (t <= 10))


def test_seed_reproducibility():
    a = run_verify(samples=500, seed=9)
    b = run_verify(samples=500, seed=9)
    assert a == b
    assert a.report() == b.report()


def test_rejects_zero_samples():
    with pytest.raises(ValueError):
        run_verify(samples=0)
