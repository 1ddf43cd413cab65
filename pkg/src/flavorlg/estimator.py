"""Estimator-style front end so the functionals compose with sklearn pipelines.

Example
-------
>>> import numpy as np
>>> from flavorlg import LeggettGargTransformer
>>> est = LeggettGargTransformer(m1=3.0, m2=20.0, theta="pi/3")
>>> out = est.fit_transform(np.array([[1.0, 1.0]]))
>>> out.shape
(1, 13)
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .leggett_garg import VIOLATION_TOL
from .model import derive_flavor_masses
from .sweep import EVAL_COLUMNS, evaluate
from .validation import check_mixing_params, check_momentum_time


class LeggettGargTransformer(TransformerMixin, BaseEstimator):
    """Map ``(momentum, time)`` rows to oscillation, uncertainty and LG columns.

    Nothing is learned from data: ``fit`` validates the hyper-parameters
    and the input shape, ``transform`` evaluates the closed forms.

    Parameters
    ----------
    m1, m2 : float
        Mass eigenvalues, ``0 < m1 <= m2``.
    theta : float or {"pi/3", "pi/4"}
        Mixing angle in radians.
    momentum : {"k_tilde", "k"}
        Whether the first input column is ``k / sqrt(m1 m2)`` or ``k`` itself.

    Attributes
    ----------
    params_ : MixingParams
    flavor_masses_ : FlavorMasses
    n_features_in_ : int
    """

    def __init__(self, m1=3.0, m2=20.0, theta=np.pi / 3, momentum="k_tilde"):
        self.m1 = m1
        self.m2 = m2
        self.theta = theta
        self.momentum = momentum

    def fit(self, X, y=None):
        if self.momentum not in ("k_tilde", "k"):
            raise ValueError(f"momentum must be 'k_tilde' or 'k', got {self.momentum!r}")
        X = check_momentum_time(X)
        self.params_ = check_mixing_params(self.m1, self.m2, self.theta)
        self.flavor_masses_ = derive_flavor_masses(self.params_)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "params_")
        X = check_momentum_time(X)
        k_tilde = X[:, 0]
        if self.momentum == "k":
            k_tilde = k_tilde / self.params_.sqrt_m1m2
        cols = evaluate(self.params_, k_tilde, X[:, 1])
        return np.column_stack([cols[name] for name in EVAL_COLUMNS])

    def get_feature_names_out(self, input_features=None):
        return np.asarray(EVAL_COLUMNS, dtype=object)

    def violation_mask(self, X):
        """Rows where either Wigner functional exceeds the violation tolerance."""
        out = self.transform(X)
        w = out[:, [EVAL_COLUMNS.index("w_qft"), EVAL_COLUMNS.index("w_qm")]]
        return w > VIOLATION_TOL
