"""Homodyne detection of a single quadrature.

An ideal homodyne detector reads out exactly one quadrature of one mode.
The remaining modes update by the Gaussian conditional rule, a rank-1
Schur complement against the measured scalar variance:

    mean_K' = mean_K + c (value - mean_q) / v_q
    cov_K'  = cov_K - c c^T / v_q

where c is the cross-covariance column between the kept block K and the
measured quadrature q. The conjugate quadrature of the measured mode is
destroyed by the readout, so the measured mode is dropped entirely.

Detector inefficiency is modeled upstream by a loss channel on the mode
before the ideal measurement.

Sampling is reproducible: generators are explicit arguments, and
``shot_stream(seed, j)`` derives an independent counter-based stream for
shot j so aggregate results cannot depend on execution order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gaussian import GaussianState

DEGENERATE_VARIANCE_TOL = 1e-12


class DegenerateVarianceError(ValueError):
    """Marginal variance is too small to condition on."""


@dataclass(frozen=True)
class QuadratureSelector:
    """Which quadrature ('x' or 'p') of which mode to measure."""

    mode: int
    which: str

    def __post_init__(self):
        if self.which not in ("x", "p"):
            raise ValueError(f"which must be 'x' or 'p', got {self.which!r}")
        if self.mode < 0:
            raise ValueError(f"mode index must be non-negative, got {self.mode}")

    def index(self) -> int:
        return 2 * self.mode + (0 if self.which == "x" else 1)

    def validate(self, state: GaussianState) -> None:
        if self.mode >= state.n_modes:
            raise ValueError(
                f"selector mode {self.mode} out of range for {state.n_modes}-mode state"
            )


@dataclass(frozen=True)
class HomodyneOutcome:
    value: float
    selector: QuadratureSelector


def marginal(state: GaussianState, sel: QuadratureSelector) -> tuple[float, float]:
    """Mean and variance of the selected quadrature."""
    sel.validate(state)
    i = sel.index()
    return float(state.mean[i]), float(state.cov[i, i])


def condition_on(state: GaussianState, sel: QuadratureSelector,
                 value: float) -> GaussianState:
    """State of the unmeasured modes given an observed quadrature value."""
    sel.validate(state)
    if state.n_modes < 2:
        raise ValueError("conditioning drops the measured mode; need at least 2 modes")
    i = sel.index()
    v_q = state.cov[i, i]
    if v_q < DEGENERATE_VARIANCE_TOL:
        raise DegenerateVarianceError(
            f"marginal variance {v_q:.3e} is degenerate; cannot condition"
        )
    keep = np.array([j for j in range(state.mean.size) if j // 2 != sel.mode])
    c = state.cov[keep, i]
    mean_k = state.mean[keep] + c * (value - state.mean[i]) / v_q
    cov_k = state.cov[np.ix_(keep, keep)] - np.outer(c, c) / v_q
    # enforce exact symmetry against rounding in the rank-1 update
    cov_k = 0.5 * (cov_k + cov_k.T)
    return GaussianState(mean_k, cov_k)


def sample_homodyne(state: GaussianState, sel: QuadratureSelector,
                    rng: np.random.Generator) -> tuple[HomodyneOutcome, GaussianState]:
    """Draw an outcome from the marginal and return the conditioned state."""
    m, v = marginal(state, sel)
    value = float(rng.normal(m, np.sqrt(v)))
    return HomodyneOutcome(value, sel), condition_on(state, sel, value)


def shot_stream(seed: int, shot_index: int) -> np.random.Generator:
    """Independent deterministic stream for one Monte Carlo shot.

    Streams are keyed by (seed, shot index) in a counter-based generator,
    so shot j draws the same numbers no matter how many shots run or in
    what order.
    """
    if shot_index < 0:
        raise ValueError("shot index must be non-negative")
    key = np.array([seed % 2**64, shot_index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
