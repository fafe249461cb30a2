"""Pump-power model of below-threshold parametric squeezing.

With pump amplitude x = sqrt(P / P_threshold) and analysis frequency
omega in units of the cavity half width, the detected quadrature spectra
normalized to vacuum are

    V_minus = 1 - eta_det * 4x / ((1 + x)^2 + omega^2)
    V_plus  = 1 + eta_det * 4x / ((1 - x)^2 + omega^2)

The product V_minus * V_plus is exactly 1 at eta_det = 1 and above 1
otherwise, so the emitted squeezer spec is always physical. This is a
phenomenological calibration model: pump sweeps built on it reproduce
curve shapes and bounds, not any particular measured data points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import optimize

from .metrics import fidelity_unit_gain
from .protocol import ProtocolConfig, run_analytic
from .resource import SqueezerSpec


@dataclass(frozen=True)
class OPOParams:
    """Threshold pump power (mW), detection efficiency, analysis frequency."""

    p_threshold_mw: float
    eta_det: float = 1.0
    omega: float = 0.0

    def __post_init__(self):
        if self.p_threshold_mw <= 0.0:
            raise ValueError("threshold pump power must be positive")
        if not 0.0 <= self.eta_det <= 1.0:
            raise ValueError("detection efficiency must lie in [0, 1]")
        if self.omega < 0.0:
            raise ValueError("analysis frequency must be >= 0")


def squeezing_spectra(params: OPOParams, p_pump_mw: float) -> SqueezerSpec:
    """Squeezing and antisqueezing of one squeezer at the given pump power."""
    if not 0.0 <= p_pump_mw < params.p_threshold_mw:
        raise ValueError(
            f"pump power must lie in [0, threshold); got {p_pump_mw} mW with "
            f"threshold {params.p_threshold_mw} mW"
        )
    x = np.sqrt(p_pump_mw / params.p_threshold_mw)
    w2 = params.omega**2
    # cancellation-free forms: near threshold 1 - 4x/((1+x)^2) loses all
    # precision, but (1+x)^2 - 4 eta x = (1-x)^2 + 4x(1-eta) is a sum of
    # non-negative terms, so the emitted dB pair keeps v_sq*v_anti >= 1/16
    # to machine precision
    low = (1.0 - x) ** 2 + w2
    high = (1.0 + x) ** 2 + w2
    v_minus = (low + 4.0 * x * (1.0 - params.eta_det)) / high
    v_plus = (low + 4.0 * x * params.eta_det) / low
    return SqueezerSpec(squeezing_db=float(-10.0 * np.log10(v_minus)) + 0.0,
                        antisqueezing_db=float(10.0 * np.log10(v_plus)))


def fidelity_vs_pump(params: OPOParams, pump_grid_mw: Sequence[float]) -> np.ndarray:
    """Expected unit-gain clone fidelity over a pump-power grid.

    Both squeezers are assumed identical. Returns an array of rows
    (p_pump_mw, fidelity).
    """
    rows = []
    for p in pump_grid_mw:
        spec = squeezing_spectra(params, p)
        moments = run_analytic(ProtocolConfig(spec, spec))
        rows.append((float(p), fidelity_unit_gain(moments.clone1.var_x,
                                                  moments.clone1.var_p)))
    return np.array(rows)


@dataclass(frozen=True)
class FitResult:
    params: OPOParams
    sum_squared_residual: float
    rms_residual_db: float
    n_points: int


def fit_params(data: Sequence[tuple[float, float, float]],
               omega: float = 0.0) -> FitResult:
    """Least-squares (p_threshold, eta_det) from measured noise levels.

    ``data`` rows are (p_pump_mw, squeezing_db, antisqueezing_db). A
    coarse grid search seeds coordinate descent on the two parameters at
    the fixed analysis frequency.
    """
    data = [(float(p), float(s), float(a)) for p, s, a in data]
    if len(data) < 3:
        raise ValueError("need at least three data points")
    pumps = [row[0] for row in data]
    if len(set(pumps)) != len(pumps):
        raise ValueError("pump values must be distinct")
    p_max = max(pumps)
    if p_max <= 0.0:
        raise ValueError("need at least one positive pump power")

    def objective(p_th: float, eta: float) -> float:
        params = OPOParams(p_th, eta, omega)
        total = 0.0
        for p, s_db, a_db in data:
            if p >= p_th:
                return np.inf
            spec = squeezing_spectra(params, p)
            total += (spec.squeezing_db - s_db) ** 2
            total += (spec.antisqueezing_db - a_db) ** 2
        return total

    p_grid = np.geomspace(p_max * 1.02, p_max * 50.0, 60)
    eta_grid = np.linspace(0.05, 1.0, 40)
    best = min(((objective(p, e), p, e) for p in p_grid for e in eta_grid),
               key=lambda row: row[0])
    _, p_th, eta = best

    for _ in range(6):
        res = optimize.minimize_scalar(lambda p: objective(p, eta),
                                       bounds=(p_max * 1.0001, p_max * 100.0),
                                       method="bounded",
                                       options={"xatol": 1e-10})
        p_th = float(res.x)
        res = optimize.minimize_scalar(lambda e: objective(p_th, e),
                                       bounds=(1e-6, 1.0), method="bounded",
                                       options={"xatol": 1e-12})
        eta = float(res.x)

    rss = objective(p_th, eta)
    return FitResult(OPOParams(p_th, eta, omega), float(rss),
                     float(np.sqrt(rss / (2 * len(data)))), len(data))
