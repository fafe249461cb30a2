"""End-to-end 1-to-2 telecloning of a coherent state.

The sender mixes the input with her share of the tripartite resource on a
balanced beam splitter, reads out x on one output port and p on the
other, and broadcasts both results. Each receiver displaces his mode by
sqrt(2) times the gain-weighted results, which completes the cloning.

The same physics is evaluated by three routes that must agree:

``run_analytic``
    Expands each output quadrature over the independent input modes
    (coherent input, the two squeezer outputs, the internal vacuum, and
    one loss ancilla per imperfection) and sums coefficient^2 * variance.

``run_circuit_analytic``
    Propagates the full covariance matrix through the network, performs
    the Gaussian conditional update for the two measured quadratures, and
    folds the feedforward displacement in exactly: the output covariance
    is outcome independent and the output mean is the outcome average.

``run_monte_carlo``
    Samples the two measurement outcomes shot by shot from independent
    counter-based streams, applies the same displacements, and estimates
    moments. The clone variance combines the spread of the per-shot
    conditional means with the constant conditional covariance (law of
    total variance); ``sampled=True`` instead draws one quadrature value
    per clone per shot and estimates everything from raw samples.

Imperfections: per-mode resource transmissivities; homodyne efficiency
as a loss channel on the measured ports, with the configured gains
defined downstream of that loss (the raw displacement coefficient is
rescaled by 1/sqrt(eta), the way unit gain is calibrated in practice);
and an optional coupler transmissivity on each receiver mode ahead of
the displacement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .gaussian import (
    GaussianState,
    apply_symplectic,
    assert_physical,
    beam_splitter_50_50,
    coherent,
    loss_channel,
    tensor,
    VACUUM_VARIANCE,
)
from .homodyne import (
    DEGENERATE_VARIANCE_TOL,
    DegenerateVarianceError,
    shot_stream,
)
from .resource import SqueezerSpec, build_telecloning_resource

# mode layout of the joint state before the sender's beam splitter
MODE_IN, MODE_A, MODE_B, MODE_C = 0, 1, 2, 3


@dataclass(frozen=True)
class ProtocolConfig:
    """Complete description of one telecloning experiment."""

    spec_i: SqueezerSpec
    spec_ii: SqueezerSpec
    input_alpha: complex = 0j
    gains: tuple[float, float, float, float] = (1.0, 1.0, 1.0, 1.0)
    eta_homodyne: float = 1.0
    eta_resource: tuple[float, float, float] = (1.0, 1.0, 1.0)
    coupler_t: float = 1.0
    shots: int = 10_000
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "input_alpha", complex(self.input_alpha))
        gains = tuple(float(g) for g in self.gains)
        if len(gains) != 4 or not all(math.isfinite(g) for g in gains):
            raise ValueError("gains must be four finite values (gx1, gp1, gx2, gp2)")
        object.__setattr__(self, "gains", gains)
        eta = tuple(float(e) for e in self.eta_resource)
        if len(eta) != 3 or not all(0.0 <= e <= 1.0 for e in eta):
            raise ValueError("eta_resource must be three transmissivities in [0, 1]")
        object.__setattr__(self, "eta_resource", eta)
        if not 0.0 < self.eta_homodyne <= 1.0:
            # eta = 0 leaves nothing to calibrate the gains against
            raise ValueError("eta_homodyne must lie in (0, 1]")
        if not 0.0 < self.coupler_t <= 1.0:
            raise ValueError("coupler_t must lie in (0, 1]")
        if self.shots < 1:
            raise ValueError("shots must be >= 1")


@dataclass(frozen=True)
class QuadratureMoments:
    """First and second moments of one clone, with optional standard errors."""

    mean_x: float
    mean_p: float
    var_x: float
    var_p: float
    se_mean_x: float | None = None
    se_mean_p: float | None = None
    se_var_x: float | None = None
    se_var_p: float | None = None


@dataclass(frozen=True)
class CloneMoments:
    clone1: QuadratureMoments
    clone2: QuadratureMoments


@dataclass(frozen=True)
class ShotRecord:
    """One Monte Carlo trial: Bell outcomes and post-feedforward clone means."""

    x_u: float
    p_v: float
    x1: float
    p1: float
    x2: float
    p2: float


def run_analytic(config: ProtocolConfig) -> CloneMoments:
    """Clone moments from the direct mode expansion."""
    sqrt2 = math.sqrt(2.0)
    eta_a, eta_b, eta_c = config.eta_resource
    t = config.coupler_t
    eta_hd = config.eta_homodyne
    v_x_i = config.spec_i.antisqueezed_variance
    v_p_i = config.spec_i.squeezed_variance
    v_x_ii = config.spec_ii.squeezed_variance
    v_p_ii = config.spec_ii.antisqueezed_variance
    alpha = config.input_alpha

    def one_clone(g_x, g_p, eta_r, sign):
        w = math.sqrt(t) * math.sqrt(eta_r)  # weight of the delivered receiver mode
        # fresh vacuum admixed by the resource loss, the sender loss, the
        # coupler, and the inefficient detection (rescaled by the gain
        # calibration)
        def ancilla(g):
            return (t * (1.0 - eta_r) + (1.0 - t) + g * g * (1.0 - eta_a)
                    + 2.0 * g * g * (1.0 - eta_hd) / eta_hd) * VACUUM_VARIANCE

        c_x_i = w / 2.0 - g_x * math.sqrt(eta_a) / sqrt2
        c_x_ii = -w / 2.0 - g_x * math.sqrt(eta_a) / sqrt2
        c_p_i = w / 2.0 + g_p * math.sqrt(eta_a) / sqrt2
        c_p_ii = -w / 2.0 + g_p * math.sqrt(eta_a) / sqrt2
        c_iii = sign * w / sqrt2
        var_x = (g_x * g_x * VACUUM_VARIANCE + c_x_i**2 * v_x_i
                 + c_x_ii**2 * v_x_ii + c_iii**2 * VACUUM_VARIANCE + ancilla(g_x))
        var_p = (g_p * g_p * VACUUM_VARIANCE + c_p_i**2 * v_p_i
                 + c_p_ii**2 * v_p_ii + c_iii**2 * VACUUM_VARIANCE + ancilla(g_p))
        return QuadratureMoments(g_x * alpha.real, g_p * alpha.imag,
                                 float(var_x), float(var_p))

    g_x1, g_p1, g_x2, g_p2 = config.gains
    return CloneMoments(one_clone(g_x1, g_p1, eta_b, +1.0),
                        one_clone(g_x2, g_p2, eta_c, -1.0))


def circuit_states(config: ProtocolConfig) -> dict[str, GaussianState]:
    """Named snapshots of the covariance pipeline, for audits and demos."""
    resource = build_telecloning_resource(config.spec_i, config.spec_ii,
                                          config.eta_resource)
    joint = tensor(coherent([config.input_alpha]), resource.state)
    # the receiver-side coupler acts on B and C only, so it commutes with
    # everything the sender does; apply it before her beam splitter
    delivered = joint
    for mode in (MODE_B, MODE_C):
        delivered = loss_channel(delivered, mode, config.coupler_t)
    split = apply_symplectic(delivered, beam_splitter_50_50(), [MODE_IN, MODE_A])
    detected = split
    for mode in (0, 1):
        detected = loss_channel(detected, mode, config.eta_homodyne)
    return {
        "resource": resource.state,
        "joint": joint,
        "bell_split": split,
        "detected": detected,
    }


@dataclass(frozen=True)
class _MeasurementPlan:
    """Affine structure of measurement plus feedforward, fixed per config.

    After the sender's splitter the mode layout is (v, u, B, C) with
    x measured on u and p on v. For outcome vector m = (x_u, p_v):

        clone means = base_mean + gain_map (m - mu_q) + ffwd m
        clone cov   = cond_cov + (gain_map + ffwd) sigma_q (gain_map + ffwd)^T
    """

    base_mean: np.ndarray   # (4,)  pre-measurement means of (xB, pB, xC, pC)
    mu_q: np.ndarray        # (2,)  outcome means
    sigma_q: np.ndarray     # (2,2) outcome covariance
    gain_map: np.ndarray    # (4,2) conditional-mean response to outcomes
    ffwd: np.ndarray        # (4,2) feedforward displacement map
    cond_cov: np.ndarray    # (4,4) outcome-independent conditional covariance


def _measurement_plan(config: ProtocolConfig) -> _MeasurementPlan:
    state = circuit_states(config)["detected"]
    q_idx = np.array([2 * 1 + 0, 2 * 0 + 1])        # x of u, p of v
    k_idx = np.array([4, 5, 6, 7])                  # B and C quadratures
    sigma_q = state.cov[np.ix_(q_idx, q_idx)]
    if np.diag(sigma_q).min() < DEGENERATE_VARIANCE_TOL:
        raise DegenerateVarianceError("measured quadrature variance is degenerate")
    cross = state.cov[np.ix_(k_idx, q_idx)]
    gain_map = np.linalg.solve(sigma_q.T, cross.T).T
    cond_cov = state.cov[np.ix_(k_idx, k_idx)] - gain_map @ cross.T
    cond_cov = 0.5 * (cond_cov + cond_cov.T)

    g_x1, g_p1, g_x2, g_p2 = config.gains
    scale = math.sqrt(2.0) / math.sqrt(config.eta_homodyne)
    ffwd = np.zeros((4, 2))
    ffwd[0, 0] = scale * g_x1
    ffwd[1, 1] = scale * g_p1
    ffwd[2, 0] = scale * g_x2
    ffwd[3, 1] = scale * g_p2

    return _MeasurementPlan(
        base_mean=state.mean[k_idx].copy(),
        mu_q=state.mean[q_idx].copy(),
        sigma_q=sigma_q,
        gain_map=gain_map,
        ffwd=ffwd,
        cond_cov=cond_cov,
    )


def clone_output_state(config: ProtocolConfig) -> GaussianState:
    """Two-mode Gaussian state of the clones after feedforward.

    This is the ensemble state averaged over measurement outcomes; for a
    fixed outcome only the mean differs.
    """
    plan = _measurement_plan(config)
    total = plan.gain_map + plan.ffwd
    out_mean = plan.base_mean + plan.ffwd @ plan.mu_q
    out_cov = plan.cond_cov + total @ plan.sigma_q @ total.T
    out_cov = 0.5 * (out_cov + out_cov.T)
    state = GaussianState(out_mean, out_cov)
    assert_physical(state, context="clone output")
    return state


def run_circuit_analytic(config: ProtocolConfig) -> CloneMoments:
    """Clone moments from the covariance-matrix pipeline."""
    out = clone_output_state(config)
    m, c = out.mean, out.cov
    return CloneMoments(
        QuadratureMoments(float(m[0]), float(m[1]), float(c[0, 0]), float(c[1, 1])),
        QuadratureMoments(float(m[2]), float(m[3]), float(c[2, 2]), float(c[3, 3])),
    )


def _simulate_shot(plan: _MeasurementPlan, seed: int, shot_index: int,
                   cond_sqrt: np.ndarray | None = None
                   ) -> tuple[ShotRecord, np.ndarray | None]:
    """One shot: sample x_u, then p_v given x_u, then displace.

    Draw k of shot j comes from stream (seed, j), so results do not
    depend on the order shots are executed in.
    """
    rng = shot_stream(seed, shot_index)
    v_x = plan.sigma_q[0, 0]
    m_x = rng.normal(plan.mu_q[0], math.sqrt(v_x))
    slope = plan.sigma_q[1, 0] / v_x
    v_p_given = plan.sigma_q[1, 1] - plan.sigma_q[1, 0] ** 2 / v_x
    m_p = rng.normal(plan.mu_q[1] + slope * (m_x - plan.mu_q[0]),
                     math.sqrt(max(v_p_given, 0.0)))
    m = np.array([m_x, m_p])
    means = plan.base_mean + plan.gain_map @ (m - plan.mu_q) + plan.ffwd @ m
    record = ShotRecord(float(m_x), float(m_p), *(float(v) for v in means))
    draws = None
    if cond_sqrt is not None:
        draws = means + cond_sqrt @ rng.standard_normal(4)
    return record, draws


def _psd_sqrt(matrix: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eigh(matrix)
    return vecs @ np.diag(np.sqrt(np.clip(vals, 0.0, None))) @ vecs.T


def run_monte_carlo(config: ProtocolConfig, sampled: bool = False
                    ) -> tuple[CloneMoments, list[ShotRecord]]:
    """Shot-by-shot simulation of measurement plus feedforward.

    Returns estimated clone moments with standard errors and the list of
    per-shot records. With ``sampled=False`` the variance estimate adds
    the exact conditional covariance to the spread of the conditional
    means; with ``sampled=True`` one output quadrature vector is drawn
    per shot and the moments come from those raw samples.
    """
    plan = _measurement_plan(config)
    assert_physical(GaussianState(plan.base_mean, plan.cond_cov),
                    context="conditioned receiver modes")
    cond_sqrt = _psd_sqrt(plan.cond_cov) if sampled else None

    n = config.shots
    means = np.empty((n, 4))
    draws = np.empty((n, 4)) if sampled else None
    records: list[ShotRecord] = []
    for j in range(n):
        record, drawn = _simulate_shot(plan, config.seed, j, cond_sqrt)
        records.append(record)
        means[j] = (record.x1, record.p1, record.x2, record.p2)
        if sampled:
            draws[j] = drawn

    cond_var = np.diag(plan.cond_cov)
    if sampled:
        mean_hat = draws.mean(axis=0)
        var_hat = draws.var(axis=0, ddof=1) if n > 1 else cond_var.copy()
    else:
        mean_hat = means.mean(axis=0)
        between = means.var(axis=0, ddof=1) if n > 1 else np.zeros(4)
        var_hat = between + cond_var
    if n > 1:
        spread = draws.var(axis=0, ddof=1) if sampled else means.var(axis=0, ddof=1)
        se_mean = np.sqrt(var_hat / n) if sampled else np.sqrt(spread / n)
        se_var = spread * math.sqrt(2.0 / (n - 1))
    else:
        se_mean = se_var = np.full(4, None)

    def quad(k):
        return QuadratureMoments(
            mean_x=float(mean_hat[2 * k]), mean_p=float(mean_hat[2 * k + 1]),
            var_x=float(var_hat[2 * k]), var_p=float(var_hat[2 * k + 1]),
            se_mean_x=None if se_mean[2 * k] is None else float(se_mean[2 * k]),
            se_mean_p=None if se_mean[2 * k + 1] is None else float(se_mean[2 * k + 1]),
            se_var_x=None if se_var[2 * k] is None else float(se_var[2 * k]),
            se_var_p=None if se_var[2 * k + 1] is None else float(se_var[2 * k + 1]),
        )

    return CloneMoments(quad(0), quad(1)), records


def alice_trace_levels(config: ProtocolConfig) -> tuple[float, float]:
    """Sender-side diagnostics of the measured p port.

    Returns ``(var_p_v, amplitude_reduction_db)`` where ``var_p_v`` is the
    detected variance of the p outcome for a vacuum input (displacement
    independent, so it equals the coherent-input value) and the reduction
    is the mean-power loss of the measured state relative to the input
    imposed by the sender's balanced splitter: exactly 10 log10(2) dB.
    """
    vac_config = replace(config, input_alpha=0j)
    detected = circuit_states(vac_config)["detected"]
    var_p_v = float(detected.cov[1, 1])
    in_weight = abs(beam_splitter_50_50().entries[2, 0])  # input share of the u port
    reduction_db = float(-20.0 * np.log10(in_weight))
    return var_p_v, reduction_db
