"""Multimode Gaussian states and the linear optics that acts on them.

Conventions used throughout the package:

* quadratures are the real and imaginary parts of the mode amplitude,
  a = x + i p, with [x, p] = i/2 (photon-number units), so every
  quadrature of the vacuum has variance 1/4;
* moments are stored in the interleaved ordering (x1, p1, ..., xn, pn);
* a state is physical iff every symplectic eigenvalue of its covariance
  matrix is at least 1/4.

All states and matrices are immutable value objects; every operation
returns a new state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

VACUUM_VARIANCE = 0.25
SYMMETRY_TOL = 1e-12
PHYSICALITY_TOL = 1e-9


class PhysicalityError(ValueError):
    """A state or parameter set would violate the uncertainty bound."""


def symplectic_form(n_modes: int) -> np.ndarray:
    """Direct sum of n [[0, 1], [-1, 0]] blocks in the interleaved ordering."""
    return np.kron(np.eye(n_modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


@dataclass(frozen=True)
class GaussianState:
    """Mean vector and covariance matrix of an n-mode Gaussian state."""

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.array(self.mean, dtype=float).reshape(-1)
        cov = np.array(self.cov, dtype=float)
        if mean.size == 0 or mean.size % 2:
            raise ValueError(f"mean must have even positive length, got {mean.size}")
        if cov.shape != (mean.size, mean.size):
            raise ValueError(f"cov shape {cov.shape} does not match mean length {mean.size}")
        if not np.allclose(cov, cov.T, rtol=0.0, atol=SYMMETRY_TOL):
            raise ValueError("covariance matrix is not symmetric")
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @property
    def n_modes(self) -> int:
        return self.mean.size // 2


@dataclass(frozen=True)
class SymplecticMatrix:
    """Real matrix S acting on k modes with S^T Omega S = Omega."""

    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] % 2:
            raise ValueError(f"symplectic matrix must be square of even size, got {entries.shape}")
        omega = symplectic_form(entries.shape[0] // 2)
        if not np.allclose(entries.T @ omega @ entries, omega, rtol=0.0, atol=SYMMETRY_TOL):
            raise ValueError("matrix does not satisfy S^T Omega S = Omega")
        object.__setattr__(self, "entries", entries)

    @property
    def n_modes(self) -> int:
        return self.entries.shape[0] // 2


def vacuum(n_modes: int) -> GaussianState:
    """n-mode vacuum: zero mean, covariance (1/4) * identity."""
    if n_modes < 1:
        raise ValueError("a state needs at least one mode")
    dim = 2 * n_modes
    return GaussianState(np.zeros(dim), VACUUM_VARIANCE * np.eye(dim))


def coherent(alphas: Sequence[complex]) -> GaussianState:
    """Product of coherent states; mode k has mean (Re alpha_k, Im alpha_k)."""
    alphas = list(alphas)
    if not alphas:
        raise ValueError("need at least one amplitude")
    mean = np.empty(2 * len(alphas))
    mean[0::2] = [complex(a).real for a in alphas]
    mean[1::2] = [complex(a).imag for a in alphas]
    return GaussianState(mean, VACUUM_VARIANCE * np.eye(mean.size))


def squeezed_vacuum(v_x: float, v_p: float) -> GaussianState:
    """Single zero-mean mode with quadrature variances (v_x, v_p).

    The pair must respect the uncertainty product v_x * v_p >= 1/16;
    unequal dB magnitudes give an impure (thermal squeezed) state.
    """
    if v_x <= 0.0 or v_p <= 0.0:
        raise ValueError("variances must be positive")
    if v_x * v_p < VACUUM_VARIANCE**2 - 1e-12:
        raise PhysicalityError(
            f"variance product {v_x * v_p:.3e} violates the bound {VACUUM_VARIANCE**2:.3e}"
        )
    return GaussianState(np.zeros(2), np.diag([v_x, v_p]))


def tensor(*states: GaussianState) -> GaussianState:
    """Product state: concatenated means, block-diagonal covariance."""
    if not states:
        raise ValueError("need at least one state")
    mean = np.concatenate([s.mean for s in states])
    cov = np.zeros((mean.size, mean.size))
    at = 0
    for s in states:
        cov[at:at + s.mean.size, at:at + s.mean.size] = s.cov
        at += s.mean.size
    return GaussianState(mean, cov)


def beam_splitter_50_50() -> SymplecticMatrix:
    """Balanced beam splitter on a mode pair.

    Acts identically on x and p: out1 = (in1 + in2)/sqrt(2),
    out2 = (in1 - in2)/sqrt(2).
    """
    h = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)
    return SymplecticMatrix(np.kron(h, np.eye(2)))


def phase_shift(phi: float) -> SymplecticMatrix:
    """Single-mode rotation of (x, p) by angle phi."""
    c, s = np.cos(phi), np.sin(phi)
    return SymplecticMatrix(np.array([[c, -s], [s, c]]))


def apply_symplectic(state: GaussianState, sym: SymplecticMatrix,
                     modes: Sequence[int]) -> GaussianState:
    """Apply S to the listed modes, identity on the rest.

    Cross blocks between acted and spectator modes transform consistently
    through the embedded full-size matrix.
    """
    modes = list(modes)
    if len(set(modes)) != len(modes):
        raise ValueError(f"duplicate modes in {modes}")
    if any(m < 0 or m >= state.n_modes for m in modes):
        raise ValueError(f"modes {modes} out of range for {state.n_modes}-mode state")
    if sym.n_modes != len(modes):
        raise ValueError(
            f"symplectic acts on {sym.n_modes} modes but {len(modes)} were selected"
        )
    idx = np.array([2 * m + q for m in modes for q in (0, 1)])
    full = np.eye(state.mean.size)
    full[np.ix_(idx, idx)] = sym.entries
    return GaussianState(full @ state.mean, full @ state.cov @ full.T)


def displace(state: GaussianState, mode: int, dx: float, dp: float) -> GaussianState:
    """Shift the mean of one mode by (dx, dp); covariance is untouched."""
    if mode < 0 or mode >= state.n_modes:
        raise ValueError(f"mode {mode} out of range")
    mean = state.mean.copy()
    mean[2 * mode] += dx
    mean[2 * mode + 1] += dp
    return GaussianState(mean, state.cov)


def loss_channel(state: GaussianState, mode: int, eta: float) -> GaussianState:
    """Mix one mode with vacuum at transmissivity eta.

    Mean scales by sqrt(eta), variances go to eta*v + (1 - eta)/4 and
    cross covariances scale by sqrt(eta).
    """
    if mode < 0 or mode >= state.n_modes:
        raise ValueError(f"mode {mode} out of range")
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"transmissivity must lie in [0, 1], got {eta}")
    scale = np.ones(state.mean.size)
    scale[2 * mode:2 * mode + 2] = np.sqrt(eta)
    cov = state.cov * np.outer(scale, scale)
    cov[2 * mode, 2 * mode] += (1.0 - eta) * VACUUM_VARIANCE
    cov[2 * mode + 1, 2 * mode + 1] += (1.0 - eta) * VACUUM_VARIANCE
    return GaussianState(state.mean * scale, cov)


def partial_trace(state: GaussianState, keep: Sequence[int]) -> GaussianState:
    """Restrict to the listed modes, in the order given."""
    keep = list(keep)
    if not keep:
        raise ValueError("keep list is empty")
    if len(set(keep)) != len(keep):
        raise ValueError(f"duplicate modes in {keep}")
    if any(m < 0 or m >= state.n_modes for m in keep):
        raise ValueError(f"modes {keep} out of range for {state.n_modes}-mode state")
    idx = np.array([2 * m + q for m in keep for q in (0, 1)])
    return GaussianState(state.mean[idx], state.cov[np.ix_(idx, idx)])


def symplectic_eigenvalues(state: GaussianState) -> np.ndarray:
    """The n symplectic eigenvalues of the covariance matrix, ascending.

    Computed as the absolute values of the eigenvalues of i*Omega*cov,
    which come in +/- pairs; one representative per pair is returned.
    """
    cov = state.cov
    if not np.allclose(cov, cov.T, rtol=0.0, atol=SYMMETRY_TOL):
        raise ValueError("covariance matrix is not symmetric")
    omega = symplectic_form(state.n_modes)
    nu = np.sort(np.abs(np.linalg.eigvals(1j * omega @ cov)))
    return nu[::2].copy()


def is_physical(state: GaussianState, tol: float = PHYSICALITY_TOL) -> bool:
    return bool(symplectic_eigenvalues(state).min() >= VACUUM_VARIANCE - tol)


def assert_physical(state: GaussianState, tol: float = PHYSICALITY_TOL,
                    context: str = "") -> None:
    """Raise PhysicalityError unless all symplectic eigenvalues are >= 1/4 - tol."""
    nu_min = symplectic_eigenvalues(state).min()
    if nu_min < VACUUM_VARIANCE - tol:
        where = f" in {context}" if context else ""
        raise PhysicalityError(
            f"unphysical state{where}: smallest symplectic eigenvalue "
            f"{nu_min:.12g} < {VACUUM_VARIANCE}"
        )
