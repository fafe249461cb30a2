"""Shared builders for randomized property tests."""

import numpy as np

from telecloning import (
    GaussianState,
    ProtocolConfig,
    SqueezerSpec,
    SymplecticMatrix,
    apply_symplectic,
    beam_splitter_50_50,
    displace,
    phase_shift,
    squeezed_vacuum,
    tensor,
)


def random_squeeze(rng) -> SymplecticMatrix:
    """Single-mode squeezer diag(e^r, e^-r) with random strength."""
    r = rng.uniform(-1.0, 1.0)
    return SymplecticMatrix(np.diag([np.exp(r), np.exp(-r)]))


def random_state(rng, n_modes: int) -> GaussianState:
    """Generic physical state: squeezed inputs through a random circuit."""
    parts = []
    for _ in range(n_modes):
        v_x = 0.25 * np.exp(rng.uniform(-1.5, 1.5))
        v_p = (0.0625 / v_x) * np.exp(rng.uniform(0.0, 1.0))  # impure by excess
        parts.append(squeezed_vacuum(v_x, v_p))
    state = tensor(*parts)
    for _ in range(2 * n_modes):
        mode = int(rng.integers(n_modes))
        state = apply_symplectic(state, phase_shift(rng.uniform(0, 2 * np.pi)), [mode])
        if n_modes > 1:
            pair = list(rng.choice(n_modes, size=2, replace=False))
            state = apply_symplectic(state, beam_splitter_50_50(), pair)
    for mode in range(n_modes):
        state = displace(state, mode, rng.uniform(-3, 3), rng.uniform(-3, 3))
    return state


def random_config(rng) -> ProtocolConfig:
    """Randomized experiment over the documented parameter ranges."""
    s1, s2 = rng.uniform(0.0, 10.0, size=2)
    return ProtocolConfig(
        spec_i=SqueezerSpec(s1, s1 + rng.uniform(0.0, 3.0)),
        spec_ii=SqueezerSpec(s2, s2 + rng.uniform(0.0, 3.0)),
        input_alpha=complex(rng.uniform(-5, 5), rng.uniform(-5, 5)),
        gains=tuple(rng.uniform(0.5, 1.5, size=4)),
        eta_homodyne=rng.uniform(0.9, 1.0),
        eta_resource=tuple(rng.uniform(0.9, 1.0, size=3)),
        coupler_t=rng.uniform(0.9, 1.0),
        shots=100,
        seed=int(rng.integers(2**32)),
    )
