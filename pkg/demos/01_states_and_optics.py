"""Tour of the Gaussian state layer.

Every state is a mean vector plus covariance matrix in photon-number
units: quadratures ordered (x1, p1, ..., xn, pn), vacuum variance 1/4.
This script walks through the basic constructors and channels and shows
the physicality audit that guards the whole package.
"""

import numpy as np

from telecloning import (
    QuadratureSelector,
    apply_symplectic,
    beam_splitter_50_50,
    coherent,
    condition_on,
    displace,
    loss_channel,
    marginal,
    phase_shift,
    squeezed_vacuum,
    symplectic_eigenvalues,
    tensor,
    vacuum,
)

np.set_printoptions(precision=4, suppress=True)

print("== vacuum and coherent states ==")
vac = vacuum(1)
print("vacuum covariance:\n", vac.cov)
alpha = 5 + 3j
state = coherent([alpha])
print(f"coherent({alpha}) mean:", state.mean, " (x = Re, p = Im)")

print("\n== squeezing ==")
# a pure squeezed vacuum saturates the uncertainty product v_x * v_p = 1/16
sq = squeezed_vacuum(0.0625 / 0.05, 0.05)
print("squeezed covariance diag:", np.diag(sq.cov))
print("symplectic eigenvalues (1/4 means pure):", symplectic_eigenvalues(sq))

print("\n== a balanced beam splitter ==")
# out1 = (in1 + in2)/sqrt(2), out2 = (in1 - in2)/sqrt(2), same on x and p
pair = tensor(coherent([2.0]), vacuum(1))
mixed = apply_symplectic(pair, beam_splitter_50_50(), [0, 1])
print("means after splitting a 2.0 amplitude against vacuum:", mixed.mean)

print("\n== phase shift ==")
rotated = apply_symplectic(coherent([1.0]), phase_shift(np.pi / 2), [0])
print("quarter turn of amplitude 1:", rotated.mean, " (x -> p)")

print("\n== loss ==")
lossy = loss_channel(squeezed_vacuum(0.5, 0.5), 0, 0.5)
print("variance 0.5 through eta = 0.5:", lossy.cov[0, 0], " (= eta v + (1-eta)/4)")

print("\n== displacement ==")
kicked = displace(vac, 0, 2.0, 0.0)
print("displaced vacuum mean:", kicked.mean, " covariance unchanged:",
      np.array_equal(kicked.cov, vac.cov))

print("\n== homodyne conditioning ==")
# entangle two modes, measure x on one, watch the partner's x sharpen
two = tensor(squeezed_vacuum(0.05, 1.25), squeezed_vacuum(1.25, 0.05))
two = apply_symplectic(two, beam_splitter_50_50(), [0, 1])
sel = QuadratureSelector(0, "x")
print("partner x variance before:", two.cov[2, 2])
post = condition_on(two, sel, 0.3)
print("partner x variance after conditioning:", post.cov[0, 0])
print("marginal of the measured port:", marginal(two, sel))
