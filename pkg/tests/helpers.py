"""Brute-force oracles shared by the test modules.

Everything here recomputes definitions from scratch (direct sums, explicit
phases), so the library's fast paths are always compared against a second,
independent route.
"""

import numpy as np

from tfshift import PlanePoint, Signal, gfp, sim


def psi(k: int, p: int) -> complex:
    return complex(np.exp(2j * np.pi * (k % p) / p))


def dft_oracle(x, direction: str = "forward") -> np.ndarray:
    """O(n^2) reference transform. Forward kernel e^{+2 pi i wt/n}, inverse
    is the conjugate kernel divided by n."""
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[0]
    grid = np.outer(np.arange(n), np.arange(n))
    if direction == "forward":
        return np.exp(2j * np.pi * grid / n) @ x
    return (np.exp(-2j * np.pi * grid / n) @ x) / n


def mf_oracle(S: Signal, R: Signal, tau: int, omega: int) -> complex:
    """One matched-filter entry by the direct sum over t."""
    p = S.p.p
    acc = 0.0 + 0.0j
    for t in range(p):
        acc += psi(omega * t, p) * S.samples[(t + tau) % p] * np.conj(R.samples[t])
    return complex(acc)


def mf_oracle_grid(S: Signal, R: Signal) -> np.ndarray:
    """All p^2 entries via mf_oracle. Only for small p."""
    p = S.p.p
    out = np.empty((p, p), dtype=np.complex128)
    for tau in range(p):
        for omega in range(p):
            out[tau, omega] = mf_oracle(S, R, tau, omega)
    return out


def mf_line_oracle(S: Signal, R: Signal, L) -> np.ndarray:
    """Matched-filter values along a line by the direct sum, vectorized over
    the line's p cells. No transforms involved."""
    p = S.p.p
    t = np.arange(p)
    pts = gfp.line_points(L)
    taus = np.array([v.tau for v in pts])
    oms = np.array([v.omega for v in pts])
    phases = np.exp(2j * np.pi * (np.outer(oms, t) % p) / p)
    gathered = S.samples[(t[None, :] + taus[:, None]) % p]
    return (phases * gathered * np.conj(R.samples)[None, :]).sum(axis=1)


def pi_oracle(S: Signal, tau: int, omega: int) -> np.ndarray:
    """pi(tau, omega) S = M_omega L_tau S, spelled out sample by sample."""
    p = S.p.p
    out = np.empty(p, dtype=np.complex128)
    for t in range(p):
        out[t] = psi(omega * t, p) * S.samples[(t + tau) % p]
    return out


def unit_monte_carlo_template(p, r: int, sigma: float, seed: int):
    """ChannelSpec template with unit intensities; shifts are placeholders
    (monte_carlo redraws them per trial)."""
    users = tuple(sim.UserSpec(f"w{k}", gfp.PlanePoint(0, 0, p)) for k in range(r))
    return sim.ChannelSpec(p, users, sigma, seed)
