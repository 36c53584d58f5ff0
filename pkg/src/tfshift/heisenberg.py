"""The Heisenberg (lines) system and cross waveforms.

For each line L through the origin the operators {pi(l): l in L} commute and
share an orthonormal eigenbasis B_L of p signals whose ambiguity is supported
exactly on L. The vertical line gives the delta basis; the line of slope m
gives chirps with quadratic phase -2^{-1} m t^2. A cross waveform is the raw
sum of basis vectors from two distinct lines.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import schur

from .gfp import Line, PlanePoint, as_prime, inv, line_points, lines_through_origin
from .signals import Signal, add, delta, heisenberg_op


@dataclass(frozen=True, eq=False)
class HeisenbergVector:
    """A common eigenfunction f of {pi(l): l in line}, unit norm."""

    line: Line
    index: int
    signal: Signal


@dataclass(frozen=True, eq=False)
class Cross:
    """S_{L,M} = f_L + f_M for two distinct origin lines; unnormalized sum."""

    lineL: Line
    lineM: Line
    fL: HeisenbergVector
    fM: HeisenbergVector
    signal: Signal


def line_vector(L: Line, b: int) -> HeisenbergVector:
    """The b-th basis vector of B_L in closed form.

    Vertical: delta_b. Slope m: f_{m,b}(t) = p^{-1/2} e^{(2 pi i/p)(-2^{-1} m t^2 + b t)}.
    """
    if not L.through_origin():
        raise ValueError("line bases are defined for origin lines only")
    p = L.p.p
    b = b % p
    if L.is_vertical:
        return HeisenbergVector(L, b, delta(L.p, b))
    t = np.arange(p)
    alpha = (-inv(2, L.p) * L.slope) % p
    expo = (alpha * (t * t % p) + b * t) % p
    s = np.exp(2j * np.pi * expo / p) / np.sqrt(p)
    return HeisenbergVector(L, b, Signal(L.p, s, normalized=True))


def line_basis(L: Line) -> list[HeisenbergVector]:
    """All p basis vectors of B_L, indexed b = 0..p-1."""
    return [line_vector(L, b) for b in range(L.p.p)]


def line_basis_oracle(L: Line) -> list[HeisenbergVector]:
    """Independent construction of B_L by numerically diagonalizing pi(l0) for
    one generator l0 of L. Eigenvalues are exact p-th roots of unity, so
    eigenspaces are one-dimensional; the unitary Schur factorization of this
    normal matrix returns an orthonormal eigenbasis. Vectors agree with
    line_basis up to unit phase and index permutation.
    """
    if not L.through_origin():
        raise ValueError("line bases are defined for origin lines only")
    p = L.p.p
    l0 = L.direction()
    op = np.empty((p, p), dtype=np.complex128)
    for k in range(p):
        op[:, k] = heisenberg_op(delta(L.p, k), l0).samples
    T, Z = schur(op, output="complex")
    ev = np.diag(T)
    # sanity: p distinct p-th roots of unity, pairwise separation 2 sin(pi/p)
    sep = 2.0 * np.sin(np.pi / p)
    for i in range(p):
        for j in range(i + 1, p):
            if abs(ev[i] - ev[j]) < 0.5 * sep:
                raise RuntimeError("degenerate eigenvalue clustering in line oracle")
    out = []
    for k in range(p):
        out.append(HeisenbergVector(L, k, Signal(L.p, Z[:, k])))
    return out


def cross_waveform(L: Line, M: Line, bL: int, bM: int) -> Cross:
    """The cross S_{L,M} = f_L + f_M (raw sum, not renormalized)."""
    if L == M:
        raise ValueError("cross requires two distinct lines")
    if not (L.through_origin() and M.through_origin()):
        raise ValueError("cross lines must pass through the origin")
    fL = line_vector(L, bL)
    fM = line_vector(M, bM)
    return Cross(L, M, fL, fM, add(fL.signal, fM.signal))


def cross_family(p, seed: int) -> list[Cross]:
    """(p+1)/2 crosses on disjoint line pairs.

    The p+1 origin lines in canonical order (slopes 0..p-1, vertical last) are
    paired consecutively (2i with 2i+1), so any two family members involve four
    distinct lines. Basis indices are drawn deterministically from the seed.
    """
    pp = as_prime(p)
    lines = lines_through_origin(pp)
    rng = np.random.default_rng(seed)
    out = []
    for i in range(0, len(lines), 2):
        bL = int(rng.integers(0, pp.p))
        bM = int(rng.integers(0, pp.p))
        out.append(cross_waveform(lines[i], lines[i + 1], bL, bM))
    return out
