"""The O(p log p) engine: prime-length DFT and matched filtering on a line.

The forward transform uses the kernel e^{+2 pi i k t / p}, chosen so that a
vertical-line slice of the matched-filter matrix is literally one forward
transform. Prime lengths are handled by re-expressing the nontrivial output
indices as a cyclic convolution of length p-1 (indices written as powers of a
primitive root), evaluated with zero-padded power-of-two FFTs. All transforms
run through an instrumented operation counter so complexity claims can be
checked machine-independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np

from .gfp import Line, as_prime, inv, is_prime, line_points

if TYPE_CHECKING:
    from .signals import Signal


# ---------------------------------------------------------------- counters

@dataclass
class OpCounters:
    """Instrumentation for complexity evidence. Not thread-safe; read it
    around single-threaded measurement sections only."""

    dft_calls: int = 0
    dft_ops: int = 0
    line_calls: int = 0

    def reset(self) -> None:
        self.dft_calls = 0
        self.dft_ops = 0
        self.line_calls = 0

    def snapshot(self) -> tuple[int, int, int]:
        return (self.dft_calls, self.dft_ops, self.line_calls)


counters = OpCounters()


# ------------------------------------------------------- power-of-two FFT

def _bit_reverse(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    rev = np.zeros(n, dtype=np.intp)
    for i in range(1, n):
        rev[i] = (rev[i >> 1] >> 1) | ((i & 1) << (bits - 1))
    return rev


@lru_cache(maxsize=None)
def _pow2_tables(n: int) -> tuple[np.ndarray, tuple[np.ndarray, ...]]:
    """Bit-reversal permutation and per-stage twiddles for length n = 2^k."""
    rev = _bit_reverse(n)
    tw = []
    size = 2
    while size <= n:
        half = size // 2
        tw.append(np.exp(-2j * np.pi * np.arange(half) / size))
        size *= 2
    return rev, tuple(tw)


def _fft_pow2(x: np.ndarray, sign: int) -> np.ndarray:
    """Iterative radix-2 transform, length a power of two.

    sign=-1 is the forward kernel e^{-2 pi i jk/n}; sign=+1 the unnormalized
    inverse kernel. Each stage is vectorized over all butterflies.
    """
    n = x.shape[0]
    rev, tws = _pow2_tables(n)
    a = np.asarray(x, dtype=np.complex128)[rev]
    stages = len(tws)
    counters.dft_ops += (n // 2) * stages
    for s in range(stages):
        size = 2 << s
        half = size >> 1
        tw = tws[s] if sign < 0 else np.conj(tws[s])
        a = a.reshape(-1, size)
        even = a[:, :half]
        odd = a[:, half:] * tw
        a = np.concatenate((even + odd, even - odd), axis=1)
    return a.reshape(n)


# ------------------------------------------------------- prime-length plan

def _primitive_root(p: int) -> int:
    n = p - 1
    fac = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for g in range(2, p):
        if all(pow(g, n // q, p) != 1 for q in fac):
            return g
    raise RuntimeError("no primitive root found")  # unreachable for prime p


@dataclass(frozen=True)
class _Plan:
    p: int
    conv_len: int                 # padded power-of-two length N >= 2(p-1)-1
    perm_in: np.ndarray           # b -> g^{-b} mod p
    perm_out: np.ndarray          # a -> g^{a} mod p
    kernel_fft: np.ndarray        # length-N forward FFT of the padded kernel


@lru_cache(maxsize=None)
def _plan(p: int) -> _Plan:
    if not is_prime(p):
        raise ValueError(f"dft length {p} is not prime")
    m = p - 1
    g = _primitive_root(p)
    ginv = pow(g, -1, p)
    perm_in = np.empty(m, dtype=np.intp)
    perm_out = np.empty(m, dtype=np.intp)
    a = 1
    b = 1
    for k in range(m):
        perm_out[k] = a
        perm_in[k] = b
        a = (a * g) % p
        b = (b * ginv) % p
    conv_len = 1 << (2 * m - 1).bit_length()
    w = np.exp(2j * np.pi * perm_out.astype(np.float64) / p)
    w_pad = np.zeros(conv_len, dtype=np.complex128)
    w_pad[:m] = w
    kernel_fft = _fft_pow2(w_pad, -1)
    return _Plan(p, conv_len, perm_in, perm_out, kernel_fft)


def _dft_forward(x: np.ndarray) -> np.ndarray:
    p = x.shape[0]
    if p == 3:  # tiny case: direct is both faster and simpler
        t = np.arange(3)
        return np.exp(2j * np.pi * np.outer(t, t) / 3) @ x
    plan = _plan(p)
    m = p - 1
    n = plan.conv_len
    u = np.zeros(n, dtype=np.complex128)
    u[:m] = x[plan.perm_in]
    lin = _fft_pow2(_fft_pow2(u, -1) * plan.kernel_fft, +1) / n
    counters.dft_ops += n
    conv = lin[:m].copy()
    conv[: m - 1] += lin[m : 2 * m - 1]
    out = np.empty(p, dtype=np.complex128)
    out[0] = x.sum()
    out[plan.perm_out] = x[0] + conv
    return out


def dft(x: np.ndarray, direction: str = "forward") -> np.ndarray:
    """Length-p DFT, p prime. Forward: X[k] = sum_t x[t] e^{+2 pi i kt/p};
    inverse applies the opposite kernel and the 1/p factor."""
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim != 1:
        raise ValueError("dft expects a 1-d vector")
    counters.dft_calls += 1
    if direction == "forward":
        return _dft_forward(x)
    if direction == "inverse":
        return np.conj(_dft_forward(np.conj(x))) / x.shape[0]
    raise ValueError(f"unknown direction {direction!r}")


# ----------------------------------------------------- matched filter on a line

@dataclass(frozen=True, eq=False)
class LineProfile:
    """Matched-filter values along one line, indexed like line_points(line)."""

    line: Line
    values: np.ndarray

    def argmax(self) -> int:
        return int(np.argmax(np.abs(self.values)))


def cross_correlate(A: "Signal", B: "Signal") -> np.ndarray:
    """C[tau] = sum_t A(t+tau) conj(B(t)), computed with three prime DFTs."""
    if A.p != B.p:
        raise ValueError("mismatched moduli")
    fa = dft(A.samples, "forward")
    fb = dft(B.samples, "forward")
    return dft(fa * np.conj(fb), "inverse")


def mf_on_line(S: "Signal", R: "Signal", line: Line) -> LineProfile:
    """Restrict the matched-filter matrix M[S,R] to a line, in O(p log p).

    Vertical line {(tau0, w)}: the values over w are one forward DFT of
    u(t) = S(t+tau0) conj(R(t)).

    Sloped line w = m*tau + c: with the chirp q(t) = e^{(2 pi i/p) 2^{-1} m t^2}
    the kernel factorizes as e^{(2 pi i/p) m tau t} = q(t+tau) conj(q(t)) conj(q(tau)),
    so M(tau, m*tau+c) = conj(q(tau)) * crosscorr(q*S, q*R*e^{-2 pi i c t/p})[tau].
    """
    if S.p != R.p:
        raise ValueError("mismatched moduli")
    if line.p != S.p:
        raise ValueError("line modulus does not match signals")
    counters.line_calls += 1
    p = S.p.p
    t = np.arange(p)
    if line.is_vertical:
        tau0 = line.offset.tau
        u = np.roll(S.samples, -tau0) * np.conj(R.samples)
        values = dft(u, "forward")
        return LineProfile(line, values)
    m = line.slope
    c = line.offset.omega
    q = np.exp(2j * np.pi * ((inv(2, S.p) * m % p) * (t * t % p) % p) / p)
    A = q * S.samples
    B = q * R.samples * np.exp(-2j * np.pi * (c * t % p) / p)
    fa = dft(A, "forward")
    fb = dft(B, "forward")
    cc = dft(fa * np.conj(fb), "inverse")
    values = np.conj(q) * cc
    return LineProfile(line, values)
