#!/usr/bin/env python3
"""Shared-channel simulation: r senders, one receiver, per-user recovery.

The receiver sees R = sum_j intensity_j bit_j pi(shift_j) S_j + noise. Since
distinct flag waveforms stay nearly orthogonal under every time-frequency
shift, each user is detected independently with two line scans, then its data
bit is read from the matched filter at the detected shift. The Monte Carlo
harness repeats this over random shifts, bits, and noise.
"""

import numpy as np

from tfshift import (ChannelSpec, PlanePoint, UserSpec, as_prime, extract_bits,
                     flag_family, gps_solve, monte_carlo, synthesize_receiver)

P = as_prime(101)


def main() -> None:
    r = 3
    family = flag_family(P, r, seed=0)
    waveforms = {f"w{k}": f.signal for k, f in enumerate(family)}

    # 1. one deterministic channel instance
    users = (
        UserSpec("w0", PlanePoint(7, 19, P), bit=+1, intensity=1.0),
        UserSpec("w1", PlanePoint(40, 88, P), bit=-1, intensity=0.9),
        UserSpec("w2", PlanePoint(66, 5, P), bit=+1, intensity=0.8),
    )
    spec = ChannelSpec(P, users, sigma=float(1 / np.sqrt(P.p)), seed=12)
    R = synthesize_receiver(spec, waveforms)
    print(f"receiver over F_{P.p}: {len(users)} users, "
          f"sigma = {spec.sigma:.4f}\n")

    print("user   planted           decoded          bit  soft.re   ok")
    for u, dec in zip(users, extract_bits(R, family)):
        got = (dec.detection.shift.tau, dec.detection.shift.omega)
        want = (u.shift.tau, u.shift.omega)
        ok = got == want and dec.bit == u.bit
        print(f"  {u.waveform_id}   {str(want):15s}   {str(got):15s}  "
              f"{dec.bit:+d}   {dec.soft.real:+.4f}  {ok}")

    # 2. the positioning view of the same receiver: per-satellite (bit, tau)
    fixes = gps_solve(R, family)
    print("\ngps view: " + "  ".join(
        f"w{k}: bit {fx.bit:+d}, tau {fx.tau}" for k, fx in enumerate(fixes)))

    # 3. Monte Carlo over random shifts/bits/noise, flag vs cross method
    template = ChannelSpec(
        P, tuple(UserSpec(f"w{k}", PlanePoint(0, 0, P)) for k in range(r)),
        sigma=float(1 / np.sqrt(P.p)), seed=0)
    for method in ("flag", "cross"):
        st = monte_carlo(template, trials=100, method=method)
        print(f"\n{method} method, {st.trials} trials, r = {r}, same sigma:")
        print(f"  exact-shift rate {st.exact_shift_rate:.4f}, "
              f"bit error rate {st.bit_error_rate:.4f}")
        print(f"  mean stage1 {st.mean_stage1_mag:.3f}, "
              f"mean peak {st.mean_peak_mag:.3f}, "
              f"wall {st.wall_time:.2f}s")
    print("\n(flag misses at p = 101 are same-torus collisions between"
          "\n eigenvectors; they fade as p grows, see the acceptance run"
          "\n at p = 1009)")


if __name__ == "__main__":
    main()
