#!/usr/bin/env python3
"""Flag and cross waveforms: line support plus an unambiguous peak.

A flag S = f_L + phi_T adds a torus eigenvector to a line vector. Its self
matched filter has three levels: a peak of height about 2 at the origin, a
plateau of about 1 along the carrier line L, and O(1/sqrt(p)) noise floor
elsewhere. A cross S = f_L + f_M glues two line vectors instead; it is
cheaper but its ambiguity has two ridges, which demo 08 exploits to fool it.
"""

import numpy as np

from tfshift import (Line, as_prime, cross_family, cross_waveform, flag_family,
                     flag_waveform, line_contains, make_torus, mf_full,
                     PlanePoint)

P = as_prime(101)


def three_levels(sig, lines) -> tuple[float, float, float]:
    """(origin, worst on-line, worst off-line) magnitudes of |M[S,S]|."""
    p = sig.p.p
    A = mf_full(sig, sig).magnitudes()
    origin = float(A[0, 0])
    on, off = [], []
    for t in range(p):
        for w in range(p):
            if t == 0 and w == 0:
                continue
            v = PlanePoint(t, w, sig.p)
            (on if any(line_contains(L, v) for L in lines) else off).append(
                A[t, w])
    return origin, float(max(on)), float(max(off))


def main() -> None:
    p = P.p

    # 1. one flag, built by hand
    L = Line(7, P)
    T = make_torus(0, P)
    flag = flag_waveform(L, T, b_index=0, eig_index=1)
    origin, on, off = three_levels(flag.signal, [L])
    print(f"flag on slope {L.slope}, {T.kind} torus over F_{p}:")
    print(f"  origin peak {origin:.4f} (|dev from 2| <= 4/sqrt(p) = "
          f"{4 / np.sqrt(p):.4f})")
    print(f"  on-line max {on:.4f} (|dev from 1| <= 6/sqrt(p) = "
          f"{6 / np.sqrt(p):.4f})")
    print(f"  off-line max {off:.4f} (<= 6/sqrt(p))")

    # 2. one cross
    cross = cross_waveform(Line(0, P), Line(1, P), bL=2, bM=3)
    origin, on, off = three_levels(cross.signal, [cross.lineL, cross.lineM])
    print(f"\ncross on slopes 0 and 1:")
    print(f"  origin {origin:.4f} (two ridges add: 2 +- 2/sqrt(p))")
    print(f"  on-ridge max {on:.4f} (1 +- 2/sqrt(p) away from the origin)")
    print(f"  off-ridge max {off:.4f} (<= 2/sqrt(p) = {2 / np.sqrt(p):.4f})")

    # 3. families: r flags on distinct lines, (p+1)/2 disjoint crosses
    flags = flag_family(P, 4, seed=0)
    print(f"\nflag_family(p, 4, seed=0) carrier slopes: "
          f"{[f.line.slope for f in flags]}, "
          f"tori: {[f.torus.kind for f in flags]}")
    crosses = cross_family(P, seed=0)
    print(f"cross_family uses all {p + 1} origin lines once: "
          f"{len(crosses)} crosses")
    pair = crosses[0]
    print(f"  first cross pairs slopes "
          f"{pair.lineL.slope if not pair.lineL.is_vertical else 'vert'} and "
          f"{pair.lineM.slope if not pair.lineM.is_vertical else 'vert'}")


if __name__ == "__main__":
    main()
