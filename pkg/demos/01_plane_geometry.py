#!/usr/bin/env python3
"""Tour of the discrete time-frequency plane V = F_p x F_p.

Walks the finite-field helpers: modular inverses, quadratic residues, the
p + 1 lines through the origin, and how an arbitrary line canonicalizes to
(slope, offset) form. Everything here is exact integer arithmetic; signals
enter only in the later demos.
"""

from tfshift import (Line, PlanePoint, as_prime, inv, legendre, line_contains,
                     line_points, line_through, lines_through_origin)

P = as_prime(11)


def main() -> None:
    print(f"working over F_{P.p}\n")

    # 1. field scalars
    print("inverses: " + "  ".join(f"{a}^-1={inv(a, P)}" for a in range(1, P.p)))
    squares = sorted({a * a % P.p for a in range(1, P.p)})
    print(f"nonzero squares mod {P.p}: {squares}")
    print("legendre: " + "  ".join(f"({a}|{P.p})={legendre(a, P)}"
                                   for a in range(1, P.p)))

    # 2. the p + 1 lines through the origin partition V minus the origin
    origin_lines = lines_through_origin(P)
    print(f"\n{len(origin_lines)} lines through the origin "
          f"(p sloped + 1 vertical):")
    for L in origin_lines:
        pts = line_points(L)
        label = "vertical" if L.is_vertical else f"slope {L.slope}"
        print(f"  {label:9s}: {[(v.tau, v.omega) for v in pts[:4]]} ...")
    covered = set()
    for L in origin_lines:
        for v in line_points(L):
            if (v.tau, v.omega) != (0, 0):
                covered.add((v.tau, v.omega))
    print(f"nonzero points covered exactly once: {len(covered)} "
          f"== p^2 - 1 = {P.p * P.p - 1}")

    # 3. shifted lines and canonical offsets
    v = PlanePoint(2, 7, P)
    L = line_through(3, v)
    print(f"\nline of slope 3 through (2, 7): slope={L.slope}, "
          f"offset=({L.offset.tau}, {L.offset.omega})")
    print(f"  contains (5, 16 mod p) -> {line_contains(L, PlanePoint(5, 16, P))}")
    same = line_through(3, PlanePoint(5, 16, P))
    print(f"  rebuilt from another of its points: equal? {L == same}")
    vert = line_through(None, PlanePoint(4, 9, P))
    print(f"vertical line through (4, 9): slope={vert.slope}, "
          f"offset keeps only tau: ({vert.offset.tau}, {vert.offset.omega})")

    # 4. plane arithmetic wraps mod p componentwise
    a = PlanePoint(8, 9, P)
    b = PlanePoint(5, 6, P)
    s, d = a + b, a - b
    print(f"\n(8,9) + (5,6) = ({s.tau},{s.omega})   "
          f"(8,9) - (5,6) = ({d.tau},{d.omega})   all mod {P.p}")


if __name__ == "__main__":
    main()
