"""Field arithmetic and plane geometry."""

import numpy as np
import pytest

from tfshift import (
    Line,
    PlanePoint,
    Prime,
    as_prime,
    inv,
    is_prime,
    legendre,
    line_contains,
    line_points,
    line_through,
    lines_through_origin,
)


def test_is_prime_small_table():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}
    for n in range(32):
        assert is_prime(n) == (n in primes), n


def test_prime_rejects_bad_moduli():
    with pytest.raises(ValueError):
        Prime(91)  # 7 * 13
    with pytest.raises(ValueError):
        Prime(2)  # odd primes only: 2 has no inverse of 2
    assert as_prime(31).p == 31
    pp = Prime(31)
    assert as_prime(pp) is pp
    assert int(pp) == 31


def test_inv_exhaustive():
    for p in (3, 31):
        for a in range(1, p):
            assert (a * inv(a, p)) % p == 1
    with pytest.raises(ZeroDivisionError):
        inv(0, 31)
    # accepts values outside [0, p)
    assert inv(32, 31) == 1


def test_legendre_matches_square_set():
    p = 31
    squares = {(x * x) % p for x in range(1, p)}
    for a in range(p):
        want = 0 if a == 0 else (1 if a in squares else -1)
        assert legendre(a, p) == want


def test_legendre_multiplicative():
    rng = np.random.default_rng(7)
    p = 101
    for _ in range(50):
        a, b = (int(x) for x in rng.integers(1, p, size=2))
        assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


def test_plane_point_reduction_and_arithmetic():
    p = as_prime(7)
    v = PlanePoint(9, -1, p)
    assert (v.tau, v.omega) == (2, 6)
    w = PlanePoint(5, 3, p)
    assert ((v + w).tau, (v + w).omega) == (0, 2)
    assert (v + w) - w == v
    assert PlanePoint(0, 0, p).is_origin() and not v.is_origin()
    with pytest.raises(ValueError):
        v + PlanePoint(0, 0, 11)


def test_line_canonical_offsets():
    p = as_prime(11)
    # same point set -> equal objects, whatever offset representative is given
    a = Line(3, p, offset=PlanePoint(2, 7, p))
    b = Line(3, p, offset=PlanePoint(5, 16, p))  # differs by 3 * direction
    assert a == b
    assert not a.through_origin()
    assert Line(3, p).through_origin()
    v1 = Line(None, p, offset=PlanePoint(4, 9, p))
    v2 = Line(None, p, offset=PlanePoint(4, 0, p))
    assert v1 == v2 and v1.is_vertical


def test_line_through_and_contains():
    p = as_prime(11)
    v = PlanePoint(4, 9, p)
    for slope in (0, 3, None):
        L = line_through(slope, v)
        assert line_contains(L, v)
        pts = line_points(L)
        assert len(pts) == 11 and len(set(pts)) == 11
        for q in pts:
            assert line_contains(L, q)
        # exhaustive complement check
        member = set(pts)
        for tau in range(11):
            for om in range(11):
                q = PlanePoint(tau, om, p)
                assert line_contains(L, q) == (q in member)


def test_lines_through_origin_partition():
    p = as_prime(7)
    lines = lines_through_origin(p)
    assert len(lines) == 8
    assert all(L.through_origin() for L in lines)
    # the p+1 origin lines cover V and meet pairwise only at the origin
    seen: dict = {}
    for k, L in enumerate(lines):
        for q in line_points(L):
            if q.is_origin():
                continue
            assert q not in seen, (k, seen.get(q))
            seen[q] = k
    assert len(seen) == 7 * 7 - 1


def test_direction_spans_line():
    p = as_prime(13)
    for slope in (0, 5, None):
        L = Line(slope, p)
        d = L.direction()
        assert line_contains(L, d)
        assert not d.is_origin()
