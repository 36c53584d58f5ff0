"""Arithmetic in the prime field F_p and geometry of the time-frequency plane.

The plane V = F_p x F_p carries p+1 lines through the origin: one for each
slope m in {0..p-1} plus the vertical line. Shifted lines are origin lines
plus an offset point. All scalars are canonical residues in [0, p).
"""

from __future__ import annotations

from dataclasses import dataclass, field


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Prime:
    """An odd prime modulus, validated at construction."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p < 3:
            raise ValueError("p must be an odd prime, p >= 3")

    def __int__(self) -> int:
        return self.p


def as_prime(p) -> Prime:
    """Coerce an int (or pass through a Prime) to a validated Prime."""
    return p if isinstance(p, Prime) else Prime(int(p))


def inv(a: int, p) -> int:
    """Multiplicative inverse of a mod p. Zero input is a domain error."""
    p = int(as_prime(p).p)
    a = a % p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod p")
    return pow(a, -1, p)


def legendre(a: int, p) -> int:
    """Legendre symbol: +1 for a nonzero square mod p, 0 for 0, -1 otherwise."""
    p = int(as_prime(p).p)
    a = a % p
    if a == 0:
        return 0
    s = pow(a, (p - 1) // 2, p)
    return 1 if s == 1 else -1


@dataclass(frozen=True)
class PlanePoint:
    """A point (tau, omega) of V: tau cyclic time shift, omega cyclic frequency shift."""

    tau: int
    omega: int
    p: Prime

    def __post_init__(self):
        pp = as_prime(self.p)
        object.__setattr__(self, "p", pp)
        object.__setattr__(self, "tau", self.tau % pp.p)
        object.__setattr__(self, "omega", self.omega % pp.p)

    def __add__(self, other: "PlanePoint") -> "PlanePoint":
        if self.p != other.p:
            raise ValueError("mismatched moduli")
        return PlanePoint(self.tau + other.tau, self.omega + other.omega, self.p)

    def __sub__(self, other: "PlanePoint") -> "PlanePoint":
        if self.p != other.p:
            raise ValueError("mismatched moduli")
        return PlanePoint(self.tau - other.tau, self.omega - other.omega, self.p)

    def is_origin(self) -> bool:
        return self.tau == 0 and self.omega == 0


@dataclass(frozen=True)
class Line:
    """A line in V: slope m (the set {(t, m*t)}) or vertical (slope=None, the set
    {(0, w)}), translated by an explicit offset point.

    Offsets are canonicalized so structurally equal lines compare equal: a sloped
    line stores its intersection with the vertical axis, a vertical line its
    intersection with the horizontal axis.
    """

    slope: int | None
    p: Prime
    offset: PlanePoint = field(default=None)

    def __post_init__(self):
        pp = as_prime(self.p)
        object.__setattr__(self, "p", pp)
        if self.slope is not None:
            object.__setattr__(self, "slope", self.slope % pp.p)
        off = self.offset
        if off is None:
            off = PlanePoint(0, 0, pp)
        if off.p != pp:
            raise ValueError("offset modulus does not match line modulus")
        # canonical representative of the coset
        if self.slope is None:
            off = PlanePoint(off.tau, 0, pp)
        else:
            off = PlanePoint(0, off.omega - self.slope * off.tau, pp)
        object.__setattr__(self, "offset", off)

    @property
    def is_vertical(self) -> bool:
        return self.slope is None

    def through_origin(self) -> bool:
        return self.offset.is_origin()

    def direction(self) -> PlanePoint:
        """A nonzero vector spanning the line's direction."""
        if self.slope is None:
            return PlanePoint(0, 1, self.p)
        return PlanePoint(1, self.slope, self.p)


def line_through(slope: int | None, v: PlanePoint) -> Line:
    """The line of the given slope (None = vertical) passing through v."""
    return Line(slope, v.p, offset=v)


def lines_through_origin(p) -> list[Line]:
    """All p+1 origin lines in canonical order: slopes 0..p-1, then vertical."""
    pp = as_prime(p)
    lines = [Line(m, pp) for m in range(pp.p)]
    lines.append(Line(None, pp))
    return lines


def line_points(L: Line) -> list[PlanePoint]:
    """The p points of L in canonical parameter order t = 0..p-1.

    Slope(m): (off.tau + t, off.omega + m*t). Vertical: (off.tau, off.omega + t).
    """
    pp = L.p
    off = L.offset
    if L.slope is None:
        return [PlanePoint(off.tau, off.omega + t, pp) for t in range(pp.p)]
    return [PlanePoint(off.tau + t, off.omega + L.slope * t, pp) for t in range(pp.p)]


def line_contains(L: Line, v: PlanePoint) -> bool:
    """True iff v lies on L (offset included)."""
    if v.p != L.p:
        raise ValueError("mismatched moduli")
    d = v - L.offset
    if L.slope is None:
        return d.tau == 0
    return (L.slope * d.tau - d.omega) % L.p.p == 0
