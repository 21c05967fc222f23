"""Culler-Shalen norm arithmetic for finite filling slopes.

The inputs are abstract: the minimal norm s, the meridian norm m, the
norm t of the filling class, the greatest finite boundary slope r_M and
the numerator n of the filling slope (n for an integral slope, n/2 for a
half-integral one). The fundamental polygon is never built. Only the
width of the triangle spanned by +-(s/m, 0) and the filling class is
computed at height one, where a width above one forces an interior
lattice point and contradicts minimality of s.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .slope import MeridianError, Slope


class NormError(ValueError):
    pass


class Parity(enum.Enum):
    INTEGER = "integer"
    HALF_INTEGER = "half-integer"

    @property
    def denominator(self) -> int:
        return 1 if self is Parity.INTEGER else 2


MIN_NORM = Fraction(4)
MARGIN = Fraction(5, 2)


def _rational(x) -> Fraction:
    if type(x) is Fraction:
        return x
    if isinstance(x, Slope):
        return x.value
    return Fraction(x)


@dataclass(frozen=True)
class NormData:
    s: Fraction
    m: Fraction
    t: Fraction
    r_M: Fraction
    n: int
    parity: Parity = Parity.INTEGER

    def __post_init__(self):
        for name in ("s", "m", "t", "r_M"):
            value = getattr(self, name)
            if type(value) is Fraction:
                continue
            if isinstance(value, Slope) and value.is_meridian:
                raise MeridianError(f"{name} cannot be the meridian")
            object.__setattr__(self, name, _rational(value))
        if type(self.parity) is not Parity:
            object.__setattr__(self, "parity", Parity(self.parity))
        if type(self.n) is not int:
            if int(self.n) != self.n:
                raise NormError(f"n must be an integer, got {self.n}")
            object.__setattr__(self, "n", int(self.n))
        # range checks by cross-multiplication, denominators are positive
        sn, sd = self.s.numerator, self.s.denominator
        if sn < 4 * sd:
            raise NormError(f"minimal norm s = {self.s} is below 4")
        if self.m.numerator * sd < sn * self.m.denominator:
            raise NormError(f"meridian norm m = {self.m} is below s = {self.s}")
        tn, td = self.t.numerator, self.t.denominator
        if not sn * td <= tn * sd <= 3 * sn * td:
            raise NormError(f"t = {self.t} outside [s, 3s] = [{self.s}, {3 * self.s}]")
        if self.parity is Parity.HALF_INTEGER and self.n % 2 == 0:
            raise NormError(f"a half-integral slope n/2 needs odd n, got {self.n}")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.n, self.parity.denominator)

    def mirror(self, r_m) -> NormData:
        """Data for the slope -n below r_m, seen from the mirror image."""
        return NormData(self.s, self.m, self.t, -_rational(r_m), -self.n, self.parity)


def finite_norm_bound(s) -> Fraction:
    s = Fraction(s)
    if s < MIN_NORM:
        raise NormError(f"s = {s} is below 4")
    return max(2 * s, s + 8)


def _width_terms(d: NormData) -> tuple[int, int]:
    """Numerator and positive denominator of w(1), in plain integers.

    integer slope n:        w(1) = 2(n - r_M) - (2/m)(t - s)
    half-integer slope n/2: w(1) = (n - 2 r_M) - (t - 2s)/m
    """
    rn, rd = d.r_M.numerator, d.r_M.denominator
    if rd * d.n <= rn * d.parity.denominator:
        raise NormError(f"filling slope {d.slope} does not exceed r_M = {d.r_M}; mirror first")
    sn, sd = d.s.numerator, d.s.denominator
    tn, td = d.t.numerator, d.t.denominator
    mn, md = d.m.numerator, d.m.denominator
    if d.parity is Parity.INTEGER:
        lead = 2 * (d.n * rd - rn)
        gap = 2 * (tn * sd - sn * td)
    else:
        lead = d.n * rd - 2 * rn
        gap = tn * sd - 2 * sn * td
    den = td * sd
    return lead * den * mn - gap * md * rd, rd * den * mn


def width_at_one(d: NormData) -> Fraction:
    num, den = _width_terms(d)
    return Fraction(num, den)


def lattice_contradiction(d: NormData) -> bool:
    num, den = _width_terms(d)
    return num > den


def lattice_contradiction_below(s, m, t, r_m, n: int, parity: Parity = Parity.INTEGER) -> bool:
    """The same test for a filling slope below the least finite boundary slope r_m."""
    r_m = _rational(r_m)
    if not Fraction(n, Parity(parity).denominator) < r_m:
        raise NormError(f"filling slope does not lie below r_m = {r_m}")
    return lattice_contradiction(NormData(s, m, t, -r_m, -n, parity))


def finite_slope_interval_check(t_slope: Slope, r_m: Slope, r_M: Slope) -> bool:
    if any(x.is_meridian for x in (t_slope, r_m, r_M)):
        raise MeridianError("interval check takes rational slopes only")
    if r_M < r_m:
        raise NormError(f"r_m = {r_m} exceeds r_M = {r_M}")
    return r_m.value - MARGIN <= t_slope.value <= r_M.value + MARGIN
