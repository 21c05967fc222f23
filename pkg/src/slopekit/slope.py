"""Exact Dehn surgery slopes.

A slope is a reduced fraction p/q with q >= 0, or the meridian 1/0.
The meridian takes no part in ordering or interval membership.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


class SlopeError(ValueError):
    pass


class MeridianError(SlopeError):
    """Raised when the meridian 1/0 is used where a rational is required."""


_SLOPE_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


@total_ordering
@dataclass(frozen=True)
class Slope:
    numerator: int
    denominator: int = 1

    def __post_init__(self):
        p, q = int(self.numerator), int(self.denominator)
        if p != self.numerator or q != self.denominator:
            raise SlopeError(f"slope components must be integers; use Slope.from_value for {self.numerator}")
        if p == 0 and q == 0:
            raise SlopeError("0/0 is not a slope")
        if q == 0:
            p = 1
        else:
            if q < 0:
                p, q = -p, -q
            g = math.gcd(p, q)
            p, q = p // g, q // g
        object.__setattr__(self, "numerator", p)
        object.__setattr__(self, "denominator", q)

    @classmethod
    def from_value(cls, x: int | Fraction) -> Slope:
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @classmethod
    def parse(cls, text: str) -> Slope:
        m = _SLOPE_RE.match(text)
        if not m:
            raise SlopeError(f"cannot parse slope {text!r}")
        p = int(m.group(1))
        q = int(m.group(2)) if m.group(2) is not None else 1
        return cls(p, q)

    @property
    def is_meridian(self) -> bool:
        return self.denominator == 0

    @property
    def is_integer(self) -> bool:
        return self.denominator == 1

    @property
    def value(self) -> Fraction:
        if self.is_meridian:
            raise MeridianError("the meridian 1/0 has no rational value")
        return Fraction(self.numerator, self.denominator)

    def __lt__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        if self.is_meridian or other.is_meridian:
            raise MeridianError("the meridian is not ordered")
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __neg__(self) -> Slope:
        return mirror(self)

    def __str__(self):
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self):
        return f"Slope({self})"


MERIDIAN = Slope(1, 0)


class SlopeTag(enum.Enum):
    TOROIDAL = "T"
    SEIFERT = "S"
    CYCLIC_FINITE = "F"
    UNCLASSIFIED = "X"


@dataclass(frozen=True)
class SlopeInterval:
    lo: Slope
    hi: Slope

    def __post_init__(self):
        if self.lo.is_meridian or self.hi.is_meridian:
            raise MeridianError("interval endpoints must be rational")
        if self.hi < self.lo:
            raise SlopeError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, s: Slope) -> bool:
        if s.is_meridian:
            raise MeridianError("the meridian is never inside an interval")
        return self.lo <= s <= self.hi


def normalize(p: int, q: int) -> Slope:
    return Slope(p, q)


def parse_slope(text: str) -> Slope:
    return Slope.parse(text)


def floor_ceil(s: Slope) -> tuple[int, int]:
    if s.is_meridian:
        raise MeridianError("floor/ceiling of the meridian")
    p, q = s.numerator, s.denominator
    return p // q, -((-p) // q)


def is_nit(s: Slope, is_toroidal: bool) -> bool:
    """True when `s` is non-integral or toroidal."""
    if s.is_meridian:
        raise MeridianError("the meridian is not a boundary slope here")
    return (not s.is_integer) or bool(is_toroidal)


def mirror(s: Slope) -> Slope:
    if s.is_meridian:
        return s
    return Slope(-s.numerator, s.denominator)


class BoundaryMarker(enum.Enum):
    NON_INTEGRAL = "NI"
    BOUNDARY = "B"


@dataclass(frozen=True)
class AnnotatedSlope:
    """A slope with a surgery tag or, for boundary-only slopes, a marker."""

    slope: Slope
    tag: SlopeTag | BoundaryMarker
    certificates: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.slope.is_meridian:
            raise MeridianError("annotated slopes exclude the meridian")
        if self.tag is BoundaryMarker.NON_INTEGRAL and self.slope.is_integer:
            raise SlopeError(f"NI marker on integral slope {self.slope}")
        object.__setattr__(self, "certificates", frozenset(self.certificates))

    @property
    def is_exceptional(self) -> bool:
        return isinstance(self.tag, SlopeTag)

    @property
    def is_toroidal(self) -> bool:
        return self.tag is SlopeTag.TOROIDAL

    def mirror(self) -> AnnotatedSlope:
        return AnnotatedSlope(-self.slope, self.tag, self.certificates)

    def __str__(self):
        return f"{self.slope}({self.tag.value})"


def format_table(entries) -> str:
    """Canonical one-line form, e.g. ``16(T), 17(S), 37/2(T)``."""
    return ", ".join(str(e) for e in entries)
