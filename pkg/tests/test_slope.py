from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slopekit.slope import (
    MERIDIAN,
    AnnotatedSlope,
    BoundaryMarker,
    MeridianError,
    Slope,
    SlopeError,
    SlopeInterval,
    SlopeTag,
    floor_ceil,
    format_table,
    is_nit,
    mirror,
    parse_slope,
)

slopes = st.builds(Slope, st.integers(-500, 500), st.integers(1, 60))


def test_normalization():
    assert Slope(4, -6) == Slope(-2, 3)
    assert Slope(-3, 0) == MERIDIAN
    assert str(Slope(37, 2)) == "37/2"
    assert str(Slope(8, 4)) == "2"
    with pytest.raises(SlopeError):
        Slope(0, 0)


def test_parse():
    assert parse_slope(" -194/3 ") == Slope(-194, 3)
    assert parse_slope("+5") == Slope(5)
    assert parse_slope("1/0").is_meridian
    for bad in ("", "1/-2", "a", "1.5", "2/"):
        with pytest.raises(SlopeError):
            parse_slope(bad)


def test_meridian_is_unordered():
    with pytest.raises(MeridianError):
        MERIDIAN < Slope(1)
    with pytest.raises(MeridianError):
        MERIDIAN.value
    with pytest.raises(MeridianError):
        Slope(0) in SlopeInterval(Slope(-1), Slope(1)) and MERIDIAN in SlopeInterval(Slope(-1), Slope(1))
    assert mirror(MERIDIAN) == MERIDIAN


def test_interval():
    iv = SlopeInterval(Slope(16), Slope(20))
    assert Slope(37, 2) in iv and Slope(16) in iv and Slope(20) in iv
    assert Slope(41, 2) not in iv
    with pytest.raises(SlopeError):
        SlopeInterval(Slope(2), Slope(1))


@given(slopes)
def test_parse_print_round_trip(s):
    assert Slope.parse(str(s)) == s


@given(slopes)
def test_mirror_is_an_involution(s):
    assert -(-s) == s
    assert (-s).value == -s.value


@given(slopes)
def test_floor_ceil(s):
    lo, hi = floor_ceil(s)
    assert lo == math.floor(s.value) and hi == math.ceil(s.value)
    assert (lo == hi) == s.is_integer


@given(slopes, slopes)
def test_order_matches_values(a, b):
    assert (a < b) == (a.value < b.value)


def test_nit():
    assert is_nit(Slope(37, 2), False)
    assert is_nit(Slope(16), True)
    assert not is_nit(Slope(17), False)


def test_annotated():
    with pytest.raises(SlopeError):
        AnnotatedSlope(Slope(3), BoundaryMarker.NON_INTEGRAL)
    with pytest.raises(MeridianError):
        AnnotatedSlope(MERIDIAN, SlopeTag.SEIFERT)
    a = AnnotatedSlope(Slope(37, 2), SlopeTag.TOROIDAL)
    assert a.mirror().slope == Slope(-37, 2) and a.mirror().tag is SlopeTag.TOROIDAL
    table = [AnnotatedSlope(Slope(16), SlopeTag.TOROIDAL), AnnotatedSlope(Slope(17), SlopeTag.SEIFERT), a]
    assert format_table(table) == "16(T), 17(S), 37/2(T)"
    assert str(AnnotatedSlope(Slope(67, 3), BoundaryMarker.NON_INTEGRAL)) == "67/3(NI)"


def test_from_value():
    assert Slope.from_value(Fraction(-206, 3)) == Slope(-206, 3)


def test_fractional_components_rejected():
    with pytest.raises(SlopeError):
        Slope(Fraction(-1, 3))
