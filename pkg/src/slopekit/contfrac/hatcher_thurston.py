"""Boundary slopes of two-bridge knots from continued fraction expansions.

For a knot with fraction beta/alpha (alpha odd) every expansion

    beta/alpha = r + [b1, ..., bk],   r integer, |bi| >= 2

carries an essential surface. Its slope compares the sign pattern of the
expansion with that of the unique expansion whose terms are all even.
Slopes come out in the mirrored two-bridge convention used by the family
tables (the textbook convention negated).
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..slope import Slope
from .core import ContFrac, ContFracError


@lru_cache(maxsize=4096)
def _expansions(x: Fraction) -> tuple[tuple[int, ...], ...]:
    # expansions of x, 0 < |x| < 1, with every term of absolute value >= 2
    out: list[tuple[int, ...]] = []
    inv = 1 / x
    if inv.denominator == 1 and abs(inv) >= 2:
        out.append((int(inv),))
    for b in sorted({math.floor(inv), math.ceil(inv)}):
        rest = inv - b
        if abs(b) >= 2 and rest != 0 and abs(rest) < 1:
            out.extend((b,) + tail for tail in _expansions(rest))
    return tuple(out)


def expansions(f: Fraction) -> list[tuple[int, ContFrac]]:
    """All (r, [b1..bk]) with f = r + [b1..bk] and every |bi| >= 2."""
    f = Fraction(f)
    found = []
    for r in range(math.floor(f), math.ceil(f) + 1):
        x = f - r
        if x != 0 and abs(x) < 1:
            found.extend((r, ContFrac(e)) for e in _expansions(x))
    return found


def _sign_balance(cf: ContFrac) -> int:
    # signs of the alternating-sign form 1/(b1 - 1/(b2 - ...))
    signs = [a * (-1) ** i for i, a in enumerate(cf.terms)]
    return sum(1 for a in signs if a > 0) - sum(1 for a in signs if a < 0)


def all_even_expansion(f: Fraction) -> tuple[int, ContFrac]:
    evens = [(r, cf) for r, cf in expansions(f) if all(a % 2 == 0 for a in cf.terms)]
    if len(evens) != 1:
        raise ContFracError(f"{f}: expected one all-even expansion, found {len(evens)}")
    return evens[0]


def expansion_slopes(f: Fraction) -> list[tuple[int, ContFrac, Slope]]:
    f = Fraction(f)
    if f.denominator % 2 == 0:
        raise ContFracError(f"{f} has even denominator: a two-bridge link, not a knot")
    base = _sign_balance(all_even_expansion(f)[1])
    return [(r, cf, Slope(-2 * (_sign_balance(cf) - base))) for r, cf in expansions(f)]


def ht_boundary_slopes(f: Fraction, calibrate_to: Slope | None = None) -> frozenset[Slope]:
    """Boundary slopes of the two-bridge knot with fraction `f`.

    The set is only meaningful up to simultaneous negation. With
    `calibrate_to`, the sign is chosen so that slope is a member.
    """
    slopes = frozenset(s for _, _, s in expansion_slopes(f))
    if calibrate_to is None or calibrate_to in slopes:
        return slopes
    flipped = frozenset(-s for s in slopes)
    if calibrate_to in flipped:
        return flipped
    raise ContFracError(f"{calibrate_to} is not a boundary slope of K({f}) in either sign")
