"""Continued fractions under the convention

    [a1, a2, ..., an] = 1 / (a1 + 1 / (a2 + ... + 1 / an))

and the two-bridge link bookkeeping built on it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence


class ContFracError(ValueError):
    pass


class ZeroDenominator(ContFracError):
    def __init__(self, suffix: tuple[int, ...]):
        self.suffix = suffix
        super().__init__(f"division by zero while folding suffix {format_terms(suffix)}")


def _collapse_zeros(terms: Sequence[int]) -> tuple[int, ...]:
    out = list(terms)
    i = 1
    while i < len(out) - 1:
        if out[i] == 0:
            out[i - 1 : i + 2] = [out[i - 1] + out[i + 1]]
            i = max(i - 1, 1)
        else:
            i += 1
    return tuple(out)


def format_terms(terms: Sequence[int]) -> str:
    return "[" + ",".join(str(a) for a in terms) + "]"


@dataclass(frozen=True)
class ContFrac:
    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(a) for a in self.terms)
        if not terms:
            raise ContFracError("a continued fraction needs at least one term")
        object.__setattr__(self, "terms", _collapse_zeros(terms))

    @classmethod
    def of(cls, *terms: int) -> ContFrac:
        return cls(tuple(terms))

    @classmethod
    def parse(cls, text: str) -> ContFrac:
        s = re.sub(r"\s+", "", text)
        if not (s.startswith("[") and s.endswith("]")) or len(s) < 3:
            raise ContFracError(f"expected [a1,...,an], got {text!r}")
        try:
            return cls(tuple(int(x) for x in s[1:-1].split(",")))
        except ValueError:
            raise ContFracError(f"non-integer term in {text!r}") from None

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __neg__(self) -> ContFrac:
        return ContFrac(tuple(-a for a in self.terms))

    def reversed(self) -> ContFrac:
        return ContFrac(self.terms[::-1])

    @property
    def is_simple(self) -> bool:
        return all(a > 0 for a in self.terms)

    def value(self) -> Fraction:
        return cf_eval(self)

    def __str__(self):
        return format_terms(self.terms)


def cf_eval(cf: ContFrac | Sequence[int]) -> Fraction:
    terms = cf.terms if isinstance(cf, ContFrac) else tuple(cf)
    n = len(terms)
    x = Fraction(terms[-1])
    if x == 0:
        raise ZeroDenominator(terms[-1:])
    for k in range(n - 2, -1, -1):
        x = terms[k] + 1 / x
        if x == 0:
            raise ZeroDenominator(terms[k:])
    return 1 / x


def simple_cf(f: Fraction) -> ContFrac:
    """Positive-term expansion of 0 < f < 1 whose last term is at least 2 (or f = 1/1)."""
    f = Fraction(f)
    if not 0 < f <= 1:
        raise ContFracError(f"simple expansion needs 0 < f <= 1, got {f}")
    terms = []
    x = 1 / f
    while True:
        a = x.numerator // x.denominator
        terms.append(a)
        rest = x - a
        if rest == 0:
            break
        x = 1 / rest
    return ContFrac(tuple(terms))


def reduced_fraction(f: Fraction) -> Fraction:
    """Representative beta/alpha of the same two-bridge link with 0 < beta < alpha."""
    beta, alpha = f.numerator % f.denominator, f.denominator
    if beta == 0:
        raise ContFracError(f"{f} is an integer; no two-bridge link")
    return Fraction(beta, alpha)


def two_bridge_relation(f: Fraction, g: Fraction) -> str | None:
    """Compare the two-bridge links of `f` and `g` by Schubert's classification.

    Returns "same", "mirror", or None. An amphicheiral pair reports "same".
    """
    alpha = f.denominator
    if g.denominator != alpha:
        return None
    if alpha == 1:
        return None
    b, c = f.numerator % alpha, g.numerator % alpha
    if alpha == 2:
        return "same"
    inv = pow(b, -1, alpha)
    if c in (b, inv):
        return "same"
    if c in ((-b) % alpha, (-inv) % alpha):
        return "mirror"
    return None


# Claim 1: simple expansions of [2w, v, 2u].  Each row is
# (label, applies(w, v, u), builder(w, v, u)).
ClaimRow = tuple[str, Callable[[int, int, int], bool], Callable[[int, int, int], tuple]]

CLAIM1_ROWS: tuple[ClaimRow, ...] = (
    ("v,u>0", lambda w, v, u: v > 0 and u > 0,
     lambda w, v, u: (2 * w, v, 2 * u)),
    ("v=1,u<=-2", lambda w, v, u: v == 1 and u <= -2,
     lambda w, v, u: (2 * w + 1, -2 * u - 1)),
    ("v>=2,u=-1", lambda w, v, u: v >= 2 and u == -1 and w == 1,
     lambda w, v, u: (2, v - 1, 2)),
    ("v>=2,u<=-2", lambda w, v, u: v >= 2 and u <= -2,
     lambda w, v, u: (2 * w, v - 1, 1, -2 * u - 1)),
    ("v=-1,u>=2", lambda w, v, u: v == -1 and u >= 2 and w >= 2,
     lambda w, v, u: (2 * w - 2, 1, 2 * u - 2)),
    ("v=-2,u>=2", lambda w, v, u: v == -2 and u >= 2 and w >= 2,
     lambda w, v, u: (2 * w - 1, 2, 2 * u - 1)),
    ("v<=-3,u>=2", lambda w, v, u: v <= -3 and u >= 2 and w >= 2,
     lambda w, v, u: (2 * w - 1, 1, -v - 2, 1, 2 * u - 1)),
    ("v=-1,u<=-2", lambda w, v, u: v == -1 and u <= -2 and w >= 2,
     lambda w, v, u: (2 * w - 1, -2 * u + 1)),
    ("v<=-2,u=-1", lambda w, v, u: v <= -2 and u == -1 and w == 1,
     lambda w, v, u: (1, 1, -v - 1, 2)),
    ("v<=-2,u<=-2", lambda w, v, u: v <= -2 and u <= -2 and w >= 2,
     lambda w, v, u: (2 * w - 1, 1, -v - 1, -2 * u)),
)


def in_claim1_range(w: int, v: int, u: int) -> bool:
    return (w == 1 and u == -1 and abs(v) >= 2) or (w >= 2 and abs(u) >= 2 and abs(v) >= 1)


def claim1_row(w: int, v: int, u: int) -> str:
    if not in_claim1_range(w, v, u):
        raise ContFracError(f"(w, v, u) = ({w}, {v}, {u}) is outside the admissible range")
    matches = [label for label, applies, _ in CLAIM1_ROWS if applies(w, v, u)]
    if len(matches) != 1:
        raise ContFracError(f"(w, v, u) = ({w}, {v}, {u}) matches rows {matches}")
    return matches[0]


def claim1_normalize(w: int, v: int, u: int) -> ContFrac:
    """Simple continued fraction of [2w, v, 2u]."""
    label = claim1_row(w, v, u)
    build = next(b for lab, _, b in CLAIM1_ROWS if lab == label)
    return ContFrac(build(w, v, u))


def cf_equivalent(a: ContFrac, b: ContFrac) -> bool:
    """Equivalence of L_a and L_b for simple expansions whose end terms are not 1."""
    for cf in (a, b):
        if not cf.is_simple:
            raise ContFracError(f"{cf} is not a simple continued fraction")
        if cf.terms[0] == 1 or cf.terms[-1] == 1:
            raise ContFracError(f"{cf} has an end term equal to 1")
    m = len(b)
    if len(a) != m:
        return False
    if a.terms == b.terms:
        return True
    # reversal: a_i = eps * b_{m-i+1}
    eps = (-1) ** (m - 1)
    return all(a.terms[i] == eps * b.terms[m - 1 - i] for i in range(m))
