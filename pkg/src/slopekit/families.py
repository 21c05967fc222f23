"""Exceptional and boundary slope tables for parameterized knot families.

Covers hyperbolic alternating knots (figure-eight, twist knots, the
two-bridge knots K[b1,b2] and alternating pretzel knots), the sixteen
non-alternating Montesinos knots with exceptional surgeries, components of
two-bridge links with exceptional fillings, and torti-rational knots
obtained by twisting one component of such a link.

Toroidal slopes are boundary slopes; the tables mark non-integral boundary
slopes that are not themselves exceptional with NI.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .conjectures import BoundarySlope, SlopeDataset
from .contfrac import (
    ContFrac,
    cf_equivalent,
    cf_eval,
    claim1_normalize,
    ht_boundary_slopes,
    in_claim1_range,
    linking_number,
    reduced_fraction,
    simple_cf,
    two_bridge_relation,
)
from .slope import AnnotatedSlope, BoundaryMarker, Slope, SlopeTag, format_table

T, S = SlopeTag.TOROIDAL, SlopeTag.SEIFERT
NI, B = BoundaryMarker.NON_INTEGRAL, BoundaryMarker.BOUNDARY

FOOTNOTE_NOTE = "per footnote correction: L[2w+1,-3] handled as L[3,-2w-1]"


class UnsupportedFamily(ValueError):
    pass


# --- family descriptors -----------------------------------------------------

@dataclass(frozen=True)
class FigureEight:
    @property
    def name(self) -> str:
        return "4_1"


@dataclass(frozen=True)
class TwistKnot:
    """K[2n, 2] for sign +1, K[2n, -2] for sign -1."""

    n: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise UnsupportedFamily(f"twist knot sign must be +1 or -1, not {self.sign}")
        if abs(self.n) <= 2:
            raise UnsupportedFamily(f"twist knot K[2n,±2] needs |n| > 2, got n = {self.n}")

    @property
    def cf(self) -> ContFrac:
        return ContFrac.of(2 * self.n, 2 * self.sign)

    @property
    def name(self) -> str:
        return f"K{self.cf}"


@dataclass(frozen=True)
class TwoBridgeKnot:
    cf: ContFrac

    @property
    def name(self) -> str:
        return f"K{self.cf}"


@dataclass(frozen=True)
class Pretzel:
    q: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(int(x) for x in self.q))
        if any(x in (0, 1, -1) for x in self.q):
            raise UnsupportedFamily(f"pretzel parameters must avoid 0 and ±1: {self.q}")

    @property
    def tangles(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(1, x) for x in self.q)

    @property
    def name(self) -> str:
        return "P(" + ",".join(str(x) for x in self.q) + ")"


@dataclass(frozen=True)
class Montesinos:
    tangles: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "tangles", tuple(Fraction(t) for t in self.tangles))

    @property
    def name(self) -> str:
        return "M(" + ",".join(str(t) for t in self.tangles) + ")"


@dataclass(frozen=True)
class TwoBridgeLinkComponent:
    cf: ContFrac

    @property
    def name(self) -> str:
        return f"L{self.cf}"


@dataclass(frozen=True)
class TortiRational:
    f: Fraction
    n: int

    @property
    def name(self) -> str:
        return f"K({self.f};{self.n})"


KnotFamily = Union[
    FigureEight, TwistKnot, TwoBridgeKnot, Pretzel, Montesinos, TwoBridgeLinkComponent, TortiRational
]


# --- datasets ---------------------------------------------------------------

@dataclass(frozen=True)
class FamilyDataset:
    name: str
    exceptional: tuple[AnnotatedSlope, ...]
    boundary_extra: tuple[AnnotatedSlope, ...] = ()
    boundary_complete: bool = False
    hyperbolic_assumed: bool = True
    claimed_case: int | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        exc = tuple(self.exceptional)
        for a, b in zip(exc, exc[1:]):
            if not a.slope < b.slope:
                raise ValueError(f"{self.name}: exceptional slopes not strictly increasing at {a}, {b}")
        for e in exc:
            if not e.is_exceptional:
                raise ValueError(f"{self.name}: {e} carries a boundary marker")
        extra = tuple(sorted(self.boundary_extra, key=lambda e: e.slope))
        for e in extra:
            if e.is_exceptional:
                raise ValueError(f"{self.name}: boundary entry {e} carries a surgery tag")
        object.__setattr__(self, "exceptional", exc)
        object.__setattr__(self, "boundary_extra", extra)

    def table_entries(self) -> list[AnnotatedSlope]:
        """Exceptional slopes merged with the NI boundary slopes, ascending."""
        ni = [e for e in self.boundary_extra if e.tag is NI]
        return sorted([*self.exceptional, *ni], key=lambda e: e.slope)

    def table(self) -> str:
        return format_table(self.table_entries())

    def exceptional_slopes(self) -> list[Slope]:
        return [e.slope for e in self.exceptional]

    def boundary_slopes(self) -> list[Slope]:
        found = {e.slope for e in self.exceptional if e.is_toroidal}
        found.update(e.slope for e in self.boundary_extra)
        return sorted(found)

    def mirror(self) -> FamilyDataset:
        return FamilyDataset(
            self.name + "*",
            tuple(e.mirror() for e in reversed(self.exceptional)),
            tuple(e.mirror() for e in self.boundary_extra),
            self.boundary_complete,
            self.hyperbolic_assumed,
            self.claimed_case,
            self.notes,
        )

    def shifted(self, k: Fraction, name: str) -> FamilyDataset:
        move = lambda e: AnnotatedSlope(Slope.from_value(e.slope.value + k), e.tag, e.certificates)
        return FamilyDataset(
            name,
            tuple(move(e) for e in self.exceptional),
            tuple(_boundary_entry(Slope.from_value(e.slope.value + k), e.certificates)
                  for e in self.boundary_extra),
            self.boundary_complete,
            self.hyperbolic_assumed,
            self.claimed_case,
            self.notes,
        )

    def to_slope_dataset(self) -> SlopeDataset:
        certs: dict[Slope, set[str]] = {}
        for e in self.exceptional:
            if e.is_toroidal:
                certs.setdefault(e.slope, set()).update({"T"} | set(e.certificates))
        for e in self.boundary_extra:
            certs.setdefault(e.slope, set()).update(e.certificates or {"M"})
        boundary = tuple(BoundarySlope(s, frozenset(c)) for s, c in sorted(certs.items()))
        return SlopeDataset(self.name, self.exceptional, boundary, self.boundary_complete)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "exceptional": [{"slope": str(e.slope), "tag": e.tag.value} for e in self.exceptional],
            "boundary_extra": [
                {"slope": str(e.slope), "marker": e.tag.value, "certificates": "".join(sorted(e.certificates))}
                for e in self.boundary_extra
            ],
            "boundary_complete": self.boundary_complete,
            "hyperbolic_assumed": self.hyperbolic_assumed,
            "claimed_case": self.claimed_case,
            "notes": list(self.notes),
            "table": self.table(),
        }


def _boundary_entry(s: Slope, certificates: Iterable[str]) -> AnnotatedSlope:
    return AnnotatedSlope(s, B if s.is_integer else NI, frozenset(certificates))


def _table(rows: Iterable[tuple]) -> tuple[list[AnnotatedSlope], list[AnnotatedSlope]]:
    """Split printed rows (value, code) into exceptional and NI boundary entries."""
    exc, extra = [], []
    for value, code in rows:
        s = Slope.from_value(Fraction(value))
        if code == "NI":
            extra.append(AnnotatedSlope(s, NI, frozenset("M")))
        else:
            exc.append(AnnotatedSlope(s, SlopeTag(code)))
    exc.sort(key=lambda e: e.slope)
    return exc, extra


def _run(lo: int, hi: int) -> list[tuple[int, str]]:
    """Integers lo..hi with toroidal ends and Seifert interior."""
    return [(k, "T" if k in (lo, hi) else "S") for k in range(lo, hi + 1)]


# --- alternating knots ------------------------------------------------------

FIGURE_EIGHT_ROWS = _run(-4, 4)
FIGURE_EIGHT_ROWS[4] = (0, "T")


def _two_bridge_dataset(name: str, cf: ContFrac, rows, claimed_case: int) -> FamilyDataset:
    exc, _ = _table(rows)
    anchor = next((e.slope for e in exc if e.is_toroidal and e.slope != Slope(0)), None)
    ht = ht_boundary_slopes(cf_eval(cf), calibrate_to=anchor)
    toroidal = {e.slope for e in exc if e.is_toroidal}
    if not toroidal <= ht:
        raise AssertionError(f"{name}: toroidal slopes {sorted(toroidal)} not among boundary slopes {sorted(ht)}")
    extra = [_boundary_entry(s, "M") for s in sorted(ht - toroidal)]
    return FamilyDataset(name, tuple(exc), tuple(extra), boundary_complete=True, claimed_case=claimed_case)


def _canonical_two_bridge(cf: ContFrac) -> KnotFamily:
    if len(cf) != 2:
        raise UnsupportedFamily(f"two-bridge knot {cf}: only length-2 expansions are tabulated")
    b1, b2 = cf.terms
    if (b1 * b2 + 1) % 2 == 0:
        raise UnsupportedFamily(f"{cf} is a two-component link")
    if abs(b1) == 2 and abs(b2) == 2:
        if b1 == b2:
            return FigureEight()
        raise UnsupportedFamily(f"{cf} is a trefoil, not hyperbolic")
    if abs(b1) == 2:
        # L[a1, a2] = L[-a2, -a1]
        return _canonical_two_bridge(ContFrac.of(-b2, -b1))
    if abs(b2) == 2:
        if b1 % 2 or abs(b1 // 2) <= 2:
            raise UnsupportedFamily(f"{cf}: expected K[2n,±2] with |n| > 2")
        return TwistKnot(b1 // 2, 1 if b2 > 0 else -1)
    return TwoBridgeKnot(cf)


def alternating_slopes(k: KnotFamily) -> FamilyDataset:
    if isinstance(k, TwoBridgeKnot):
        canon = _canonical_two_bridge(k.cf)
        if not isinstance(canon, TwoBridgeKnot):
            return alternating_slopes(canon)
        b1, b2 = canon.cf.terms
        if b1 % 2 == 0 and b2 % 2 == 0:
            rows = [(0, "T")]
        elif b2 % 2 == 0:
            rows = [(2 * b2, "T")]
        else:
            rows = [(-2 * b1, "T")]
        return _two_bridge_dataset(k.name, canon.cf, rows, claimed_case=1)
    if isinstance(k, FigureEight):
        return _two_bridge_dataset(k.name, ContFrac.of(2, 2), FIGURE_EIGHT_ROWS, claimed_case=1)
    if isinstance(k, TwistKnot):
        rows = _run(-4, 0) if k.sign > 0 else _run(0, 4)
        return _two_bridge_dataset(k.name, k.cf, rows, claimed_case=1)
    if isinstance(k, Pretzel):
        return _alternating_pretzel(k)
    raise UnsupportedFamily(f"{k!r} is not an alternating family")


def _alternating_pretzel(k: Pretzel) -> FamilyDataset:
    q = k.q
    if len(q) != 3:
        raise UnsupportedFamily(f"{k.name}: only three-strand pretzel knots are tabulated")
    if _montesinos_lookup(k.tangles) or _montesinos_lookup(tuple(-t for t in k.tangles)):
        raise UnsupportedFamily(f"{k.name} is a listed non-alternating case; use montesinos_slopes")
    same_sign = len({x > 0 for x in q}) == 1
    notes = () if same_sign else ("mixed signs: alternation and hyperbolicity are assumed, not checked",)
    evens = [x for x in q if x % 2 == 0]
    if not evens:
        # the genus one Seifert surface is toroidal; for same-sign parameters
        # the other checkerboard surface has slope -2(q1 + q2 + q3)
        exc = [AnnotatedSlope(Slope(0), T)]
        extra = [_boundary_entry(Slope(-2 * sum(q)), "M")] if same_sign else []
        return FamilyDataset(k.name, tuple(exc), tuple(extra), claimed_case=1, notes=notes)
    if len(evens) > 1:
        raise UnsupportedFamily(f"{k.name} has two even parameters: a link")
    q1 = evens[0]
    q2, q3 = [x for x in q if x % 2]
    exc = [AnnotatedSlope(Slope(2 * (q2 + q3)), T)]
    extra = [_boundary_entry(Slope(0), "L")]
    notes = (f"canonical order P({q1},{q2},{q3})", *notes)
    return FamilyDataset(k.name, tuple(exc), tuple(extra), claimed_case=1, notes=notes)


# --- Montesinos knots -------------------------------------------------------

def _fr(*xs) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


# (label, tangles, rows, claimed case of the trichotomy)
MONTESINOS_TABLE: tuple[tuple[str, tuple[Fraction, ...], list, int], ...] = (
    ("P(-2,3,7)", _fr("-1/2", "1/3", "1/7"),
     [(16, "T"), (17, "S"), (18, "S"), ("37/2", "T"), (19, "S"), (20, "T")], 1),
    ("P(-3,3,3)", _fr("-1/3", "1/3", "1/3"), [(0, "T"), (1, "S"), (2, "T")], 1),
    ("P(-3,3,4)", _fr("-1/3", "1/3", "1/4"), [(0, "T"), (1, "S"), ("8/5", "NI")], 2),
    ("P(-3,3,5)", _fr("-1/3", "1/3", "1/5"), [(0, "T"), (1, "S"), ("4/3", "NI")], 2),
    ("P(-3,3,6)", _fr("-1/3", "1/3", "1/6"), [(0, "T"), (1, "S"), ("8/7", "NI")], 2),
    ("M(-1/2,1/3,2/5)", _fr("-1/2", "1/3", "2/5"),
     [("8/3", "NI"), (3, "S"), (4, "S"), (5, "S"), (6, "T")], 2),
    ("M(-1/2,1/3,2/7)", _fr("-1/2", "1/3", "2/7"),
     [(-2, "T"), (-1, "S"), (0, "S"), (1, "S"), ("3/2", "NI")], 2),
    ("M(-1/2,1/3,2/9)", _fr("-1/2", "1/3", "2/9"),
     [("3/2", "NI"), (2, "S"), (3, "S"), (4, "S"), (5, "T")], 2),
    ("M(-1/2,1/3,2/11)", _fr("-1/2", "1/3", "2/11"),
     [(-3, "T"), (-2, "S"), (-1, "S"), (0, "T")], 1),
    ("M(-1/2,1/5,2/5)", _fr("-1/2", "1/5", "2/5"),
     [("32/5", "NI"), (7, "S"), (8, "S"), (9, "T")], 2),
    ("M(-1/2,1/7,2/5)", _fr("-1/2", "1/7", "2/5"),
     [("72/7", "NI"), (11, "S"), (12, "T")], 2),
    ("M(-2/3,1/3,2/5)", _fr("-2/3", "1/3", "2/5"), [(-6, "T"), (-5, "S"), (-4, "T")], 1),
    ("P(-3,3,7)", _fr("-1/3", "1/3", "1/7"), [(0, "T"), (1, "T")], 1),
    ("M(-2/3,1/3,1/4)", _fr("-2/3", "1/3", "1/4"), [(12, "T"), (13, "T")], 1),
)

MONTESINOS_CASES = (
    "P(-2,3,2n+1), n>3",
    "P(-2,3,2n+1), n<-1",
    *(label for label, *_ in MONTESINOS_TABLE),
)


def pretzel_minus2_3_rows(n: int) -> tuple[list, int, list]:
    """Rows, claimed case and extra boundary slopes for P(-2, 3, 2n+1)."""
    if n > 3:
        rows = [(4 * n + 6, "S"), (Fraction(4 * n + 6) + Fraction(1, n - 1), "NI"),
                (4 * n + 7, "S"), (4 * n + 8, "T")]
        return rows, 2, [(0, "L"), (16, "M")]
    if n < -1:
        rows = [(Fraction(4 * n + 6) + Fraction(2, 2 * n + 1), "NI"), (4 * n + 6, "S"),
                (4 * n + 7, "S"), (4 * n + 8, "T")]
        return rows, 2, []
    raise UnsupportedFamily(f"P(-2,3,{2 * n + 1}) is outside the tabulated range")


def _montesinos_lookup(tangles: tuple[Fraction, ...]) -> tuple[str, list, int, list] | None:
    key = sorted(tangles)
    for label, params, rows, case in MONTESINOS_TABLE:
        if sorted(params) == key:
            return label, rows, case, []
    if Fraction(-1, 2) in key and Fraction(1, 3) in key:
        rest = list(key)
        rest.remove(Fraction(-1, 2))
        rest.remove(Fraction(1, 3))
        (t,) = rest
        if abs(t.numerator) == 1 and t.denominator % 2 == 1:
            q = t.denominator * t.numerator
            n = (q - 1) // 2
            if n > 3 or n < -1:
                rows, case, extra = pretzel_minus2_3_rows(n)
                return f"P(-2,3,{q})", rows, case, extra
    return None


def montesinos_slopes(k: Pretzel | Montesinos) -> FamilyDataset:
    tangles = k.tangles
    if len(tangles) >= 4:
        return FamilyDataset(k.name, (), claimed_case=None,
                             notes=("length >= 4: no non-trivial exceptional slopes",))
    if len(tangles) < 3:
        raise UnsupportedFamily(f"{k.name} has length < 3: a two-bridge knot")
    found = _montesinos_lookup(tangles)
    mirrored = False
    if found is None:
        found = _montesinos_lookup(tuple(-t for t in tangles))
        mirrored = True
    if found is None:
        raise UnsupportedFamily(f"{k.name} is not among the tabulated Montesinos knots")
    label, rows, case, extra_rows = found
    exc, extra = _table(rows)
    extra += [_boundary_entry(Slope(v), c) for v, c in extra_rows]
    notes = (f"matches {label}" + (" (mirror)" if mirrored else ""),)
    ds = FamilyDataset(k.name, tuple(exc), tuple(extra), claimed_case=case, notes=notes)
    if mirrored:
        ds = ds.mirror()
        ds = FamilyDataset(k.name, ds.exceptional, ds.boundary_extra, ds.boundary_complete,
                           ds.hyperbolic_assumed, ds.claimed_case, ds.notes)
    return ds


# --- two-bridge link components ----------------------------------------------

def three_chain_rows(u: int) -> list[tuple[int, str]]:
    """Exceptional slopes of a component of L[3, 2u+1] (u not 0, -1)."""
    if u in (0, -1):
        raise UnsupportedFamily(f"L[3,{2 * u + 1}] is not hyperbolic")
    if u == -2:
        return _run(-4, 0)
    if u == 1:
        return _run(-2, 2)
    return _run(u - 2, u + 1)


def magic_filling_params(u: int, r: Slope) -> tuple[Slope, Slope]:
    """Filling slopes of the magic manifold matching L[3, 2u+1](r, *)."""
    if u in (0, -1):
        raise UnsupportedFamily(f"u = {u}: L[3,{2 * u + 1}] is not hyperbolic")
    if r.is_meridian:
        raise ValueError("r must be a rational slope")
    return Slope(-1, u + 1), Slope.from_value(r.value - u - 1)


def magic_filling_exceptional(u: int, r: Slope) -> bool:
    _, x = magic_filling_params(u, r)
    if x.is_integer and -3 <= x.numerator <= 0:
        return True
    return (u == -2 and x == Slope(1)) or (u == 1 and x == Slope(-4))


def _seifert_rows(w: int, u: int) -> tuple[list, tuple[str, ...]]:
    if w >= 2 and u not in (1, -2):
        return [(-w + u - 1, "T"), (-w + u, "S"), (-w + u + 1, "T")], ()
    if w == 1:
        return three_chain_rows(u), ()
    if u == 1:
        # L[2w+1, 3] is the mirror image of L[3, 2w+1]
        return [(-v, c) for v, c in reversed(three_chain_rows(w))], ()
    return three_chain_rows(-w - 1), (FOOTNOTE_NOTE,)


def _seifert_matches(f: Fraction) -> list[tuple[int, int, str]]:
    alpha = f.denominator
    out = []
    for w in range(1, alpha + 1):
        for target in (alpha - 1, -alpha - 1):
            if target % (2 * w + 1):
                continue
            odd = target // (2 * w + 1)
            if odd % 2 == 0:
                continue
            u = (odd - 1) // 2
            if u in (0, -1):
                continue
            rel = two_bridge_relation(f, cf_eval((2 * w + 1, 2 * u + 1)))
            if rel:
                out.append((w, u, rel))
    return out


def _toroidal_matches(f: Fraction) -> list[tuple[int, int, int, str]]:
    alpha = f.denominator
    out = []
    for w in range(1, alpha + 1):
        for u in range(-alpha, alpha + 1):
            if u == 0:
                continue
            for target in (alpha, -alpha):
                num = target - 2 * w - 2 * u
                if num % (4 * w * u):
                    continue
                v = num // (4 * w * u)
                if not in_claim1_range(w, v, u):
                    continue
                g = cf_eval((2 * w, v, 2 * u))
                rel = two_bridge_relation(f, g)
                if rel:
                    _lemma1_cross_check(f, w, v, u, rel)
                    out.append((w, v, u, rel))
    return out


def _lemma1_cross_check(f: Fraction, w: int, v: int, u: int, rel: str) -> None:
    simple = claim1_normalize(w, v, u)
    target = reduced_fraction(f if rel == "same" else -f)
    mine = simple_cf(target)
    usable = lambda cf: cf.terms[0] != 1 and cf.terms[-1] != 1
    if usable(simple) and usable(mine) and not cf_equivalent(simple, mine):
        raise AssertionError(f"{f}: Schubert and continued fraction equivalence disagree for {(w, v, u)}")


def link_component_slopes(cf: ContFrac) -> FamilyDataset:
    f = cf_eval(cf)
    if f.denominator % 2:
        raise UnsupportedFamily(f"{cf} = {f} is a knot, not a two-bridge link")
    name = f"L{cf}"
    seifert = _seifert_matches(f)
    if seifert:
        results = set()
        notes: tuple[str, ...] = ()
        for w, u, rel in seifert:
            rows, extra_notes = _seifert_rows(w, u)
            if rel == "mirror":
                rows = [(-v, c) for v, c in reversed(rows)]
            results.add(tuple(rows))
            notes = notes or extra_notes
        if len(results) != 1:
            raise AssertionError(f"{name}: inconsistent tables {results}")
        exc, _ = _table(results.pop())
        w, u, rel = seifert[0]
        note = f"equivalent to L[{2 * w + 1},{2 * u + 1}]" + (" (mirror)" if rel == "mirror" else "")
        return FamilyDataset(name, tuple(exc), claimed_case=1, notes=(note, *notes))
    toroidal = _toroidal_matches(f)
    if toroidal:
        slopes = {(-w - u) if rel == "same" else (w + u) for w, v, u, rel in toroidal}
        if len(slopes) != 1:
            raise AssertionError(f"{name}: several toroidal slopes {sorted(slopes)}")
        w, v, u, rel = toroidal[0]
        note = f"equivalent to L[{2 * w},{v},{2 * u}]" + (" (mirror)" if rel == "mirror" else "")
        exc = [AnnotatedSlope(Slope(slopes.pop()), T)]
        return FamilyDataset(name, tuple(exc), claimed_case=1, notes=(note,))
    raise UnsupportedFamily(f"{name}: no component admits an exceptional filling among the tabulated cases")


# --- torti-rational knots ---------------------------------------------------

def torti_rational_slopes(f: Fraction, n: int) -> FamilyDataset:
    f = Fraction(f)
    if n < 4:
        raise UnsupportedFamily(f"torti-rational knots need n >= 4, got {n}")
    if f.denominator % 2:
        raise UnsupportedFamily(f"{f} has odd denominator: not a two-bridge link")
    cf = simple_cf(reduced_fraction(f))
    l = linking_number(cf)
    component = link_component_slopes(cf)
    name = f"K({f};{n})"
    ds = component.shifted(Fraction(n * l * l), name)
    extra = list(ds.boundary_extra)
    if Slope(0) not in {e.slope for e in ds.exceptional if e.is_toroidal}:
        extra.append(_boundary_entry(Slope(0), "L"))
    notes = (*ds.notes, f"linking number {l}, shift n*l^2 = {n * l * l}")
    return FamilyDataset(name, ds.exceptional, tuple(extra), False, True, ds.claimed_case, notes)


# --- dispatch ---------------------------------------------------------------

def family_dataset(k: KnotFamily) -> FamilyDataset:
    if isinstance(k, (FigureEight, TwistKnot, TwoBridgeKnot)):
        return alternating_slopes(k)
    if isinstance(k, Pretzel):
        if len(k.q) == 3 and not _montesinos_lookup(k.tangles) \
                and not _montesinos_lookup(tuple(-t for t in k.tangles)):
            return alternating_slopes(k)
        return montesinos_slopes(k)
    if isinstance(k, Montesinos):
        return montesinos_slopes(k)
    if isinstance(k, TwoBridgeLinkComponent):
        return link_component_slopes(k.cf)
    if isinstance(k, TortiRational):
        return torti_rational_slopes(k.f, k.n)
    raise UnsupportedFamily(f"unknown family {k!r}")


_INT_LIST = re.compile(r"^\s*[+-]?\d+(\s*,\s*[+-]?\d+)*\s*$")


def parse_family(text: str) -> KnotFamily:
    """Parse descriptors such as ``pretzel:-2,3,9``, ``twist:3,+`` or ``torti:3/8,5``."""
    kind, _, arg = text.strip().partition(":")
    kind = kind.strip().lower()
    arg = arg.strip()
    try:
        if kind in ("figure8", "figure-eight", "4_1"):
            return FigureEight()
        if kind == "twist":
            n, sign = (x.strip() for x in arg.split(","))
            return TwistKnot(int(n), -1 if sign.startswith("-") else 1)
        if kind in ("twobridge", "2bridge", "two-bridge"):
            return TwoBridgeKnot(ContFrac.parse(arg))
        if kind == "pretzel":
            if not _INT_LIST.match(arg):
                raise ValueError(arg)
            return Pretzel(tuple(int(x) for x in arg.split(",")))
        if kind == "montesinos":
            return Montesinos(tuple(Fraction(x.strip()) for x in arg.split(",")))
        if kind == "link":
            return TwoBridgeLinkComponent(ContFrac.parse(arg))
        if kind == "torti":
            f, n = arg.rsplit(",", 1)
            return TortiRational(Fraction(f.strip()), int(n))
    except UnsupportedFamily:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise UnsupportedFamily(f"malformed family descriptor {text!r}: {exc}") from None
    raise UnsupportedFamily(f"unknown family kind {kind!r} in {text!r}")
