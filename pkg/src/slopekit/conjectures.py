"""Verdicts for the boundary-slope conjectures on a knot's slope data.

Two statements are checked:

* ``conj1``: some boundary slopes b1 < b2 bracket every non-trivial
  exceptional slope.
* ``conj2``: some NIT boundary slopes b1 <= b2 (non-integral, or integral
  and toroidal) satisfy the floor/ceiling bracketing, and every integer in
  [ceil(b1), floor(b2)] is exceptional. The witness pair also determines
  which of the three cases of the trichotomy applies.

Without complete boundary data a missing witness yields Unknown, never Fails.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .slope import AnnotatedSlope, MeridianError, Slope, SlopeTag, floor_ceil

CERTIFICATE_LETTERS = frozenset("CKLMT")


class ConjectureError(ValueError):
    pass


@dataclass(frozen=True)
class BoundarySlope:
    slope: Slope
    certificates: frozenset[str]

    def __post_init__(self):
        if self.slope.is_meridian:
            raise MeridianError("the meridian is not listed as a boundary slope")
        certs = frozenset(self.certificates)
        if not certs:
            raise ConjectureError(f"boundary slope {self.slope} has no certificate")
        unknown = certs - CERTIFICATE_LETTERS
        if unknown:
            raise ConjectureError(f"unknown certificate letters {sorted(unknown)}")
        object.__setattr__(self, "certificates", certs)

    @property
    def is_toroidal(self) -> bool:
        return "T" in self.certificates

    @property
    def is_nit(self) -> bool:
        return (not self.slope.is_integer) or self.is_toroidal

    def mirror(self) -> BoundarySlope:
        return BoundarySlope(-self.slope, self.certificates)


@dataclass(frozen=True)
class SlopeDataset:
    name: str
    exceptional: tuple[AnnotatedSlope, ...]
    boundary: tuple[BoundarySlope, ...]
    boundary_complete: bool = False

    def __post_init__(self):
        object.__setattr__(self, "exceptional", tuple(self.exceptional))
        object.__setattr__(self, "boundary", tuple(self.boundary))
        for e in self.exceptional:
            if not e.is_exceptional:
                raise ConjectureError(f"{self.name}: {e} is not an exceptional slope")
        toroidal_boundary = {b.slope for b in self.boundary if b.is_toroidal}
        toroidal_exceptional = {e.slope for e in self.exceptional if e.is_toroidal}
        missing = toroidal_exceptional - toroidal_boundary
        if missing:
            raise ConjectureError(
                f"{self.name}: toroidal slopes {sorted(missing)} missing from the boundary list"
            )
        exc = {e.slope for e in self.exceptional}
        stray = toroidal_boundary - exc
        if stray:
            raise ConjectureError(
                f"{self.name}: T-certified slopes {sorted(stray)} are not exceptional"
            )

    @property
    def exceptional_slopes(self) -> list[Slope]:
        return sorted({e.slope for e in self.exceptional})

    @property
    def boundary_slopes(self) -> list[Slope]:
        return sorted({b.slope for b in self.boundary})

    def nit_slopes(self) -> list[Slope]:
        return sorted({b.slope for b in self.boundary if b.is_nit})

    def mirror(self) -> SlopeDataset:
        return SlopeDataset(
            self.name,
            tuple(e.mirror() for e in self.exceptional),
            tuple(b.mirror() for b in self.boundary),
            self.boundary_complete,
        )


class Status(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    conjecture: str
    status: Status
    witnesses: tuple[Slope, Slope] | None = None
    case_id: int | None = None
    reason: str = ""
    vacuous: bool = False

    def __post_init__(self):
        if self.status is Status.HOLDS and self.witnesses is None and not self.vacuous:
            raise ConjectureError("a Holds verdict needs witnesses")
        if self.case_id is not None and self.conjecture != "conj2":
            raise ConjectureError("case ids belong to conj2 verdicts")

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    def __str__(self):
        parts = [self.status.value]
        if self.case_id is not None:
            parts.append(f"case {self.case_id}")
        if self.witnesses is not None:
            parts.append(f"({self.witnesses[0]}, {self.witnesses[1]})")
        elif self.vacuous:
            parts.append("(vacuous)")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "status": self.status.value,
            "case": self.case_id,
            "witnesses": None if self.witnesses is None else [str(s) for s in self.witnesses],
            "reason": self.reason,
        }


def _missing_witness(conjecture: str, d: SlopeDataset, what: str) -> Verdict:
    if d.boundary_complete:
        return Verdict(conjecture, Status.FAILS, reason=f"no {what} among complete boundary data")
    return Verdict(conjecture, Status.UNKNOWN, reason=f"no {what} among the listed boundary slopes")


def conj1_witness_ok(d: SlopeDataset, b1: Slope, b2: Slope) -> bool:
    exc = d.exceptional_slopes
    return b1 < b2 and all(b1 <= r <= b2 for r in exc)


def check_conj1(d: SlopeDataset) -> Verdict:
    exc = d.exceptional_slopes
    if not exc:
        return Verdict("conj1", Status.HOLDS, reason="no non-trivial exceptional slopes", vacuous=True)
    lo, hi = exc[0], exc[-1]
    below = [b for b in d.boundary_slopes if b <= lo]
    above = [b for b in d.boundary_slopes if b >= hi]
    pairs = [(b1, b2) for b1 in below for b2 in above if b1 < b2]
    if not pairs:
        return _missing_witness("conj1", d, "bracketing pair b1 < b2")
    b1, b2 = min(pairs, key=lambda p: (p[1].value - p[0].value, p[0].value))
    return Verdict("conj1", Status.HOLDS, (b1, b2), reason="all exceptional slopes lie in [b1, b2]")


def _conj2_case(b1: Slope, b2: Slope) -> int:
    integral = b1.is_integer + b2.is_integer
    return {2: 1, 1: 2, 0: 3}[integral]


def _conj2_ok(exc: Sequence[Slope], exc_set: set[Slope], b1: Slope, b2: Slope) -> bool:
    lo, c1 = floor_ceil(b1)
    f2, hi = floor_ceil(b2)
    if lo == hi:
        # floor(b1) = ceil(b2) forces b1 = b2 integral
        assert b1 == b2 and b1.is_integer, (b1, b2)
        if any(r != Slope(lo) for r in exc):
            return False
    elif not all(lo <= r.value <= hi for r in exc):
        return False
    if c1 <= f2:
        return all(Slope(k) in exc_set for k in range(c1, f2 + 1))
    return True


def conj2_witness_ok(d: SlopeDataset, b1: Slope, b2: Slope) -> bool:
    """Whether (b1, b2) is an admissible NIT witness pair for `d`."""
    nit = set(d.nit_slopes())
    if b1 not in nit or b2 not in nit or b2 < b1:
        return False
    exc = d.exceptional_slopes
    return _conj2_ok(exc, set(exc), b1, b2)


def _conj2_score(b1: Slope, b2: Slope) -> tuple:
    lo, _ = floor_ceil(b1)
    _, hi = floor_ceil(b2)
    return (hi - lo, _conj2_case(b1, b2), b2.value - b1.value, b1.value)


def conj2_witnesses(d: SlopeDataset) -> list[tuple[Slope, Slope]]:
    exc = d.exceptional_slopes
    exc_set = set(exc)
    nit = d.nit_slopes()
    found = [
        (b1, b2)
        for i, b1 in enumerate(nit)
        for b2 in nit[i:]
        if _conj2_ok(exc, exc_set, b1, b2)
    ]
    return sorted(found, key=lambda p: _conj2_score(*p))


def check_conj6(d: SlopeDataset) -> Verdict:
    if not d.exceptional_slopes:
        raise ConjectureError(f"{d.name}: no non-trivial exceptional slopes; hypothesis unmet")
    found = conj2_witnesses(d)
    if not found:
        return _missing_witness("conj2", d, "NIT witness pair")
    b1, b2 = found[0]
    case = _conj2_case(b1, b2)
    if case == 2:
        side = "below" if not b1.is_integer else "above"
        reason = f"non-integral slope {side} the integral toroidal slope"
    elif case == 1:
        reason = "integral toroidal slopes bracket the exceptional integers"
    else:
        reason = "non-integral slopes bracket the exceptional slopes"
    return Verdict("conj2", Status.HOLDS, (b1, b2), case_id=case, reason=reason)


check_conj2 = check_conj6


def verify(d: SlopeDataset) -> tuple[Verdict, Verdict]:
    """Both verdicts; the second is vacuous when there are no exceptional slopes."""
    v1 = check_conj1(d)
    if d.exceptional_slopes:
        v2 = check_conj6(d)
    else:
        v2 = Verdict("conj2", Status.HOLDS, reason="no non-trivial exceptional slopes", vacuous=True)
    return v1, v2


def check_single_exceptional(d: SlopeDataset, kind: str) -> Verdict:
    exc = d.exceptional_slopes
    if len(exc) != 1:
        raise ConjectureError(f"{d.name}: expected exactly one exceptional slope, got {len(exc)}")
    m = exc[0]
    if kind == "toroidal":
        case = 1 if m.is_integer else 3
        return Verdict("conj2", Status.HOLDS, (m, m), case_id=case, reason="toroidal slope is its own witness")
    if kind != "cyclic":
        raise ConjectureError(f"kind must be 'toroidal' or 'cyclic', not {kind!r}")
    mv = m.value
    near = [b for b in d.boundary_slopes if not b.is_integer and mv - 1 < b.value < mv + 1]
    if not near:
        return _missing_witness("conj2", d, f"non-integral boundary slope in ({mv - 1}, {mv + 1})")
    b = min(near, key=lambda s: (abs(s.value - mv), s.value))
    return Verdict("conj2", Status.HOLDS, (b, b), case_id=3, reason="boundary slope within distance one of the cyclic slope")


def amphicheiral_bound(m: int) -> bool:
    """An amphicheiral knot with integral exceptional slope m has 2|m| + 1 of them,
    plus the meridian, against the bound of ten exceptional slopes."""
    return 2 * abs(m) + 1 <= 10 - 1


def is_consecutive_run(slopes: Iterable[Slope]) -> bool:
    ints = sorted({s.numerator for s in slopes if s.is_integer})
    return all(b - a == 1 for a, b in zip(ints, ints[1:]))


def consecutive_run(d: SlopeDataset) -> bool:
    return is_consecutive_run(d.exceptional_slopes)


@dataclass(frozen=True)
class Question4Report:
    name: str
    witnesses: tuple[Slope, Slope]
    single_witness: Slope | None
    alternatives: tuple[Slope, ...] = field(default=())

    @property
    def counterexample_candidate(self) -> bool:
        return self.single_witness is None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "witnesses": [str(s) for s in self.witnesses],
            "single_witness": None if self.single_witness is None else str(self.single_witness),
            "counterexample_candidate": self.counterexample_candidate,
        }


def question4_probe(d: SlopeDataset) -> Question4Report:
    """For case-3 data, look for one non-integral b with (b, b) a witness."""
    v = check_conj6(d)
    if not (v.holds and v.case_id == 3):
        raise ConjectureError(f"{d.name}: conj2 verdict is {v}, not Holds in case 3")
    exc = d.exceptional_slopes
    exc_set = set(exc)
    singles = tuple(
        b for b in d.nit_slopes() if not b.is_integer and _conj2_ok(exc, exc_set, b, b)
    )
    return Question4Report(d.name, v.witnesses, singles[0] if singles else None, singles)


def dataset_from_slopes(
    name: str,
    exceptional: Iterable[tuple[Slope, SlopeTag]],
    boundary: Iterable[tuple[Slope, str]],
    boundary_complete: bool = False,
) -> SlopeDataset:
    """Build a dataset, adding T-certified boundary entries for toroidal slopes."""
    exc = [AnnotatedSlope(s, t) for s, t in exceptional]
    bd: dict[Slope, set[str]] = {}
    for s, certs in boundary:
        bd.setdefault(s, set()).update(certs)
    for e in exc:
        if e.is_toroidal:
            bd.setdefault(e.slope, set()).add("T")
    return SlopeDataset(
        name,
        tuple(exc),
        tuple(BoundarySlope(s, frozenset(c)) for s, c in sorted(bd.items())),
        boundary_complete,
    )
