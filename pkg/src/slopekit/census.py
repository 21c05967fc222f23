"""Census rows of exceptional and boundary slopes.

A row lists a knot's slopes twice, in standard and in SnapPy coordinates,
using the bracketed tuple form ``[(-2, 'T'), -1, 0, (2/3, 'C')]``. Bare
entries are exceptional slopes; a tuple attaches certificate letters that
say how a boundary slope was found (T toroidal, C A-polynomial, K Kabaya,
L longitude, M two-bridge or Montesinos).
"""
from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence, TextIO, Union

from .conjectures import (
    CERTIFICATE_LETTERS,
    BoundarySlope,
    SlopeDataset,
    Status,
    Verdict,
    verify,
)
from .slope import AnnotatedSlope, MeridianError, Slope, SlopeError, SlopeTag

KINDS = ("toronly", "verified", "remaining")
BASE_COLUMNS = ("name", "standard", "snappy", "knot")
FLAG_COLUMNS = ("conj1", "conj6", "either")
NAME_RE = re.compile(r"^[msvto]\d+$")


class CensusError(ValueError):
    pass


class ParseError(CensusError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class TransformError(CensusError):
    pass


class Underdetermined(TransformError):
    pass


class NonAffine(TransformError):
    pass


# --- row grammar ------------------------------------------------------------

@dataclass(frozen=True)
class CensusEntry:
    slope: Slope
    certificates: frozenset[str] = frozenset()

    @property
    def is_toroidal(self) -> bool:
        return "T" in self.certificates

    @property
    def is_exceptional(self) -> bool:
        return self.slope.is_integer or self.is_toroidal or not self.certificates

    def mirror(self) -> CensusEntry:
        return CensusEntry(-self.slope, self.certificates)

    def __str__(self):
        if not self.certificates:
            return str(self.slope)
        return f"({self.slope}, '{format_certificates(self.certificates)}')"


def format_certificates(letters: Iterable[str]) -> str:
    return "".join(sorted(set(letters)))


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<open>\[) | (?P<close>\]) | (?P<lparen>\() | (?P<rparen>\)) | (?P<comma>,)
      | '(?P<letters>[^']*)'
      | (?P<slope>[+-]?\d+(?:\s*/\s*\d+)?)
    )""",
    re.VERBOSE,
)


def _tokens(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        yield kind, m.group(kind), start
        pos = m.end()
    yield "end", "", len(text)


def _slope(value: str, pos: int) -> Slope:
    try:
        s = Slope.parse(value)
    except SlopeError as exc:
        raise ParseError(str(exc), pos) from None
    if s.is_meridian:
        raise ParseError("the meridian cannot appear in a row", pos)
    return s


def parse_annotated_list(text: str) -> list[CensusEntry]:
    toks = _tokens(text)

    def expect(*kinds):
        kind, value, pos = next(toks)
        if kind not in kinds:
            got = value or "end of input"
            raise ParseError(f"expected {' or '.join(kinds)}, got {got!r}", pos)
        return kind, value, pos

    expect("open")
    out: list[CensusEntry] = []
    kind, value, pos = expect("close", "slope", "lparen")
    while kind != "close":
        if kind == "slope":
            out.append(CensusEntry(_slope(value, pos)))
        else:
            _, sv, spos = expect("slope")
            expect("comma")
            _, letters, lpos = expect("letters")
            if not letters:
                raise ParseError("empty certificate", lpos)
            unknown = set(letters) - CERTIFICATE_LETTERS
            if unknown:
                raise ParseError(f"unknown certificate letters {''.join(sorted(unknown))!r}", lpos)
            expect("rparen")
            out.append(CensusEntry(_slope(sv, spos), frozenset(letters)))
        kind, value, pos = expect("comma", "close")
        if kind == "comma":
            kind, value, pos = expect("slope", "lparen")
    expect("end")
    return out


def format_annotated_list(entries: Sequence[CensusEntry]) -> str:
    return "[" + ", ".join(str(e) for e in entries) + "]"


# --- coordinate transforms --------------------------------------------------

@dataclass(frozen=True)
class CoordTransform:
    """standard = epsilon * snappy + offset."""

    epsilon: int
    offset: int

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise TransformError(f"epsilon must be +1 or -1, not {self.epsilon}")

    def __str__(self):
        lead = "snappy" if self.epsilon == 1 else "-snappy"
        if self.offset == 0:
            return f"std = {lead}"
        sign = "+" if self.offset > 0 else "-"
        return f"std = {lead} {sign} {abs(self.offset)}"

    def inverse(self) -> CoordTransform:
        return CoordTransform(self.epsilon, -self.epsilon * self.offset)

    def to_json(self) -> dict:
        return {"epsilon": self.epsilon, "offset": self.offset, "formula": str(self)}


IDENTITY = CoordTransform(1, 0)


def apply_transform(t: CoordTransform, s: Slope) -> Slope:
    if s.is_meridian:
        raise MeridianError("coordinate changes fix the meridian; nothing to apply")
    return Slope.from_value(t.epsilon * s.value + t.offset)


def infer_transform(pairs: Iterable[tuple[Slope, Slope]]) -> CoordTransform:
    pairs = list(pairs)
    for snappy, std in pairs:
        if snappy.is_meridian or std.is_meridian:
            raise MeridianError("transform inference uses rational slopes only")
    distinct = {}
    for snappy, std in pairs:
        distinct.setdefault(snappy, std)
    if len(distinct) < 2:
        raise Underdetermined("underdetermined: need two pairs with distinct SnapPy slopes")
    (x1, y1), (x2, y2) = list(distinct.items())[:2]
    eps = (y2.value - y1.value) / (x2.value - x1.value)
    c = y1.value - eps * x1.value
    if eps not in (1, -1) or c.denominator != 1:
        raise NonAffine(f"no affine meridian-fixing transform: slope ratio {eps}, offset {c}")
    t = CoordTransform(int(eps), int(c))
    for snappy, std in pairs:
        if apply_transform(t, snappy) != std:
            raise NonAffine(f"no affine meridian-fixing transform: {snappy} -> {std} breaks {t}")
    return t


def parse_pairs(text: str) -> list[tuple[Slope, Slope]]:
    """Parse ``(-2,-62);(0,-64)`` into (snappy, standard) pairs."""
    out = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        m = re.fullmatch(r"\(\s*([^,()]+?)\s*,\s*([^,()]+?)\s*\)", chunk)
        if not m:
            raise ParseError(f"malformed pair {chunk!r}")
        out.append((_slope(m.group(1), 0), _slope(m.group(2), 0)))
    return out


# --- records ----------------------------------------------------------------

@dataclass(frozen=True)
class CensusRecord:
    name: str
    std_slopes: tuple[CensusEntry, ...]
    snappy_slopes: tuple[CensusEntry, ...]
    knot_name: str | None = None
    verified_c1: bool | None = None
    verified_c6: bool | None = None
    verified_either: bool | None = None

    def __post_init__(self):
        if not NAME_RE.match(self.name):
            raise CensusError(f"bad census name {self.name!r}")
        std, snap = tuple(self.std_slopes), tuple(self.snappy_slopes)
        if len(std) != len(snap):
            raise CensusError(f"{self.name}: {len(std)} standard slopes but {len(snap)} SnapPy slopes")
        for a, b in zip(std, snap):
            if a.certificates != b.certificates:
                raise CensusError(f"{self.name}: annotations differ between {a} and {b}")
        object.__setattr__(self, "std_slopes", std)
        object.__setattr__(self, "snappy_slopes", snap)

    @property
    def duplicate_coordinates(self) -> bool:
        """Standard coordinates repeated because SnapPy's trivial slope is not 1/0."""
        return bool(self.std_slopes) and self.std_slopes == self.snappy_slopes

    @property
    def boundary_complete(self) -> bool:
        # rows list only the boundary slopes needed for a witness, so only
        # two-bridge or Montesinos data counts as complete
        return any("M" in e.certificates for e in self.std_slopes)

    def entries(self, coords: str = "std") -> tuple[CensusEntry, ...]:
        if coords == "std":
            return self.std_slopes
        if coords == "snappy":
            return self.snappy_slopes
        raise CensusError(f"coords must be 'std' or 'snappy', not {coords!r}")

    def transform(self) -> CoordTransform:
        if self.duplicate_coordinates:
            raise TransformError(f"{self.name}: duplicate coordinates; no transform recorded")
        return infer_transform((b.slope, a.slope) for a, b in zip(self.std_slopes, self.snappy_slopes))

    def mirror(self) -> CensusRecord:
        return CensusRecord(
            self.name,
            tuple(e.mirror() for e in self.std_slopes),
            tuple(e.mirror() for e in self.snappy_slopes),
            self.knot_name,
            self.verified_c1,
            self.verified_c6,
            self.verified_either,
        )

    def to_dataset(self, coords: str = "std") -> SlopeDataset:
        return dataset_from_entries(self.name, self.entries(coords), self.boundary_complete)

    def csv_row(self, kind: str) -> list[str]:
        row = [
            self.name,
            format_annotated_list(self.std_slopes),
            format_annotated_list(self.snappy_slopes),
            self.knot_name or "",
        ]
        if kind == "remaining":
            row += [_format_flag(f) for f in (self.verified_c1, self.verified_c6, self.verified_either)]
        return row


def dataset_from_entries(name: str, entries: Iterable[CensusEntry], complete: bool = False) -> SlopeDataset:
    exc: dict[Slope, SlopeTag] = {}
    bd: dict[Slope, set[str]] = {}
    for e in entries:
        if e.is_exceptional:
            tag = SlopeTag.TOROIDAL if e.is_toroidal else SlopeTag.UNCLASSIFIED
            if exc.get(e.slope) is not SlopeTag.TOROIDAL:
                exc[e.slope] = tag
        if e.certificates:
            bd.setdefault(e.slope, set()).update(e.certificates)
    return SlopeDataset(
        name,
        tuple(AnnotatedSlope(s, t) for s, t in sorted(exc.items())),
        tuple(BoundarySlope(s, frozenset(c)) for s, c in sorted(bd.items())),
        complete,
    )


def record_to_dataset(record: CensusRecord, coords: str = "std") -> SlopeDataset:
    return record.to_dataset(coords)


# --- CSV --------------------------------------------------------------------

_TRUE = {"1", "true", "t", "yes", "y"}
_FALSE = {"0", "false", "f", "no", "n"}


def _parse_flag(text: str) -> bool | None:
    t = text.strip().lower()
    if not t:
        return None
    if t in _TRUE:
        return True
    if t in _FALSE:
        return False
    raise CensusError(f"not a boolean: {text!r}")


def _format_flag(flag: bool | None) -> str:
    return "" if flag is None else ("true" if flag else "false")


@dataclass
class IngestResult:
    records: list[CensusRecord] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)


def read_census(stream: TextIO, kind: str, source: str = "<input>") -> IngestResult:
    """Read one census CSV file; bad rows are reported, not fatal."""
    if kind not in KINDS:
        raise CensusError(f"kind must be one of {', '.join(KINDS)}, not {kind!r}")
    width = len(BASE_COLUMNS) + (len(FLAG_COLUMNS) if kind == "remaining" else 0)
    result = IngestResult()
    seen: set[str] = set()
    lines = (line for line in stream if line.strip() and not line.lstrip().startswith("#"))
    for lineno, row in enumerate(csv.reader(lines), start=1):
        where = f"{source}: row {lineno}"
        if [c.strip().lower() for c in row[:1]] == ["name"]:
            continue
        # the knot column may be omitted when no flag columns follow it
        allowed = {width} if kind == "remaining" else {width, width - 1}
        if len(row) not in allowed:
            result.errors.append(f"{where}: expected {width} columns, got {len(row)}")
            continue
        try:
            name = row[0].strip()
            std = tuple(parse_annotated_list(row[1]))
            snap = tuple(parse_annotated_list(row[2]))
            knot = row[3].strip() if len(row) > 3 and row[3].strip() else None
            flags = [_parse_flag(x) for x in row[4:7]] if kind == "remaining" else [None] * 3
            rec = CensusRecord(name, std, snap, knot, *flags)
            if kind == "toronly" and not all(e.is_toroidal for e in std if e.is_exceptional):
                raise CensusError(f"{name}: non-toroidal exceptional slope in a toroidal-only file")
            if name in seen:
                raise CensusError(f"duplicate record {name}")
        except CensusError as exc:
            result.errors.append(f"{where}: {exc}")
            continue
        seen.add(name)
        result.records.append(rec)
    return result


def read_census_file(path: str | Path, kind: str) -> IngestResult:
    with open(path, newline="") as fh:
        return read_census(fh, kind, str(path))


def write_census(records: Iterable[CensusRecord], kind: str, stream: TextIO) -> None:
    writer = csv.writer(stream, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    header = list(BASE_COLUMNS) + (list(FLAG_COLUMNS) if kind == "remaining" else [])
    writer.writerow(header)
    for r in records:
        writer.writerow(r.csv_row(kind))


def mini_census() -> list[CensusRecord]:
    """Rows worked through in the text, shipped with the package."""
    text = resources.files("slopekit").joinpath("data/mini_verified.csv").read_text()
    result = read_census(io.StringIO(text), "verified", "mini_verified.csv")
    if result.errors:
        raise CensusError("; ".join(result.errors))
    return result.records


# --- batch verification -----------------------------------------------------

@dataclass(frozen=True)
class RecordVerdict:
    name: str
    conj1: Verdict
    conj2: Verdict
    n_exceptional: int
    toroidal_only: bool

    def line(self) -> str:
        return f"{self.name}: conj1 {self.conj1}; conj2 {self.conj2}"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "conj1": self.conj1.to_json(),
            "conj2": self.conj2.to_json(),
            "n_exceptional": self.n_exceptional,
            "toroidal_only": self.toroidal_only,
        }


@dataclass
class CensusReport:
    verdicts: list[RecordVerdict]
    errors: list[str]

    def tally(self) -> dict:
        counts = {"records": len(self.verdicts), "no_exceptional": 0, "toroidal_only": 0}
        for conj in ("conj1", "conj2"):
            counts[conj] = {s.value: 0 for s in Status}
        for v in self.verdicts:
            counts["no_exceptional"] += v.n_exceptional == 0
            counts["toroidal_only"] += v.toroidal_only
            counts["conj1"][v.conj1.status.value] += 1
            counts["conj2"][v.conj2.status.value] += 1
        counts["errors"] = len(self.errors)
        return counts

    @property
    def ok(self) -> bool:
        fails = any(Status.FAILS in (v.conj1.status, v.conj2.status) for v in self.verdicts)
        return not fails and not self.errors

    def lines(self) -> list[str]:
        return [v.line() for v in self.verdicts]

    def summary(self) -> str:
        t = self.tally()
        parts = [
            f"records {t['records']}",
            f"no exceptional {t['no_exceptional']}",
            f"toroidal only {t['toroidal_only']}",
        ]
        for conj in ("conj1", "conj2"):
            parts.append(conj + " " + " ".join(f"{k} {n}" for k, n in t[conj].items()))
        parts.append(f"errors {t['errors']}")
        return ", ".join(parts)

    def to_json(self) -> dict:
        return {
            "tally": self.tally(),
            "records": [v.to_json() for v in self.verdicts],
            "errors": list(self.errors),
        }


Verifiable = Union[CensusRecord, SlopeDataset]


def _verify_one(item: Verifiable) -> RecordVerdict:
    d = item.to_dataset() if isinstance(item, CensusRecord) else item
    v1, v2 = verify(d)
    exc = d.exceptional
    toroidal_only = bool(exc) and all(e.is_toroidal for e in exc)
    return RecordVerdict(d.name, v1, v2, len(d.exceptional_slopes), toroidal_only)


def batch_verify(items: Iterable[Verifiable], errors: Sequence[str] = ()) -> CensusReport:
    verdicts, errs = [], list(errors)
    for item in items:
        try:
            verdicts.append(_verify_one(item))
        except (CensusError, ValueError) as exc:
            name = getattr(item, "name", "?")
            errs.append(f"{name}: {exc}")
    verdicts.sort(key=lambda v: v.name)
    return CensusReport(verdicts, errs)


MINI_FAMILIES = (
    "figure8",
    "twist:3,+",
    "twist:3,-",
    "twobridge:[4,4]",
    "pretzel:-2,3,7",
    "pretzel:-2,3,9",
    "pretzel:-3,3,5",
    "montesinos:-1/2,1/3,2/5",
    "torti:3/8,5",
)


def mini_datasets() -> list[SlopeDataset]:
    from .families import family_dataset, parse_family

    items = [r.to_dataset() for r in mini_census()]
    items += [family_dataset(parse_family(d)).to_slope_dataset() for d in MINI_FAMILIES]
    return items


def mini_report() -> CensusReport:
    return batch_verify(mini_datasets())
