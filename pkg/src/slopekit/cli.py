"""Command-line entry point: ``slopekit <command> ...``.

Exit codes: 0 on success (every verdict Holds or Unknown), 1 when some
verdict Fails, 2 on usage, parse or input errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from . import __version__
from .census import (
    KINDS,
    CensusError,
    CensusReport,
    CensusRecord,
    apply_transform,
    batch_verify,
    dataset_from_entries,
    infer_transform,
    mini_census,
    mini_datasets,
    parse_annotated_list,
    parse_pairs,
    read_census,
    read_census_file,
)
from .conjectures import BoundarySlope, ConjectureError, SlopeDataset
from .contfrac import (
    ContFrac,
    ContFracError,
    cf_equivalent,
    cf_eval,
    claim1_normalize,
    claim1_row,
    ht_boundary_slopes,
    in_claim1_range,
    linking_number,
    simple_cf,
    two_bridge_relation,
)
from .cs_norm import NormData, NormError, Parity, finite_norm_bound, lattice_contradiction, width_at_one
from .families import UnsupportedFamily, family_dataset, parse_family
from .slope import AnnotatedSlope, Slope, SlopeError, SlopeTag

EXIT_OK, EXIT_FAILS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# --- output -----------------------------------------------------------------

class Output:
    def __init__(self, fmt: str, quiet: bool, stream=None):
        self.fmt = fmt
        self.quiet = quiet
        self.stream = stream or sys.stdout

    def emit(self, payload, text: Iterable[str], rows: Sequence[Sequence] | None = None):
        if self.fmt == "json":
            json.dump(payload, self.stream, indent=2, sort_keys=True)
            self.stream.write("\n")
        elif self.fmt == "csv" and rows is not None:
            writer = csv.writer(self.stream, lineterminator="\n")
            writer.writerows(rows)
        else:
            for line in text:
                self.stream.write(line + "\n")

    def note(self, message: str):
        if not self.quiet:
            print(message, file=sys.stderr)


# --- helpers ----------------------------------------------------------------

def _cf_or_fraction(text: str) -> Fraction:
    text = text.strip()
    if text.startswith("["):
        return cf_eval(ContFrac.parse(text))
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a continued fraction [a1,...] or a fraction, got {text!r}") from None


def _mirrored(args) -> bool:
    return args.mirror % 2 == 1


def _exceptional_item(item) -> AnnotatedSlope:
    if isinstance(item, str):
        return AnnotatedSlope(Slope.parse(item), SlopeTag.UNCLASSIFIED)
    if isinstance(item, dict):
        return AnnotatedSlope(Slope.parse(str(item["slope"])), SlopeTag(item.get("tag", "X")))
    slope, tag = item
    return AnnotatedSlope(Slope.parse(str(slope)), SlopeTag(tag))


def _boundary_item(item) -> tuple[Slope, str]:
    if isinstance(item, dict):
        return Slope.parse(str(item["slope"])), item["certificates"]
    slope, certs = item
    return Slope.parse(str(slope)), certs


def dataset_from_json(obj: dict) -> SlopeDataset:
    """Accepts either a census-style ``row`` or explicit exceptional/boundary lists."""
    name = obj.get("name", "?")
    complete = bool(obj.get("boundary_complete", False))
    if "row" in obj:
        return dataset_from_entries(name, parse_annotated_list(obj["row"]), complete)
    exc = tuple(sorted((_exceptional_item(x) for x in obj.get("exceptional", [])), key=lambda e: e.slope))
    bd: dict[Slope, set[str]] = {}
    for x in obj.get("boundary", []):
        s, certs = _boundary_item(x)
        bd.setdefault(s, set()).update(certs)
    for e in exc:
        if e.is_toroidal:
            bd.setdefault(e.slope, set()).add("T")
    boundary = tuple(BoundarySlope(s, frozenset(c)) for s, c in sorted(bd.items()))
    return SlopeDataset(name, exc, boundary, complete)


def _load_datasets(path: str, kind: str) -> tuple[list[SlopeDataset], list[str]]:
    if path == "-":
        text, source = sys.stdin.read(), "<stdin>"
    else:
        text, source = Path(path).read_text(), path
    if source.endswith(".csv"):
        result = read_census(io.StringIO(text), kind, source)
        return [r.to_dataset() for r in result.records], result.errors
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        return [], [f"{source}: {exc}"]
    items = obj if isinstance(obj, list) else obj.get("datasets", [obj])
    out, errors = [], []
    for i, item in enumerate(items):
        try:
            out.append(dataset_from_json(item))
        except (KeyError, TypeError, ValueError) as exc:
            errors.append(f"{source}: dataset {i}: {exc}")
    return out, errors


def _report_exit(report: CensusReport) -> int:
    if report.errors:
        return EXIT_USAGE
    return EXIT_OK if report.ok else EXIT_FAILS


def _emit_report(out: Output, report: CensusReport):
    rows = [["name", "conj1", "conj1_b1", "conj1_b2", "conj2", "conj2_case", "conj2_b1", "conj2_b2"]]
    for v in report.verdicts:
        w1 = v.conj1.witnesses or ("", "")
        w2 = v.conj2.witnesses or ("", "")
        rows.append([v.name, v.conj1.status.value, *map(str, w1), v.conj2.status.value,
                     v.conj2.case_id or "", *map(str, w2)])
    out.emit(report.to_json(), [*report.lines(), report.summary()], rows)
    for e in report.errors:
        print(f"error: {e}", file=sys.stderr)


# --- commands ---------------------------------------------------------------

def cmd_cf(args, out: Output) -> int:
    if args.cf_command == "eval":
        f = cf_eval(ContFrac.parse(args.cf))
        out.emit({"cf": args.cf, "value": str(f)}, [str(f)], [["value"], [str(f)]])
    elif args.cf_command == "simplify":
        cf = ContFrac.parse(args.cf)
        t = cf.terms
        if len(t) == 3 and t[0] % 2 == 0 and t[2] % 2 == 0 and in_claim1_range(t[0] // 2, t[1], t[2] // 2):
            w, v, u = t[0] // 2, t[1], t[2] // 2
            simple, row = claim1_normalize(w, v, u), claim1_row(w, v, u)
        else:
            f = cf_eval(cf)
            if not 0 < f <= 1:
                raise UsageError(f"{cf} = {f}: simple expansions are defined for values in (0, 1]")
            simple, row = simple_cf(f), None
        payload = {"cf": str(cf), "simple": str(simple), "value": str(cf_eval(simple)), "claim1_row": row}
        out.emit(payload, [str(simple)], [["simple"], [str(simple)]])
    elif args.cf_command == "equiv":
        a, b = ContFrac.parse(args.a), ContFrac.parse(args.b)
        eq = cf_equivalent(a, b)
        rel = two_bridge_relation(cf_eval(a), cf_eval(b))
        text = ("equivalent" if eq else "not equivalent") + f" (two-bridge relation: {rel or 'none'})"
        out.emit({"a": str(a), "b": str(b), "equivalent": eq, "relation": rel}, [text])
    elif args.cf_command == "ht-slopes":
        f = _cf_or_fraction(args.value)
        slopes = sorted(ht_boundary_slopes(f))
        if _mirrored(args):
            slopes = sorted(-s for s in slopes)
        out.emit({"value": str(f), "slopes": [str(s) for s in slopes]},
                 [", ".join(str(s) for s in slopes)], [["slope"], *([str(s)] for s in slopes)])
    elif args.cf_command == "lk":
        cf = ContFrac.parse(args.cf)
        lk = linking_number(cf)
        if _mirrored(args):
            lk = -lk
        out.emit({"cf": str(cf), "linking_number": lk}, [str(lk)], [["linking_number"], [lk]])
    return EXIT_OK


def cmd_families(args, out: Output) -> int:
    ds = family_dataset(parse_family(args.descriptor))
    if _mirrored(args):
        ds = ds.mirror()
    rows = [["slope", "tag"], *([str(e.slope), e.tag.value] for e in ds.table_entries())]
    text = [f"{ds.name}: {ds.table()}"]
    if ds.claimed_case is not None:
        text.append(f"case {ds.claimed_case}")
    text += [f"note: {n}" for n in ds.notes]
    out.emit(ds.to_json(), text, rows)
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    items: list[SlopeDataset] = []
    errors: list[str] = []
    for desc in args.family or []:
        items.append(family_dataset(parse_family(desc)).to_slope_dataset())
    for path in args.files:
        ds, errs = _load_datasets(path, args.kind)
        items += ds
        errors += errs
    if not items and not errors:
        raise UsageError("nothing to verify: give --family or dataset files")
    if _mirrored(args):
        items = [d.mirror() for d in items]
    report = batch_verify(items, errors)
    _emit_report(out, report)
    return _report_exit(report)


def _census_records(args) -> tuple[list[CensusRecord], list[str]]:
    if getattr(args, "file", None):
        result = read_census_file(args.file, args.kind)
        return result.records, result.errors
    return mini_census(), []


def cmd_census(args, out: Output) -> int:
    if args.census_command == "ingest":
        result = read_census_file(args.file, args.kind)
        records = result.records
        if _mirrored(args):
            records = [r.mirror() for r in records]
        report = batch_verify(records, result.errors)
        _emit_report(out, report)
        return _report_exit(report)
    if args.census_command == "transform":
        if args.pairs:
            t = infer_transform(parse_pairs(args.pairs))
        else:
            records, errors = _census_records(args)
            for e in errors:
                print(f"error: {e}", file=sys.stderr)
            match = [r for r in records if r.name == args.name]
            if not match:
                raise UsageError(f"no census record named {args.name!r}")
            rec = match[0].mirror() if _mirrored(args) else match[0]
            t = rec.transform()
        payload = {"name": args.name, **t.to_json()}
        if args.apply:
            s = apply_transform(t, Slope.parse(args.apply))
            payload["applied"] = {"snappy": args.apply, "std": str(s)}
        text = [str(t)] + ([f"{args.apply} -> {payload['applied']['std']}"] if args.apply else [])
        out.emit(payload, text, [["epsilon", "offset"], [t.epsilon, t.offset]])
        return EXIT_OK
    if args.census_command == "report":
        if args.file:
            records, errors = _census_records(args)
            items = [r.to_dataset() for r in records]
        else:
            items, errors = mini_datasets(), []
        if _mirrored(args):
            items = [d.mirror() for d in items]
        report = batch_verify(items, errors)
        _emit_report(out, report)
        return _report_exit(report)
    raise UsageError(f"unknown census command {args.census_command!r}")


def cmd_norm(args, out: Output) -> int:
    d = NormData(Fraction(args.s), Fraction(args.m), Fraction(args.t), Fraction(args.rM), args.n,
                 Parity(args.parity))
    w = width_at_one(d)
    verdict = lattice_contradiction(d)
    bound = finite_norm_bound(d.s)
    payload = {"width_at_one": str(w), "lattice_contradiction": verdict, "finite_norm_bound": str(bound)}
    text = [f"w(1) = {w}", f"lattice contradiction: {'yes' if verdict else 'no'}",
            f"finite slope norm bound: {bound}"]
    rows = [["width_at_one", "lattice_contradiction", "finite_norm_bound"], [str(w), verdict, str(bound)]]
    out.emit(payload, text, rows)
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--mirror", action="count", default=argparse.SUPPRESS,
                        help="negate all slopes on ingest; repeat to undo")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    p = _Parser(prog="slopekit", description="Exceptional and boundary slope toolkit.", parents=[common])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    cf = sub.add_parser("cf", help="continued fraction tools", parents=[common])
    cfs = cf.add_subparsers(dest="cf_command", required=True, parser_class=_Parser)
    x = cfs.add_parser("eval", help="evaluate [a1,...,an]", parents=[common])
    x.add_argument("cf")
    x = cfs.add_parser("simplify", help="simple continued fraction of the same value", parents=[common])
    x.add_argument("cf")
    x = cfs.add_parser("equiv", help="test equivalence of two expansions", parents=[common])
    x.add_argument("a")
    x.add_argument("b")
    x = cfs.add_parser("ht-slopes", help="boundary slopes of a two-bridge knot", parents=[common])
    x.add_argument("value", help="fraction beta/alpha or [a1,...]")
    x = cfs.add_parser("lk", help="linking number of a two-bridge link", parents=[common])
    x.add_argument("cf")

    fam = sub.add_parser("families", help="slope table of a knot family", parents=[common])
    fam.add_argument("descriptor", help="e.g. pretzel:-2,3,9, twist:3,+, torti:3/8,5")

    ver = sub.add_parser("verify", help="check both conjectures", parents=[common])
    ver.add_argument("files", nargs="*", help="JSON datasets or census CSV files ('-' for stdin)")
    ver.add_argument("--family", action="append", help="family descriptor; repeatable")
    ver.add_argument("--kind", choices=KINDS, default="verified", help="kind of census CSV inputs")

    cen = sub.add_parser("census", help="census rows and coordinate transforms", parents=[common])
    cens = cen.add_subparsers(dest="census_command", required=True, parser_class=_Parser)
    x = cens.add_parser("ingest", help="parse and verify a census CSV file", parents=[common])
    x.add_argument("file")
    x.add_argument("--kind", choices=KINDS, required=True)
    x = cens.add_parser("transform", help="infer the SnapPy to standard transform", parents=[common])
    x.add_argument("name")
    x.add_argument("--pairs", help='explicit pairs "(snappy,std);(snappy,std)"')
    x.add_argument("--file", help="census CSV to look the record up in")
    x.add_argument("--kind", choices=KINDS, default="verified")
    x.add_argument("--apply", help="SnapPy slope to convert")
    x = cens.add_parser("report", help="verify the embedded mini census", parents=[common])
    x.add_argument("--file", help="census CSV to report on instead")
    x.add_argument("--kind", choices=KINDS, default="verified")

    nrm = sub.add_parser("norm", help="norm width test for a finite filling", parents=[common])
    nrm.add_argument("--s", required=True)
    nrm.add_argument("--m", required=True)
    nrm.add_argument("--t", required=True)
    nrm.add_argument("--rM", required=True)
    nrm.add_argument("--n", required=True, type=int)
    nrm.add_argument("--parity", choices=[p.value for p in Parity], default="integer")
    return p


COMMANDS = {"cf": cmd_cf, "families": cmd_families, "verify": cmd_verify, "census": cmd_census, "norm": cmd_norm}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # --mirror may appear at any level; count every occurrence
    mirror = argv.count("--mirror")
    args = build_parser().parse_args([a for a in argv if a != "--mirror"])
    args.format = getattr(args, "format", "text")
    args.mirror = mirror
    args.quiet = getattr(args, "quiet", False)
    out = Output(args.format, args.quiet)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, UnsupportedFamily, ContFracError, SlopeError, CensusError,
            ConjectureError, NormError, ValueError, OSError) as exc:
        print(f"slopekit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
