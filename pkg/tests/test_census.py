from __future__ import annotations

import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slopekit.census import (
    CensusRecord,
    CoordTransform,
    IDENTITY,
    NonAffine,
    ParseError,
    TransformError,
    Underdetermined,
    apply_transform,
    batch_verify,
    format_annotated_list,
    infer_transform,
    mini_census,
    mini_report,
    parse_annotated_list,
    parse_pairs,
    read_census,
    write_census,
)
from slopekit.conjectures import Status, verify
from slopekit.slope import MERIDIAN, MeridianError, Slope

V0319_STD = "[(-62, 'T'), -63, -64, (-194/3, 'C'), -65, (-206/3, 'C')]"
V0319_SNAPPY = "[(-2, 'T'), -1, 0, (2/3, 'C'), 1, (14/3, 'C')]"
V1359_STD = "[(121/2, 'CK'), 59, (176/3, 'C'), 58, (57, 'T')]"
V1359_SNAPPY = "[(-5/2, 'CK'), -1, (-2/3, 'C'), 0, (1, 'T')]"


def test_parse_examples():
    es = parse_annotated_list(V0319_SNAPPY)
    assert len(es) == 6
    assert es[0].slope == Slope(-2) and es[0].certificates == {"T"}
    assert [str(e.slope) for e in es if "C" in e.certificates] == ["2/3", "14/3"]
    assert parse_annotated_list("[]") == []
    assert parse_annotated_list(V1359_STD)[0].certificates == {"C", "K"}


@pytest.mark.parametrize("row", [V0319_STD, V0319_SNAPPY, V1359_STD, V1359_SNAPPY, "[]"])
def test_round_trip(row):
    assert format_annotated_list(parse_annotated_list(row)) == row


@pytest.mark.parametrize("bad, pos", [
    ("[(1, 'Q')]", 6), ("[1,,2]", 3), ("[(1/0, 'T')]", 2), ("[1 2]", 3), ("[1", 2), ("1, 2", 0), ("[(1, '')]", 6),
])
def test_parse_errors_carry_position(bad, pos):
    with pytest.raises(ParseError) as info:
        parse_annotated_list(bad)
    assert info.value.position == pos


def test_infer_examples():
    assert infer_transform([(Slope(-2), Slope(-62)), (Slope(0), Slope(-64))]) == CoordTransform(-1, -64)
    assert infer_transform([(Slope(0), Slope(58)), (Slope(1), Slope(57))]) == CoordTransform(-1, 58)
    with pytest.raises(Underdetermined):
        infer_transform([(Slope(1), Slope(5))])
    with pytest.raises(Underdetermined):
        infer_transform([(Slope(1), Slope(5)), (Slope(1), Slope(5))])
    with pytest.raises(NonAffine):
        infer_transform([(Slope(0), Slope(0)), (Slope(1), Slope(2))])
    with pytest.raises(NonAffine):
        infer_transform([(Slope(0), Slope(0)), (Slope(1), Slope(1)), (Slope(2), Slope(3))])


def test_apply_examples():
    assert apply_transform(CoordTransform(-1, -64), Slope(14, 3)) == Slope(-206, 3)
    assert apply_transform(CoordTransform(-1, 58), Slope(-2, 3)) == Slope(176, 3)
    assert apply_transform(IDENTITY, Slope(7, 2)) == Slope(7, 2)
    with pytest.raises(MeridianError):
        apply_transform(IDENTITY, MERIDIAN)
    with pytest.raises(TransformError):
        CoordTransform(2, 0)


def test_transform_text():
    assert str(CoordTransform(-1, -64)) == "std = -snappy - 64"
    assert str(CoordTransform(1, 0)) == "std = snappy"


slopes = st.fractions(min_value=-50, max_value=50, max_denominator=7)


@given(st.sampled_from([1, -1]), st.integers(-100, 100), st.lists(slopes, min_size=2, max_size=6, unique=True))
def test_inference_recovers_transform(eps, c, xs):
    t = CoordTransform(eps, c)
    pairs = [(Slope.from_value(x), apply_transform(t, Slope.from_value(x))) for x in xs]
    assert infer_transform(pairs) == t


def test_parse_pairs():
    assert parse_pairs("(-2,-62);(0,-64)") == [(Slope(-2), Slope(-62)), (Slope(0), Slope(-64))]
    with pytest.raises(ParseError):
        parse_pairs("(-2;-62)")


def test_mini_census_records():
    recs = {r.name: r for r in mini_census()}
    assert recs["v0319"].transform() == CoordTransform(-1, -64)
    assert recs["v1359"].transform() == CoordTransform(-1, 58)
    assert recs["s682"].duplicate_coordinates
    with pytest.raises(TransformError):
        recs["s682"].transform()


def test_mirror_flips_transform_and_keeps_verdicts():
    for rec in mini_census():
        if rec.duplicate_coordinates:
            continue
        t, m = rec.transform(), rec.mirror().transform()
        assert (m.epsilon, m.offset) == (t.epsilon, -t.offset)
        a, b = verify(rec.to_dataset()), verify(rec.mirror().to_dataset())
        assert [(v.status, v.case_id) for v in a] == [(v.status, v.case_id) for v in b]


def test_record_validation():
    e = parse_annotated_list("[1, (3/2, 'C')]")
    with pytest.raises(ValueError):
        CensusRecord("x12", tuple(e), tuple(e))
    with pytest.raises(ValueError):
        CensusRecord("v1", tuple(e), tuple(e[:1]))
    with pytest.raises(ValueError):
        CensusRecord("v1", tuple(e), tuple(parse_annotated_list("[1, (3/2, 'K')]")))


CSV_TEXT = """# comment
name,standard,snappy,knot
v0319,"%s","%s",
bad1,"[1]","[1]",
v9999,"[(1, 'Q')]","[(1, 'Q')]",
t00001,"[]","[]",K1
""" % (V0319_STD, V0319_SNAPPY)


def test_read_collects_errors():
    res = read_census(io.StringIO(CSV_TEXT), "verified", "f.csv")
    assert [r.name for r in res.records] == ["v0319", "t00001"]
    assert len(res.errors) == 2 and all(e.startswith("f.csv: row") for e in res.errors)


def test_toroidal_only_kind_checks_tags():
    res = read_census(io.StringIO(CSV_TEXT), "toronly")
    assert any("toroidal-only" in e for e in res.errors)


def test_remaining_kind_flags_round_trip():
    text = 'v0001,"[(1, \'T\')]","[(1, \'T\')]",,true,false,yes\n'
    res = read_census(io.StringIO(text), "remaining")
    (rec,) = res.records
    assert (rec.verified_c1, rec.verified_c6, rec.verified_either) == (True, False, True)
    out = io.StringIO()
    write_census(res.records, "remaining", out)
    again = read_census(io.StringIO(out.getvalue()), "remaining")
    assert again.records == res.records and not again.errors


def test_write_read_round_trip():
    out = io.StringIO()
    write_census(mini_census(), "verified", out)
    assert read_census(io.StringIO(out.getvalue()), "verified").records == mini_census()


def test_batch_report():
    rep = mini_report()
    t = rep.tally()
    assert rep.ok and t["conj2"]["Holds"] == t["records"]
    assert t["conj1"]["Fails"] == 0
    names = [v.name for v in rep.verdicts]
    assert names == sorted(names)


def test_batch_tallies():
    recs = [
        CensusRecord("v0001", (), ()),
        CensusRecord("v0002", *(tuple(parse_annotated_list("[(-1, 'T'), (0, 'T'), (1, 'T')]")),) * 2),
    ]
    rep = batch_verify(recs)
    t = rep.tally()
    assert t["no_exceptional"] == 1 and t["toroidal_only"] == 1
    v = {x.name: x for x in rep.verdicts}["v0002"]
    assert v.conj2.case_id == 1 and (str(v.conj2.witnesses[0]), str(v.conj2.witnesses[1])) == ("-1", "1")
    assert v.conj1.status is Status.HOLDS
