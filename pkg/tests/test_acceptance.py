"""Acceptance criteria, one check per criterion.

Run under pytest for the PASS/FAIL summary, or directly:
    python3 tests/test_acceptance.py
"""
from __future__ import annotations

import itertools
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from _oracles import matrix_eval, schubert_linking  # noqa: E402
from slopekit.census import apply_transform, mini_census, record_to_dataset  # noqa: E402
from slopekit.conjectures import (  # noqa: E402
    amphicheiral_bound,
    check_conj1,
    check_conj6,
    question4_probe,
)
from slopekit.contfrac import (  # noqa: E402
    CLAIM1_ROWS,
    ContFrac,
    all_even_expansion,
    cf_eval,
    claim1_normalize,
    claim1_row,
    expansion_slopes,
    ht_boundary_slopes,
    in_claim1_range,
)
from slopekit.cs_norm import (  # noqa: E402
    NormData,
    Parity,
    finite_norm_bound,
    lattice_contradiction,
)
from slopekit.families import family_dataset, parse_family, torti_rational_slopes  # noqa: E402
from slopekit.slope import Slope, SlopeTag  # noqa: E402

# (descriptor, printed table, printed case number)
ALTERNATING_CASES = [
    ("figure8", "-4(T), -3(S), -2(S), -1(S), 0(T), 1(S), 2(S), 3(S), 4(T)", 1),
    *[(f"twist:{n},+", "-4(T), -3(S), -2(S), -1(S), 0(T)", 1) for n in range(3, 7)],
    *[(f"twist:{n},-", "0(T), 1(S), 2(S), 3(S), 4(T)", 1) for n in range(3, 7)],
    ("twobridge:[4,4]", "0(T)", 1),
    ("twobridge:[3,4]", "8(T)", 1),
    ("twobridge:[5,-6]", "-12(T)", 1),
    ("twobridge:[-3,8]", "16(T)", 1),
]

MONTESINOS_CASES = [
    ("pretzel:-2,3,9", "22(S), 67/3(NI), 23(S), 24(T)", 2),
    ("pretzel:-2,3,11", "26(S), 105/4(NI), 27(S), 28(T)", 2),
    ("pretzel:-2,3,-3", "-8/3(NI), -2(S), -1(S), 0(T)", 2),
    ("pretzel:-2,3,-5", "-32/5(NI), -6(S), -5(S), -4(T)", 2),
    ("pretzel:-2,3,7", "16(T), 17(S), 18(S), 37/2(T), 19(S), 20(T)", 1),
    ("pretzel:-3,3,3", "0(T), 1(S), 2(T)", 1),
    ("pretzel:-3,3,4", "0(T), 1(S), 8/5(NI)", 2),
    ("pretzel:-3,3,5", "0(T), 1(S), 4/3(NI)", 2),
    ("pretzel:-3,3,6", "0(T), 1(S), 8/7(NI)", 2),
    ("montesinos:-1/2,1/3,2/5", "8/3(NI), 3(S), 4(S), 5(S), 6(T)", 2),
    ("montesinos:-1/2,1/3,2/7", "-2(T), -1(S), 0(S), 1(S), 3/2(NI)", 2),
    ("montesinos:-1/2,1/3,2/9", "3/2(NI), 2(S), 3(S), 4(S), 5(T)", 2),
    ("montesinos:-1/2,1/3,2/11", "-3(T), -2(S), -1(S), 0(T)", 1),
    ("montesinos:-1/2,1/5,2/5", "32/5(NI), 7(S), 8(S), 9(T)", 2),
    ("montesinos:-1/2,1/7,2/5", "72/7(NI), 11(S), 12(T)", 2),
    ("montesinos:-2/3,1/3,2/5", "-6(T), -5(S), -4(T)", 1),
    ("pretzel:-3,3,7", "0(T), 1(T)", 1),
    ("montesinos:-2/3,1/3,1/4", "12(T), 13(T)", 1),
]


def sl(text: str) -> Slope:
    return Slope.parse(text)


def criterion_1() -> None:
    start = time.perf_counter()
    for desc, expected, _ in ALTERNATING_CASES + MONTESINOS_CASES:
        got = family_dataset(parse_family(desc)).table()
        assert got == expected, (desc, got, expected)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"{elapsed:.2f}s"


def criterion_2() -> None:
    for desc, _, case in ALTERNATING_CASES + MONTESINOS_CASES:
        d = family_dataset(parse_family(desc)).to_slope_dataset()
        v2 = check_conj6(d)
        assert v2.holds and v2.case_id == case, (desc, str(v2), case)
        assert check_conj1(d).holds, desc


def criterion_3() -> None:
    start = time.perf_counter()
    rows, n = set(), 0
    for w, v, u in itertools.product(range(-10, 11), repeat=3):
        if not in_claim1_range(w, v, u):
            continue
        simple = claim1_normalize(w, v, u)
        assert simple.is_simple, (w, v, u)
        assert cf_eval(simple) == matrix_eval([2 * w, v, 2 * u]), (w, v, u)
        rows.add(claim1_row(w, v, u))
        n += 1
    elapsed = time.perf_counter() - start
    assert n > 2000, n
    assert rows == {label for label, _, _ in CLAIM1_ROWS} and len(rows) == 10
    assert elapsed < 5.0, f"{elapsed:.2f}s"


def criterion_4() -> None:
    for w in range(2, 11):
        for u in [*range(-10, -2), *range(2, 11)]:
            a = cf_eval(ContFrac.of(2 * w + 1, 2 * u + 1))
            b = cf_eval(ContFrac.of(2 * w, 1, 2 * (-u - 1)))
            c = cf_eval(ContFrac.of(2 * (w + 1), -1, -2 * u))
            assert a == b == c == matrix_eval([2 * w + 1, 2 * u + 1]), (w, u)


def criterion_5() -> None:
    recs = {r.name: r for r in mini_census()}
    expected = {"v0319": (-1, -64), "v1359": (-1, 58)}
    for name, (eps, c) in expected.items():
        rec = recs[name]
        t = rec.transform()
        assert (t.epsilon, t.offset) == (eps, c), (name, t)
        for snap, std in zip(rec.snappy_slopes, rec.std_slopes):
            assert apply_transform(t, snap.slope) == std.slope, (name, snap, std)
        d = record_to_dataset(rec, "snappy")
        v1, v2 = check_conj1(d), check_conj6(d)
        assert v1.holds and v2.holds, (name, str(v1), str(v2))
        if name == "v0319":
            assert v1.witnesses == (sl("-2"), sl("14/3"))
            assert v2.witnesses == (sl("-2"), sl("2/3"))
        else:
            toroidal = {e.slope for e in d.exceptional if e.tag is SlopeTag.TOROIDAL}
            for v in (v1, v2):
                b1, b2 = v.witnesses
                assert b2 == sl("1") and b2 in toroidal, (name, str(v))
                assert b1 in {sl("-5/2"), sl("-2/3")}, (name, str(v))


def criterion_6() -> None:
    rec = {r.name: r for r in mini_census()}["s682"]
    d = record_to_dataset(rec, "snappy")
    v = check_conj6(d)
    assert v.holds and v.case_id == 3 and v.witnesses == (sl("-1/3"), sl("-1/3")), str(v)
    rep = question4_probe(d)
    assert rep.single_witness == sl("-1/3") and not rep.counterexample_candidate


def _grid(lo: int, hi: Fraction):
    x = Fraction(lo)
    while x <= hi:
        yield x
        x += Fraction(1, 4)


def criterion_7() -> None:
    # Smallest gaps on the quarter-integer lattice that exceed the margins:
    # n - r_M = 5/2 + 1/4 with n = 3, and n/2 - r_M = 1 + 1/4 with n = 5.
    # The width grows with the gap, so these are the tightest instances.
    start = time.perf_counter()
    r_int, r_half = Fraction(1, 4), Fraction(5, 4)
    assert 3 - r_int > Fraction(5, 2) and Fraction(5, 2) - r_half > 1
    points = 0
    for s in _grid(4, Fraction(20)):
        assert finite_norm_bound(s) <= 3 * s, s
        for m in _grid(0, 3 * s):
            if m < s:
                continue
            for t in _grid(0, 3 * s):
                if t < s:
                    continue
                assert lattice_contradiction(NormData(s, m, t, r_int, 3)), (s, m, t)
                assert lattice_contradiction(NormData(s, m, t, r_half, 5, Parity.HALF_INTEGER)), (s, m, t)
                points += 1
    elapsed = time.perf_counter() - start
    assert points > 500_000, points
    for k in range(4, 200):
        assert max(2 * k, k + 8) <= 3 * k
    assert elapsed < 30.0, f"{elapsed:.1f}s"


def criterion_8() -> None:
    slopes = ht_boundary_slopes(Fraction(2, 5))
    target = {sl("-4"), sl("0"), sl("4")}
    assert slopes == target or {-s for s in slopes} == target
    fig8 = family_dataset(parse_family("figure8"))
    assert {e.slope for e in fig8.exceptional if e.is_toroidal} == target
    assert all(s.is_integer and s.numerator % 2 == 0 for s in slopes)
    r, cf = all_even_expansion(Fraction(2, 5))
    assert all(a % 2 == 0 for a in cf.terms)
    even = [s for r2, cf2, s in expansion_slopes(Fraction(2, 5)) if (r2, cf2) == (r, cf)]
    assert even == [sl("0")], even


def criterion_9() -> None:
    for m in range(-20, 21):
        assert amphicheiral_bound(m) == (abs(m) <= 4), m
    fig8 = family_dataset(parse_family("figure8"))
    ints = [e.slope for e in fig8.exceptional if e.slope.is_integer]
    assert len(ints) == 9 == 2 * 4 + 1
    assert max(abs(s.numerator) for s in ints) == 4


def criterion_10() -> None:
    base = family_dataset(parse_family("link:[3,-3]"))
    for n in range(4, 9):
        ds = torti_rational_slopes(Fraction(3, 8), n)
        assert ds.table() == base.table(), (n, ds.table())
    f = cf_eval(ContFrac.of(5, 5))
    lk = schubert_linking(f.denominator, f.numerator)
    comp = family_dataset(parse_family("link:[5,5]"))
    for n in range(4, 9):
        ds = torti_rational_slopes(f, n)
        shift = n * lk * lk
        got = [(e.slope.value, e.tag) for e in ds.exceptional]
        want = [(e.slope.value + shift, e.tag) for e in comp.exceptional]
        assert got == want, (n, got, want)


CRITERIA = {
    1: ("family tables match printed lists", criterion_1),
    2: ("conjecture verdicts and case numbers", criterion_2),
    3: ("Claim 1 rows by exact value", criterion_3),
    4: ("identity chain for [2w+1, 2u+1]", criterion_4),
    5: ("v0319 and v1359 transforms and witnesses", criterion_5),
    6: ("s682 single witness", criterion_6),
    7: ("norm lattice grid", criterion_7),
    8: ("Hatcher-Thurston slopes of 2/5", criterion_8),
    9: ("amphicheiral bound", criterion_9),
    10: ("torti-rational transfer", criterion_10),
}

RESULTS: dict[int, tuple[bool, str]] = {}


def run_criterion(number: int) -> tuple[bool, str]:
    _, fn = CRITERIA[number]
    try:
        fn()
    except AssertionError as exc:
        RESULTS[number] = (False, repr(exc.args[0]) if exc.args else "assertion failed")
    else:
        RESULTS[number] = (True, "")
    return RESULTS[number]


def summary_lines() -> list[str]:
    lines = []
    for number in sorted(RESULTS):
        ok, detail = RESULTS[number]
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {CRITERIA[number][0]}"
        lines.append(line + (f" ({detail})" if detail else ""))
    return lines


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = run_criterion(number)
    assert ok, detail


def main() -> int:
    for number in sorted(CRITERIA):
        run_criterion(number)
    print("\n".join(summary_lines()))
    return 0 if all(ok for ok, _ in RESULTS.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
