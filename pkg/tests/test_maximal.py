import json
import pathlib
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dsskit.arithmetic import PointClass, brute_force_minimal_characteristics, to_local
from dsskit.contfrac import ContinuedFraction, convergents, from_fraction
from dsskit.jsonio import rational
from dsskit.curve import DigitalCurve, GridPoint, digitize_circle_boundary, trace_standard_line
from dsskit.maximal import (
    back,
    common_parts,
    delta_z_bounds,
    delta_z_closed_form,
    differenced_interval,
    extract_maximal_segments,
    front,
    slope_bounds,
    slope_bounds_for,
    tangent_report,
)

from conftest import binary_words

FIXTURES = json.loads((pathlib.Path(__file__).parent / "fixtures" / "slope_cells.json").read_text())
U, W = PointClass.UPPER_WEAK, PointClass.LOWER_WEAK


def is_dss(curve, i, j) -> bool:
    """Quadratic oracle: steps within two adjacent directions and a brute-force band fits."""
    codes = {curve.code(k) for k in range(i, j)}
    if len(codes) == 1:
        return True
    frame = next((c for c in codes if (c + 1) % 4 in codes), None)
    if len(codes) > 2 or frame is None:
        return False
    pts = [to_local(curve.point(k), frame) for k in range(i, j + 1)]
    return brute_force_minimal_characteristics(pts) is not None


def oracle_segments(curve):
    """Maximal segments by both characterizations of the definition."""
    n = len(curve)
    starts = range(n) if curve.closed else range(n - 1)

    def ok(i, j):
        if curve.closed:
            return j - i + 1 <= n and is_dss(curve, i, j)
        return 0 <= i and j <= n - 1 and is_dss(curve, i, j)

    first = set()
    F = {}
    for i in starts:
        j = i + 1
        while ok(i, j + 1):
            j += 1
        F[i] = j
        if not ok(i - 1, j):
            first.add((i, j))
    second = set()
    for i, j in F.items():
        b = j - 1
        while ok(b - 1, j):
            b -= 1
        if curve.closed:
            b_norm, shift = b % n, b - b % n
            if b_norm == i % n and F[b_norm] == j - shift:
                second.add((i, j))
        elif b == i:
            second.add((i, j))
    return first, second


def extracted(curve):
    return {(m.i, m.j) for m in extract_maximal_segments(curve)}


def test_characterizations_agree_on_short_words():
    for w in binary_words(9, 2):
        c = DigitalCurve(GridPoint(0, 0), w)
        one, two = oracle_segments(c)
        assert one == two == extracted(c), w


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=2, max_size=14))
def test_extraction_matches_oracle_on_any_open_curve(codes):
    c = DigitalCurve(GridPoint(0, 0), tuple(codes))
    one, two = oracle_segments(c)
    assert one == two == extracted(c)


@pytest.mark.parametrize("radius", [2, 3, 4, 5, 6])
def test_extraction_matches_oracle_on_circles(radius):
    c = digitize_circle_boundary(radius)
    one, two = oracle_segments(c)
    assert one == two == extracted(c)


def test_front_and_back():
    c = DigitalCurve(GridPoint(0, 0), tuple(int(x) for x in "0001100"))
    r = front(c, 0)
    assert r.index == 4 and not r.exhausted
    assert back(c, 7).index == 4 and back(c, 7).exhausted is False
    assert front(c, 4).exhausted


def test_straight_line_is_one_segment():
    c = trace_standard_line(3, 8, 0, 4)
    segs = extract_maximal_segments(c)
    assert [(m.i, m.j) for m in segs] == [(0, len(c) - 1)]
    assert common_parts(c, segs) == []


def test_circle_cover_is_complete_and_cyclic():
    c = digitize_circle_boundary(5)
    rep = tangent_report(c)
    assert all(rep.cover)
    n = len(c)
    last = rep.segments[-1]
    assert last.j >= n  # the final segment wraps past the start
    assert len(rep.cover[0]) >= 2


def test_common_part_ends_share_a_type_on_short_words():
    for w in binary_words(11, 2):
        c = DigitalCurve(GridPoint(0, 0), w)
        for cp in common_parts(c, extract_maximal_segments(c)):
            assert cp.endpoint_type is not None, (w, cp.i, cp.j)


def test_bound_cells_odd_upper():
    b = slope_bounds_for(from_fraction(1, 2), U, 1, 0)
    assert b.forward == (Fraction(3, 5), Fraction(1))
    assert b.backward == (Fraction(0), Fraction(2, 5))


def test_bound_cells_even_lower():
    b = slope_bounds_for(from_fraction(2, 3), W, 0, 2)
    assert b.forward == (Fraction(3, 5), Fraction(7, 11))
    assert b.backward == (Fraction(7, 10), Fraction(3, 4))


def test_bounds_need_a_pattern():
    with pytest.raises(ValueError):
        slope_bounds_for(from_fraction(1, 2), U, 0, 1)
    with pytest.raises(ValueError):
        slope_bounds_for(from_fraction(1, 2), PointClass.INTERIOR, 1, 1)


even_cfs = st.lists(st.integers(1, 6), min_size=2, max_size=6).filter(
    lambda u: len(u) % 2 == 0 and u[-1] >= 2).map(lambda u: ContinuedFraction((0, *u)))


@given(even_cfs, st.integers(1, 8))
def test_closed_form_matches_differenced_cells(cf, d):
    table = convergents(cf)
    q, qm = table[-1][1], table[-2][1]
    tight, coarse = delta_z_closed_form(d, q, qm)
    assert tight == differenced_interval(slope_bounds_for(cf, W, 0, d))
    assert coarse[0] <= tight[0] and tight[1] <= coarse[1]


def test_delta_z_by_analogy_is_labelled():
    kinds = set()
    for r in range(9, 25):
        c = digitize_circle_boundary(r)
        kinds |= {delta_z_bounds(cp).derived_by_analogy
                  for cp in common_parts(c, extract_maximal_segments(c)) if cp.within_octant}
    assert kinds == {True, False}


@pytest.mark.parametrize("case", FIXTURES["attained_endpoints"],
                         ids=lambda c: f"{c['parity']}-{c['endpoint_type'][:5]}-{c['segment']}")
def test_each_cell_endpoint_is_attained(case):
    c = DigitalCurve(GridPoint(0, 0), tuple(int(x) for x in case["word"]))
    cp = next(cp for cp in common_parts(c, extract_maximal_segments(c))
              if (cp.i, cp.j) == (case["i"], case["j"]))
    b = slope_bounds(cp)
    assert (b.parity, b.endpoint_type.value) == (case["parity"], case["endpoint_type"])
    iv, z = ((b.forward, cp.front_slope) if case["segment"] == "forward" else (b.backward, cp.back_slope))
    assert z == Fraction(case["slope"])
    assert z == iv[0 if case["endpoint"] == "min" else 1]


@pytest.mark.parametrize("case", FIXTURES["nonconvex_counterexamples"], ids=lambda c: c["slope"])
def test_containment_can_fail_off_convex_shapes(case):
    """Recorded witnesses where a maximal segment's slope leaves its cell."""
    c = DigitalCurve(GridPoint(0, 0), tuple(int(x) for x in case["word"]))
    cp = next(cp for cp in common_parts(c, extract_maximal_segments(c))
              if (cp.i, cp.j) == (case["i"], case["j"]))
    assert cp.within_octant and cp.endpoint_type is not None
    b = slope_bounds(cp)
    iv, z = ((b.forward, cp.front_slope) if case["segment"] == "forward" else (b.backward, cp.back_slope))
    assert [rational(x) for x in iv] == case["bounds"]
    assert z == Fraction(case["slope"]) and not b.contains(iv, z)


def test_octant_crossings_on_a_circle():
    c = digitize_circle_boundary(12)
    outside = [cp for cp in common_parts(c, extract_maximal_segments(c)) if not cp.within_octant]
    # one common part at each axis crossing and each diagonal
    assert len(outside) == 8
    assert sorted(str(cp.cf) for cp in outside) == ["[0,1]"] * 4 + ["[0]"] * 4


def test_random_convex_polygons_keep_containment():
    """Digitized disks off the lattice centre behave like the centred corpus."""
    rng = random.Random(5)
    for _ in range(6):
        r = rng.randint(8, 30)
        c = digitize_circle_boundary(r, (rng.randint(-9, 9), rng.randint(-9, 9)))
        for cp in common_parts(c, extract_maximal_segments(c)):
            if cp.within_octant:
                b = slope_bounds(cp)
                assert b.contains(b.forward, cp.front_slope)
                assert b.contains(b.backward, cp.back_slope)
