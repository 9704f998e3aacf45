import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dsskit.arithmetic import PointClass, Side
from dsskit.contfrac import ContinuedFraction, from_fraction
from dsskit.curve import GridPoint
from dsskit.evolution import (
    OctantExit,
    cross_check_arithmetic,
    evolution_event,
    evolve_coefficients,
    evolve_moves,
    evolve_slope,
    is_split,
)
from dsskit.arithmetic import recognize_points
from dsskit.figures import reachable
from dsskit.stern_brocot import cf_to_path
from dsskit.verify import prop1_random

from conftest import path_of_word

U, W = PointClass.UPPER_WEAK, PointClass.LOWER_WEAK
LEFT, RIGHT = Side.LEFT, Side.RIGHT

EVEN = ContinuedFraction((0, 2, 3))
ODD = ContinuedFraction((0, 2, 3, 3))


@pytest.mark.parametrize("cf,typ,side,coeffs", [
    (EVEN, U, LEFT, [0, 2, 2, 1, 4]),
    (EVEN, U, RIGHT, [0, 2, 3, 4]),
    (EVEN, W, LEFT, [0, 2, 3, 4]),
    (EVEN, W, RIGHT, [0, 2, 2, 1, 4]),
    (ODD, U, LEFT, [0, 2, 3, 3, 4]),
    (ODD, U, RIGHT, [0, 2, 3, 2, 1, 4]),
    (ODD, W, LEFT, [0, 2, 3, 2, 1, 4]),
    (ODD, W, RIGHT, [0, 2, 3, 3, 4]),
])
def test_table_cells(cf, typ, side, coeffs):
    assert evolve_coefficients(cf, 4, typ, side) == coeffs


def test_split_cells():
    assert is_split(EVEN, U, LEFT) and is_split(EVEN, W, RIGHT)
    assert not is_split(EVEN, U, RIGHT) and not is_split(EVEN, W, LEFT)
    assert is_split(ODD, U, RIGHT) and is_split(ODD, W, LEFT)


def test_count_one_is_canonicalized():
    # [0, 2, 3, 1] = [0, 2, 4]
    assert evolve_slope(EVEN, 1, U, RIGHT).coeffs == (0, 2, 4)
    assert evolve_slope(EVEN, 1, U, LEFT).coeffs == (0, 2, 2, 2)


def test_flat_slope():
    flat = from_fraction(0, 1)
    assert evolve_slope(flat, 3, U, RIGHT).coeffs == (0, 3)
    with pytest.raises(ValueError):
        evolve_slope(flat, 3, U, LEFT)


def test_slope_one_can_leave_the_octant():
    one = from_fraction(1, 1)
    with pytest.raises(OctantExit) as exc:
        evolve_slope(one, 2, U, RIGHT)
    assert exc.value.value == Fraction(3, 2)
    assert evolve_slope(one, 2, U, LEFT).fraction() == Fraction(2, 3)


def test_bad_counts():
    with pytest.raises(ValueError):
        evolve_slope(EVEN, 0, U, RIGHT)
    with pytest.raises(ValueError):
        evolve_slope(EVEN, 1, PointClass.INTERIOR, RIGHT)


def test_reachable_from_one_half():
    r = reachable(from_fraction(1, 2))
    smaller = [Fraction(1, 3), Fraction(2, 5), Fraction(3, 7)]
    larger = [Fraction(2, 3), Fraction(3, 5), Fraction(4, 7)]
    assert r[U, LEFT] == r[W, RIGHT] == smaller
    assert r[U, RIGHT] == r[W, LEFT] == larger


fractions = st.integers(2, 80).flatmap(lambda q: st.tuples(st.integers(1, q - 1), st.just(q))).filter(
    lambda t: math.gcd(*t) == 1)
cells = st.tuples(st.sampled_from([U, W]), st.sampled_from([LEFT, RIGHT]), st.integers(1, 6))


@given(fractions, cells)
def test_moves_extend_the_path(t, cell):
    typ, side, k = cell
    before = from_fraction(*t)
    after = evolve_slope(before, k, typ, side)
    moves = evolve_moves(before, k, typ, side)
    assert cf_to_path(after) == cf_to_path(before) + moves
    # depth stays, or grows by one or two
    assert 0 <= after.depth - before.depth <= 2
    # upper-left and lower-right additions decrease the slope
    if (typ is U) == (side is LEFT):
        assert after.fraction() < before.fraction()
    else:
        assert after.fraction() > before.fraction()


def test_event_record():
    ev = evolution_event(from_fraction(1, 2), 1, U, RIGHT)
    assert ev.cell == ("odd", "upper_weakly_exterior", "right")
    assert ev.after.fraction() == Fraction(2, 3)
    assert ev.appended_moves.moves() == "R"


def test_cross_check_on_the_scripted_example():
    pts = path_of_word("0010010")
    st = recognize_points(pts)
    cc = cross_check_arithmetic(st, RIGHT, st.last.step(1))
    assert cc.agree and cc.arithmetic_slope == Fraction(3, 5)


def test_cross_check_rejects_interior_points():
    st = recognize_points(path_of_word("0010010"))
    with pytest.raises(ValueError):
        cross_check_arithmetic(st, RIGHT, st.last.step(0))


def test_random_cross_check_small():
    res = prop1_random(800, seed=11)
    assert res.passed, res.examples
    assert res.details["min_per_cell"] == 100
