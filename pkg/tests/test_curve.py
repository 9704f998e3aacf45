import pytest
from hypothesis import given
from hypothesis import strategies as st

from dsskit.curve import (
    _AHEAD,
    ChainCodeError,
    DigitalCurve,
    GridPoint,
    code_of,
    curve_from_points,
    digitize_circle_boundary,
    disk_contains,
    parse_chain_code,
    serialize_chain_code,
    trace_standard_line,
)
from dsskit.contfrac import from_fraction
from dsskit.patterns import pattern_word


def test_steps_and_codes():
    p = GridPoint(2, 3)
    assert [p.step(c) for c in range(4)] == [(3, 3), (2, 4), (1, 3), (2, 2)]
    assert [code_of(*d) for d in ((1, 0), (0, 1), (-1, 0), (0, -1))] == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        code_of(1, 1)


def test_open_curve_indexing():
    c = DigitalCurve(GridPoint(0, 0), (0, 1, 0))
    assert len(c) == 4
    assert c.point(3) == (2, 1)
    assert c.word() == "010"
    with pytest.raises(IndexError):
        c.point(4)
    assert not c.has_index(-1)


def test_closed_curve_wraps():
    c = DigitalCurve(GridPoint(0, 0), (0, 1, 2, 3), closed=True)
    assert len(c) == 4
    assert c.point(5) == c.point(1) == (1, 0)
    assert c.point(-1) == (0, 1)


def test_closed_curve_must_close():
    with pytest.raises(ChainCodeError):
        DigitalCurve(GridPoint(0, 0), (0, 1), closed=True)
    with pytest.raises(ChainCodeError):
        DigitalCurve(GridPoint(0, 0), (0, 4))


def test_curve_from_points_rejects_jumps():
    assert curve_from_points([(0, 0), (1, 0), (1, 1)]).codes == (0, 1)
    with pytest.raises(ChainCodeError):
        curve_from_points([(0, 0), (2, 0)])


def test_parse_with_comments():
    c = parse_chain_code("# a comment\n3 -2 open\n# another\n0011\n")
    assert c.start == (3, -2) and c.codes == (0, 0, 1, 1) and not c.closed


@pytest.mark.parametrize("text", ["", "0 0\n01\n", "0 0 maybe\n01\n", "a b open\n01\n", "0 0 open\n0151\n"])
def test_parse_rejects(text):
    with pytest.raises(ChainCodeError):
        parse_chain_code(text)


@given(st.integers(-50, 50), st.integers(-50, 50), st.lists(st.integers(0, 3), max_size=40))
def test_roundtrip_open(x, y, codes):
    c = DigitalCurve(GridPoint(x, y), tuple(codes))
    assert parse_chain_code(serialize_chain_code(c)) == c


def test_roundtrip_closed():
    c = digitize_circle_boundary(7, (3, -4))
    assert parse_chain_code(serialize_chain_code(c)) == c


def test_traced_line_of_the_odd_example():
    c = trace_standard_line(10, 23, 0, 2)
    word = c.word()
    assert len(word) == 66 and word.count("1") == 20 and word.count("0") == 46
    assert word == pattern_word(from_fraction(10, 23)).word * 2
    for x, y in c.points():
        assert 0 <= 10 * x - 23 * y < 33


def test_traced_line_starts_on_upper_leaning_point():
    c = trace_standard_line(3, 8, 5, 1)
    assert 3 * c.start.x - 8 * c.start.y == 5


@pytest.mark.parametrize("args", [(3, 2, 0, 1), (2, 4, 0, 1), (1, 0, 0, 1), (1, 2, 0, 0)])
def test_traced_line_rejects(args):
    with pytest.raises(ValueError):
        trace_standard_line(*args)


def _pixel_perimeter(radius, center):
    """Number of (inside, outside) 4-neighbour pixel pairs."""
    n = 0
    for i in range(center[0] - radius - 1, center[0] + radius + 2):
        for j in range(center[1] - radius - 1, center[1] + radius + 2):
            if disk_contains(radius, GridPoint(*center), i, j):
                for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    n += not disk_contains(radius, GridPoint(*center), i + di, j + dj)
    return n


@pytest.mark.parametrize("radius", [2, 3, 5, 8, 13, 21])
def test_circle_boundary_separates_inside_from_outside(radius):
    center = (1, -2)
    c = digitize_circle_boundary(radius, center)
    g = GridPoint(*center)
    assert c.closed
    assert len(c.codes) == _pixel_perimeter(radius, center)
    for k, h in enumerate(c.codes):
        v = c.point(k)
        (lx, ly), (rx, ry) = _AHEAD[h]
        assert disk_contains(radius, g, v.x + lx, v.y + ly)
        assert not disk_contains(radius, g, v.x + rx, v.y + ry)


def test_circle_is_counterclockwise():
    pts = digitize_circle_boundary(6).points()
    area2 = sum(p.x * q.y - q.x * p.y for p, q in zip(pts, pts[1:] + pts[:1]))
    assert area2 > 0


def test_small_circle_lengths():
    assert len(digitize_circle_boundary(2).codes) == 20
    assert len(digitize_circle_boundary(5).codes) == 44
    with pytest.raises(ValueError):
        digitize_circle_boundary(1)
