"""Combinatoric prediction of slope changes during recognition.

Adding a weakly exterior point changes the slope ``[0, u1, ..., un]`` into
either ``[0, u1, ..., un, k]`` ("extend") or ``[0, u1, ..., un - 1, 1, k]``
("split"), where k is the pattern count (upper point) or reversed-pattern
count (lower point) of the segment before the addition.  Which form applies
depends on the depth parity, the point type and the side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arithmetic import DssState, PointClass, Side, extend, step_code
from .contfrac import ContinuedFraction, canonicalize, evaluate, from_fraction
from .stern_brocot import L, R, SbPath, cf_to_path


class OctantExit(ValueError):
    """The predicted slope exceeds 1 (only possible from the slope 1/1)."""

    def __init__(self, value: Fraction):
        super().__init__(f"predicted slope {value} leaves the first octant")
        self.value = value


def _check(count: int, point_type: PointClass):
    if count < 1:
        raise ValueError("count must be at least 1: a leaning point of the same type precedes a weakly exterior point")
    if not point_type.weakly_exterior:
        raise ValueError(f"{point_type} is not a weakly exterior type")


def is_split(before: ContinuedFraction, point_type: PointClass, side: Side) -> bool:
    upper = point_type is PointClass.UPPER_WEAK
    left = side is Side.LEFT
    return upper == left if before.is_even else upper != left


def evolve_coefficients(before: ContinuedFraction, count: int, point_type: PointClass,
                        side: Side) -> list[int]:
    """Raw table entry; may hold a zero or a trailing 1."""
    _check(count, point_type)
    u = list(before.coeffs)
    split = is_split(before, point_type, side)
    if before.depth == 0:
        if split:
            raise ValueError(f"{point_type.value} on the {side.value} cannot occur on a flat segment")
        return [0, count]
    if split:
        return u[:-1] + [u[-1] - 1, 1, count]
    return u + [count]


def evolve_value(before: ContinuedFraction, count: int, point_type: PointClass, side: Side) -> Fraction:
    return evaluate(evolve_coefficients(before, count, point_type, side))


def evolve_slope(before: ContinuedFraction, count: int, point_type: PointClass,
                 side: Side) -> ContinuedFraction:
    raw = evolve_coefficients(before, count, point_type, side)
    if any(u < 1 for u in raw[1:]):
        v = evaluate(raw)
        if v > 1:
            raise OctantExit(v)
        return from_fraction(v.numerator, v.denominator)
    return canonicalize(raw)


def evolve_moves(before: ContinuedFraction, count: int, point_type: PointClass, side: Side) -> SbPath:
    """Moves appended to the Stern-Brocot path of ``before``.

    Upper-left and lower-right additions descend into the left subtree
    (``L R^(k-1)``); the two other cases into the right one (``R L^(k-1)``).
    """
    _check(count, point_type)
    if before.depth == 0:
        raise ValueError("the flat slope has no Stern-Brocot path")
    first = L if (point_type is PointClass.UPPER_WEAK) == (side is Side.LEFT) else R
    other = R if first == L else L
    return SbPath(((first, 1),) + (((other, count - 1),) if count > 1 else ()))


@dataclass(frozen=True)
class EvolutionEvent:
    before: ContinuedFraction
    count: int
    point_type: PointClass
    side: Side
    after_value: Fraction
    after: ContinuedFraction | None
    appended_moves: SbPath | None

    @property
    def cell(self) -> tuple[str, str, str]:
        return self.before.parity, self.point_type.value, self.side.value


def evolution_event(before: ContinuedFraction, count: int, point_type: PointClass,
                    side: Side) -> EvolutionEvent:
    value = evolve_value(before, count, point_type, side)
    try:
        after = evolve_slope(before, count, point_type, side)
    except OctantExit:
        after = None
    moves = evolve_moves(before, count, point_type, side) if before.depth else None
    return EvolutionEvent(before, count, point_type, side, value, after, moves)


@dataclass(frozen=True)
class CrossCheck:
    event: EvolutionEvent
    arithmetic_slope: Fraction
    state_after: DssState

    @property
    def predicted_slope(self) -> Fraction:
        return self.event.after_value

    @property
    def agree(self) -> bool:
        return self.predicted_slope == self.arithmetic_slope


def cross_check_arithmetic(state: DssState, side: Side, next_point) -> CrossCheck:
    """Compare the arithmetic update with the combinatoric prediction.

    Both are expressed in the first-octant frame of the segment before the
    addition, so a prediction above 1 is compared as a plain rational.
    """
    framed = state.accepting(step_code(state, side, next_point))
    if framed is None:
        raise ValueError("next point uses a third step direction")
    cls = framed.octant_class(next_point)
    if not cls.weakly_exterior:
        raise ValueError(f"next point is {cls.value}, not weakly exterior")
    view = framed.normalized()
    before = from_fraction(view.chars.a, view.chars.b)
    count = view.delta if cls is PointClass.UPPER_WEAK else view.delta_prime
    event = evolution_event(before, count, cls, side)
    res = extend(framed, side, next_point)
    if not res.accepted:
        raise RuntimeError("weakly exterior point was rejected by the recognizer")
    x, y = framed.octant_coords(res.state.direction())
    return CrossCheck(event, Fraction(y, x), res.state)
