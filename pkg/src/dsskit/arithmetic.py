"""Arithmetic DSS recognition on standard lines, one point at a time.

A :class:`DssState` keeps its characteristics in a *local quadrant frame*:
the curve is rotated by ``frame`` quarter turns so that its two step
directions become (1, 0) and (0, 1).  In that frame ``0 <= a`` and ``0 <= b``
but ``a > b`` is allowed; :meth:`DssState.normalized` applies the extra
diagonal swap that brings the slope into the first octant, which is where
continued fractions and pattern counts live.  Leaning points and endpoints are
stored in global coordinates.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .curve import STEPS, GridPoint, code_of


class PointClass(enum.Enum):
    INTERIOR = "interior"
    UPPER_WEAK = "upper_weakly_exterior"
    LOWER_WEAK = "lower_weakly_exterior"
    STRONG = "strongly_exterior"

    @property
    def weakly_exterior(self) -> bool:
        return self in (PointClass.UPPER_WEAK, PointClass.LOWER_WEAK)

    def swapped(self) -> "PointClass":
        if self is PointClass.UPPER_WEAK:
            return PointClass.LOWER_WEAK
        if self is PointClass.LOWER_WEAK:
            return PointClass.UPPER_WEAK
        return self


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class Characteristics(NamedTuple):
    a: int
    b: int
    mu: int


def remainder(chars: Characteristics, p: tuple[int, int]) -> int:
    return chars.a * p[0] - chars.b * p[1]


def classify_remainder(r: int, chars: Characteristics) -> PointClass:
    a, b, mu = chars
    if mu <= r < mu + a + b:
        return PointClass.INTERIOR
    if r == mu - 1:
        return PointClass.UPPER_WEAK
    if r == mu + a + b:
        return PointClass.LOWER_WEAK
    return PointClass.STRONG


def to_local(p: tuple[int, int], frame: int) -> tuple[int, int]:
    """Rotate ``p`` clockwise by ``frame`` quarter turns."""
    x, y = p
    for _ in range(frame % 4):
        x, y = y, -x
    return x, y


def from_local(p: tuple[int, int], frame: int) -> tuple[int, int]:
    x, y = p
    for _ in range(frame % 4):
        x, y = -y, x
    return x, y


@dataclass(frozen=True)
class DssState:
    """Minimal characteristics and leaning points of a recognized segment.

    ``ul``/``ur`` are the first and last upper leaning points along the curve,
    ``ll``/``lr`` the first and last lower ones.
    """

    a: int
    b: int
    mu: int
    frame: int
    first: GridPoint
    last: GridPoint
    ul: GridPoint
    ur: GridPoint
    ll: GridPoint
    lr: GridPoint
    first_index: int = 0
    last_index: int = 1

    @property
    def chars(self) -> Characteristics:
        return Characteristics(self.a, self.b, self.mu)

    @property
    def is_flat(self) -> bool:
        return self.a == 0 or self.b == 0

    @property
    def n_points(self) -> int:
        return self.last_index - self.first_index + 1

    def local(self, p) -> tuple[int, int]:
        return to_local(p, self.frame)

    def remainder(self, p) -> int:
        x, y = to_local(p, self.frame)
        return self.a * x - self.b * y

    def classify(self, p) -> PointClass:
        return classify_remainder(self.remainder(p), self.chars)

    def alphabet(self) -> frozenset[int]:
        if self.a == 0:
            return frozenset({self.frame})
        if self.b == 0:
            return frozenset({(self.frame + 1) % 4})
        return frozenset({self.frame, (self.frame + 1) % 4})

    def _count(self, p, q) -> int:
        (px, py), (qx, qy) = self.local(p), self.local(q)
        if self.b:
            return (qx - px) // self.b
        return (qy - py) // self.a

    @property
    def delta(self) -> int:
        """Number of patterns, in the local quadrant frame."""
        return self._count(self.ul, self.ur)

    @property
    def delta_prime(self) -> int:
        return self._count(self.ll, self.lr)

    @property
    def swapped(self) -> bool:
        """True when the first-octant view exchanges the two axes."""
        return self.a > self.b

    def normalized(self) -> "NormalizedView":
        if not self.swapped:
            return NormalizedView(Characteristics(self.a, self.b, self.mu), self.delta, self.delta_prime)
        a, b, mu = self.b, self.a, -self.mu - self.a - self.b + 1
        return NormalizedView(Characteristics(a, b, mu), self.delta_prime, self.delta)

    def octant_coords(self, v: tuple[int, int]) -> tuple[int, int]:
        """Coordinates of a global vector in the first-octant frame of this segment."""
        x, y = to_local(v, self.frame)
        return (y, x) if self.swapped else (x, y)

    def octant_class(self, p) -> PointClass:
        c = self.classify(p)
        return c.swapped() if self.swapped else c

    def direction(self) -> tuple[int, int]:
        """Primitive direction vector (b, a) mapped back to global coordinates."""
        return from_local((self.b, self.a), self.frame)

    def slope(self) -> Fraction:
        """First-octant slope a/b."""
        n = self.normalized().chars
        return Fraction(n.a, n.b)

    def accepting(self, code: int) -> "DssState | None":
        """This state in a frame whose alphabet contains ``code``, or None.

        Only single-direction (flat) states can change frame: a run of code s
        is (0, 1) in frame s and (1, 0) in frame s - 1.
        """
        if not self.is_flat:
            return self if code in (self.frame, (self.frame + 1) % 4) else None
        s = next(iter(self.alphabet()))
        if code == s or code == (s + 1) % 4:
            frame, a, b = s, 0, 1
        elif code == (s - 1) % 4:
            frame, a, b = (s - 1) % 4, 1, 0
        else:
            return None
        if frame == self.frame:
            return self
        x, y = to_local(self.first, frame)
        mu = a * x - b * y
        return DssState(a, b, mu, frame, self.first, self.last, self.ul, self.ur,
                        self.ll, self.lr, self.first_index, self.last_index)


class NormalizedView(NamedTuple):
    chars: Characteristics
    delta: int
    delta_prime: int


class ExtendStatus(enum.Enum):
    ACCEPTED = "accepted"
    STRONGLY_EXTERIOR = "rejected_strongly_exterior"
    ALPHABET = "rejected_alphabet"


class ExtendResult(NamedTuple):
    status: ExtendStatus
    state: DssState
    point_class: PointClass | None = None

    @property
    def accepted(self) -> bool:
        return self.status is ExtendStatus.ACCEPTED


def init_state(p0, p1, first_index: int = 0) -> DssState:
    p0, p1 = GridPoint(*p0), GridPoint(*p1)
    frame = code_of(p1.x - p0.x, p1.y - p0.y)
    x, y = to_local(p0, frame)
    return DssState(0, 1, -y, frame, p0, p1, p0, p1, p0, p1, first_index, first_index + 1)


def step_code(state: DssState, side: Side, p) -> int:
    end = state.last if side is Side.RIGHT else state.first
    dx, dy = p[0] - end[0], p[1] - end[1]
    if side is Side.LEFT:
        dx, dy = -dx, -dy
    return code_of(dx, dy)


def extend(state: DssState, side: Side, p) -> ExtendResult:
    p = GridPoint(*p)
    framed = state.accepting(step_code(state, side, p))
    if framed is None:
        return ExtendResult(ExtendStatus.ALPHABET, state)
    s = framed
    a, b, mu = s.a, s.b, s.mu
    frame = s.frame
    r = s.remainder(p)
    cls = classify_remainder(r, s.chars)
    if cls is PointClass.STRONG:
        return ExtendResult(ExtendStatus.STRONGLY_EXTERIOR, state, cls)

    first, last = s.first, s.last
    ul, ur, ll, lr = s.ul, s.ur, s.ll, s.lr
    fi, li = s.first_index, s.last_index
    right = side is Side.RIGHT
    if right:
        last, li = p, li + 1
    else:
        first, fi = p, fi - 1

    if cls is PointClass.INTERIOR:
        if r == mu:
            if right:
                ur = p
            else:
                ul = p
        if r == mu + a + b - 1:
            if right:
                lr = p
            else:
                ll = p
    else:
        px, py = s.local(p)
        upper = cls is PointClass.UPPER_WEAK
        if right:
            anchor = ul if upper else ll
            vx, vy = px - s.local(anchor)[0], py - s.local(anchor)[1]
        else:
            anchor = ur if upper else lr
            ax, ay = s.local(anchor)
            vx, vy = ax - px, ay - py
        b, a = vx, vy
        if upper:
            mu = a * px - b * py
            if right:
                ur, ll = p, lr
            else:
                ul, lr = p, ll
        else:
            mu = a * px - b * py - a - b + 1
            if right:
                lr, ul = p, ur
            else:
                ll, ur = p, ul
    return ExtendResult(ExtendStatus.ACCEPTED,
                        DssState(a, b, mu, frame, first, last, ul, ur, ll, lr, fi, li), cls)


def recognize_points(points: Sequence, first_index: int = 0) -> DssState | None:
    """Recognize a point path left to right; None if it is not a DSS."""
    if len(points) < 2:
        raise ValueError("need at least two points")
    st = init_state(points[0], points[1], first_index)
    for p in points[2:]:
        res = extend(st, Side.RIGHT, p)
        if not res.accepted:
            return None
        st = res.state
    return st


def leaning_and_counts(state: DssState):
    return state.ul, state.ur, state.ll, state.lr, state.delta, state.delta_prime


def brute_force_minimal_characteristics(points: Sequence) -> Characteristics | None:
    """Exhaustive search for the minimal (a, b, mu) of a path of (1,0)/(0,1) steps.

    Every coprime (a, b) with ``b`` up to the x-extent and ``a`` up to the
    y-extent is tried; ties on a + b go to the smaller b.  Returns None when no
    standard line contains the points.
    """
    pts = [tuple(p) for p in points]
    if len(pts) < 2:
        raise ValueError("need at least two points")
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if (x1 - x0, y1 - y0) not in ((1, 0), (0, 1)):
            raise ValueError("points must form a path of (1,0) and (0,1) steps")
    span_x = pts[-1][0] - pts[0][0]
    span_y = pts[-1][1] - pts[0][1]
    best = None
    for total in range(1, span_x + span_y + 2):
        for b in range(0, min(total, span_x + 1) + 1):
            a = total - b
            if a > span_y + 1 or math.gcd(a, b) != 1:
                continue
            rs = [a * x - b * y for x, y in pts]
            lo = min(rs)
            if max(rs) - lo < a + b:
                best = Characteristics(a, b, lo)
                break
        if best is not None:
            return best
    return None


def pattern_counts_by_scan(points: Sequence, chars: Characteristics) -> tuple[int, int]:
    """(delta, delta') from counting points on the two band edges."""
    a, b, mu = chars
    rs = [a * x - b * y for x, y in points]
    n_up = sum(1 for r in rs if r == mu)
    n_low = sum(1 for r in rs if r == mu + a + b - 1)
    if n_up == 0 or n_low == 0:
        raise ValueError("no leaning point of some type; chars are not minimal for these points")
    return n_up - 1, n_low - 1


__all__ = [
    "Characteristics", "DssState", "ExtendResult", "ExtendStatus", "GridPoint", "PointClass",
    "Side", "STEPS", "brute_force_minimal_characteristics", "classify_remainder", "extend",
    "from_local", "init_state", "leaning_and_counts", "pattern_counts_by_scan",
    "recognize_points", "remainder", "to_local",
]
