"""Maximal segments, their common parts, and slope-difference bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import NamedTuple

from .arithmetic import DssState, PointClass, Side, extend, init_state
from .contfrac import ContinuedFraction, convergents, from_fraction
from .curve import DigitalCurve

INF = math.inf


class Reach(NamedTuple):
    index: int
    state: DssState
    exhausted: bool


def _seed(curve: DigitalCurve, i: int) -> DssState:
    return init_state(curve.point(i), curve.point(i + 1), i)


def _room(curve: DigitalCurve, st: DssState) -> bool:
    return not curve.closed or st.n_points < len(curve)


def grow_right(curve: DigitalCurve, st: DssState) -> Reach:
    while _room(curve, st):
        k = st.last_index + 1
        if not curve.has_index(k):
            return Reach(st.last_index, st, True)
        res = extend(st, Side.RIGHT, curve.point(k))
        if not res.accepted:
            return Reach(st.last_index, st, False)
        st = res.state
    return Reach(st.last_index, st, True)


def grow_left(curve: DigitalCurve, st: DssState) -> Reach:
    while _room(curve, st):
        k = st.first_index - 1
        if not curve.has_index(k):
            return Reach(st.first_index, st, True)
        res = extend(st, Side.LEFT, curve.point(k))
        if not res.accepted:
            return Reach(st.first_index, st, False)
        st = res.state
    return Reach(st.first_index, st, True)


def front(curve: DigitalCurve, i: int) -> Reach:
    """Largest j with ``<C_i .. C_j>`` a DSS; ``exhausted`` if the curve ran out first."""
    return grow_right(curve, _seed(curve, i))


def back(curve: DigitalCurve, j: int) -> Reach:
    return grow_left(curve, _seed(curve, j - 1))


def recognize_range(curve: DigitalCurve, i: int, j: int) -> DssState | None:
    st = _seed(curve, i)
    for k in range(i + 2, j + 1):
        res = extend(st, Side.RIGHT, curve.point(k))
        if not res.accepted:
            return None
        st = res.state
    return st


@dataclass(frozen=True)
class MaximalSegment:
    i: int
    j: int
    state: DssState

    def __len__(self):
        return self.j - self.i + 1

    def covers(self, k: int, n: int | None = None) -> bool:
        if n is None:
            return self.i <= k <= self.j
        return (k - self.i) % n <= self.j - self.i


def _shifted(st: DssState, by: int) -> DssState:
    return replace(st, first_index=st.first_index + by, last_index=st.last_index + by)


def extract_maximal_segments(curve: DigitalCurve) -> list[MaximalSegment]:
    """All maximal segments in curve order.

    Grows a segment to its front, then restarts from the back of the next
    point; each maximal segment is recognized twice in total.  On a closed
    curve segments are reported with ``0 <= i < len(curve)`` and ``j`` possibly
    past the end (indices wrap).
    """
    n = len(curve)
    if n < 2 or (curve.closed and n < 4):
        raise ValueError("curve too short for maximal segments")
    st = grow_right(curve, _seed(curve, 0)).state
    if curve.closed:
        st = grow_left(curve, st).state
    segs = [st]
    while True:
        j = st.last_index
        if not curve.closed and j == n - 1:
            break
        st = grow_left(curve, _seed(curve, j)).state
        st = grow_right(curve, st).state
        if curve.closed and st.first_index >= segs[0].first_index + n:
            break
        segs.append(st)
    out = []
    for s in segs:
        if curve.closed:
            s = _shifted(s, -(s.first_index // n) * n)
        out.append(MaximalSegment(s.first_index, s.last_index, s))
    out.sort(key=lambda m: m.i)
    return out


@dataclass(frozen=True)
class CommonPart:
    """Overlap ``<C_i .. C_j>`` of the back segment ``[B(j), j]`` and front ``[i, F(i)]``."""

    i: int
    j: int
    state: DssState
    back_segment: MaximalSegment
    front_segment: MaximalSegment
    left_class: PointClass
    right_class: PointClass

    @property
    def endpoint_type(self) -> PointClass | None:
        """Common type of points i-1 and j+1, or None if they differ."""
        if self.left_class is self.right_class and self.left_class.weakly_exterior:
            return self.left_class
        return None

    @property
    def cf(self) -> ContinuedFraction:
        n = self.state.normalized().chars
        return from_fraction(n.a, n.b)

    @property
    def delta(self) -> int:
        return self.state.normalized().delta

    @property
    def delta_prime(self) -> int:
        return self.state.normalized().delta_prime

    def _slope_of(self, seg: MaximalSegment) -> Fraction | float:
        x, y = self.state.octant_coords(seg.state.direction())
        if x <= 0:
            raise RuntimeError("maximal segment runs backwards in the common-part frame")
        return Fraction(y, x)

    @property
    def back_slope(self):
        """Slope of ``[B(j), j]`` in the first-octant frame of the common part."""
        return self._slope_of(self.back_segment)

    @property
    def front_slope(self):
        return self._slope_of(self.front_segment)

    @property
    def observed_delta_z(self) -> Fraction:
        return abs(self.back_slope - self.front_slope)

    @property
    def within_octant(self) -> bool:
        """True if the common part has positive slope and both neighbours keep a slope in [0, 1].

        The slope bounds assume the curve stays in one octant; common parts
        at an octant change (axis or diagonal crossings) fall outside that.
        """
        if self.cf.depth < 1:
            return False
        return all(0 <= z <= 1 for z in (self.back_slope, self.front_slope))


def common_parts(curve: DigitalCurve, segments: list[MaximalSegment]) -> list[CommonPart]:
    n = len(curve)
    pairs = list(zip(segments, segments[1:]))
    if curve.closed and len(segments) > 1:
        last, first = segments[-1], segments[0]
        first = MaximalSegment(first.i + n, first.j + n, _shifted(first.state, n))
        pairs.append((last, first))
    out = []
    for back_seg, front_seg in pairs:
        i, j = front_seg.i, back_seg.j
        if j - i < 1:
            raise RuntimeError(f"consecutive maximal segments [{back_seg.i},{back_seg.j}] and "
                               f"[{front_seg.i},{front_seg.j}] share fewer than two points")
        st = recognize_range(curve, i, j)
        if st is None:
            raise RuntimeError(f"common part [{i},{j}] is not a DSS")
        out.append(CommonPart(i, j, st, back_seg, front_seg,
                              st.octant_class(curve.point(i - 1)),
                              st.octant_class(curve.point(j + 1))))
    return out


def _ratio(num: int, den: int):
    if den == 0:
        return INF if num > 0 else -INF
    return Fraction(num, den)


@dataclass(frozen=True)
class SlopeBounds:
    parity: str
    endpoint_type: PointClass
    count: int
    forward: tuple  # (min, max) for [i, F(i)]
    backward: tuple  # (min, max) for [B(j), j]

    @staticmethod
    def contains(interval, z) -> bool:
        return interval[0] <= z <= interval[1]


def slope_bounds_for(cf: ContinuedFraction, endpoint_type: PointClass, delta: int,
                     delta_prime: int) -> SlopeBounds:
    """Bounds on the slopes of the two maximal segments around a common part.

    Each cell is a pair of values ``(t p_k +- p_{k-1}) / (t q_k +- q_{k-1})``;
    they are returned sorted, since for odd depth the first of the pair is the
    larger one.
    """
    if not endpoint_type.weakly_exterior:
        raise ValueError("endpoint type must be upper or lower weakly exterior")
    lower = endpoint_type is PointClass.LOWER_WEAK
    t = delta_prime if lower else delta
    if t < 1:
        kind = "reversed patterns" if lower else "patterns"
        raise ValueError(f"common part with {endpoint_type.value} ends has no {kind}")
    table = convergents(cf)
    (p, q), (pm, qm) = table[-1], table[-2]

    def plus(k):
        return _ratio(k * p + pm, k * q + qm)

    def minus(k):
        return _ratio(k * p - pm, k * q - qm)

    minus_cell = (minus(t), minus(t + 2))
    plus_cell = (plus(t + 1), plus(t - 1))
    # forward cell is the "minus" form for even/lower and odd/upper
    if cf.is_even == lower:
        fwd, bwd = minus_cell, plus_cell
    else:
        fwd, bwd = plus_cell, minus_cell
    return SlopeBounds(cf.parity, endpoint_type, t, tuple(sorted(fwd)), tuple(sorted(bwd)))


def slope_bounds(cp: CommonPart) -> SlopeBounds:
    if cp.endpoint_type is None:
        raise ValueError("common part endpoints are not of a single weakly exterior type")
    return slope_bounds_for(cp.cf, cp.endpoint_type, cp.delta, cp.delta_prime)


def differenced_interval(bounds: SlopeBounds) -> tuple:
    """Range of |z_back - z_front| implied by the two slope intervals."""
    (flo, fhi), (blo, bhi) = bounds.forward, bounds.backward
    if blo >= fhi:
        return blo - fhi, bhi - flo
    if flo >= bhi:
        return flo - bhi, fhi - blo
    return Fraction(0), max(bhi - flo, fhi - blo)


@dataclass(frozen=True)
class DeltaZBounds:
    tight: tuple
    coarse: tuple | None
    derived_by_analogy: bool


def closed_form_applies(cf: ContinuedFraction, endpoint_type: PointClass) -> bool:
    """Closed-form |dz| bounds are stated for even slopes of depth >= 2 with lower ends."""
    return cf.is_even and cf.depth >= 2 and endpoint_type is PointClass.LOWER_WEAK


def delta_z_closed_form(delta_prime: int, q: int, qm: int) -> tuple[tuple, tuple]:
    d = delta_prime
    tight = (_ratio(2 * d + 3, (d * d + 3 * d + 2) * q * q + q * qm - qm * qm),
             _ratio(2 * d - 1, (d * d - d) * q * q + q * qm - qm * qm))
    coarse_hi_den = Fraction((d * d - d) * q * q) + Fraction(q, 2) + Fraction(1, 2)
    coarse = (_ratio(2 * d + 3, (d * d + 3 * d + 3) * q * q),
              Fraction(2 * d - 1) / coarse_hi_den)
    return tight, coarse


def delta_z_bounds(cp: CommonPart) -> DeltaZBounds:
    bounds = slope_bounds(cp)
    cf = cp.cf
    if closed_form_applies(cf, cp.endpoint_type):
        table = convergents(cf)
        tight, coarse = delta_z_closed_form(cp.delta_prime, table[-1][1], table[-2][1])
        return DeltaZBounds(tight, coarse, False)
    return DeltaZBounds(differenced_interval(bounds), None, True)


@dataclass(frozen=True)
class TangentReport:
    segments: list[MaximalSegment]
    cover: list[list[int]]

    def directions(self) -> list[tuple[int, int]]:
        return [m.state.direction() for m in self.segments]


def tangent_report(curve: DigitalCurve) -> TangentReport:
    segs = extract_maximal_segments(curve)
    n = len(curve)
    wrap = n if curve.closed else None
    cover = [[k for k, m in enumerate(segs) if m.covers(p, wrap)] for p in range(n)]
    return TangentReport(segs, cover)
