"""Step-by-step recognition traces of a curve, replayable from their events."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arithmetic import (
    Characteristics,
    DssState,
    ExtendStatus,
    PointClass,
    Side,
    extend,
    init_state,
    step_code,
)
from .contfrac import ContinuedFraction, from_fraction
from .curve import DigitalCurve
from .stern_brocot import cf_to_path


@dataclass(frozen=True)
class Snapshot:
    """First-octant view of a segment: characteristics, CF and pattern counts."""

    chars: Characteristics
    cf: ContinuedFraction
    delta: int
    delta_prime: int
    frame: int
    swapped: bool

    @classmethod
    def of(cls, st: DssState) -> "Snapshot":
        v = st.normalized()
        return cls(v.chars, from_fraction(v.chars.a, v.chars.b), v.delta, v.delta_prime,
                   st.frame, st.swapped)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.chars.a, self.chars.b)

    @property
    def path(self) -> str | None:
        return None if self.cf.depth == 0 else cf_to_path(self.cf).moves()


@dataclass(frozen=True)
class RecognitionEvent:
    index: int
    side: Side
    point_class: PointClass
    before: Snapshot
    after: Snapshot

    @property
    def appended_moves(self) -> str | None:
        """Stern-Brocot moves from the old slope to the new one, if it is a descendant."""
        old, new = self.before.path, self.after.path
        if new is None:
            return None
        if old is None:
            return new
        return new[len(old):] if new.startswith(old) else None

    @property
    def slope_changed(self) -> bool:
        return self.before.slope != self.after.slope


@dataclass(frozen=True)
class Failure:
    index: int
    status: ExtendStatus
    point_class: PointClass | None


@dataclass(frozen=True)
class RecognitionTrace:
    start_index: int
    events: tuple[RecognitionEvent, ...]
    final: DssState
    failure: Failure | None

    @property
    def is_dss(self) -> bool:
        return self.failure is None

    def slope_sequence(self) -> list[Fraction]:
        """Distinct successive slopes, starting with the seed's."""
        seq = [Snapshot.of(self.final).slope] if not self.events else [self.events[0].before.slope]
        for e in self.events:
            if e.after.slope != seq[-1]:
                seq.append(e.after.slope)
        return seq


def _point_class(st: DssState, side: Side, p) -> PointClass | None:
    framed = st.accepting(step_code(st, side, p))
    return None if framed is None else framed.octant_class(p)


def recognize_curve(curve: DigitalCurve, start: int = 0, stop: int | None = None) -> RecognitionTrace:
    """Add points ``start+2 .. stop`` to the right of the seed ``[start, start+1]``."""
    n = len(curve)
    stop = (n - 1) if stop is None else stop
    if stop - start < 1:
        raise ValueError("need at least two points")
    st = init_state(curve.point(start), curve.point(start + 1), start)
    events = []
    for k in range(start + 2, stop + 1):
        p = curve.point(k)
        cls = _point_class(st, Side.RIGHT, p)
        res = extend(st, Side.RIGHT, p)
        if not res.accepted:
            return RecognitionTrace(start, tuple(events), st, Failure(k, res.status, cls))
        events.append(RecognitionEvent(k, Side.RIGHT, cls, Snapshot.of(st), Snapshot.of(res.state)))
        st = res.state
    return RecognitionTrace(start, tuple(events), st, None)


def replay(curve: DigitalCurve, trace: RecognitionTrace) -> DssState:
    """Fold the events of a trace over the curve's points."""
    s = trace.start_index
    st = init_state(curve.point(s), curve.point(s + 1), s)
    for e in trace.events:
        res = extend(st, e.side, curve.point(e.index))
        if not res.accepted:
            raise ValueError(f"event at index {e.index} does not replay")
        st = res.state
    return st
