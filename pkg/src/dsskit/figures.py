"""Fixtures reproducing the worked examples: a traced line, a scripted evolution, depth classes."""

from __future__ import annotations

from fractions import Fraction

from .arithmetic import PointClass, Side
from .contfrac import ContinuedFraction, from_fraction
from .curve import DigitalCurve, GridPoint, trace_standard_line
from .evolution import evolve_slope
from .stern_brocot import cf_to_path
from .trace import RecognitionTrace, recognize_curve

LINE_CHARS = (10, 23, 0)
LINE_PATTERNS = 2

# Upper weakly exterior points arrive at the 8th and 13th steps.
EVOLUTION_WORD = "0010010" + "1" + "0010" + "1"

CAPTION_DEPTHS = {
    1: ("1/1", "1/2", "1/3", "1/4", "1/5"),
    2: ("2/3", "3/4", "4/5", "2/5", "3/7", "2/7"),
    3: ("3/5", "4/7", "3/8", "5/7"),
    4: ("5/8",),
}


def line_curve() -> DigitalCurve:
    a, b, mu = LINE_CHARS
    return trace_standard_line(a, b, mu, LINE_PATTERNS)


def line_trace() -> RecognitionTrace:
    return recognize_curve(line_curve())


def evolution_curve() -> DigitalCurve:
    return DigitalCurve(GridPoint(0, 0), tuple(int(c) for c in EVOLUTION_WORD))


def evolution_steps() -> list[tuple[Fraction, ContinuedFraction, str]]:
    """(slope, CF, Stern-Brocot path) at each positive slope taken during recognition."""
    out = []
    for z in recognize_curve(evolution_curve()).slope_sequence():
        if z == 0:
            continue
        cf = from_fraction(z.numerator, z.denominator)
        out.append((z, cf, cf_to_path(cf).moves()))
    return out


def caption_depth_table() -> dict[int, tuple[str, ...]]:
    """The caption's fractions regrouped by computed CF depth."""
    groups: dict[int, list[str]] = {}
    for fracs in CAPTION_DEPTHS.values():
        for s in fracs:
            z = Fraction(s)
            d = from_fraction(z.numerator, z.denominator).depth
            groups.setdefault(d, []).append(s)
    return {d: tuple(v) for d, v in sorted(groups.items())}


def reachable(before: ContinuedFraction, counts=(1, 2, 3)) -> dict[tuple[PointClass, Side], list[Fraction]]:
    """Slopes reached in one weakly exterior addition, per (point type, side)."""
    out = {}
    for typ in (PointClass.UPPER_WEAK, PointClass.LOWER_WEAK):
        for side in (Side.LEFT, Side.RIGHT):
            out[typ, side] = [evolve_slope(before, k, typ, side).fraction() for k in counts]
    return out
