"""4-connected digital curves given as a start point and Freeman codes.

Codes 0, 1, 2, 3 are the unit steps (+1,0), (0,+1), (-1,0), (0,-1).  Closed
curves are indexed modulo their length, open curves from 0 to ``len(codes)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class GridPoint(NamedTuple):
    x: int
    y: int

    def step(self, code: int) -> "GridPoint":
        dx, dy = STEPS[code]
        return GridPoint(self.x + dx, self.y + dy)


STEPS = ((1, 0), (0, 1), (-1, 0), (0, -1))
_CODE_OF_STEP = {s: c for c, s in enumerate(STEPS)}


def code_of(dx: int, dy: int) -> int:
    """Freeman code of a unit step; ``ValueError`` for anything else."""
    try:
        return _CODE_OF_STEP[(dx, dy)]
    except KeyError:
        raise ValueError(f"({dx}, {dy}) is not a 4-connected unit step") from None


class ChainCodeError(ValueError):
    pass


@dataclass(frozen=True)
class DigitalCurve:
    start: GridPoint
    codes: tuple[int, ...]
    closed: bool = False
    _points: tuple[GridPoint, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "start", GridPoint(*self.start))
        object.__setattr__(self, "codes", tuple(self.codes))
        for c in self.codes:
            if c not in (0, 1, 2, 3):
                raise ChainCodeError(f"invalid Freeman code {c!r}")
        pts = [self.start]
        for c in self.codes:
            pts.append(pts[-1].step(c))
        if self.closed:
            if not self.codes:
                raise ChainCodeError("a closed curve needs at least one code")
            if pts[-1] != self.start:
                dx, dy = pts[-1].x - self.start.x, pts[-1].y - self.start.y
                raise ChainCodeError(f"closed curve has net displacement ({dx}, {dy})")
            pts.pop()
        object.__setattr__(self, "_points", tuple(pts))

    def __len__(self) -> int:
        """Number of distinct points (``len(codes)`` if closed, one more if open)."""
        return len(self._points)

    def point(self, i: int) -> GridPoint:
        if self.closed:
            return self._points[i % len(self._points)]
        if not 0 <= i < len(self._points):
            raise IndexError(f"index {i} outside open curve of {len(self._points)} points")
        return self._points[i]

    def points(self) -> list[GridPoint]:
        return list(self._points)

    def code(self, i: int) -> int:
        """Code of the step from point ``i`` to point ``i + 1``."""
        if self.closed:
            return self.codes[i % len(self.codes)]
        return self.codes[i]

    def has_index(self, i: int) -> bool:
        return self.closed or 0 <= i < len(self._points)

    def word(self) -> str:
        return "".join(str(c) for c in self.codes)


def curve_from_points(points: Iterable[tuple[int, int]], closed: bool = False) -> DigitalCurve:
    pts = [GridPoint(*p) for p in points]
    if closed and pts[0] != pts[-1]:
        pts.append(pts[0])
    try:
        codes = [code_of(q.x - p.x, q.y - p.y) for p, q in zip(pts, pts[1:])]
    except ValueError as exc:
        raise ChainCodeError(str(exc)) from None
    return DigitalCurve(pts[0], tuple(codes), closed)


def parse_chain_code(text: str) -> DigitalCurve:
    """Parse the two-line chain-code format (``#`` lines are comments)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if not ln.startswith("#")]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise ChainCodeError("empty chain-code file")
    header = lines[0].split()
    if len(header) != 3 or header[2] not in ("open", "closed"):
        raise ChainCodeError(f"malformed header {lines[0]!r}; expected '<x0> <y0> <open|closed>'")
    try:
        x0, y0 = int(header[0]), int(header[1])
    except ValueError:
        raise ChainCodeError(f"non-integer start point in header {lines[0]!r}") from None
    if len(lines) > 2:
        raise ChainCodeError("codes must be given on a single line")
    body = lines[1] if len(lines) == 2 else ""
    bad = [ch for ch in body if ch not in "0123"]
    if bad:
        raise ChainCodeError(f"symbol {bad[0]!r} outside {{0,1,2,3}}")
    return DigitalCurve(GridPoint(x0, y0), tuple(int(ch) for ch in body), header[2] == "closed")


def serialize_chain_code(curve: DigitalCurve) -> str:
    kind = "closed" if curve.closed else "open"
    return f"{curve.start.x} {curve.start.y} {kind}\n{curve.word()}\n"


def trace_standard_line(a: int, b: int, mu: int, n_patterns: int) -> DigitalCurve:
    """Follow the standard line ``mu <= a*x - b*y < mu + a + b`` for whole patterns.

    The walk starts at the upper leaning point with the smallest nonnegative x.
    """
    if b < 1 or a < 0:
        raise ValueError("need 0 <= a and b >= 1")
    if a > b:
        raise ValueError(f"slope {a}/{b} is outside the first octant")
    if math.gcd(a, b) != 1:
        raise ValueError(f"gcd({a}, {b}) != 1")
    if n_patterns < 1:
        raise ValueError("n_patterns must be positive")
    x = (mu * pow(a, -1, b)) % b
    y = (a * x - mu) // b
    codes = []
    r = mu
    for _ in range(n_patterns * (a + b)):
        if r < mu + b:
            codes.append(0)
            r += a
        else:
            codes.append(1)
            r -= b
    return DigitalCurve(GridPoint(x, y), tuple(codes), False)


def disk_contains(radius: int, center: GridPoint, i: int, j: int) -> bool:
    return (i - center.x) ** 2 + (j - center.y) ** 2 <= radius * radius


# Pixel (i, j) covers the unit square with lower-left corner (i, j).  For each
# heading: the pixel ahead-left and ahead-right of corner (x, y), as offsets.
_AHEAD = {
    0: ((0, 0), (0, -1)),
    1: ((-1, 0), (0, 0)),
    2: ((-1, -1), (-1, 0)),
    3: ((0, -1), (-1, -1)),
}


def digitize_circle_boundary(radius: int, center: tuple[int, int] = (0, 0)) -> DigitalCurve:
    """Counterclockwise inter-pixel boundary of the Gauss digitization of a disk.

    Pixels are centred on integer points and inside iff ``dx^2 + dy^2 <= r^2``.
    Boundary vertices are pixel corners, shifted by (+1/2, +1/2) onto the
    integer lattice, so pixel (i, j) spans ``[i, i+1] x [j, j+1]``.
    """
    if radius < 2:
        raise ValueError("radius must be at least 2")
    center = GridPoint(*center)

    def inside(i, j):
        return disk_contains(radius, center, i, j)

    start = GridPoint(center.x, center.y - radius)
    heading = 0
    v = start
    codes = []
    limit = 16 * radius + 16
    while True:
        codes.append(heading)
        v = v.step(heading)
        if v == start:
            break
        if len(codes) > limit:
            raise RuntimeError("boundary march did not close")
        (lx, ly), (rx, ry) = _AHEAD[heading]
        if not inside(v.x + lx, v.y + ly):
            heading = (heading + 1) % 4
        elif inside(v.x + rx, v.y + ry):
            heading = (heading - 1) % 4
    return DigitalCurve(start, tuple(codes), True)
