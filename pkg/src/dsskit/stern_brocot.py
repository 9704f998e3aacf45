"""Stern-Brocot addresses of slopes, as run-length encoded L/R paths from 1/1."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .contfrac import ContinuedFraction, from_fraction

L, R = "L", "R"


@dataclass(frozen=True)
class SbPath:
    runs: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        runs = tuple((m, int(n)) for m, n in self.runs)
        for (m, n), nxt in zip(runs, runs[1:] + ((None, 0),)):
            if m not in (L, R) or n < 1:
                raise ValueError(f"bad run {(m, n)!r}")
            if m == nxt[0]:
                raise ValueError("adjacent runs must alternate")
        object.__setattr__(self, "runs", runs)

    @classmethod
    def from_moves(cls, moves: Iterable[str]) -> "SbPath":
        runs: list[list] = []
        for m in moves:
            if runs and runs[-1][0] == m:
                runs[-1][1] += 1
            else:
                runs.append([m, 1])
        return cls(tuple((m, n) for m, n in runs))

    def moves(self) -> str:
        return "".join(m * n for m, n in self.runs)

    def last_move(self) -> str | None:
        return self.runs[-1][0] if self.runs else None

    def __add__(self, other: "SbPath") -> "SbPath":
        if not self.runs:
            return other
        if not other.runs:
            return self
        runs = list(self.runs)
        (m, n), rest = other.runs[0], other.runs[1:]
        if runs[-1][0] == m:
            runs[-1] = (m, runs[-1][1] + n)
        else:
            runs.append((m, n))
        return SbPath(tuple(runs) + rest)

    def __len__(self):
        return sum(n for _, n in self.runs)

    def __str__(self):
        return self.moves()


def _runs(*pairs) -> SbPath:
    return SbPath(tuple((m, n) for m, n in pairs if n > 0))


def cf_to_path(cf: ContinuedFraction) -> SbPath:
    """L^u1 R^u2 L^u3 ... with the last exponent reduced by one."""
    if cf.depth == 0:
        raise ValueError("the flat slope 0/1 is not a node below 1/1")
    u = list(cf.coeffs[1:])
    u[-1] -= 1
    return _runs(*((L if k % 2 == 0 else R, n) for k, n in enumerate(u)))


def mediant(left: tuple[int, int], right: tuple[int, int]) -> tuple[int, int]:
    (m, n), (m2, n2) = left, right
    if abs(m * n2 - m2 * n) != 1:
        raise ValueError(f"{m}/{n} and {m2}/{n2} are not Stern-Brocot neighbours")
    return m + m2, n + n2


def descend(path: SbPath):
    """Yield (left ancestor, node, right ancestor) from 1/1 down the path."""
    left, right = (0, 1), (1, 0)
    node = (1, 1)
    yield left, node, right
    for m in path.moves():
        if m == L:
            right = node
        else:
            left = node
        node = mediant(left, right)
        yield left, node, right


def path_to_fraction(path: SbPath) -> tuple[int, int]:
    *_, (_, node, _) = descend(path)
    return node


def fraction_to_path(p: int, q: int) -> SbPath:
    return cf_to_path(from_fraction(p, q))


def depth_change_on_descent(path: SbPath, next_move: str) -> int:
    """0 if the move repeats the last one, else 1.  The root counts as reached by L."""
    last = path.last_move() or L
    return 0 if next_move == last else 1
