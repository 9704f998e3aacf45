"""Finite continued fractions of slopes in [0, 1]."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical ``[0, u1, ..., un]``: last coefficient >= 2 except ``[0, 1]``.

    The flat slope is ``[0]`` with depth 0.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", c)
        if not c or c[0] != 0:
            raise ValueError(f"{list(c)}: first coefficient must be 0")
        if any(u < 1 for u in c[1:]):
            raise ValueError(f"{list(c)}: partial coefficients must be positive")
        if len(c) > 2 and c[-1] < 2:
            raise ValueError(f"{list(c)}: not canonical (trailing 1)")

    @property
    def depth(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_even(self) -> bool:
        return self.depth % 2 == 0

    @property
    def parity(self) -> str:
        return "even" if self.is_even else "odd"

    def convergents(self) -> list[tuple[int, int]]:
        return convergents(self)

    def value(self) -> tuple[int, int]:
        return value(self)

    def fraction(self) -> Fraction:
        p, q = value(self)
        return Fraction(p, q)

    def __str__(self):
        return "[" + ",".join(map(str, self.coeffs)) + "]"


def from_fraction(a: int, b: int) -> ContinuedFraction:
    if b < 1:
        raise ValueError("denominator must be positive")
    if not 0 <= a <= b:
        raise ValueError(f"{a}/{b} is outside [0, 1]")
    if math.gcd(a, b) != 1:
        raise ValueError(f"{a}/{b} is not reduced")
    if a == b:
        return ContinuedFraction((0, 1))
    coeffs = []
    p, q = a, b
    while q:
        coeffs.append(p // q)
        p, q = q, p % q
    return ContinuedFraction(tuple(coeffs))


def canonicalize(coeffs: Sequence[int]) -> ContinuedFraction:
    """Merge a trailing 1 into its predecessor: ``[.., u, 1] -> [.., u + 1]``."""
    c = list(coeffs)
    if not c or c[0] != 0:
        raise ValueError("first coefficient must be 0")
    if any(u < 1 for u in c[1:]):
        raise ValueError(f"{c}: nonpositive partial coefficient")
    if len(c) > 2 and c[-1] == 1:
        c.pop()
        c[-1] += 1
    return ContinuedFraction(tuple(c))


def convergents_of(coeffs: Sequence[int]) -> list[tuple[int, int]]:
    """(p_k, q_k) for k = -1 .. n, from the three-term recurrences."""
    table = [(1, 0), (0, 1)]
    for u in coeffs[1:]:
        (p2, q2), (p1, q1) = table[-2], table[-1]
        table.append((u * p1 + p2, u * q1 + q2))
    return table


def convergents(cf: ContinuedFraction) -> list[tuple[int, int]]:
    return convergents_of(cf.coeffs)


def value(cf: ContinuedFraction) -> tuple[int, int]:
    return convergents(cf)[-1]


def evaluate(coeffs: Sequence[int]) -> Fraction:
    """Value of an arbitrary coefficient list (zeros and trailing ones allowed)."""
    x = Fraction(coeffs[-1])
    for u in reversed(coeffs[:-1]):
        x = u + 1 / x
    return x
