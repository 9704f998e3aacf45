"""Pattern words of rational slopes, built from their continued fractions."""

from __future__ import annotations

from dataclasses import dataclass

from .arithmetic import Characteristics, pattern_counts_by_scan
from .contfrac import ContinuedFraction


@dataclass(frozen=True)
class PatternWord:
    word: str
    slope: ContinuedFraction

    def __post_init__(self):
        p, q = self.slope.value()
        if len(self.word) != p + q or self.word.count("1") != p:
            raise ValueError(f"word {self.word!r} does not have slope {p}/{q}")

    def __str__(self):
        return self.word


def _prefix_words(cf: ContinuedFraction) -> list[str]:
    u = cf.coeffs
    words = ["0", "0" * u[1] + "1"]
    for k in range(2, len(u)):
        if k % 2:
            words.append(words[k - 1] * u[k] + words[k - 2])
        else:
            words.append(words[k - 2] + words[k - 1] * u[k])
    return words


def pattern_word(cf: ContinuedFraction) -> PatternWord:
    """Freeman word between two consecutive upper leaning points (0 = major step)."""
    if cf.depth == 0:
        raise ValueError("the flat slope [0] has no pattern")
    return PatternWord(_prefix_words(cf)[-1], cf)


def reversed_pattern_word(cf: ContinuedFraction) -> PatternWord:
    return PatternWord(pattern_word(cf).word[::-1], cf)


def convergent_words(cf: ContinuedFraction) -> list[str]:
    """E(z_0), ..., E(z_n)."""
    if cf.depth == 0:
        raise ValueError("the flat slope [0] has no pattern")
    return _prefix_words(cf)


def count_patterns_by_scan(points, chars: Characteristics) -> tuple[int, int]:
    return pattern_counts_by_scan(points, chars)
