"""Deterministic JSON encoding: fractions as "p/q", infinities as "inf"."""

from __future__ import annotations

import enum
import json
import math
from fractions import Fraction


def rational(x) -> str:
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        raise TypeError("inexact float in exact output")
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def interval(iv) -> list[str]:
    return [rational(iv[0]), rational(iv[1])]


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, float):
        return rational(obj)
    return obj


def dumps(obj) -> str:
    return json.dumps(_plain(obj), indent=2, sort_keys=False) + "\n"


def load_schema(name: str) -> dict:
    """Shipped JSON schema, e.g. ``load_schema("trace")``."""
    from importlib.resources import files

    return json.loads(files(__package__).joinpath("schemas", f"{name}.schema.json").read_text("utf-8"))
