"""Oracle and corpus verification suites with machine-readable counts."""

from __future__ import annotations

import collections
import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .arithmetic import (
    GridPoint,
    PointClass,
    Side,
    brute_force_minimal_characteristics,
    extend,
    from_local,
    init_state,
    recognize_points,
)
from .contfrac import from_fraction
from .curve import DigitalCurve, digitize_circle_boundary, trace_standard_line
from .evolution import cross_check_arithmetic
from .maximal import (
    closed_form_applies,
    common_parts,
    delta_z_bounds,
    extract_maximal_segments,
    slope_bounds,
)
from .patterns import pattern_word, reversed_pattern_word
from .stern_brocot import cf_to_path, path_to_fraction

MAX_EXAMPLES = 10
DEFAULT_SEED = 7
CIRCLE_RADII = (3, 50)


@dataclass
class SuiteResult:
    name: str
    params: dict
    cases: int = 0
    failures: int = 0
    details: dict = field(default_factory=dict)
    examples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.failures == 0

    def fail(self, what: str):
        self.failures += 1
        if len(self.examples) < MAX_EXAMPLES:
            self.examples.append(what)

    def as_dict(self) -> dict:
        return {"suite": self.name, "params": self.params, "passed": self.passed,
                "cases": self.cases, "failures": self.failures,
                "details": self.details, "examples": self.examples}


def _path(word) -> list[GridPoint]:
    pts = [GridPoint(0, 0)]
    for c in word:
        pts.append(pts[-1].step(c))
    return pts


def _left_fold(pts):
    st = init_state(pts[-2], pts[-1])
    for q in reversed(pts[:-2]):
        res = extend(st, Side.LEFT, q)
        if not res.accepted:
            return None
        st = res.state
    return st


def _chars_or_none(st):
    if st is None:
        return None
    # words over {0, 1}: view flat runs in frame 0
    return st.accepting(0).chars if st.is_flat else st.chars


def _words(max_len: int):
    """All {0,1} words of length 1..max_len, depth first (prefix-closed order)."""
    stack = [(0,), (1,)]
    while stack:
        w = stack.pop()
        yield w
        if len(w) < max_len:
            stack.append(w + (1,))
            stack.append(w + (0,))


def oracle_exhaustive(max_len: int = 12) -> SuiteResult:
    res = SuiteResult("oracle-exhaustive", {"max_len": max_len})
    dss = 0
    for w in _words(max_len):
        pts = _path(w)
        want = brute_force_minimal_characteristics(pts)
        dss += want is not None
        for name, got in (("right", _chars_or_none(recognize_points(pts))),
                          ("left", _chars_or_none(_left_fold(pts)))):
            if got != want:
                res.fail(f"{''.join(map(str, w))} {name}: {got} != {want}")
        res.cases += 1
    res.details = {"words": res.cases, "dss_words": dss}
    return res


def _prop1_candidates(rng: random.Random):
    b = rng.randint(1, 30)
    a = rng.randint(0, b)
    if math.gcd(a, b) != 1:
        return
    line = trace_standard_line(a, b, 0, 4).points()
    i = rng.randrange(a + b)
    pts = line[i:i + rng.randint(1, 3 * (a + b)) + 1]
    if len(pts) < 2:
        return
    rot = rng.randrange(4)
    pts = [GridPoint(*from_local(p, rot)) for p in pts]
    st = recognize_points(pts)
    for side in Side:
        for c in range(4):
            q = st.last.step(c) if side is Side.RIGHT else st.first.step((c + 2) % 4)
            framed = st.accepting(c)
            if framed is not None and framed.octant_class(q).weakly_exterior:
                yield st, side, q


def prop1_random(n: int = 10_000, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Random segments plus one weakly exterior point, with n/8 cases per table cell."""
    res = SuiteResult("prop1-random", {"n": n, "seed": seed})
    rng = random.Random(seed)
    cells = [(par, typ.value, side.value) for par in ("even", "odd")
             for typ in (PointClass.UPPER_WEAK, PointClass.LOWER_WEAK) for side in Side]
    quota = {c: n // 8 + (k < n % 8) for k, c in enumerate(cells)}
    got = collections.Counter()
    attempts = 0
    while sum(got.values()) < n:
        attempts += 1
        if attempts > 200 * n:
            res.fail("generator could not fill every cell quota")
            break
        for st, side, q in _prop1_candidates(rng):
            cc = cross_check_arithmetic(st, side, q)
            cell = cc.event.cell
            if got[cell] >= quota[cell]:
                continue
            got[cell] += 1
            res.cases += 1
            if not cc.agree:
                res.fail(f"{st.chars} frame {st.frame} {side.value} {tuple(q)}: "
                         f"predicted {cc.predicted_slope}, arithmetic {cc.arithmetic_slope}")
    res.details = {"cells": {"/".join(c): got[c] for c in cells}, "min_per_cell": min(got[c] for c in cells)}
    return res


def circle_corpus(rmin: int = CIRCLE_RADII[0], rmax: int = CIRCLE_RADII[1]):
    for r in range(rmin, rmax + 1):
        yield f"circle r={r}", digitize_circle_boundary(r)


def perturbed_lines(max_b: int = 12):
    """Traced lines with one adjacent pair of distinct steps transposed."""
    for b in range(2, max_b + 1):
        for a in range(1, b):
            if math.gcd(a, b) != 1:
                continue
            codes = list(trace_standard_line(a, b, 0, 3).codes)
            for k in range(len(codes) - 1):
                if codes[k] != codes[k + 1]:
                    w = codes[:]
                    w[k], w[k + 1] = w[k + 1], w[k]
                    yield f"line {a}/{b} swap@{k}", DigitalCurve(GridPoint(0, 0), tuple(w))


def lemma2_corpus(rmin: int = CIRCLE_RADII[0], rmax: int = CIRCLE_RADII[1],
                  perturbed_max_b: int = 12) -> SuiteResult:
    res = SuiteResult("lemma2-corpus", {"rmin": rmin, "rmax": rmax, "perturbed_max_b": perturbed_max_b})
    kinds = collections.Counter()
    curves = list(circle_corpus(rmin, rmax)) + list(perturbed_lines(perturbed_max_b))
    for label, curve in curves:
        for cp in common_parts(curve, extract_maximal_segments(curve)):
            res.cases += 1
            t = cp.endpoint_type
            if t is None:
                res.fail(f"{label} [{cp.i},{cp.j}]: {cp.left_class.value} / {cp.right_class.value}")
            else:
                kinds[t.value] += 1
    res.details = {"curves": len(curves), "both_upper": kinds["upper_weakly_exterior"],
                   "both_lower": kinds["lower_weakly_exterior"]}
    return res


def thm1_corpus(rmin: int = CIRCLE_RADII[0], rmax: int = CIRCLE_RADII[1]) -> SuiteResult:
    """Slope containment for common parts inside one octant; octant crossings are counted apart."""
    res = SuiteResult("thm1-corpus", {"rmin": rmin, "rmax": rmax})
    cells = collections.Counter()
    outside = collections.Counter()
    attained = collections.Counter()
    for label, curve in circle_corpus(rmin, rmax):
        for cp in common_parts(curve, extract_maximal_segments(curve)):
            if cp.endpoint_type is None:
                continue
            if not cp.within_octant:
                outside[str(cp.cf)] += 1
                continue
            b = slope_bounds(cp)
            for d, iv, z in (("forward", b.forward, cp.front_slope), ("backward", b.backward, cp.back_slope)):
                key = f"{b.parity}/{b.endpoint_type.value}/{d}"
                cells[key] += 1
                res.cases += 1
                if z in iv:
                    attained[key] += 1
                if not b.contains(iv, z):
                    res.fail(f"{label} [{cp.i},{cp.j}] {key}: {z} not in [{iv[0]}, {iv[1]}]")
    res.details = {"cells": dict(sorted(cells.items())), "attained": dict(sorted(attained.items())),
                   "octant_crossings": dict(sorted(outside.items()))}
    return res


def eq6_corpus(rmin: int = CIRCLE_RADII[0], rmax: int = CIRCLE_RADII[1]) -> SuiteResult:
    """Tight and coarse |dz| intervals for even slopes with lower ends."""
    res = SuiteResult("eq6-corpus", {"rmin": rmin, "rmax": rmax})
    analogy = 0
    for label, curve in circle_corpus(rmin, rmax):
        for cp in common_parts(curve, extract_maximal_segments(curve)):
            if cp.endpoint_type is None or not cp.within_octant:
                continue
            if not closed_form_applies(cp.cf, cp.endpoint_type):
                analogy += 1
                continue
            dz = delta_z_bounds(cp)
            z = cp.observed_delta_z
            res.cases += 1
            (tlo, thi), (clo, chi) = dz.tight, dz.coarse
            if not tlo <= z <= thi:
                res.fail(f"{label} [{cp.i},{cp.j}]: |dz|={z} outside tight [{tlo}, {thi}]")
            elif not clo <= z <= chi:
                res.fail(f"{label} [{cp.i},{cp.j}]: |dz|={z} outside coarse [{clo}, {chi}]")
            elif not (clo <= tlo and thi <= chi):
                res.fail(f"{label} [{cp.i},{cp.j}]: coarse [{clo}, {chi}] misses tight [{tlo}, {thi}]")
    res.details = {"closed_form_cases": res.cases, "other_cells": analogy}
    return res


def sbt_roundtrip(max_q: int = 200) -> SuiteResult:
    res = SuiteResult("sbt-roundtrip", {"max_q": max_q})
    paths = set()
    for q in range(1, max_q + 1):
        for p in range(0, q + 1):
            if math.gcd(p, q) != 1:
                continue
            res.cases += 1
            cf = from_fraction(p, q)
            if cf.value() != (p, q) or from_fraction(*cf.value()) != cf:
                res.fail(f"{p}/{q}: CF {cf} does not round trip")
                continue
            if p == 0:
                continue
            path = cf_to_path(cf)
            if path_to_fraction(path) != (p, q):
                res.fail(f"{p}/{q}: path {path} leads to {path_to_fraction(path)}")
            paths.add(path.moves())
    distinct = res.cases - 1 == len(paths)
    if not distinct:
        res.fail("distinct fractions share a Stern-Brocot path")
    res.details = {"fractions": res.cases, "distinct_paths": len(paths)}
    return res


def _leaning_word(codes, points, chars, lower: bool) -> str:
    a, b, mu = chars
    edge = mu + a + b - 1 if lower else mu
    idx = [k for k, (x, y) in enumerate(points) if a * x - b * y == edge]
    return "".join(map(str, codes[idx[0]:idx[1]]))


def pattern_words(max_b: int = 50) -> SuiteResult:
    res = SuiteResult("pattern-words", {"max_b": max_b})
    for b in range(1, max_b + 1):
        for a in range(1, b + 1):
            if math.gcd(a, b) != 1:
                continue
            res.cases += 1
            cf = from_fraction(a, b)
            line = trace_standard_line(a, b, 0, 3)
            pts, codes = line.points(), line.codes
            up = _leaning_word(codes, pts, (a, b, 0), False)
            low = _leaning_word(codes, pts, (a, b, 0), True)
            if pattern_word(cf).word != up:
                res.fail(f"{a}/{b}: E = {pattern_word(cf).word}, traced {up}")
            elif reversed_pattern_word(cf).word != low:
                res.fail(f"{a}/{b}: reversed E = {reversed_pattern_word(cf).word}, traced {low}")
    res.details = {"slopes": res.cases}
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "oracle-exhaustive": oracle_exhaustive,
    "prop1-random": prop1_random,
    "lemma2-corpus": lemma2_corpus,
    "thm1-corpus": thm1_corpus,
    "eq6-corpus": eq6_corpus,
    "sbt-roundtrip": sbt_roundtrip,
    "pattern-words": pattern_words,
}
