"""Sweep the endpoint-type, slope-containment and |dz| checks over several curve families.

    python scripts/corpus_sweep.py [--rmax 50] [--max-b 12] [--off-centre 20] [--json]

Unlike the verify suites, this never stops at a failure: it tallies
everything, so non-convex families show how often containment breaks.
"""

import argparse
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass, field

from dsskit.curve import digitize_circle_boundary
from dsskit.maximal import common_parts, delta_z_bounds, extract_maximal_segments, slope_bounds
from dsskit.verify import DEFAULT_SEED, circle_corpus, perturbed_lines


@dataclass
class SweepConfig:
    rmin: int = 3
    rmax: int = 50
    max_b: int = 12
    off_centre: int = 20
    seed: int = DEFAULT_SEED


@dataclass
class Tally:
    curves: int = 0
    common_parts: int = 0
    mixed_ends: int = 0
    octant_crossings: int = 0
    slope_checks: int = 0
    slope_misses: int = 0
    closed_form_cases: int = 0
    closed_form_misses: int = 0
    attained: Counter = field(default_factory=Counter)

    def add(self, curve):
        self.curves += 1
        for cp in common_parts(curve, extract_maximal_segments(curve)):
            self.common_parts += 1
            if cp.endpoint_type is None:
                self.mixed_ends += 1
                continue
            if not cp.within_octant:
                self.octant_crossings += 1
                continue
            b = slope_bounds(cp)
            for side, iv, z in (("forward", b.forward, cp.front_slope), ("backward", b.backward, cp.back_slope)):
                self.slope_checks += 1
                self.slope_misses += not b.contains(iv, z)
                for end, v in zip(("min", "max"), iv):
                    if z == v:
                        self.attained[f"{b.parity}/{b.endpoint_type.value}/{side}/{end}"] += 1
            dz = delta_z_bounds(cp)
            if not dz.derived_by_analogy:
                self.closed_form_cases += 1
                lo, hi = dz.tight
                clo, chi = dz.coarse
                ok = lo <= cp.observed_delta_z <= hi and clo <= lo and hi <= chi
                self.closed_form_misses += not ok


def off_centre_circles(cfg: SweepConfig):
    rng = random.Random(cfg.seed)
    for _ in range(cfg.off_centre):
        r = rng.randint(max(cfg.rmin, 4), cfg.rmax)
        centre = (rng.randint(-20, 20), rng.randint(-20, 20))
        yield f"circle r={r} at {centre}", digitize_circle_boundary(r, centre)


def sweep(cfg: SweepConfig) -> dict:
    families = {
        "circles": circle_corpus(cfg.rmin, cfg.rmax),
        "off-centre circles": off_centre_circles(cfg),
        "perturbed lines": perturbed_lines(cfg.max_b),
    }
    out = {}
    for name, curves in families.items():
        t = Tally()
        for _, c in curves:
            t.add(c)
        out[name] = t
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rmin", type=int, default=SweepConfig.rmin)
    ap.add_argument("--rmax", type=int, default=SweepConfig.rmax)
    ap.add_argument("--max-b", type=int, default=SweepConfig.max_b)
    ap.add_argument("--off-centre", type=int, default=SweepConfig.off_centre)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--json", action="store_true")
    ns = ap.parse_args(argv)
    cfg = SweepConfig(ns.rmin, ns.rmax, ns.max_b, ns.off_centre, ns.seed)
    res = sweep(cfg)
    if ns.json:
        print(json.dumps({"config": asdict(cfg),
                          "families": {k: {**asdict(v), "attained": dict(sorted(v.attained.items()))}
                                       for k, v in res.items()}}, indent=2))
        return
    for name, t in res.items():
        print(f"{name}: {t.curves} curves, {t.common_parts} common parts")
        print(f"  mixed end types      {t.mixed_ends}")
        print(f"  octant crossings     {t.octant_crossings} (skipped)")
        print(f"  slope checks         {t.slope_checks}, outside cell {t.slope_misses}")
        print(f"  closed-form |dz|     {t.closed_form_cases}, violations {t.closed_form_misses}")
        for cell, k in sorted(t.attained.items()):
            print(f"  attained {cell:<40} {k}")


if __name__ == "__main__":
    main()
