"""Replay the scripted slope evolution 1/2 -> 3/5 -> 5/8 and draw its Stern-Brocot path.

    python scripts/slope_evolution.py [--svg out.svg]
"""

import argparse

from dsskit.figures import EVOLUTION_WORD, evolution_curve, reachable
from dsskit.contfrac import from_fraction
from dsskit.stern_brocot import fraction_to_path
from dsskit.svg import sbt_svg
from dsskit.trace import recognize_curve


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--svg")
    ns = ap.parse_args(argv)
    tr = recognize_curve(evolution_curve())
    print("word", EVOLUTION_WORD)
    for ev in tr.events:
        if ev.slope_changed:
            a = ev.after
            print(f"  step {ev.index:2d} {ev.point_class.value:<22} -> {a.slope} {a.cf} "
                  f"depth {a.cf.depth} path {a.path} (+{ev.appended_moves})")
    print("one-step reachable from 1/2 (counts 1..3):")
    for (typ, side), zs in reachable(from_fraction(1, 2)).items():
        print(f"  {typ.value:<22} {side.value:<5} {', '.join(map(str, zs))}")
    if ns.svg:
        paths = [fraction_to_path(z.numerator, z.denominator) for z in tr.slope_sequence() if z > 0]
        with open(ns.svg, "w") as fh:
            fh.write(sbt_svg(paths))


if __name__ == "__main__":
    main()
