"""Trace two patterns of the 10/23 standard line and show what incremental recognition ends with.

    python scripts/line_10_23.py [--svg out.svg]
"""

import argparse

from dsskit.figures import line_curve, line_trace
from dsskit.maximal import extract_maximal_segments
from dsskit.patterns import pattern_word
from dsskit.stern_brocot import cf_to_path
from dsskit.svg import maxseg_svg
from dsskit.trace import Snapshot


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--svg")
    ns = ap.parse_args(argv)
    curve = line_curve()
    snap = Snapshot.of(line_trace().final)
    print("chain code   ", "".join(map(str, curve.codes)))
    print("chars (a,b,mu)", tuple(snap.chars))
    print("cf           ", snap.cf, "depth", snap.cf.depth)
    print("delta, delta'", snap.delta, snap.delta_prime)
    print("pattern word ", pattern_word(snap.cf))
    print("SBT path     ", cf_to_path(snap.cf))
    if ns.svg:
        with open(ns.svg, "w") as fh:
            fh.write(maxseg_svg(curve, extract_maximal_segments(curve)))


if __name__ == "__main__":
    main()
