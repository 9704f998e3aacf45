"""JSON-ready dictionaries for recognition traces and maximal-segment reports."""

from __future__ import annotations

from .arithmetic import DssState
from .curve import DigitalCurve
from .jsonio import interval, rational
from .maximal import CommonPart, common_parts, delta_z_bounds, extract_maximal_segments, slope_bounds
from .stern_brocot import cf_to_path
from .contfrac import from_fraction
from .trace import RecognitionTrace, Snapshot

TRACE_SCHEMA = "dsskit/trace/1"
MAXSEG_SCHEMA = "dsskit/maxseg/1"
VERIFY_SCHEMA = "dsskit/verify/1"


def curve_info(curve: DigitalCurve) -> dict:
    return {"start": list(curve.start), "closed": curve.closed, "codes": len(curve.codes)}


def snapshot(s: Snapshot) -> dict:
    return {"chars": list(s.chars), "slope": rational(s.slope), "cf": str(s.cf),
            "depth": s.cf.depth, "delta": s.delta, "delta_prime": s.delta_prime,
            "path": s.path}


def state_info(st: DssState) -> dict:
    d = snapshot(Snapshot.of(st))
    d.update({
        "first_index": st.first_index, "last_index": st.last_index,
        "frame": st.frame, "swapped": st.swapped,
        "direction": list(st.direction()),
        "leaning": {"upper_first": list(st.ul), "upper_last": list(st.ur),
                    "lower_first": list(st.ll), "lower_last": list(st.lr)},
    })
    return d


def trace_report(curve: DigitalCurve, trace: RecognitionTrace) -> dict:
    events = []
    for e in trace.events:
        events.append({
            "index": e.index, "side": e.side.value,
            "point_class": e.point_class.value,
            "before": snapshot(e.before), "after": snapshot(e.after),
            "appended_moves": e.appended_moves,
        })
    failure = None
    if trace.failure is not None:
        f = trace.failure
        failure = {"index": f.index, "status": f.status.value,
                   "point_class": None if f.point_class is None else f.point_class.value}
    return {"schema": TRACE_SCHEMA, "curve": curve_info(curve), "is_dss": trace.is_dss,
            "events": events, "final": state_info(trace.final), "failure": failure}


def _common_part(cp: CommonPart) -> dict:
    t = cp.endpoint_type
    fwd, bwd = cp.front_slope, cp.back_slope
    d = {"i": cp.i, "j": cp.j, "cf": str(cp.cf), "delta": cp.delta, "delta_prime": cp.delta_prime,
         "left_class": cp.left_class.value, "right_class": cp.right_class.value,
         "endpoint_type": None if t is None else t.value,
         "within_octant": cp.within_octant,
         "observed": {"forward": rational(fwd), "backward": rational(bwd),
                      "delta_z": rational(cp.observed_delta_z)},
         "bounds": None, "contained": None, "delta_z": None}
    if t is None:
        return d
    try:
        b = slope_bounds(cp)
    except ValueError:
        return d
    d["bounds"] = {"parity": b.parity, "count": b.count,
                   "forward": interval(b.forward), "backward": interval(b.backward)}
    d["contained"] = {"forward": b.contains(b.forward, fwd), "backward": b.contains(b.backward, bwd)}
    dz = delta_z_bounds(cp)
    d["delta_z"] = {"tight": interval(dz.tight),
                    "coarse": None if dz.coarse is None else interval(dz.coarse),
                    "derived_by_analogy": dz.derived_by_analogy}
    return d


def maxseg_report(curve: DigitalCurve) -> dict:
    segs = extract_maximal_segments(curve)
    cps = common_parts(curve, segs)
    seg_out = []
    for m in segs:
        s = Snapshot.of(m.state)
        seg_out.append({"i": m.i, "j": m.j, "chars": list(m.state.chars), "frame": m.state.frame,
                        "direction": list(m.state.direction()), "slope": rational(s.slope),
                        "cf": str(s.cf)})
    cp_out = [_common_part(cp) for cp in cps]
    in_oct = [c for c in cp_out if c["within_octant"] and c["contained"] is not None]
    summary = {
        "segments": len(seg_out), "common_parts": len(cp_out),
        "lemma2_exceptions": sum(c["endpoint_type"] is None for c in cp_out),
        "octant_crossings": sum(not c["within_octant"] for c in cp_out),
        "containment_exceptions": sum(not all(c["contained"].values()) for c in in_oct),
    }
    return {"schema": MAXSEG_SCHEMA, "curve": curve_info(curve), "segments": seg_out,
            "common_parts": cp_out, "summary": summary}


def slopes_of_trace(report: dict) -> list[tuple[int, int]]:
    """Distinct positive slopes visited in a trace report, in order."""
    seq = []
    for e in report.get("events", []):
        for snap in (e["before"], e["after"]):
            p, q = map(int, snap["slope"].split("/"))
            if p and (not seq or seq[-1] != (p, q)):
                seq.append((p, q))
    return seq


def path_of(p: int, q: int) -> str:
    return cf_to_path(from_fraction(p, q)).moves()
