"""Command line: build, verify, check, census, orbit.

Exit codes: 0 success, 1 I/O or parse error, 2 the requested surface cannot
be built (width below the bound, or no such component), 3 cocycle not
realizable, 4 an enumeration bound was exceeded.
"""
import argparse
import json
import re
import sys
from pathlib import Path

from .builders.construct import build_component
from .builders.diagram import compile_diagram, parse_diagram
from .errors import (BoundExceeded, FormatError, NoSuchComponent, NotPrimitive,
                     StratumForgeError, WidthTooSmall)
from .flat_core import Stratum, parse_origami, parse_origami_json
from .invariants import component_of, hyperelliptic_involution
from .oracle import census_csv, datum_of_origami, hurwitz_orbit, invariants_of
from .period_checker import cocycle_from_json, realizability_check

OK, IO_ERROR, CANNOT_BUILD, NOT_REALIZABLE, TOO_BIG = 0, 1, 2, 3, 4


def parse_stratum_orders(text):
    """Zero orders in the order the string lists them: "H(1,3)" -> [1, 3]."""
    m = re.fullmatch(r"\s*H\s*\(([\d,\s]*)\)\s*", text)
    if not m:
        raise FormatError(f"bad stratum {text!r}; expected something like H(3,3)")
    body = m.group(1).strip()
    orders = [int(x) for x in body.split(",")] if body else []
    Stratum(orders)
    return orders


def parse_partition(text, k):
    """"1,2|3" -> [[0, 1], [2]]: 1-based zero indices, classes split by '|'."""
    try:
        P = [[int(x) - 1 for x in part.split(",")] for part in text.split("|")]
    except ValueError:
        raise FormatError(f"bad partition {text!r}; expected e.g. 1,2|3") from None
    flat = sorted(j for A in P for j in A)
    if flat != list(range(k)):
        raise FormatError(f"partition {text!r} must use each of the zero indices 1..{k} once")
    return P


def read_surface(path):
    text = Path(path).read_text()
    body = text.lstrip()
    if body.startswith("{"):
        return parse_origami_json(text)
    if body.startswith("d="):
        return compile_diagram(parse_diagram(text))
    return parse_origami(text)


def surface_report(s):
    """Invariant report as an ordered dict."""
    rep = {"cells": s.n, "stratum": str(s.stratum), "genus": s.genus,
           "area": str(s.area)}
    lat = s.absolute_period_lattice
    rep["lattice_standard"] = lat.is_standard
    rep["lattice_covolume"] = str(lat.covolume)
    rep["label"] = component_of(s).tag if s.genus >= 2 else "conn"
    if lat.is_standard:
        prof = s.branch_profile()
        order_of = dict(s.zero_marks)
        zero_index = {v: i + 1 for i, (v, _) in enumerate(s.zero_marks)}
        rep["psi"] = list(prof.psi)
        rep["psi_classes"] = [[zero_index[v] for v in c] for c in prof.classes]
        rep["branch_data"] = [list(p) for p in prof.branch_data]
        rep["d"] = prof.degree
        rep["zero_orders"] = [order_of[v] for v, _ in s.zero_marks]
    inv = hyperelliptic_involution(s) if s.genus >= 2 else None
    rep["involution_fixed_points"] = inv.fixed_point_count if inv else None
    rep["horizontal_cylinders"] = len(s.cylinder_decomposition().cylinders)
    return rep


def format_report(rep):
    lines = [f"stratum: {rep['stratum']} {rep['label']}",
             f"genus: {rep['genus']}",
             f"cells: {rep['cells']}",
             f"area: {rep['area']}",
             "lattice: " + ("Z+iZ" if rep["lattice_standard"]
                            else f"covolume {rep['lattice_covolume']}")]
    if "psi" in rep:
        psi = "{" + ",".join(map(str, rep["psi"])) + "}"
        classes = "|".join(",".join(map(str, c)) for c in rep["psi_classes"])
        lines.append(f"psi: {psi} classes {classes}")
        lines.append("branch data: " + " ".join(
            "[" + ",".join(map(str, p)) + "]" for p in rep["branch_data"]))
        lines.append(f"d: {rep['d']}")
    n = rep["involution_fixed_points"]
    lines.append(f"involution: {n} fixed points" if n is not None else "involution: none")
    lines.append(f"horizontal cylinders: {rep['horizontal_cylinders']}")
    return "\n".join(lines)


def _emit(args, rep, text):
    if args.format == "json":
        print(json.dumps(rep, indent=1))
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands


def cmd_build(args):
    orders = parse_stratum_orders(args.stratum)
    P = parse_partition(args.partition, len(orders))
    try:
        s = build_component(orders, args.label, P, args.d)
    except NoSuchComponent as e:
        print(f"error: no such component: {e}", file=sys.stderr)
        return CANNOT_BUILD
    except WidthTooSmall as e:
        print(f"error: width too small: {e}", file=sys.stderr)
        return CANNOT_BUILD
    text = s.to_json() if args.format == "json" else s.to_text()
    if args.out:
        Path(args.out).write_text(text)
    rep = surface_report(s)
    psi = "{" + ",".join(map(str, rep["psi"])) + "}"
    summary = f"{rep['stratum']} {rep['label']} Ψ={psi} d={rep['d']}"
    if args.format == "json":
        print(json.dumps({"surface": json.loads(s.to_json()), "report": rep}, indent=1))
    else:
        if not args.out:
            print(text, end="")
        print(summary)
        print(format_report(rep))
    return OK


def cmd_verify(args):
    s = read_surface(args.file)
    rep = surface_report(s)
    orders = sorted((o for _, o in s.zero_marks), reverse=True)
    if tuple(orders) != s.stratum.orders or sum(orders) != 2 * s.genus - 2 and orders:
        print("error: zero orders inconsistent with the genus", file=sys.stderr)
        return IO_ERROR
    _emit(args, rep, format_report(rep))
    return OK


def cmd_check(args):
    chi = cocycle_from_json(Path(args.file).read_text())
    verdict = realizability_check(chi)
    out = verdict.to_json()
    if args.format == "json":
        print(json.dumps(out, indent=1))
    else:
        print(json.dumps(out))
    return OK if verdict.realizable else NOT_REALIZABLE


def cmd_census(args):
    text = census_csv(args.N, jobs=args.jobs)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return OK


def cmd_orbit(args):
    s = read_surface(args.file)
    if s.scale_x != 1 or s.scale_y != 1:
        raise FormatError("orbit needs a square-tiled surface (unit cells)")
    datum = datum_of_origami(s)
    orbit = hurwitz_orbit(datum, max_states=args.max_states)
    inv = invariants_of(datum)
    rep = {"size": len(orbit), "stratum": str(inv.stratum), "label": inv.label,
           "branch_data": [list(p) for p in inv.branch_data], "primitive": inv.primitive}
    text = (f"orbit size: {rep['size']}\nstratum: {rep['stratum']} {rep['label']}\n"
            f"branch data: {rep['branch_data']}\nprimitive: {rep['primitive']}")
    _emit(args, rep, text)
    return OK


def make_parser():
    p = argparse.ArgumentParser(prog="stratumforge",
                                description="Translation surfaces with prescribed periods.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    b = common(sub.add_parser("build", help="build a surface in a component"))
    b.add_argument("stratum", help='e.g. "H(3,3)"')
    b.add_argument("label", help="hyp, even, odd, nonhyp or conn")
    b.add_argument("partition", help='zero classes, e.g. "1,2|3" (1-based)')
    b.add_argument("d", type=int)
    b.add_argument("--out", help="write the origami file here")
    b.set_defaults(func=cmd_build)

    v = common(sub.add_parser("verify", help="report the invariants of an origami file"))
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    c = common(sub.add_parser("check", help="decide realizability of a cocycle"))
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    n = sub.add_parser("census", help="count origamis per component")
    n.add_argument("N", type=int)
    n.add_argument("--out")
    n.add_argument("--jobs", type=int, default=1)
    n.set_defaults(func=cmd_census)

    o = common(sub.add_parser("orbit", help="orbit of an origami under the base moves"))
    o.add_argument("file")
    o.add_argument("--max-states", type=int, default=10 ** 5)
    o.set_defaults(func=cmd_orbit)
    return p


def main(argv=None):
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except BoundExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return TOO_BIG
    except NotPrimitive as e:
        print(f"error: {e}", file=sys.stderr)
        return IO_ERROR
    except (OSError, StratumForgeError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
