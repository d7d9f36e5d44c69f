"""Command line interface: ``hypdisc {solve,verify,sweep,construct,shvartsman,isoperimetric}``.

Exit codes: 0 success, 2 bad input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

import numpy as np

from .disc import DiscPoint
from .errors import GeometryError
from .isoperimetric import (
    circle_area_for_perimeter,
    regular_polygon,
    richardson_limit,
)
from .max_area import check_conditions, construct
from .shvartsman import area_on_chord, chord_for_angle
from .svg import render_construction

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_VERIFY_FAILED = 3

MAX_SIDE = 50.0
CONDITIONS = ("c0", "c1", "c2", "c3", "c4", "c5")
SWEEP_HEADER = ("b", "c", "alpha_star", "s_star", "a_star")


def _side(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not (0.0 < v <= MAX_SIDE):
        raise argparse.ArgumentTypeError(f"side must lie in (0, {MAX_SIDE:g}], got {text}")
    return v


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def _count(minimum: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if v < minimum:
            raise argparse.ArgumentTypeError(f"expected an integer >= {minimum}, got {v}")
        return v

    return parse


def parse_grid(text: str) -> list[float]:
    """``min:max:steps`` to a log-spaced list of side lengths."""
    try:
        lo_s, hi_s, n_s = text.split(":")
        lo, hi, n = float(lo_s), float(hi_s), int(n_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like min:max:steps, got {text!r}")
    if not (0.0 < lo <= hi <= MAX_SIDE) or n < 1 or (n == 1 and lo != hi):
        raise argparse.ArgumentTypeError(f"invalid grid {text!r}")
    return [float(v) for v in np.geomspace(lo, hi, n)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypdisc",
        description="Maximum-area hyperbolic triangles with two fixed sides.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="construct the optimum for sides b, c and check it")
    p.add_argument("--b", type=_side, required=True, help="side AC")
    p.add_argument("--c", type=_side, required=True, help="side AB")
    p.add_argument("--tol", type=_positive, default=1e-9)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="check all optimality conditions on a grid")
    p.add_argument("--grid", type=parse_grid, default=parse_grid("0.1:5:25"))
    p.add_argument("--tol", type=_positive, default=1e-9)
    p.add_argument("--jobs", type=_count(1), default=1)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="tabulate the optimum on a grid")
    p.add_argument("--grid", type=parse_grid, default=parse_grid("0.1:5:25"))
    p.add_argument("--csv", metavar="PATH", help="write CSV here instead of stdout")
    p.add_argument("--jobs", type=_count(1), default=1)

    p = sub.add_parser("construct", help="draw the tangent construction as SVG")
    p.add_argument("--b", type=_side, required=True)
    p.add_argument("--c", type=_side, required=True)
    p.add_argument("--svg", metavar="PATH", required=True)

    p = sub.add_parser("shvartsman", help="check area constancy along an equal-area chord")
    p.add_argument("--c", type=_side, required=True, help="length of AB")
    p.add_argument("--tau", type=_positive, required=True)
    p.add_argument("--samples", type=_count(2), default=100)
    p.add_argument("--tol", type=_positive, default=1e-9)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("isoperimetric", help="regular polygons against the circle")
    p.add_argument("--perimeter", type=_positive, required=True)
    p.add_argument("--max-n", type=_count(3), default=256)
    p.add_argument("--tol", type=_positive, default=1e-6, help="relative tolerance of the limit")
    p.add_argument("--json", action="store_true")
    return parser


def solve_record(b: float, c: float, tol: float = 1e-9) -> dict:
    sol = construct(b, c)
    report = check_conditions(sol, tol)
    return {
        "b": b,
        "c": c,
        "alpha_star": sol.alpha_star,
        "s_star": sol.s_star,
        "a_star": sol.a_star,
        "residuals": {k: report.residuals[k] for k in CONDITIONS},
        "_ok": report.ok,
    }


def _verify_cell(args: tuple[float, float, float]) -> dict:
    return solve_record(*args)


def _sweep_cell(args: tuple[float, float]) -> tuple[float, ...]:
    sol = construct(*args)
    return (sol.b, sol.c, sol.alpha_star, sol.s_star, sol.a_star)


def _map(fn, items: list, jobs: int) -> list:
    # executor.map yields in submission order, keeping output deterministic
    if jobs == 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _cmd_solve(args, out) -> int:
    rec = solve_record(args.b, args.c, args.tol)
    ok = rec.pop("_ok")
    if args.json:
        out.write(json.dumps(rec) + "\n")
    else:
        for key in ("b", "c", "alpha_star", "s_star", "a_star"):
            out.write(f"{key:<11}{rec[key]!r}\n")
        for key, v in rec["residuals"].items():
            flag = "ok" if v < args.tol else "FAIL"
            out.write(f"{'residual ' + key:<11}{v!r} {flag}\n")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_verify(args, out) -> int:
    cells = [(b, c, args.tol) for b in args.grid for c in args.grid]
    records = _map(_verify_cell, cells, args.jobs)
    worst = {k: max(r["residuals"][k] for r in records) for k in CONDITIONS}
    failed = [(r["b"], r["c"]) for r in records if not r["_ok"]]
    if args.json:
        out.write(
            json.dumps(
                {
                    "cells": len(records),
                    "failed": len(failed),
                    "tol": args.tol,
                    "worst_residuals": worst,
                    "failed_cells": [list(f) for f in failed],
                }
            )
            + "\n"
        )
    else:
        out.write(f"cells      {len(records)}\n")
        out.write(f"tolerance  {args.tol!r}\n")
        out.write("condition  worst residual\n")
        for k in CONDITIONS:
            out.write(f"{k:<11}{worst[k]!r}\n")
        out.write(f"failed     {len(failed)}\n")
        for b, c in failed:
            out.write(f"  b={b!r} c={c!r}\n")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def write_sweep_csv(rows: Sequence[Sequence[float]], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow([repr(float(v)) for v in row])


def _cmd_sweep(args, out) -> int:
    rows = _map(_sweep_cell, [(b, c) for b in args.grid for c in args.grid], args.jobs)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_sweep_csv(rows, fh)
        out.write(f"wrote {len(rows)} rows to {args.csv}\n")
    else:
        write_sweep_csv(rows, out)
    return EXIT_OK


def _cmd_construct(args, out) -> int:
    sol = construct(args.b, args.c)
    with open(args.svg, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_construction(sol))
    out.write(f"wrote {args.svg}\n")
    return EXIT_OK


def _cmd_shvartsman(args, out) -> int:
    b = DiscPoint(math.tanh(0.5 * args.c), 0.0)
    chord = chord_for_angle(b, args.tau)
    areas = [area_on_chord(b, chord, p) for p in chord.sample(args.samples)]
    deviation = max(abs(s - chord.area) for s in areas)
    ok = deviation < args.tol
    if args.json:
        out.write(
            json.dumps(
                {
                    "c": args.c,
                    "tau": args.tau,
                    "area": chord.area,
                    "samples": len(areas),
                    "max_deviation": deviation,
                    "endpoints": [list(e) for e in chord.endpoints],
                }
            )
            + "\n"
        )
    else:
        out.write(f"B'          ({chord.b_inverse.x!r}, {chord.b_inverse.y!r})\n")
        out.write(f"2 tau       {chord.area!r}\n")
        out.write(f"samples     {len(areas)}\n")
        out.write(f"max |S-2t|  {deviation!r} {'ok' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _richardson_chain(max_n: int) -> list[int]:
    chain = [max_n]
    while len(chain) < 4 and chain[-1] % 2 == 0 and chain[-1] // 2 >= 3:
        chain.append(chain[-1] // 2)
    return sorted(chain)


def _cmd_isoperimetric(args, out) -> int:
    L = args.perimeter
    polys = {n: regular_polygon(n, L) for n in range(3, args.max_n + 1)}
    areas = [polys[n].area for n in sorted(polys)]
    circle = circle_area_for_perimeter(L)
    increasing = all(x < y for x, y in zip(areas, areas[1:]))
    below = all(a < circle for a in areas)
    chain = _richardson_chain(args.max_n)
    if len(chain) >= 2:
        limit = richardson_limit({n: polys[n].area for n in chain}, levels=len(chain) - 1)
        rel = abs(limit - circle) / circle
    else:
        limit, rel = areas[-1], abs(areas[-1] - circle) / circle
    ok = increasing and below and rel < args.tol
    if args.json:
        out.write(
            json.dumps(
                {
                    "perimeter": L,
                    "circle_area": circle,
                    "polygon_areas": {str(n): polys[n].area for n in sorted(polys)},
                    "increasing": increasing,
                    "below_circle": below,
                    "extrapolated": limit,
                    "relative_gap": rel,
                }
            )
            + "\n"
        )
    else:
        out.write(f"{'n':>5}  {'circumradius':<22}area\n")
        shown = sorted({n for n in polys if n & (n - 1) == 0 or n in (3, 5, 6)} | {args.max_n})
        for n in shown:
            out.write(f"{n:>5}  {polys[n].circumradius!r:<22}{polys[n].area!r}\n")
        out.write(f"circle area       {circle!r}\n")
        out.write(f"extrapolated      {limit!r} (n={chain})\n")
        out.write(f"relative gap      {rel!r}\n")
        out.write(f"strictly increasing {increasing}, below circle {below}\n")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


COMMANDS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "construct": _cmd_construct,
    "shvartsman": _cmd_shvartsman,
    "isoperimetric": _cmd_isoperimetric,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except GeometryError as exc:
        err.write(f"hypdisc {args.command}: error: {exc}\n")
        return EXIT_BAD_INPUT
    except OSError as exc:
        err.write(f"hypdisc {args.command}: error: {exc}\n")
        return EXIT_BAD_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
