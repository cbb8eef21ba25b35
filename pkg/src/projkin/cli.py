"""Command-line front end.

Exit codes: 0 success, 2 domain or validation error, 3 projective infinity,
4 convergence failure.
"""
from __future__ import annotations

import argparse
import math
import re
import sys

import numpy as np

from . import cosmology, groups, io, metric, scales
from .errors import ConvergenceFailure, DomainError, NonOrthogonal, ProjectiveInfinity
from .model import DEFAULT_C, DEFAULT_R, Event, GaugeMode, ModelParameters

EXIT_OK, EXIT_DOMAIN, EXIT_INFINITY, EXIT_CONVERGENCE = 0, 2, 3, 4

KINDS = ("time-translation", "spatial-translation", "pulling", "inertial", "rotation")
DEFAULT_FORMAT = {
    "transform": "json", "compose": "json", "distance": "json", "limits": "json",
    "scales": "csv", "hubble": "csv", "drift": "csv",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("model and output")
    g.add_argument("--R", type=float, default=DEFAULT_R, help="radius of the Universe [m]")
    g.add_argument("--c", type=float, default=DEFAULT_C, help="speed of light [m/s]")
    g.add_argument("--gauge", choices=[m.value for m in GaugeMode], default=GaugeMode.CONSISTENT.value)
    g.add_argument("--format", choices=("json", "csv"), default=None)
    g.add_argument("--precision", type=int, default=io.DEFAULT_PRECISION,
                   help="significant digits in output (6-17)")
    g.add_argument("--out", default="-", help="output path ('-' for stdout)")
    return common


def _generator_args(p: argparse.ArgumentParser):
    p.add_argument("--kind", choices=KINDS, default="time-translation")
    p.add_argument("--T", type=float, default=0.0, help="time-translation parameter [s]")
    p.add_argument("--S", type=float, default=0.0, help="spatial-translation parameter [m]")
    p.add_argument("--V", type=float, default=0.0, help="pulling velocity [m/s]")
    p.add_argument("--angle", type=float, default=0.0, help="rotation angle [rad]")
    p.add_argument("--axis", default=None, help="x, y, z (or a plane such as xy for rotations)")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="projkin", description="Projective kinematics toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("transform", parents=[common], help="transform events")
    p.add_argument("--group", choices=("galileo", "poincare", "fantappie"), default="fantappie")
    _generator_args(p)
    p.add_argument("--matrix", help="group element JSON to apply instead of a generator")
    p.add_argument("--events", help="events JSON file ('-' for stdin)")
    p.add_argument("--event", nargs=4, type=float, action="append", metavar=("X", "Y", "Z", "T"))

    p = sub.add_parser("compose", parents=[common], help="compose group elements")
    p.add_argument("--gen", action="append", default=[], metavar="KIND:VALUE[:AXIS]",
                   help="generator, applied in the order given")
    p.add_argument("--element", action="append", default=[], metavar="FILE",
                   help="group element JSON, applied after the generators, in order")

    p = sub.add_parser("distance", parents=[common], help="Cayley-Klein distance")
    p.add_argument("--axis", choices=("time", "space"), default="time")
    p.add_argument("--A", nargs=2, type=float, default=[0.0, 0.0], metavar=("X", "T"))
    p.add_argument("--B", nargs=2, type=float, required=True, metavar=("X", "T"))

    p = sub.add_parser("scales", parents=[common], help="tabulate coordinate maps")
    p.add_argument("--axis", choices=("time", "space"), default="time")
    p.add_argument("--range", required=True, metavar="START:STOP:STEP")

    p = sub.add_parser("hubble", parents=[common], help="Hubble rate and recession velocities")
    p.add_argument("--tE", type=float, default=0.0)
    p.add_argument("--x", nargs="+", type=float, default=[0.0])

    p = sub.add_parser("drift", parents=[common], help="clock drift table or drift horizon")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--target", help="drift to reach, e.g. 1s or 2.5yr")
    mode.add_argument("--tE", nargs="+", type=float)

    p = sub.add_parser("limits", parents=[common], help="contraction-limit report")
    _generator_args(p)
    p.add_argument("--Rs", required=True, help="comma-separated increasing radii")
    p.add_argument("--event", nargs=4, type=float, default=[0.2, 0.1, 0.0, 0.3],
                   metavar=("X", "Y", "Z", "T"))
    return parser


# -- helpers ---------------------------------------------------------------

def _generator(kind: str, args) -> groups.GeneratorParams:
    kind = "pulling" if kind == "inertial" else kind
    magnitude = {"time-translation": args.T, "spatial-translation": args.S,
                 "pulling": args.V, "rotation": args.angle}[kind]
    axis = args.axis or ("xy" if kind == "rotation" else "x")
    return groups.GeneratorParams(kind, magnitude, axis)


def _parse_gen(text: str) -> groups.GeneratorParams:
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise DomainError(f"generator {text!r} is not KIND:VALUE[:AXIS]")
    kind = "pulling" if parts[0] == "inertial" else parts[0]
    try:
        value = float(parts[1])
        kind = groups.GeneratorKind(kind)
    except ValueError as exc:
        raise DomainError(f"bad generator {text!r}: {exc}") from None
    axis = parts[2] if len(parts) == 3 else ("xy" if kind is groups.GeneratorKind.ROTATION else "x")
    return groups.GeneratorParams(kind, value, axis)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from None


def _events(args) -> list[Event]:
    events = []
    if args.events:
        events.extend(io.loads_events(_read(args.events)))
    for quad in args.event or []:
        events.append(Event(*quad))
    if not events:
        raise DomainError("no events given (use --events or --event)")
    return events


def _galileo(args) -> groups.GalileoParams:
    axis = args.axis or ("xy" if args.kind == "rotation" else "x")
    vec = np.zeros(3)
    if args.kind == "rotation":
        return groups.GalileoParams("rotation", rotation=groups.rotation_matrix(args.angle, axis))
    if args.kind == "time-translation":
        return groups.GalileoParams("time-translation", t0=args.T)
    if axis not in "xyz" or len(axis) != 1:
        raise DomainError(f"unknown axis {axis!r}")
    if args.kind == "spatial-translation":
        vec["xyz".index(axis)] = args.S
        return groups.GalileoParams("spatial-translation", shift=tuple(vec))
    vec["xyz".index(axis)] = args.V
    return groups.GalileoParams("inertial", velocity=tuple(vec))


def _grid(text: str) -> np.ndarray:
    try:
        start, stop, step = (float(v) for v in text.split(":"))
    except ValueError:
        raise DomainError(f"range {text!r} is not START:STOP:STEP") from None
    if not (step > 0 and stop >= start and math.isfinite(stop)):
        raise DomainError("range needs step > 0 and stop >= start")
    n = int(math.floor((stop - start) / step * (1 + 1e-12) + 1e-9)) + 1
    return start + step * np.arange(n)


_UNITS = {"": 1.0, "s": 1.0, "yr": cosmology.JULIAN_YEAR, "y": cosmology.JULIAN_YEAR}


def _duration(text: str) -> float:
    m = re.fullmatch(r"\s*([-+0-9.eE]+)\s*([a-z]*)\s*", text)
    if not m or m.group(2) not in _UNITS:
        raise DomainError(f"cannot parse duration {text!r} (units: s, yr)")
    try:
        return float(m.group(1)) * _UNITS[m.group(2)]
    except ValueError:
        raise DomainError(f"cannot parse duration {text!r}") from None


def _emit(args, header, rows, json_obj) -> str:
    if args.format == "csv":
        return io.dumps_csv(header, rows, args.precision)
    return io.dumps_json(json_obj, args.precision)


# -- commands --------------------------------------------------------------

def cmd_transform(args, p: ModelParameters) -> str:
    events = _events(args)
    if args.group == "galileo":
        g = _galileo(args)
        fn = lambda e: groups.galileo_apply(g, e)
    elif args.group == "poincare":
        gen = _generator(args.kind, args)
        fn = lambda e: groups.poincare_limit_apply(gen, e, p.c)
    elif args.matrix:
        element = io.loads_group_element(_read(args.matrix))
        fn = lambda e: groups.apply(element, e, p)
    else:
        element = groups.fantappie_generator(_generator(args.kind, args), p)
        fn = lambda e: groups.apply(element, e, p)
    out = []
    for i, e in enumerate(events):
        try:
            out.append(fn(e))
        except ProjectiveInfinity as exc:
            raise ProjectiveInfinity(f"projective infinity at event {i}") from exc
    return io.dumps_events(out, args.format, args.precision)


def cmd_compose(args, p: ModelParameters) -> str:
    elements = [groups.fantappie_generator(_parse_gen(s), p) for s in args.gen]
    elements += [io.loads_group_element(_read(f)) for f in args.element]
    result = groups.identity()
    for g in elements:
        result = groups.compose(g, result)
    return io.dumps_group_element(result, args.format, args.precision)


def cmd_distance(args, p: ModelParameters) -> str:
    A, B = metric.PlanePoint(*args.A), metric.PlanePoint(*args.B)
    if args.axis == "time":
        chord = metric.chord_endpoints(A, B, p) if A != B else None
        d = metric.time_distance(A, B, args.gauge, p).value
        ratio = 1.0 if chord is None else metric.cross_ratio(A, B, chord.N, chord.M, p)
    else:
        d = metric.space_distance(A, B, p).value
        ratio = None
    obj = {"axis": args.axis, "gauge": args.gauge,
           "A": {"x": A.x, "t": A.t}, "B": {"x": B.x, "t": B.t},
           "cross_ratio": ratio, "distance": d}
    header = ["axis", "gauge", "x_A", "t_A", "x_B", "t_B", "cross_ratio", "distance"]
    return _emit(args, header, [[args.axis, args.gauge, A.x, A.t, B.x, B.t, ratio, d]], obj)


def cmd_scales(args, p: ModelParameters) -> str:
    grid = _grid(args.range)
    if args.axis == "time":
        header = ["t_E", "t_G"]
        values = scales.em_time_to_grav(grid, args.gauge, p)
    else:
        header = ["x_E", "x_G"]
        values = scales.em_space_to_grav(grid, p)
    rows = list(zip(grid.tolist(), np.atleast_1d(values).tolist()))
    return _emit(args, header, rows, [dict(zip(header, r)) for r in rows])


def cmd_hubble(args, p: ModelParameters) -> str:
    states = [cosmology.hubble(x, args.tE, p) for x in args.x]
    rows = [[args.tE, s.H, x, s.V_E] for x, s in zip(args.x, states)]
    obj = {"t_E": args.tE, "H": states[0].H,
           "rows": [{"x_E": x, "V_E": s.V_E} for x, s in zip(args.x, states)]}
    return _emit(args, ["t_E", "H", "x_E", "V_E"], rows, obj)


def cmd_drift(args, p: ModelParameters) -> str:
    if args.target is not None:
        target = _duration(args.target)
        t_E = cosmology.drift_horizon(target, args.gauge, p)
        years = cosmology.seconds_to_years(t_E)
        obj = {"gauge": args.gauge, "target_s": target, "t_E_s": t_E, "t_E_yr": years}
        return _emit(args, ["gauge", "target_s", "t_E_s", "t_E_yr"],
                     [[args.gauge, target, t_E, years]], obj)
    reports = [cosmology.clock_drift(t, args.gauge, p) for t in args.tE]
    rows = [[r.t_E, r.t_G, r.drift, r.gauge.value] for r in reports]
    header = ["t_E", "t_G", "drift", "gauge"]
    return _emit(args, header, rows, [dict(zip(header, r)) for r in rows])


def cmd_limits(args, p: ModelParameters) -> str:
    try:
        Rs = [float(v) for v in args.Rs.split(",")]
    except ValueError:
        raise DomainError(f"cannot parse R list {args.Rs!r}") from None
    gen = _generator(args.kind, args)
    report = groups.limit_deviation(gen, Event(*args.event), Rs, c=p.c)
    slope = report.fitted_slope
    obj = {"kind": gen.kind.value, "R_values": list(report.R_values),
           "deviations": list(report.deviations), "fitted_slope": slope,
           "slope_status": "fitted" if slope is not None else "not-applicable"}
    rows = [[R, d] for R, d in zip(report.R_values, report.deviations)]
    return _emit(args, ["R", "deviation"], rows, obj)


COMMANDS = {
    "transform": cmd_transform, "compose": cmd_compose, "distance": cmd_distance,
    "scales": cmd_scales, "hubble": cmd_hubble, "drift": cmd_drift, "limits": cmd_limits,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = DEFAULT_FORMAT[args.command]
    try:
        io.check_precision(args.precision)
        p = ModelParameters(args.R, args.c)
        text = COMMANDS[args.command](args, p)
    except ProjectiveInfinity as exc:
        print(f"projkin: {exc}", file=sys.stderr)
        return EXIT_INFINITY
    except ConvergenceFailure as exc:
        print(f"projkin: convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (DomainError, NonOrthogonal) as exc:
        print(f"projkin: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
