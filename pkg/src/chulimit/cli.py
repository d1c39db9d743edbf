"""Command-line front end.

Exit status: 0 success, 1 validation failure (or a failed numerical solve),
2 input, parse or data error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from . import atomic_limits as atomic
from . import reports
from . import validation
from .catalog import builtin_transitions, dumps_emitter, get_emitter, load_emitter_file
from .constants import convert_length
from .errors import DataError, InputError, NumericError
from .radial_atoms import QuantumState, canonical_element, state_rms_radius

FORMATS = ("table", "csv", "json")

TABLE_CSV_HEADER = ("table", "row", "column", "computed", "published", "relative_deviation", "note", "flags")
EVAL_CSV_HEADER = ("label", "f", "delta_f", "a", "eta", "eta_sigma", "ka", "q_chl", "q_bw",
                   "efficiency_bound", "power_density_limit", "fom", "flags")
ATOMIC_CSV_HEADER = ("label", "state", "radius_source", "chu_radius", "frequency_hz", "q_chl",
                     "lifetime_bound_s", "dipole_bound_au", "a_mode", "a_at_dipole_bound")
VALIDATE_CSV_HEADER = ("id", "criterion", "status", "computed", "expected", "tolerance", "description", "detail")


def _sci(x) -> str:
    if x is None:
        return "-"
    return f"{x:.2e}"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else (repr(v) if isinstance(v, float) else v) for v in row])
    return buf.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# -- renderers -----------------------------------------------------------------

def render_table(table: reports.Table, fmt: str) -> str:
    if fmt == "json":
        return _json_text(table.as_dict())
    if fmt == "csv":
        rows = []
        for r in table.rows:
            flags = "; ".join(r.flags)
            for c in r.cells:
                rows.append((table.number, r.label, c.column, c.computed, c.published, c.deviation, c.note, flags))
        return _csv_text(TABLE_CSV_HEADER, rows)

    out = [f"Table {table.number}. {table.title}"]
    opts = ", ".join(f"{k}={v}" for k, v in table.options.items())
    if opts:
        out.append(f"({opts})")
    out.append(f"{'':2}{'column':24}{'computed':>11}{'published':>11}{'rel.dev':>10}  note")
    for r in table.rows:
        out.append(r.label + (f"  [{'; '.join(r.flags)}]" if r.flags else ""))
        for c in r.cells:
            dev = "-" if c.deviation is None else f"{c.deviation:+.1%}"
            out.append(f"{'':2}{c.column:24}{_sci(c.computed):>11}{_sci(c.published):>11}{dev:>10}  {c.note}")
    return "\n".join(out) + "\n"


def render_eval(row: reports.ReportRow, fmt: str) -> str:
    if fmt == "json":
        return _json_text(row.as_dict())
    values = {**row.inputs, **{c.column: c.computed for c in row.cells}}
    if fmt == "csv":
        return _csv_text(EVAL_CSV_HEADER, [(
            row.label, *(values.get(k) for k in EVAL_CSV_HEADER[1:-1]), "; ".join(row.flags)
        )])
    out = [row.label]
    for k in EVAL_CSV_HEADER[1:-1]:
        if values.get(k) is not None:
            out.append(f"  {k:22}{_sci(values[k])}")
    out.append("  flags: " + ("; ".join(row.flags) if row.flags else "none"))
    return "\n".join(out) + "\n"


def render_checks(checks: list[validation.Check], fmt: str) -> str:
    counts = validation.summary(checks)
    ok = counts[validation.FAIL] == 0
    if fmt == "json":
        return _json_text({"ok": ok, "summary": counts, "checks": [c.as_dict() for c in checks]})
    if fmt == "csv":
        return _csv_text(VALIDATE_CSV_HEADER, [
            (c.id, c.criterion, c.status, c.computed, c.expected, c.tolerance, c.description, c.detail)
            for c in checks
        ])
    out = []
    for c in checks:
        tag = {"pass": "PASS", "fail": "FAIL", "expected deviation": "EXPECTED"}[c.status]
        out.append(f"{tag:9}[{c.criterion}] {c.id}: {c.description}" + (f" -- {c.detail}" if c.detail else ""))
    out.append(
        f"{counts['pass']} passed, {counts['fail']} failed, "
        f"{counts['expected deviation']} expected deviations"
    )
    return "\n".join(out) + "\n"


# -- commands ------------------------------------------------------------------

def cmd_tables(args) -> int:
    table = reports.build_table(args.which, args.delta_f_interpretation, args.a_mode, args.radius_source)
    sys.stdout.write(render_table(table, args.format))
    return 0


def cmd_eval(args) -> int:
    rec = load_emitter_file(args.file)
    sys.stdout.write(render_eval(reports.evaluate_emitter(rec, args.delta_f_interpretation), args.format))
    return 0


def cmd_export(args) -> int:
    text = dumps_emitter(get_emitter(args.name))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_j(text: str) -> float:
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot read j from {text!r}; use e.g. 1.5 or 3/2") from None


def _default_transition(element: str, n: int, l: int, j):
    for t in builtin_transitions():
        if t.element != element:
            continue
        tn, tl, tj = t.upper_state
        if (tn, tl) == (n, l) and (element == "H" or tj == j):
            return t
        if element == "H" and (n, l) == (1, 0):
            return t
    return None


def cmd_atomic(args) -> int:
    element = canonical_element(args.element)
    j = None if element == "H" else _parse_j(args.j)
    state = QuantumState(element, args.n, args.l, j)
    if args.radius is not None:
        radius, source = args.radius, "given"
    else:
        radius, source = state_rms_radius(state), "computed"

    if args.wavelength_nm is not None:
        wavelength, label = args.wavelength_nm * 1e-9, f"{state} ({args.wavelength_nm:g} nm)"
    else:
        t = _default_transition(element, args.n, args.l, j)
        if t is None:
            raise DataError(f"no default transition for {state}; pass --wavelength-nm")
        wavelength, label = t.wavelength, t.label
    transition = atomic.AtomicTransition(label, wavelength, radius, element=element)
    rep = atomic.atomic_bounds(transition, args.a_mode)

    row = {
        "label": label,
        "state": str(state),
        "radius_source": source,
        "chu_radius": radius,
        "frequency_hz": rep.frequency,
        "q_chl": rep.q_chl,
        "lifetime_bound_s": rep.lifetime_bound,
        "dipole_bound_au": rep.dipole_bound,
        "a_mode": rep.a_coefficient_mode,
        "a_at_dipole_bound": rep.a_at_dipole_bound,
    }
    if args.format == "json":
        sys.stdout.write(_json_text(row))
    elif args.format == "csv":
        sys.stdout.write(_csv_text(ATOMIC_CSV_HEADER, [tuple(row[k] for k in ATOMIC_CSV_HEADER)]))
    else:
        sys.stdout.write(
            f"{label}: {state}\n"
            f"  Chu radius ({source}) {radius:.4g} a.u.\n"
            f"  Q_CHL                 {rep.q_chl:.3e}\n"
            f"  lifetime bound        {rep.lifetime_bound * 1e9:.3g} ns\n"
            f"  dipole bound          {rep.dipole_bound:.3g} a.u.\n"
            f"  A at dipole bound     {rep.a_at_dipole_bound:.3e} 1/s ({rep.a_coefficient_mode})\n"
        )
    return 0


def cmd_sweep(args) -> int:
    radius = None if args.radius is None else convert_length(args.radius, args.radius_unit)
    start, stop = args.start, args.stop
    if args.param == "radius":
        start, stop = convert_length(start, args.radius_unit), convert_length(stop, args.radius_unit)
    rows = reports.sweep(args.param, start, stop, args.steps, frequency=args.frequency,
                         bandwidth=args.bandwidth, radius=radius, scale=args.scale)
    if args.format == "json":
        sys.stdout.write(_json_text([dict(zip(reports.SWEEP_COLUMNS, r)) for r in rows]))
    else:
        sys.stdout.write(_csv_text(reports.SWEEP_COLUMNS, rows))
    return 0


def cmd_validate(args) -> int:
    fmt = "json" if args.json else args.format
    checks = validation.run_checks()
    sys.stdout.write(render_checks(checks, fmt))
    return 1 if any(c.failed for c in checks) else 0


# -- parser --------------------------------------------------------------------

def _global_options(defaults: bool) -> argparse.ArgumentParser:
    # Registered on the main parser and on every subcommand so the flags work
    # on either side of the subcommand name.
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default=d("table"), help="output format (default: table)")
    p.add_argument("--delta-f-interpretation", choices=reports.INTERPRETATIONS, default=d("primary"),
                   help="bandwidth reading for emitters that carry two (the ELF facility)")
    p.add_argument("--a-mode", choices=atomic.A_MODES, default=d("standard"),
                   help="Einstein A-coefficient convention")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chulimit",
        description="Chu-limit bounds and figures of merit for electrically small emitters.",
        parents=[_global_options(True)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_global_options(False)]

    p = sub.add_parser("tables", parents=common, help="recompute a reference table")
    p.add_argument("which", type=int, choices=(1, 2, 3))
    p.add_argument("--radius-source", choices=("catalog", "computed"), default="catalog",
                   help="table 3: radii used for the bounds")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("eval", parents=common, help="evaluate an emitter description file")
    p.add_argument("file")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("export", parents=common, help="write a builtin emitter as an emitter file")
    p.add_argument("name", help="ELF, VLF, LN or PZT")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("atomic", parents=common, help="lifetime and dipole bounds for an atomic state")
    p.add_argument("element", help="H, Rb87 or Cs")
    p.add_argument("n", type=int)
    p.add_argument("l", type=int)
    p.add_argument("j", help="total angular momentum, e.g. 1.5 or 3/2 (ignored for H)")
    p.add_argument("--radius", type=float, help="Chu radius in Bohr radii (default: compute it)")
    p.add_argument("--wavelength-nm", type=float, help="transition vacuum wavelength")
    p.set_defaults(func=cmd_atomic)

    p = sub.add_parser("sweep", parents=common, help="bound and power-density ceiling over a parameter grid")
    p.add_argument("--param", required=True, choices=("frequency", "radius", "bandwidth"))
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--scale", choices=("log", "linear"), default="log")
    p.add_argument("--frequency", type=float, help="fixed frequency, Hz")
    p.add_argument("--bandwidth", type=float, help="fixed 3-dB bandwidth, Hz")
    p.add_argument("--radius", type=float, help="fixed enclosing radius")
    p.add_argument("--radius-unit", choices=("m", "cm", "mile", "bohr"), default="m")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("validate", parents=common, help="run every reproduction check")
    p.add_argument("--json", action="store_true", help="same as --format json")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DataError) as exc:
        print(f"chulimit: error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"chulimit: numerical failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
