"""``wignercat`` command line: stats, figure, sweep, verify, wavefunction.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import figures, observables, oracle, position, verify
from .catstate import Parity, WignerCatSpec
from .errors import DegenerateInputError, DomainError, TruncationLeakageError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _phi(text: str) -> float:
    """Accept plain floats or simple multiples of pi such as ``pi/2``."""
    t = text.strip().lower().replace(" ", "")
    if "pi" not in t:
        return float(t)
    num, _, den = t.partition("/")
    coef = num.replace("*", "").replace("pi", "")
    coef = 1.0 if coef in ("", "+") else -1.0 if coef == "-" else float(coef)
    return coef * math.pi / (float(den) if den else 1.0)


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _phi_list(text: str) -> list[float]:
    return [_phi(x) for x in text.split(",") if x.strip()]


def _jsonable(value):
    """NaN/inf are not valid JSON; emit them as null."""
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="")


def _spec(args) -> WignerCatSpec:
    return WignerCatSpec(args.lam, args.w_abs, args.phi, Parity(args.parity))


def cmd_stats(args) -> int:
    spec = _spec(args)
    closed = observables.statistics(spec)
    if not args.oracle:
        if args.format == "json":
            _write(json.dumps(_jsonable(closed.as_dict()), indent=1) + "\n", args.out)
        else:
            lines = [f"{k:<20} {v if isinstance(v, str) else figures.fmt(v)}" for k, v in closed.as_dict().items()]
            _write("\n".join(lines) + "\n", args.out)
        return EXIT_OK

    brute = oracle.oracle_statistics(spec, args.truncation)
    rows = []
    for name in observables.StatisticsReport.numeric_fields():
        c, b = getattr(closed, name), getattr(brute, name)
        rows.append((name, c, b, oracle.relative_deviation(c, b)))
    worst = max(r[3] for r in rows)
    if args.format == "json":
        doc = {
            "spec": {"lambda": spec.lam, "w_abs": spec.w_abs, "phi": spec.phi, "parity": spec.parity.value},
            "fields": {n: {"closed": c, "oracle": b, "deviation": d} for n, c, b, d in rows},
            "max_deviation": worst,
        }
        _write(json.dumps(_jsonable(doc), indent=1) + "\n", args.out)
    else:
        lines = [f"{'field':<20} {'closed':>24} {'oracle':>24} {'deviation':>10}"]
        lines += [f"{n:<20} {figures.fmt(c):>24} {figures.fmt(b):>24} {d:>10.2e}" for n, c, b, d in rows]
        lines.append(f"max relative deviation: {worst:.3e}")
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_figure(args) -> int:
    base = figures.FIGURES[args.id]
    overrides = {}
    if args.lambdas is not None:
        overrides["lambdas"] = tuple(args.lambdas)
    if args.phis is not None:
        overrides["phis"] = tuple(args.phis)
    for key in ("w_min", "w_max", "w_steps"):
        if getattr(args, key) is not None:
            overrides[key] = getattr(args, key)
    fig = figures.FigureDef(**{**base.__dict__, **overrides})
    header, rows = figures.figure_table(fig)
    meta = {"figure": args.id, "title": fig.title, "quantity": fig.quantity, "parity": fig.parity.value}
    _write(figures.render_table(header, rows, args.format, meta), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = figures.SweepConfig(
        lambda_list=args.lambdas,
        w_min=args.w_min,
        w_max=args.w_max,
        w_steps=args.w_steps,
        phi=args.phi,
        parity=args.parity,
        output_path=args.out,
        format=args.format,
    )
    _write(figures.render_sweep(figures.run_sweep(config), config.format), config.output_path)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify.run(args.only, args.tol)
    if args.format == "json":
        _write(json.dumps(report.to_dict(), indent=1) + "\n", args.out)
    else:
        _write(report.render(verbose=args.verbose) + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_wavefunction(args) -> int:
    if args.points < 2 or not args.x_min < args.x_max:
        raise ValueError("need x_min < x_max and at least 2 points")
    xs = np.linspace(args.x_min, args.x_max, args.points)
    if args.n is not None:
        values = position.psi(args.n, args.lam, xs)
        header, cols = ["x", "psi"], [xs, values]
    else:
        sample = position.cat_wavefunction(_spec(args), xs, args.truncation)
        header, cols = ["x", "re", "im"], [xs, sample.values.real, sample.values.imag]
    rows = [list(r) for r in zip(*cols)]
    if args.format == "json":
        _write(json.dumps({"columns": header, "rows": [[float(v) for v in r] for r in rows]}) + "\n", args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([[figures.fmt(v) for v in r] for r in rows])
        _write(buf.getvalue(), args.out)
    return EXIT_OK


def _add_state(p: argparse.ArgumentParser, w_required: bool = True) -> None:
    p.add_argument("--lambda", dest="lam", type=float, required=True, help="deformation parameter")
    p.add_argument("--w-abs", type=float, required=w_required, default=None, help="|w|, modulus of the eigenvalue label")
    p.add_argument("--phi", type=_phi, default=0.0, help="phase of w (float or e.g. pi/2)")
    p.add_argument("--parity", choices=[p.value for p in Parity], default="even")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None, help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wignercat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="closed-form statistics of one state")
    _add_state(p)
    p.add_argument("--oracle", action="store_true", help="also compute by truncated-Fock brute force")
    p.add_argument("--truncation", type=int, default=None, help="Fock cutoff for --oracle")
    _add_output(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("figure", help="CSV table behind one figure panel")
    p.add_argument("--id", required=True, choices=sorted(figures.FIGURES))
    p.add_argument("--lambdas", type=_float_list, default=None, help="comma-separated lambda override")
    p.add_argument("--phis", type=_phi_list, default=None, help="comma-separated phase override")
    p.add_argument("--w-min", type=float, default=None)
    p.add_argument("--w-max", type=float, default=None)
    p.add_argument("--w-steps", type=int, default=None)
    _add_output(p)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("sweep", help="full statistics rows over lambda x |w|")
    p.add_argument("--lambdas", type=_float_list, required=True)
    p.add_argument("--w-min", type=float, default=0.05)
    p.add_argument("--w-max", type=float, default=4.0)
    p.add_argument("--w-steps", type=int, default=200)
    p.add_argument("--phi", type=_phi, default=0.0)
    p.add_argument("--parity", choices=[p.value for p in Parity], default="even")
    _add_output(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--only", action="append", choices=sorted(verify.SUITES), help="repeatable suite filter")
    p.add_argument("--tol", type=float, default=None, help="force one tolerance for every check")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None)
    p.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("wavefunction", help="dump psi_n(x) or a cat wavefunction on a grid")
    _add_state(p, w_required=False)
    p.add_argument("--n", type=int, default=None, help="basis index (omit for the cat state)")
    p.add_argument("--x-min", type=float, default=-6.0)
    p.add_argument("--x-max", type=float, default=6.0)
    p.add_argument("--points", type=int, default=400)
    p.add_argument("--truncation", type=int, default=None)
    _add_output(p)
    p.set_defaults(func=cmd_wavefunction)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "wavefunction" and args.n is None and args.w_abs is None:
        parser.error("wavefunction needs --n or --w-abs")
    try:
        return args.func(args)
    except (DomainError, DegenerateInputError, TruncationLeakageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
