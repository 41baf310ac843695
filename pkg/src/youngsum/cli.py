"""Command-line driver.

Exit status: 0 on success or pass, 1 when a tolerance check fails, 2 for
invalid parameters.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import Gaussian, format_rational, format_scalar, parse_rational, parse_scalar
from .errors import YoungsumError
from .graph import Jack, Kingman, Young, dim_kappa, kappa
from .identities import IDENTITIES, evaluate_identity, integral_check, recurrence_ratio
from .identities.evaluate import (
    GenericBox,
    HookRowsForm,
    KingmanTBox,
    PlancherelYoungBox,
    SpecialCase,
    StrictRowsForm,
    ThetaPlancherelHook,
    ZMeasureHook,
)
from .identities.report import describe
from .measures import KingmanT, PlancherelJack, ZMeasure, phi
from .partitions import parse_box, parse_partition
from .sampler import compare_empirical_analytic, entry_distribution

EXIT_OK, EXIT_TOLERANCE, EXIT_INVALID = 0, 1, 2

DEFAULT_MAX_LEVEL = 25
DEFAULT_TOL = "1e-6"
DEFAULT_TRIALS = 10_000
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 already; route it through UsageError so
    # the message is uniform
    def error(self, message):
        raise UsageError(message)


def _tolerance(text: str) -> Fraction:
    try:
        tol = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid tolerance {text!r}")
    if tol <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return tol


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


def _count(text: str) -> int:
    # accepts "1e4" as well as "10000"
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v.denominator != 1 or v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return int(v)


def _wrap(fn):
    def parse(text):
        try:
            return fn(text)
        except YoungsumError as exc:
            raise argparse.ArgumentTypeError(str(exc))

    parse.__name__ = fn.__name__
    return parse


_rational = _wrap(parse_rational)
_scalar = _wrap(parse_scalar)
_partition = _wrap(parse_partition)
_box = _wrap(parse_box)


def _add_output(p):
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--output", help="write the report here instead of standard output")


def _add_multiplicity(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--theta", type=_rational, help="Jack parameter")
    g.add_argument("--kingman", action="store_true", help="Kingman multiplicities")
    g.add_argument("--young", action="store_true", help="all multiplicities 1")


def _add_measure(p):
    p.add_argument("--measure", choices=("plancherel", "z", "kingman-t"), default="plancherel")
    p.add_argument("--theta", type=_rational, default=Fraction(1))
    p.add_argument("--z", type=_scalar)
    p.add_argument("--t", type=_rational)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="youngsum", description="Box-entry probabilities of random infinite Young tableaux.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dims", help="kappa-dimension of a diagram")
    p.add_argument("--partition", type=_partition, required=True)
    _add_multiplicity(p)
    _add_output(p)

    p = sub.add_parser("kappa", help="multiplicity of an edge mu -> lambda")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--lam", type=_partition, required=True)
    _add_multiplicity(p)
    _add_output(p)

    p = sub.add_parser("phi", help="harmonic function of a central measure")
    p.add_argument("--partition", type=_partition, required=True)
    _add_measure(p)
    _add_output(p)

    p = sub.add_parser("verify", help="sum an identity level by level and compare the residual to a tolerance")
    p.add_argument("--identity", choices=sorted(IDENTITIES), required=True)
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--l", type=_nonneg)
    p.add_argument("--box", type=_box)
    p.add_argument("--max-level", type=_nonneg, default=DEFAULT_MAX_LEVEL)
    p.add_argument("--tol", type=_tolerance, default=_tolerance(DEFAULT_TOL))
    _add_measure(p)
    _add_output(p)

    p = sub.add_parser("sample", help="Monte Carlo entry distribution of a box")
    p.add_argument("--box", type=_box, required=True)
    p.add_argument("--steps", type=_nonneg, default=DEFAULT_MAX_LEVEL)
    p.add_argument("--trials", type=_count, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=_nonneg, default=DEFAULT_SEED)
    _add_measure(p)
    _add_output(p)

    p = sub.add_parser("integral", help="quadrature check of the Kingman integral identity")
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--l", type=_count, required=True)
    p.add_argument("--t", type=_rational, required=True)
    p.add_argument("--tol", type=_tolerance, default=_tolerance(DEFAULT_TOL))
    _add_output(p)
    return parser


def _multiplicity(args):
    if args.kingman:
        return Kingman()
    if args.young:
        return Young()
    return Jack(args.theta if args.theta is not None else Fraction(1))


def _measure(args):
    if args.measure == "plancherel":
        return PlancherelJack(args.theta)
    if args.measure == "z":
        if args.z is None:
            raise UsageError("--measure z needs --z")
        return ZMeasure(args.theta, args.z)
    if args.t is None:
        raise UsageError("--measure kingman-t needs --t")
    return KingmanT(args.t)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--identity {args.identity} needs --{name}")


def _identity(args):
    name = args.identity
    if name == "plancherel-young-box":
        _need(args, "k", "l")
        return PlancherelYoungBox(args.k, args.l)
    if name == "theta-plancherel-hook":
        _need(args, "k")
        return ThetaPlancherelHook(args.k, args.theta)
    if name == "z-measure-hook":
        _need(args, "k", "z")
        return ZMeasureHook(args.k, args.theta, args.z)
    if name == "kingman-t":
        _need(args, "k", "l", "t")
        return KingmanTBox(args.k, args.l, args.t)
    if name == "special-case":
        _need(args, "box")
        return SpecialCase(args.box, args.theta)
    if name == "strict-rows":
        _need(args, "k")
        return StrictRowsForm(args.k)
    if name == "hook-rows":
        _need(args, "k")
        return HookRowsForm(args.k)
    _need(args, "box")
    return GenericBox(_measure(args), args.box)


def _echo(args) -> dict:
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in ("output", "format") or value is None or value is False:
            continue
        if isinstance(value, (Fraction, Gaussian)):
            value = format_scalar(value)
        elif isinstance(value, tuple):
            value = ",".join(map(str, value)) or "-"
        out[key] = value
    return out


def _value_report(args, label, value) -> str:
    text = format_scalar(value)
    if args.format == "json":
        return json.dumps({"request": _echo(args), label: text}, indent=2) + "\n"
    if args.format == "csv":
        return f"{label}\n{text}\n"
    return f"{label} = {text}\n"


def _run_verify(args) -> tuple[str, int]:
    spec = _identity(args)
    report = evaluate_identity(spec, args.max_level)
    passed = report.residual < args.tol
    status = EXIT_OK if passed else EXIT_TOLERANCE
    verdict = "PASS" if passed else "FAIL"
    if args.format == "csv":
        return report.to_csv(), status
    if args.format == "json":
        payload = {
            "request": _echo(args),
            "pass": passed,
            "tolerance": format_rational(args.tol),
            "report": json.loads(report.to_structured()),
        }
        return json.dumps(payload, indent=2) + "\n", status
    tail = f"{verdict}: residual {float(report.residual):.6e} vs tolerance {float(args.tol):.3e}\n"
    return report.to_table() + tail, status


def _run_sample(args) -> tuple[str, int]:
    measure = _measure(args)
    hist = entry_distribution(measure, args.box, args.steps, args.trials, args.seed)
    if args.format == "csv":
        return hist.to_csv(), EXIT_OK
    rows = compare_empirical_analytic(hist, measure)
    if args.format == "json":
        payload = {
            "request": _echo(args),
            "histogram": hist.to_structured(),
            "comparison": [
                {"level": r.level, "count": r.count, "analytic": format_rational(r.analytic), "z_score": round(r.z_score, 12)}
                for r in rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n", EXIT_OK
    lines = [hist.to_table().rstrip("\n"), f"{'n':>5}  {'empirical':>10}  {'analytic':>10}  {'z':>8}"]
    for r in rows:
        lines.append(f"{r.level:>5}  {r.empirical:>10.6f}  {float(r.analytic):>10.6f}  {r.z_score:>8.3f}")
    return "\n".join(lines) + "\n", EXIT_OK


def _run_integral(args) -> tuple[str, int]:
    res = integral_check(args.k, args.l, args.t)
    diff = abs(res.value - res.target)
    passed = diff < float(args.tol)
    ratio = recurrence_ratio(args.k, args.l, args.t) if args.k >= 1 else None
    status = EXIT_OK if passed else EXIT_TOLERANCE
    if args.format == "json":
        payload = {"request": _echo(args), "value": res.value, "target": res.target, "difference": diff, "pass": passed}
        if ratio is not None:
            payload["ratio"] = ratio
            payload["ratio_target"] = args.k / float(args.t)
        return json.dumps(payload, indent=2) + "\n", status
    if args.format == "csv":
        return f"k,l,t,value,target,difference\n{args.k},{args.l},{format_rational(args.t)},{res.value!r},{res.target!r},{diff!r}\n", status
    lines = [f"value  = {res.value:.15g}", f"target = {res.target:.15g}", f"|diff| = {diff:.3e}"]
    if ratio is not None:
        lines.append(f"ratio a_k/a_(k-1) = {ratio:.15g} (k/t = {args.k / float(args.t):.15g})")
    lines.append("PASS" if passed else "FAIL")
    return "\n".join(lines) + "\n", status


def execute(args) -> tuple[str, int]:
    if args.command == "dims":
        return _value_report(args, "dim", dim_kappa(_multiplicity(args), args.partition)), EXIT_OK
    if args.command == "kappa":
        return _value_report(args, "kappa", kappa(_multiplicity(args), args.mu, args.lam)), EXIT_OK
    if args.command == "phi":
        return _value_report(args, "phi", phi(_measure(args), args.partition)), EXIT_OK
    if args.command == "verify":
        return _run_verify(args)
    if args.command == "sample":
        return _run_sample(args)
    return _run_integral(args)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, status = execute(args)
    except UsageError as exc:
        print(f"youngsum: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (YoungsumError, ValueError, ZeroDivisionError) as exc:
        print(f"youngsum: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
