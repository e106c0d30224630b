"""wedgent command line.

Usage:
    wedgent measure state.json [--norm paper|unit_max] [--format table|json]
    wedgent named ghz:4 | w:3 | bell | maxent:3 | product:2,3
    wedgent dump ghz:3 [-o ghz3.json]
    wedgent selftest --seed 42 --trials 200
    wedgent experiment --dims 2,2,2 --trials 1000 [--filter random|unitary|identity]

Exit codes: 0 success, 2 usage error, 3 input/parse error, 4 selftest failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .checks import monotone_experiment, run_selftest
from .errors import ArgumentError, DegenerateStateError, DimensionError, StateFormatError
from .measures import (
    MeasureConfig,
    Normalization,
    bipartite_measure,
    measure_auto,
    multipartite_measure,
    multiqubit_measure,
    two_qubit_concurrence,
)
from .oracle import oracle_measure
from .stateio import dumps_state, load_state
from .states import PureState, named_state

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_SELFTEST = 4


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


def parse_state_name(spec: str) -> PureState:
    """``"ghz:4"`` -> named_state("ghz", 4); ``"product:2,3"`` -> product on dims (2, 3)."""
    name, _, arg = spec.partition(":")
    try:
        if name == "product":
            return named_state(name, [int(x) for x in arg.split(",")])
        if arg:
            return named_state(name, int(arg))
        return named_state(name)
    except (ArgumentError, ValueError) as exc:
        raise UsageError(f"bad state name {spec!r}: {exc}") from exc


def _dims_arg(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"dims must be comma-separated integers, got {text!r}") from None
    if not dims or any(d < 1 for d in dims):
        raise argparse.ArgumentTypeError(f"invalid dims {text!r}")
    return dims


def _config(args) -> MeasureConfig:
    return MeasureConfig(Normalization(args.norm), args.norm_tolerance)


def build_report(state: PureState, config: MeasureConfig, tolerance: float) -> dict:
    if state.num_subsystems < 2:
        raise InputError(f"measures need at least 2 subsystems, got dims {list(state.dims)}")
    if state.norm == 0.0:
        raise InputError("state vector is zero")
    primary = measure_auto(state, config)
    measures = {}
    if state.num_subsystems == 2:
        measures["bipartite"] = bipartite_measure(state, config).value
    if all(n == 2 for n in state.dims):
        measures["multiqubit"] = multiqubit_measure(state, config).value
    full = multipartite_measure(state, config)
    measures["multipartite"] = full.value
    if state.dims == (2, 2):
        measures["two_qubit_concurrence"] = two_qubit_concurrence(state, config.norm_tolerance)
    oracle = oracle_measure(state, config)
    discrepancy = abs(primary.value - oracle)
    return {
        "input": {
            "dims": list(state.dims),
            "norm": state.norm,
            "renormalized": primary.renormalized,
        },
        "primary": primary.path,
        "measures": measures,
        "mode_contributions": list(full.mode_contributions),
        "oracle": {
            "value": oracle,
            "discrepancy": discrepancy,
            "within_tolerance": discrepancy <= tolerance,
        },
        "config": {
            "normalization": config.normalization.value,
            "norm_tolerance": config.norm_tolerance,
            "tolerance": tolerance,
        },
    }


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.15g}"
    return str(x)


def format_report_table(report: dict) -> str:
    inp = report["input"]
    lines = [
        f"dims            {inp['dims']}",
        f"norm            {_fmt(inp['norm'])}",
        f"renormalized    {inp['renormalized']}",
        f"normalization   {report['config']['normalization']}",
        "",
        "measure                  value",
    ]
    for name, value in report["measures"].items():
        mark = " *" if name == report["primary"] else ""
        lines.append(f"  {name:<22} {_fmt(value)}{mark}")
    lines.append("")
    lines.append("mode  contribution")
    for j, c in enumerate(report["mode_contributions"], 1):
        lines.append(f"  {j:<3} {_fmt(c)}")
    orc = report["oracle"]
    lines += [
        "",
        f"oracle          {_fmt(orc['value'])}",
        f"discrepancy     {orc['discrepancy']:.3e} ({'ok' if orc['within_tolerance'] else 'EXCEEDS'} "
        f"tolerance {report['config']['tolerance']:.1e})",
    ]
    return "\n".join(lines)


def _emit(obj: dict, fmt: str, table) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(table(obj))


def cmd_measure(args) -> int:
    try:
        state = load_state(args.path)
    except FileNotFoundError:
        raise InputError(f"no such file: {args.path}") from None
    except StateFormatError as exc:
        raise InputError(f"parse error in {args.path}: {exc}") from exc
    except DimensionError as exc:
        raise InputError(f"dimension mismatch in {args.path}: {exc}") from exc
    except ArgumentError as exc:
        raise InputError(f"invalid state in {args.path}: {exc}") from exc
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {args.path}: {exc}") from exc
    _emit(build_report(state, _config(args), args.tolerance), args.format, format_report_table)
    return EXIT_OK


def cmd_named(args) -> int:
    state = parse_state_name(args.name)
    _emit(build_report(state, _config(args), args.tolerance), args.format, format_report_table)
    return EXIT_OK


def cmd_dump(args) -> int:
    text = dumps_state(parse_state_name(args.name))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _format_selftest(summary: dict) -> str:
    lines = [f"selftest seed={summary['seed']} trials={summary['trials']}"]
    for s in summary["suites"]:
        status = "PASS" if s["failed"] == 0 else "FAIL"
        lines.append(
            f"  {status} {s['name']:<26} passed={s['passed']:<5} failed={s['failed']:<5} "
            f"worst={s['worst']:.3e} (tol {s['tolerance']:.0e})"
        )
    lines.append("all passed" if summary["ok"] else "FAILURES")
    return "\n".join(lines)


def cmd_selftest(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    suites = run_selftest(args.seed, args.trials, _config(args), args.tolerance)
    summary = {
        "seed": args.seed,
        "trials": args.trials,
        "suites": [s.as_dict() for s in suites],
        "ok": all(s.ok for s in suites),
    }
    _emit(summary, args.format, _format_selftest)
    return EXIT_OK if summary["ok"] else EXIT_SELFTEST


def _format_experiment(stats: dict) -> str:
    q = stats["ratio_quantiles"]
    return "\n".join([
        f"local filtering experiment dims={stats['dims']} filter={stats['filter']} "
        f"seed={stats['seed']} trials={stats['trials']}",
        f"  ratio E(after)/E(before): min={stats['ratio_min']:.6f} mean={stats['ratio_mean']:.6f} "
        f"max={stats['ratio_max']:.6f}",
        "  quantiles: " + " ".join(f"{k}={v:.6f}" for k, v in q.items()),
        f"  fraction decreased: {stats['fraction_decreased']:.4f}",
        f"  max |ratio - 1|: {stats['max_abs_deviation_from_1']:.3e}",
    ])


def cmd_experiment(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if len(args.dims) < 2:
        raise UsageError("--dims needs at least 2 subsystems")
    stats = monotone_experiment(args.seed, args.trials, args.dims, args.filter,
                                _config(args), args.tolerance)
    _emit(stats, args.format, _format_experiment)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--norm", choices=[n.value for n in Normalization], default="paper",
                        help="normalization constant convention (default: paper)")
    common.add_argument("--format", choices=["table", "json"], default="table")
    common.add_argument("--tolerance", type=float, default=1e-10,
                        help="oracle / invariant tolerance (default: 1e-10)")
    common.add_argument("--norm-tolerance", type=float, default=1e-9,
                        help="renormalize inputs whose norm is off by more than this")

    parser = argparse.ArgumentParser(prog="wedgent", description="Wedge-product entanglement measures.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", parents=[common], help="measure a state JSON file")
    p.add_argument("path")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("named", parents=[common], help="measure a named state (ghz:3, w:3, bell, maxent:3)")
    p.add_argument("name")
    p.set_defaults(func=cmd_named)

    p = sub.add_parser("dump", help="write a named state as a JSON state file")
    p.add_argument("name")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("selftest", parents=[common], help="run the randomized invariant suites")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("experiment", parents=[common], help="local filtering ratio statistics")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--dims", type=_dims_arg, default=(2, 2, 2))
    p.add_argument("--filter", choices=["random", "unitary", "identity"], default="random")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "norm_tolerance") and not args.norm_tolerance > 0:
        parser.error("--norm-tolerance must be > 0")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"wedgent: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, DegenerateStateError) as exc:
        print(f"wedgent: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
