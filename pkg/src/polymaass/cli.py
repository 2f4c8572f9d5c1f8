"""Command-line frontend for evaluation, table generation, and verification.

Subcommands
-----------
eval           doubly-completed series value at one (weight, s, z)
taylor         raw n-th s-derivative of the doubly-completed series
fourier-table  mode coefficients of the completed series as (n, j, re, im) rows
verify         run one or all identity-check suites
manifest       map every covered identity to the suite entries that test it

Conventions
-----------
Complex flags are decimal "re,im" pairs (a bare "re" means imaginary part 0).
CSV output uses '.' as decimal point, ',' as separator, and 17 significant
digits (round-trip-exact in binary64). Identical argv and seed produce
byte-identical output. POLYMAASS_CONFIG may name a JSON file supplying
defaults for any flag and for numeric Config fields; explicit flags win.

Exit codes: 0 success / all checks passed; 1 a check failed or the manifest
is incomplete; 2 usage error; 3 numeric error (pole, lost accuracy,
truncation that cannot meet tolerance, parameter degeneracy, overflow).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

from . import verify
from .config import DEFAULT, Config
from .eisenstein import (PointUHP, SpectralParam, default_policy,
                         doubly_completed_eval, taylor_coeff)
from .errors import (AccuracyError, DegenerateParameter, DomainError,
                     PoleError, TailError, ZeroArgument)
from .modes import eisenstein_expansion, expansion_to_json

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

_NUMERIC_ERRORS = (PoleError, AccuracyError, TailError, DegenerateParameter,
                   ZeroArgument, DomainError, OverflowError,
                   FloatingPointError, ZeroDivisionError)

_OUTPUT_CHOICES = ("json", "csv", "text")

# Flags the POLYMAASS_CONFIG file may default; everything else in that file
# must be a Config field name.
_ENV_FLAG_KEYS = ("weight", "s", "z", "s0", "order", "radius", "modes",
                  "tol", "suite", "seed", "threads", "output", "out")


class UsageError(Exception):
    """Bad flags or flag values; reported with the grammar at exit code 2."""


def _parse_complex(text: str) -> complex:
    parts = str(text).split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ValueError(f"expected a decimal 're,im' pair, got {text!r}")


def _complex_flag(text: str) -> complex:
    try:
        return _parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _even_weight_flag(text: str) -> int:
    value = int(text)
    if value % 2 != 0:
        raise argparse.ArgumentTypeError("weight must be even")
    return value


def _fmt17(x: float) -> str:
    return f"{float(x):.17g}"


# ---------------------------------------------------------------------------
# Environment defaults

def _coerce_env_value(key: str, raw):
    if key in ("weight", "order", "modes", "seed", "threads"):
        return int(raw)
    if key in ("radius", "tol"):
        return float(raw)
    if key in ("s", "z", "s0"):
        if isinstance(raw, str):
            return _parse_complex(raw)
        if isinstance(raw, (list, tuple)) and len(raw) == 2:
            return complex(float(raw[0]), float(raw[1]))
        if isinstance(raw, (int, float)):
            return complex(float(raw), 0.0)
        raise ValueError(f"cannot read {key!r} from config value {raw!r}")
    return str(raw)


def _load_env_defaults() -> tuple[dict, Config]:
    """Split the POLYMAASS_CONFIG file into flag defaults and a Config."""
    path = os.environ.get("POLYMAASS_CONFIG")
    if not path:
        return {}, DEFAULT
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read POLYMAASS_CONFIG file {path!r}: {exc}")
    if not isinstance(data, dict):
        raise UsageError("POLYMAASS_CONFIG must contain a JSON object")
    config_fields = {f.name for f in dataclasses.fields(Config)}
    flags: dict = {}
    overrides: dict = {}
    for key, raw in data.items():
        if key in _ENV_FLAG_KEYS:
            try:
                flags[key] = _coerce_env_value(key, raw)
            except (TypeError, ValueError) as exc:
                raise UsageError(f"bad value for {key!r} in POLYMAASS_CONFIG: {exc}")
        elif key in config_fields:
            overrides[key] = raw
        else:
            raise UsageError(f"unknown key {key!r} in POLYMAASS_CONFIG")
    config = DEFAULT.with_overrides(**overrides) if overrides else DEFAULT
    return flags, config


def _fill_from_env(args: argparse.Namespace, env_flags: dict) -> None:
    for key, value in env_flags.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)


# ---------------------------------------------------------------------------
# Validation helpers

def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join(missing))


def _checked_weight(weight: int) -> int:
    weight = int(weight)
    if weight % 2 != 0:
        raise UsageError("weight must be even")
    return weight


def _checked_point(z: complex) -> PointUHP:
    if not z.imag > 0.0:
        raise UsageError("z must lie in the upper half-plane (positive imaginary part)")
    return PointUHP(z.real, z.imag)


def _checked_output(args: argparse.Namespace, default: str) -> str:
    output = args.output if args.output is not None else default
    if output not in _OUTPUT_CHOICES:
        raise UsageError(f"output must be one of {', '.join(_OUTPUT_CHOICES)}")
    return output


def _emit(text: str, out_path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _policy(p: SpectralParam, z: PointUHP, tol: float | None, modes: int | None,
            config: Config):
    """Truncation for a single evaluation.

    Automatic mode counts get a small fixed headroom on top of the
    exponential-decay estimate (the mode coefficients grow polynomially);
    an explicit --modes wins as given.
    """
    target = config.default_tol if tol is None else float(tol)
    if not 0.0 < target < 1.0:
        raise UsageError("tol must lie in (0, 1)")
    pol = default_policy(p, z, target, config)
    if modes is not None:
        if modes < 1:
            raise UsageError("modes must be >= 1")
        return dataclasses.replace(pol, mode_count=int(modes))
    return dataclasses.replace(
        pol, mode_count=min(pol.mode_count + 8, config.max_mode_count))


# ---------------------------------------------------------------------------
# Subcommand handlers

def _cmd_eval(args: argparse.Namespace, config: Config) -> int:
    _require(args, "weight", "s", "z")
    weight = _checked_weight(args.weight)
    z = _checked_point(args.z)
    p = SpectralParam(weight, complex(args.s))
    output = _checked_output(args, "json")
    pol = _policy(p, z, args.tol, args.modes, config)
    res = doubly_completed_eval(p, z, pol, config)
    v = complex(res.value)
    if output == "json":
        text = json.dumps({"value": [v.real, v.imag],
                           "abs_error_estimate": res.abs_error_estimate,
                           "method": res.method}, indent=2)
    elif output == "csv":
        text = ("re,im,abs_error_estimate,method\n"
                f"{_fmt17(v.real)},{_fmt17(v.imag)},"
                f"{_fmt17(res.abs_error_estimate)},{res.method}")
    else:
        text = (f"value              = ({_fmt17(v.real)}, {_fmt17(v.imag)})\n"
                f"abs_error_estimate = {_fmt17(res.abs_error_estimate)}\n"
                f"method             = {res.method}")
    _emit(text, args.out)
    return EXIT_OK


def _cmd_taylor(args: argparse.Namespace, config: Config) -> int:
    _require(args, "weight", "s0", "z", "order")
    weight = _checked_weight(args.weight)
    z = _checked_point(args.z)
    order = int(args.order)
    if args.radius is not None:
        if not 0.0 < float(args.radius) <= 1.0:
            raise UsageError("radius must lie in (0, 1]")
        config = config.with_overrides(circle_radius=float(args.radius))
    if not 0 <= order <= config.max_order:
        raise UsageError(f"order must lie in [0, {config.max_order}]")
    p = SpectralParam(weight, complex(args.s0))
    output = _checked_output(args, "json")
    pol = _policy(p, z, args.tol, args.modes, config)
    value = complex(taylor_coeff(p, z, order, pol, config))
    method = "fourier_series" if order == 0 else "cauchy_circle"
    if output == "json":
        text = json.dumps({"value": [value.real, value.imag],
                           "order": order,
                           "method": method}, indent=2)
    elif output == "csv":
        text = ("order,re,im,method\n"
                f"{order},{_fmt17(value.real)},{_fmt17(value.imag)},{method}")
    else:
        text = (f"order  = {order}\n"
                f"value  = ({_fmt17(value.real)}, {_fmt17(value.imag)})\n"
                f"method = {method}")
    _emit(text, args.out)
    return EXIT_OK


def _cmd_fourier_table(args: argparse.Namespace, config: Config) -> int:
    _require(args, "weight", "s0")
    weight = _checked_weight(args.weight)
    n_modes = 12 if args.modes is None else int(args.modes)
    if n_modes < 1:
        raise UsageError("modes must be >= 1")
    p = SpectralParam(weight, complex(args.s0))
    output = _checked_output(args, "csv")
    exp = eisenstein_expansion(p, n_modes, config)
    if output == "json":
        text = expansion_to_json(exp)
    else:
        rows = json.loads(expansion_to_json(exp))["modes"]
        if output == "csv":
            lines = ["n,j,re,im"]
            for row in rows:
                lines.append(f"{row['n']},{row['j']},"
                             f"{_fmt17(row['c'][0])},{_fmt17(row['c'][1])}")
        else:
            lines = [f"{'n':>5}  {'j':>2}  {'re':>24}  {'im':>24}"]
            for row in rows:
                lines.append(f"{row['n']:>5}  {row['j']:>2}  "
                             f"{_fmt17(row['c'][0]):>24}  {_fmt17(row['c'][1]):>24}")
        text = "\n".join(lines)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, config: Config) -> int:
    known = verify.suite_names()
    if args.suite is None or args.suite == "all":
        names = list(known)
    elif args.suite in known:
        names = [args.suite]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; known suites: "
                         + ", ".join(known))
    weight = None if args.weight is None else _checked_weight(args.weight)
    threads = (os.cpu_count() or 1) if args.threads is None else int(args.threads)
    if threads < 1:
        raise UsageError("threads must be >= 1")
    output = _checked_output(args, "text")
    reports = verify.run_suites(names, seed=args.seed, config=config,
                                weight=weight, threads=threads)
    if output == "json":
        text = verify.reports_to_json(reports)
    elif output == "csv":
        lines = ["check,status,residual,tolerance"]
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            lines.append(f"{r.check_name},{status},"
                         f"{_fmt17(r.residual)},{_fmt17(r.tolerance)}")
        text = "\n".join(lines)
    else:
        text = verify.reports_to_table(reports)
    _emit(text, args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def _cmd_manifest(args: argparse.Namespace, config: Config) -> int:
    del config
    output = _checked_output(args, "text")
    data = verify.manifest()
    if output == "json":
        text = json.dumps(data, indent=2)
    elif output == "csv":
        lines = ["result,suite,check"]
        for row in data["results"]:
            for entry in row["entries"]:
                lines.append(f"{row['result']},{entry['suite']},{entry['check']}")
        text = "\n".join(lines)
    else:
        lines = []
        for row in data["results"]:
            covers = ", ".join(f"{e['suite']}/{e['check']}" for e in row["entries"])
            lines.append(f"{row['result']:<34} {covers}")
        lines.append("")
        lines.append(f"complete: {'yes' if data['complete'] else 'NO'}")
        for problem in data["problems"]:
            lines.append(f"problem: {problem}")
        text = "\n".join(lines)
    _emit(text, args.out)
    return EXIT_OK if data["complete"] else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# Parser

def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output", choices=_OUTPUT_CHOICES, default=None,
                     help="output format (default depends on the subcommand)")
    sub.add_argument("--out", default=None, metavar="PATH",
                     help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polymaass",
        description="Evaluate shifted polyharmonic Maass forms and verify "
                    "their defining identities.")
    subs = parser.add_subparsers(dest="command", required=True,
                                 metavar="{eval,taylor,fourier-table,verify,manifest}")

    p_eval = subs.add_parser("eval", help="evaluate the doubly-completed series")
    p_eval.add_argument("--weight", type=_even_weight_flag, default=None)
    p_eval.add_argument("--s", type=_complex_flag, default=None, metavar="RE,IM")
    p_eval.add_argument("--z", type=_complex_flag, default=None, metavar="RE,IM")
    p_eval.add_argument("--modes", type=int, default=None,
                        help="override the Fourier mode count")
    p_eval.add_argument("--tol", type=float, default=None,
                        help="target tolerance for truncation selection")
    _add_output_flags(p_eval)
    p_eval.set_defaults(handler=_cmd_eval)

    p_tay = subs.add_parser("taylor", help="raw n-th s-derivative at a base point")
    p_tay.add_argument("--weight", type=_even_weight_flag, default=None)
    p_tay.add_argument("--s0", type=_complex_flag, default=None, metavar="RE,IM")
    p_tay.add_argument("--z", type=_complex_flag, default=None, metavar="RE,IM")
    p_tay.add_argument("--order", type=int, default=None,
                       help="derivative order n")
    p_tay.add_argument("--radius", type=float, default=None,
                       help="Cauchy circle radius in s")
    p_tay.add_argument("--modes", type=int, default=None)
    p_tay.add_argument("--tol", type=float, default=None)
    _add_output_flags(p_tay)
    p_tay.set_defaults(handler=_cmd_taylor)

    p_tab = subs.add_parser("fourier-table",
                            help="mode coefficients of the completed series")
    p_tab.add_argument("--weight", type=_even_weight_flag, default=None)
    p_tab.add_argument("--s0", type=_complex_flag, default=None, metavar="RE,IM")
    p_tab.add_argument("--modes", type=int, default=None,
                       help="largest |n| tabulated (default 12)")
    _add_output_flags(p_tab)
    p_tab.set_defaults(handler=_cmd_fourier_table)

    p_ver = subs.add_parser("verify", help="run identity-check suites")
    p_ver.add_argument("--suite", default=None,
                       help="suite name, or 'all' (default)")
    p_ver.add_argument("--weight", type=_even_weight_flag, default=None,
                       help="restrict weight-ranging suites to one weight")
    p_ver.add_argument("--seed", type=int, default=None,
                       help="seed for the random parameter grids")
    p_ver.add_argument("--threads", type=int, default=None,
                       help="worker threads (default: available parallelism)")
    _add_output_flags(p_ver)
    p_ver.set_defaults(handler=_cmd_verify)

    p_man = subs.add_parser("manifest",
                            help="coverage map from identities to suite checks")
    _add_output_flags(p_man)
    p_man.set_defaults(handler=_cmd_manifest)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        env_flags, config = _load_env_defaults()
        _fill_from_env(args, env_flags)
        return args.handler(args, config)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        sys.stderr.write(parser.format_usage())
        return EXIT_USAGE
    except _NUMERIC_ERRORS as exc:
        sys.stderr.write(f"numeric error: {exc}\n")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
