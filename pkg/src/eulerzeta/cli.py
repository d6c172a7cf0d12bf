"""Command-line interface.

Exit codes: 0 success / all checks pass, 1 a verification failed, 2 usage error.

Defaults can be set in ``./eulerzeta.toml`` (or ``--config PATH``) as
``key = value`` lines for ``digits``, ``lmax`` and ``max_quad_level``;
flags override them.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from eulerzeta import closed_form, exact_zeta, quadrature, series_engine
from eulerzeta.numeric_core import BigReal, PrecisionContext
from eulerzeta.report import FAIL, PASS, Report, ReportEntry
from eulerzeta.verify import run_suite, summary_lines

DEFAULTS = {"digits": 50, "lmax": 4, "max_quad_level": quadrature.MAX_LEVEL}
CONFIG_NAME = "eulerzeta.toml"


class UsageError(Exception):
    pass


def load_config(path: Path) -> Dict[str, int]:
    """Parse ``key = value`` integer settings; ``#`` starts a comment."""
    settings: Dict[str, int] = {}
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in DEFAULTS:
            raise UsageError(f"{path}:{lineno}: expected one of {sorted(DEFAULTS)} as key = value")
        try:
            settings[key] = int(value.strip())
        except ValueError:
            raise UsageError(f"{path}:{lineno}: {key} must be an integer") from None
    return settings


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so ``run`` controls the streams and exit code."""

    def error(self, message: str):
        raise UsageError(message, self)


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="eulerzeta",
        description="Zeta values and log-sine integrals, computed and cross-checked.",
    )
    parser.add_argument("--config", type=Path, help=f"settings file (default ./{CONFIG_NAME})")
    sub = parser.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeta", help="zeta(2L) or zeta(2L+1)")
    which = z.add_mutually_exclusive_group(required=True)
    which.add_argument("--even", type=_positive, metavar="L", help="zeta(2L)")
    which.add_argument("--odd", type=_positive, metavar="L", help="zeta(2L+1)")
    z.add_argument("--digits", type=_positive)
    z.add_argument("--method", choices=["main", "euler", "ck", "oracle"], default="main")
    z.add_argument("--exact", action="store_true", help="even values only: print r * pi^2L")
    z.add_argument("--json", metavar="PATH")

    i = sub.add_parser("integral", help="int_0^{pi/2} x^(2L-1) log(sin x) dx")
    i.add_argument("--l", type=_positive, required=True, dest="l")
    i.add_argument("--method", choices=["closed", "series", "quadrature"], default="closed")
    i.add_argument("--digits", type=_positive)
    i.add_argument("--exact", action="store_true", help="closed method only: print the symbolic form")
    i.add_argument("--json", metavar="PATH")

    d = sub.add_parser("identity", help="log(pi/e) as a series in the even zeta values")
    d.add_argument("--log-pi", action="store_true", required=True)
    d.add_argument("--digits", type=_positive)
    d.add_argument("--json", metavar="PATH")

    v = sub.add_parser("verify", help="run every cross-check")
    v.add_argument("--digits", type=_positive)
    v.add_argument("--lmax", type=_positive)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--json", metavar="PATH")

    t = sub.add_parser("table", help="exact coefficients r_l with zeta(2l) = r_l pi^(2l)")
    t.add_argument("--even-max", type=_positive, required=True, metavar="L")
    return parser


def _settings(args: argparse.Namespace) -> Dict[str, int]:
    settings = dict(DEFAULTS)
    path = args.config if args.config is not None else Path(CONFIG_NAME)
    if args.config is not None or path.exists():
        if not path.exists():
            raise UsageError(f"config file {path} not found")
        settings.update(load_config(path))
    for key in ("digits", "lmax"):
        if getattr(args, key, None) is not None:
            settings[key] = getattr(args, key)
    return settings


def _entry(quantity: str, method: str, digits: int, x: BigReal, terms: int, start: float) -> ReportEntry:
    return ReportEntry(
        quantity=quantity,
        method=method,
        digits=digits,
        value=x.to_decimal(digits),
        error_bound=x.err_str(),
        terms_or_level=terms,
        elapsed_ms=int(round((time.perf_counter() - start) * 1000)),
    )


def _emit(report: Report, json_path: Optional[str], out) -> None:
    if json_path is None:
        return
    text = report.to_json()
    if json_path == "-":
        out.write(text)
    else:
        Path(json_path).write_text(text)


def _plain(e: ReportEntry) -> str:
    return f"{e.quantity} = {e.value} ± {e.error_bound}"


def cmd_zeta(args, settings, out) -> int:
    digits = settings["digits"]
    if args.even is not None:
        l = args.even
        if args.exact:
            out.write(f"{exact_zeta.even_coeff(l)} * pi^{2 * l}\n")
            return 0
        if args.method not in ("main", "oracle"):
            raise UsageError(f"--method {args.method} applies to odd values only")
        ctx = PrecisionContext(digits)
        start = time.perf_counter()
        if args.method == "main":
            x = exact_zeta.zeta_even(l, ctx)
        else:
            x = series_engine.zeta_direct(2 * l, ctx)
        entry = _entry(f"zeta({2 * l})", args.method, digits, x, l, start)
    else:
        l = args.odd
        if args.exact:
            raise UsageError("--exact applies to even values only")
        if args.method == "euler" and l != 1:
            raise UsageError("--method euler only gives zeta(3) (--odd 1)")
        ctx = PrecisionContext(digits)
        start = time.perf_counter()
        compute = {
            "main": lambda: series_engine.zeta_odd_main(l, ctx),
            "euler": lambda: series_engine.zeta3_euler(ctx),
            "ck": lambda: series_engine.zeta_odd_ck(l, ctx),
            "oracle": lambda: series_engine.zeta_odd_oracle(l, ctx),
        }[args.method]
        x = compute()
        entry = _entry(f"zeta({2 * l + 1})", args.method, digits, x, series_engine.default_terms(ctx), start)
    report = Report([entry])
    if args.json != "-":
        out.write(_plain(entry) + "\n")
    _emit(report, args.json, out)
    return 0


def cmd_integral(args, settings, out) -> int:
    digits, l = settings["digits"], args.l
    if args.exact:
        if args.method != "closed":
            raise UsageError("--exact applies to --method closed only")
        out.write(f"{closed_form.euler_integral_closed_form(l)}\n")
        return 0
    ctx = PrecisionContext(digits)
    start = time.perf_counter()
    if args.method == "closed":
        odd = {2 * k + 1: series_engine.zeta_odd_main(k, ctx) for k in range(1, l + 1)}
        x = closed_form.eval_symbolic(closed_form.euler_integral_closed_form(l), odd, ctx)
        terms = series_engine.default_terms(ctx)
    elif args.method == "series":
        x = series_engine.euler_integral_series(l, ctx)
        terms = series_engine.default_terms(ctx)
    else:
        q = quadrature.euler_integral_quad(l, ctx, settings["max_quad_level"])
        x, terms = q.value, q.level
    entry = _entry(f"euler_integral(l={l})", args.method, digits, x, terms, start)
    if args.json != "-":
        out.write(_plain(entry) + "\n")
    _emit(Report([entry]), args.json, out)
    return 0


def cmd_identity(args, settings, out) -> int:
    digits = settings["digits"]
    ctx = PrecisionContext(digits)
    start = time.perf_counter()
    series = series_engine.log_pi_series(ctx)
    lhs, rhs = series_engine.log_pi_identity(ctx)
    ok = lhs.overlaps(rhs)
    left = _entry("log(pi) - 1", "constants", digits, lhs, 0, start)
    right = _entry("log(pi/e)", "series", digits, rhs, series.terms_used, start)
    right.status = PASS if ok else FAIL
    right.reference = left.value
    right.reference_method = "log(pi) - 1"
    if args.json != "-":
        out.write(_plain(left) + "\n")
        out.write(_plain(right) + "\n")
        out.write(f"{right.status} series and log(pi) - 1 agree within bounds\n")
    _emit(Report([left, right]), args.json, out)
    return 0 if ok else 1


def cmd_verify(args, settings, out) -> int:
    report = run_suite(settings["digits"], settings["lmax"], settings["max_quad_level"], args.jobs)
    if args.json != "-":
        for line in summary_lines(report):
            out.write(line + "\n")
        n_fail = sum(e.status == FAIL for e in report.entries)
        out.write(f"{len(report.entries) - n_fail} passed, {n_fail} failed\n")
    _emit(report, args.json, out)
    return 0 if report.passed else 1


def cmd_table(args, settings, out) -> int:
    for l in range(args.even_max + 1):
        out.write(f"{l} {exact_zeta.even_coeff(l)}\n")
    return 0


COMMANDS = {
    "zeta": cmd_zeta,
    "integral": cmd_integral,
    "identity": cmd_identity,
    "verify": cmd_verify,
    "table": cmd_table,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        culprit = exc.args[1] if len(exc.args) > 1 else parser
        culprit.print_usage(err)
        err.write(f"{culprit.prog}: error: {exc.args[0]}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        settings = _settings(args)
        # series need ~1.661 * digits + 10 even coefficients
        needed = series_engine.default_terms(PrecisionContext(settings["digits"]))
        needed = max(needed, getattr(args, "even_max", 0) or 0, getattr(args, "even", 0) or 0)
        exact_zeta.set_table_limit(max(exact_zeta.L_MAX_DEFAULT, needed))
        return COMMANDS[args.command](args, settings, out)
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"eulerzeta: error: {exc}\n")
        return 2


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
