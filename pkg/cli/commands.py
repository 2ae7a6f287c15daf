"""
commands.py
------------------------------------
Command-line front end: python -m cli <command> [flags]
------------------------------------
Every command prints one JSON report on stdout and exits with
0 (holds), 1 (refuted), 2 (inconclusive) or 3 (usage / input error).
"""

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from pydantic import ValidationError

from cli.explore import default_grid, explore_c1, random_grid
from cli.schemas import EXIT_CODES, Command, ExitCode, Outcome, Report
from core.config import Settings, load_settings
from core.errors import SpecError, VerificationError
from core.logger import configure_logging, get_logger
from core.rational import parse_rational
from quotients.conditions import (
    d_inequalities,
    hutchinson_holds,
    hutchinson_sections_check,
    lemma1_chain,
    second_quotients,
    th1_audit,
)
from realroots.analysis import classify_theorem_st1
from realroots.schemas import St1Case
from seqcore.materialize import materialize
from seqcore.operators import as_polynomial, hadamard
from seqcore.schemas import AsweFiniteSpec, ExplicitSpec, RationalGFSpec, SequenceSpec, dump_spec, parse_spec
from theta.certificate import verify_th3
from theta.constants import estimate_constant, stability_rerun
from theta.schemas import ConstantName, PrecisionConfig, Verdict as ThetaVerdict
from toeplitz.minors import check_tp_window
from toeplitz.schemas import Verdict as TPVerdict

logger = get_logger("cli")

HandlerResult = Tuple[Outcome, Any]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}")


# ==========================================================
# ✅ ARGUMENTS
# ==========================================================
def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--spec", help="SequenceSpec as inline JSON")
    common.add_argument("--file", help="Path to a JSON file holding the SequenceSpec")
    common.add_argument("--config", help="YAML settings file (default: $TPV_CONFIG or config.yaml)")
    common.add_argument("--seed", type=int)
    common.add_argument("--precision-bits", type=int, dest="precision_bits")
    common.add_argument("--tol")
    common.add_argument("--order", type=int)
    common.add_argument("--window", type=int)
    common.add_argument("--nmax", type=int)
    common.add_argument("--lmax", type=int)
    common.add_argument("--trunc", type=int)
    common.add_argument("--workers", type=int)
    common.add_argument("--progress", action="store_true", default=None)
    common.add_argument("--log-level", dest="log_level")

    parser = _Parser(prog="tpverify", description="Exact verification toolkit for totally positive sequences.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser(Command.CHECK_TP.value, parents=[common], help="All minors of order <= --order on [0, --window]")
    sub.add_parser(Command.QUOTIENTS.value, parents=[common], help="Second quotients q_2..q_nmax")
    sub.add_parser(Command.HUTCHINSON.value, parents=[common], help="q_n >= 4 and the section check")
    sub.add_parser(Command.LEMMA1.value, parents=[common], help="Necessary chain on the quotients")
    sub.add_parser(Command.D_INEQ.value, parents=[common], help="Principal-minor inequalities")
    sub.add_parser(Command.VERIFY_ST1.value, parents=[common], help="Derivative of a one-pole generating function")
    sub.add_parser(Command.TH1_AUDIT.value, parents=[common], help="Remainder truncation audit")

    th3 = sub.add_parser(Command.VERIFY_TH3.value, parents=[common], help="Sign-alternation certificates")
    th3.add_argument("--a2", required=True, help="a^2 as a rational literal")

    est = sub.add_parser(Command.ESTIMATE.value, parents=[common], help="Bisection for a threshold constant")
    est.add_argument("name", choices=[c.value for c in ConstantName])
    est.add_argument("--degree", type=int, help="Truncation degree for q_infinity")
    est.add_argument("--no-rerun", action="store_true", dest="no_rerun", help="Skip the higher-degree rerun")

    exp = sub.add_parser(Command.EXPLORE_C1.value, parents=[common], help="Bounded counterexample search")
    exp.add_argument("--grid", help="JSON list of SequenceSpecs for B (default: a small TP-infinity grid)")
    exp.add_argument("--random-grid", type=int, default=0, dest="random_grid",
                     help="Add K seeded FromQuotients instances with q_n in [4, 10]")

    had = sub.add_parser(Command.HADAMARD.value, parents=[common], help="Termwise product of two sequences")
    had.add_argument("--right", required=True, help="Second SequenceSpec as inline JSON")
    return parser


_SETTING_FLAGS = ("order", "window", "nmax", "lmax", "trunc", "precision_bits", "tol", "seed", "workers",
                  "progress", "log_level")


def _settings(args: argparse.Namespace) -> Settings:
    base = load_settings(args.config)
    overrides = {k: getattr(args, k) for k in _SETTING_FLAGS if getattr(args, k, None) is not None}
    if not overrides:
        return base
    try:
        return Settings.model_validate({**base.model_dump(), **overrides})
    except ValidationError as e:
        raise UsageError(f"Invalid flag value: {e.errors(include_url=False)}") from e


def _spec(args: argparse.Namespace) -> SequenceSpec:
    if args.spec and args.file:
        raise UsageError("Give either --spec or --file, not both")
    if args.file:
        path = Path(args.file)
        if not path.exists():
            raise UsageError(f"Spec file not found: {path}")
        return parse_spec(path.read_text())
    if args.spec:
        return parse_spec(args.spec)
    raise UsageError("A sequence spec is required (--spec or --file)")


# ==========================================================
# ✅ HANDLERS
# ==========================================================
def _check_tp(args, settings: Settings) -> HandlerResult:
    seq = materialize(_spec(args), settings.window)
    witness = check_tp_window(seq, settings.order, settings.window, progress=settings.progress)
    return (Outcome.REFUTED if witness.verdict == TPVerdict.FAIL else Outcome.HOLDS), witness


def _quotients(args, settings: Settings) -> HandlerResult:
    q = second_quotients(materialize(_spec(args), settings.nmax), settings.nmax)
    return Outcome.HOLDS, {"q": q, "hutchinson_holds": hutchinson_holds(q)}


def _hutchinson(args, settings: Settings) -> HandlerResult:
    seq = materialize(_spec(args), settings.nmax)
    q = second_quotients(seq, settings.nmax)
    holds = hutchinson_holds(q)
    result: Dict[str, Any] = {"q": q, "hutchinson_holds": holds}
    if holds:
        result["sections"] = hutchinson_sections_check(seq, settings.nmax)
    return (Outcome.HOLDS if holds else Outcome.REFUTED), result


def _lemma1(args, settings: Settings) -> HandlerResult:
    q = second_quotients(materialize(_spec(args), settings.nmax), settings.nmax)
    report = lemma1_chain(q)
    return (Outcome.REFUTED if report.first_violation is not None else Outcome.HOLDS), report


def _d_ineq(args, settings: Settings) -> HandlerResult:
    q = second_quotients(materialize(_spec(args), settings.nmax), settings.nmax)
    report = d_inequalities(q)
    return (Outcome.HOLDS if report.all_nonnegative else Outcome.REFUTED), report


def _verify_st1(args, settings: Settings) -> HandlerResult:
    spec = _spec(args)
    if isinstance(spec, ExplicitSpec):
        gf: Any = as_polynomial(materialize(spec, max(len(spec.coeffs) - 1, 0)))
    elif isinstance(spec, (RationalGFSpec, AsweFiniteSpec)):
        gf = spec
    else:
        raise SpecError(f"verify-st1 needs explicit, rational_gf or aswe_finite input, got {spec.type}")
    verdict = classify_theorem_st1(gf)
    if verdict.case in (St1Case.ENTIRE_LPI, St1Case.RATIONAL_OK):
        outcome = Outcome.HOLDS
    elif verdict.derivative_numerator_nonpositive_rooted is False:
        outcome = Outcome.REFUTED
    else:
        outcome = Outcome.INCONCLUSIVE
    return outcome, verdict


def _th1_audit(args, settings: Settings) -> HandlerResult:
    report = th1_audit(_spec(args), settings.nmax, settings.lmax, settings.trunc, workers=settings.workers)
    if report.status == "vacuous":
        return Outcome.INCONCLUSIVE, report
    return (Outcome.HOLDS if report.min_q_above_3 else Outcome.REFUTED), report


_THETA_OUTCOMES = {
    ThetaVerdict.PASS: Outcome.HOLDS,
    ThetaVerdict.FAIL: Outcome.REFUTED,
    ThetaVerdict.INCONCLUSIVE: Outcome.INCONCLUSIVE,
}


def _verify_th3(args, settings: Settings) -> HandlerResult:
    report = verify_th3(
        _spec(args),
        parse_rational(args.a2),
        settings.nmax,
        PrecisionConfig(bits=settings.precision_bits),
        workers=settings.workers,
    )
    return _THETA_OUTCOMES[report.verdict], report


def _estimate(args, settings: Settings) -> HandlerResult:
    name = ConstantName(args.name)
    degree = args.degree or settings.q_infinity_degree
    report = estimate_constant(name, parse_rational(settings.tol), degree=degree,
                               precision_bits=settings.precision_bits, progress=settings.progress)
    result: Dict[str, Any] = {"threshold": report}
    outcome = Outcome.HOLDS
    if name == ConstantName.Q_INFINITY:
        if not report.tail_guard_ok:
            outcome = Outcome.INCONCLUSIVE
        if not args.no_rerun:
            stability = stability_rerun(report, settings.q_infinity_rerun_degree)
            result["stability"] = stability
            if not stability.agrees:
                outcome = Outcome.INCONCLUSIVE
    return outcome, result


def _parse_grid(raw: Optional[str]) -> List[SequenceSpec]:
    if not raw:
        return default_grid()
    try:
        items = json.loads(raw)
    except json.JSONDecodeError as e:
        raise SpecError(f"Malformed grid JSON: {e}") from e
    if not isinstance(items, list):
        raise SpecError("--grid must be a JSON list of specs")
    return [parse_spec(item) for item in items]


def _explore_c1(args, settings: Settings) -> HandlerResult:
    grid = _parse_grid(args.grid)
    if args.random_grid:
        grid += random_grid(args.random_grid, settings.window, settings.seed)
    report = explore_c1(
        _spec(args), grid, settings.order, settings.window,
        n_max=settings.nmax, l_max=settings.lmax, trunc=settings.trunc,
        workers=settings.workers, progress=settings.progress,
    )
    return report.verdict, report


def _hadamard(args, settings: Settings) -> HandlerResult:
    left = materialize(_spec(args), settings.window)
    right = materialize(parse_spec(args.right), settings.window)
    return Outcome.HOLDS, hadamard(left, right)


HANDLERS: Dict[Command, Callable[[argparse.Namespace, Settings], HandlerResult]] = {
    Command.CHECK_TP: _check_tp,
    Command.QUOTIENTS: _quotients,
    Command.HUTCHINSON: _hutchinson,
    Command.LEMMA1: _lemma1,
    Command.D_INEQ: _d_ineq,
    Command.VERIFY_ST1: _verify_st1,
    Command.TH1_AUDIT: _th1_audit,
    Command.VERIFY_TH3: _verify_th3,
    Command.ESTIMATE: _estimate,
    Command.EXPLORE_C1: _explore_c1,
    Command.HADAMARD: _hadamard,
}


def _inputs(args: argparse.Namespace) -> Dict[str, Any]:
    inputs = {k: v for k, v in vars(args).items() if v is not None and k not in ("command", "config", "spec", "file")}
    if args.spec or args.file:
        inputs["spec"] = dump_spec(_spec(args))
    return inputs


# ==========================================================
# ✅ ENTRY POINT
# ==========================================================
def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    started = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        settings = _settings(args)
        configure_logging(settings.log_level)
        command = Command(args.command)
        outcome, result = HANDLERS[command](args, settings)
        inputs = _inputs(args)
    except (UsageError, VerificationError, ValidationError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return int(ExitCode.USAGE)

    report = Report(
        command=command,
        inputs=inputs,
        verdict=outcome,
        result=result,
        seed=settings.seed,
        elapsed_seconds=round(time.perf_counter() - started, 3),
        settings=settings.model_dump(),
    )
    out.write(report.model_dump_json(indent=2))
    out.write("\n")
    return int(EXIT_CODES[outcome])


def main() -> None:
    sys.exit(run())
