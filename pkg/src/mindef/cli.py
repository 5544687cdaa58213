"""Command-line surface: solve, check, oracle, and generate.

Exit codes: 0 for any answered request (YES and NO verdicts both count as
answered), 2 for input problems (unreadable files, syntax errors,
undeclared arguments, bad flag combinations), 3 for an exhausted search
budget.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import extensions, oracle
from .afp import parse_afp, serialize_afp
from .errors import BudgetExceeded, MindefError, PreconditionViolated
from .extensions import ExtensionFamily, SearchBudget
from .generators import GeneratorConfig, random_instance
from .semantics import (is_admissible, is_conflict_free,
                        is_restrictedly_admissible)

SEMANTICS = ("conflict-free", "admissible", "preferred", "preferred-on-f",
             "restricted-admissible", "min-def")
POINTWISE = ("conflict-free", "admissible", "restricted-admissible")


@dataclass
class SolveRequest:
    """One CLI-level job: where the input is and what to compute on it."""

    source: str | None = None          # file path; None or "-" reads stdin
    text: str | None = None            # inline input, overrides source
    semantics: str = "preferred"
    mode: str = "enumerate"            # enumerate | credulous | skeptical | check
    argument: str | None = None        # acceptance queries
    check_set: tuple | None = None     # membership / property checks
    output: str = "plain"              # plain | structured
    engine: str = "solver"             # solver | oracle
    on: tuple | None = None            # explicit X for preferred-on-f
    budget: SearchBudget | None = None


@dataclass
class SolveResult:
    semantics: str
    family: ExtensionFamily | None
    verdict: bool | None
    elapsed_ms: float
    stats: dict = field(default_factory=dict)


def _read_input(request: SolveRequest) -> str:
    if request.text is not None:
        return request.text
    if request.source in (None, "-"):
        return sys.stdin.read()
    with open(request.source, encoding="utf-8") as handle:
        return handle.read()


def _enumerate_family(af, p, request: SolveRequest) -> ExtensionFamily:
    sem = request.semantics
    budget = request.budget
    if sem == "preferred-on-f":
        x = af.subset(request.on) if request.on is not None else p.focus
    elif request.on is not None:
        raise PreconditionViolated("--on is only meaningful with preferred-on-f")
    if request.engine == "oracle":
        if sem == "conflict-free":
            return oracle.oracle_conflict_free(af, None, budget)
        if sem == "admissible":
            return oracle.oracle_admissible(af, None, budget)
        if sem == "restricted-admissible":
            return oracle.oracle_restrictedly_admissible(af, p, budget)
        if sem == "preferred":
            return oracle.oracle_preferred(af, budget)
        if sem == "preferred-on-f":
            return oracle.oracle_preferred_on(af, x, budget)
        return oracle.oracle_min_def(af, p, budget)
    if sem == "conflict-free":
        return extensions.conflict_free_sets(af, budget=budget)
    if sem == "admissible":
        return extensions.admissible_sets(af, budget=budget)
    if sem == "restricted-admissible":
        return extensions.restrictedly_admissible_sets(af, p, budget)
    if sem == "preferred":
        return extensions.preferred_extensions(af, budget)
    if sem == "preferred-on-f":
        return extensions.preferred_extensions_on(af, x, budget)
    return extensions.min_def_extensions(af, p, budget)


def execute(request: SolveRequest) -> SolveResult:
    """Run one request end to end; raises package errors on bad input."""
    af, p = parse_afp(_read_input(request))
    started = time.perf_counter()
    family = None
    verdict = None
    if request.mode == "enumerate":
        family = _enumerate_family(af, p, request)
    elif request.mode in ("credulous", "skeptical"):
        fam = _enumerate_family(af, p, request)
        accept = (extensions.credulous_accepted if request.mode == "credulous"
                  else extensions.skeptical_accepted)
        verdict = accept(af, fam, request.argument)
    elif request.mode == "check":
        s = af.subset(request.check_set or ())
        if request.semantics == "conflict-free":
            verdict = is_conflict_free(af, s)
        elif request.semantics == "admissible":
            verdict = is_admissible(af, s)
        elif request.semantics == "restricted-admissible":
            verdict = is_restrictedly_admissible(af, p, s)
        else:
            verdict = s in _enumerate_family(af, p, request)
    else:
        raise PreconditionViolated(f"unknown mode {request.mode!r}")
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    stats = {
        "arguments": len(af),
        "attacks": len(af.attacks),
        "focus": len(p.focus),
        "unrestricted": len(p.unrestricted),
        "restricted": len(p.restricted),
    }
    return SolveResult(request.semantics, family, verdict, elapsed_ms, stats)


def format_set(s) -> str:
    return "{%s}" % ",".join(sorted(s.names))


def _render(result: SolveResult, request: SolveRequest, out) -> None:
    if request.output == "structured":
        doc = {"semantics": result.semantics}
        if result.family is not None:
            doc["extensions"] = [sorted(s.names) for s in result.family]
        else:
            doc["verdict"] = result.verdict
        doc["stats"] = result.stats
        out.write(json.dumps(doc) + "\n")
        return
    if result.family is not None:
        for s in result.family:
            out.write(format_set(s) + "\n")
    else:
        out.write("YES\n" if result.verdict else "NO\n")


def run_cli(request: SolveRequest, out=None) -> tuple:
    """Execute a request, print its outcome, and map errors to exit codes."""
    out = out or sys.stdout
    try:
        result = execute(request)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, 3
    except (MindefError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, 2
    _render(result, request, out)
    return result, 0


def _names(raw: str) -> tuple:
    return tuple(part.strip() for part in raw.split(",") if part.strip())


def _budget_from(ns) -> SearchBudget | None:
    if ns.budget is None and ns.time_limit is None:
        return None
    return SearchBudget(
        max_arguments_for_exhaustive=(
            ns.budget if ns.budget is not None else 20),
        wall_clock_seconds=ns.time_limit)


def _add_common(sub, with_engine=True):
    sub.add_argument("input", nargs="?", default="-",
                     help="AFP file to read ('-' or omitted: standard input)")
    sub.add_argument("--format", choices=("plain", "structured"),
                     default="plain", help="output rendering")
    if with_engine:
        sub.add_argument("--engine", choices=("solver", "oracle"),
                         default="solver",
                         help="tree-search solver or exhaustive oracle")
    sub.add_argument("--on", metavar="NAMES",
                     help="comma-separated base set for preferred-on-f "
                          "(default: the file's focus)")
    sub.add_argument("--budget", type=int, metavar="N",
                     help="cap on exhaustive search spaces (default 20)")
    sub.add_argument("--time-limit", type=float, metavar="SECONDS",
                     help="wall-clock ceiling for the search")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mindef",
        description="Solve partitioned argumentation frameworks.")
    subs = parser.add_subparsers(dest="command", required=True)

    solve = subs.add_parser("solve", help="enumerate extensions or query acceptance")
    solve.add_argument("--semantics", "-s", choices=SEMANTICS,
                       default="preferred")
    group = solve.add_mutually_exclusive_group()
    group.add_argument("--credulous", metavar="ARG",
                       help="is ARG in some extension?")
    group.add_argument("--skeptical", metavar="ARG",
                       help="is ARG in every extension?")
    _add_common(solve)

    check = subs.add_parser("check", help="test one set against a property")
    check.add_argument("--set", required=True, metavar="NAMES",
                       help="comma-separated member names (empty for the empty set)")
    check.add_argument("--property", required=True, choices=SEMANTICS,
                       dest="prop")
    _add_common(check)

    orc = subs.add_parser("oracle", help="like solve, forced onto the oracle engine")
    orc.add_argument("--semantics", "-s", choices=SEMANTICS,
                     default="preferred")
    group = orc.add_mutually_exclusive_group()
    group.add_argument("--credulous", metavar="ARG")
    group.add_argument("--skeptical", metavar="ARG")
    _add_common(orc, with_engine=False)

    gen = subs.add_parser("generate", help="emit a seeded random instance as AFP")
    gen.add_argument("--arguments", "-n", type=int, required=True)
    gen.add_argument("--attack-probability", "-p", type=float, default=0.25)
    gen.add_argument("--focus-fraction", type=float, default=1.0)
    gen.add_argument("--restricted-fraction", type=float, default=0.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--acyclic", action="store_true",
                     help="restrict attacks to a random topological order")
    gen.add_argument("--output", "-o", metavar="FILE",
                     help="write here instead of standard output")
    return parser


def _request_from(ns, engine=None) -> SolveRequest:
    mode = "enumerate"
    argument = None
    if getattr(ns, "credulous", None):
        mode, argument = "credulous", ns.credulous
    elif getattr(ns, "skeptical", None):
        mode, argument = "skeptical", ns.skeptical
    return SolveRequest(
        source=ns.input,
        semantics=ns.semantics,
        mode=mode,
        argument=argument,
        output=ns.format,
        engine=engine or ns.engine,
        on=_names(ns.on) if ns.on is not None else None,
        budget=_budget_from(ns))


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    if ns.command == "generate":
        try:
            cfg = GeneratorConfig(
                argument_count=ns.arguments,
                attack_probability=ns.attack_probability,
                focus_fraction=ns.focus_fraction,
                restricted_fraction=ns.restricted_fraction,
                seed=ns.seed,
                acyclic_only=ns.acyclic)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        af, p = random_instance(cfg)
        text = serialize_afp(af, p)
        if ns.output:
            try:
                with open(ns.output, "w", encoding="utf-8") as handle:
                    handle.write(text)
            except OSError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
        else:
            sys.stdout.write(text)
        return 0
    if ns.command == "solve":
        request = _request_from(ns)
    elif ns.command == "oracle":
        request = _request_from(ns, engine="oracle")
    else:  # check
        request = SolveRequest(
            source=ns.input,
            semantics=ns.prop,
            mode="check",
            check_set=_names(ns.set),
            output=ns.format,
            engine=ns.engine,
            on=_names(ns.on) if ns.on is not None else None,
            budget=_budget_from(ns))
    _, code = run_cli(request)
    return code


if __name__ == "__main__":
    sys.exit(main())
