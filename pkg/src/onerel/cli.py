"""Command-line front end: build, check, query, sweep, and probe.

Exit codes, uniformly across subcommands:

* 0 — success / verified / words equal,
* 1 — a logical failure (non-joinable pair, refuted rule, unequal words,
  red tuple in a sweep),
* 2 — undecided within the configured bounds,
* 3 — input error (malformed flags, bad exponents, unreadable system).

Default bounds may be overridden by environment variables
(``ONEREL_STEP_LIMIT``, ``ONEREL_DEPTH``, ``ONEREL_LENGTH_LIMIT``,
``ONEREL_COEF_BOUND``, ``ONEREL_CONST_BOUND``, ``ONEREL_MAXLEN``);
explicit flags always win over the environment.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
import time

from .casework import UnclassifiedOverlap, classify, emit_system
from .growth import probe
from .presentation import Presentation
from .report import ALL_PARTS, Bounds, TupleReport, verify_system, verify_tuple
from .rewriting import RewriteSystem, from_json, normalize, to_json
from .words import RelatorExponents, format_word, parse_word, relator_word

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNDECIDED = 2
EXIT_INPUT = 3

_ENV_BOUNDS = {
    "step_limit": "ONEREL_STEP_LIMIT",
    "depth": "ONEREL_DEPTH",
    "length_limit": "ONEREL_LENGTH_LIMIT",
    "coef_bound": "ONEREL_COEF_BOUND",
    "const_bound": "ONEREL_CONST_BOUND",
    "maxlen": "ONEREL_MAXLEN",
}


class InputError(Exception):
    """Bad command-line input; maps to exit code 3."""


def _resolve_bound(args: argparse.Namespace, name: str, fallback: int | None) -> int | None:
    value = getattr(args, name, None)
    if value is not None:
        return value
    env = os.environ.get(_ENV_BOUNDS[name], "")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"{_ENV_BOUNDS[name]} must be an integer, got {env!r}") from exc
    return fallback


def _bounds_from_args(args: argparse.Namespace) -> Bounds:
    defaults = Bounds()
    return Bounds(
        step_limit=_resolve_bound(args, "step_limit", defaults.step_limit),
        depth_limit=_resolve_bound(args, "depth", defaults.depth_limit),
        length_limit=_resolve_bound(args, "length_limit", defaults.length_limit),
        coef_bound=_resolve_bound(args, "coef_bound", defaults.coef_bound),
        const_bound=_resolve_bound(args, "const_bound", defaults.const_bound),
        maxlen=_resolve_bound(args, "maxlen", defaults.maxlen),
    )


def _parse_exponents(values: list[int]) -> RelatorExponents:
    if len(values) != 6:
        raise InputError(f"expected exactly 6 exponents, got {len(values)}")
    try:
        return RelatorExponents(*values)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _add_bound_flags(parser: argparse.ArgumentParser, names: tuple[str, ...]) -> None:
    flags = {
        "step_limit": ("--step-limit", "rewrite step cap per normalization"),
        "depth": ("--depth", "relation-application search depth cap"),
        "length_limit": ("--length-limit", "intermediate word length cap"),
        "coef_bound": ("--coef-bound", "largest per-letter coefficient tried"),
        "const_bound": ("--const-bound", "largest per-letter constant tried"),
        "maxlen": ("--maxlen", "cross-check word length ceiling"),
    }
    for name in names:
        flag, help_text = flags[name]
        parser.add_argument(flag, dest=name, type=int, default=None, help=help_text)


def _hard_failure(report: TupleReport) -> bool:
    """True when some check failed outright (not merely ran out of bounds)."""
    if report.confluence is not None and report.confluence.failures:
        return True
    if report.termination is not None and not report.termination.ok:
        return True
    if report.soundness is not None and any(
        r["status"] == "refuted" for r in report.soundness.rules
    ):
        return True
    if report.derivability is not None and not report.derivability.ok:
        if not report.derivability.undecided:
            return True
    if report.crosscheck is not None and report.crosscheck.hard_failures:
        return True
    return False


def _report_exit(report: TupleReport) -> int:
    if report.ok:
        return EXIT_OK
    if _hard_failure(report):
        return EXIT_FAIL
    return EXIT_UNDECIDED


def _system_from_source(source: str) -> RewriteSystem:
    text = sys.stdin.read() if source == "-" else None
    if text is None:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read system file {source!r}: {exc}") from exc
    try:
        return from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed system serialization: {exc}") from exc


# --------------------------------------------------------------------------
# subcommands


def _cmd_classify(args: argparse.Namespace) -> int:
    e = _parse_exponents(args.exponents)
    try:
        c = classify(e)
    except UnclassifiedOverlap as exc:
        print(f"unclassified: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    params = ", ".join(f"{k}={v}" for k, v in c.params().items() if v is not None)
    print(c.label)
    print(params)
    return EXIT_OK


def _cmd_emit(args: argparse.Namespace) -> int:
    e = _parse_exponents(args.exponents)
    system = emit_system(e, args.template_reading)
    if args.structured:
        sys.stdout.write(to_json(system))
        return EXIT_OK
    for name in sorted(system.definitions):
        print(f"let {name} = {format_word(system.definitions[name])}")
    for rule in system.rules:
        print(f"{format_word(rule.lhs)} -> {format_word(rule.rhs)}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    bounds = _bounds_from_args(args)
    if args.parts is None:
        parts = ALL_PARTS
    else:
        parts = frozenset(p.strip() for p in args.parts.split(",") if p.strip())
        unknown = parts - ALL_PARTS
        if unknown:
            raise InputError(f"unknown parts: {', '.join(sorted(unknown))}")
    if args.system is not None:
        system = _system_from_source(args.system)
        exponents = None
        if args.exponents:
            exponents = _parse_exponents(args.exponents)
        elif system.meta and "exponents" in system.meta:
            exponents = _parse_exponents(list(system.meta["exponents"]))
        if exponents is None:
            raise InputError(
                "cannot infer the presentation: pass six exponents or use a "
                "system whose metadata records them"
            )
        presentation = Presentation(relator_word(exponents))
        start = time.monotonic()
        pieces = verify_system(system, presentation, bounds, parts)
        meta = system.meta or {}
        report = TupleReport(
            exponents=exponents,
            label=meta.get("case", "external"),
            params=meta.get("params", {}),
            reading=meta.get("reading", "canonical"),
            system=system,
            confluence=pieces.get("confluence"),
            termination=pieces.get("termination"),
            soundness=pieces.get("soundness"),
            derivability=pieces.get("derivability"),
            crosscheck=pieces.get("crosscheck"),
            elapsed=time.monotonic() - start,
        )
    else:
        if not args.exponents:
            raise InputError("pass six exponents or --system")
        e = _parse_exponents(args.exponents)
        report = verify_tuple(e, args.template_reading, bounds, parts)
    if args.structured:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(report.render_text())
    return _report_exit(report)


def _cmd_normalize(args: argparse.Namespace) -> int:
    bounds = _bounds_from_args(args)
    if args.system is not None:
        system = _system_from_source(args.system)
    else:
        if not args.exponents:
            raise InputError("pass --exponents or --system")
        system = emit_system(_parse_exponents(args.exponents), args.template_reading)
    try:
        word = parse_word(args.word, system.alphabet)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    result = normalize(system, word, bounds.step_limit)
    if args.structured:
        print(
            json.dumps(
                {
                    "input": format_word(word),
                    "normal_form": format_word(result.word),
                    "steps": result.steps,
                    "completed": result.completed,
                },
                sort_keys=True,
            )
        )
    else:
        status = "" if result.completed else "  [step limit reached]"
        print(f"{format_word(result.word)}  ({result.steps} steps){status}")
    return EXIT_OK if result.completed else EXIT_UNDECIDED


def _cmd_equal(args: argparse.Namespace) -> int:
    bounds = _bounds_from_args(args)
    e = _parse_exponents(args.exponents)
    system = emit_system(e, args.template_reading)
    try:
        u = parse_word(args.left, system.alphabet)
        v = parse_word(args.right, system.alphabet)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    nu = normalize(system, u, bounds.step_limit)
    nv = normalize(system, v, bounds.step_limit)
    if not (nu.completed and nv.completed):
        print("undecided (step limit reached before a normal form)")
        return EXIT_UNDECIDED
    if nu.word == nv.word:
        print(f"equal (NF = {format_word(nu.word)})")
        return EXIT_OK
    print(f"not equal (NF {format_word(nu.word)} vs {format_word(nv.word)})")
    return EXIT_FAIL


def _sweep_parts(index: int, sample_every: int) -> frozenset[str]:
    parts = {"confluence", "derivability"}
    if sample_every > 0 and index % sample_every == 0:
        parts.add("soundness")
    return frozenset(parts)


def _cmd_sweep(args: argparse.Namespace) -> int:
    bounds = _bounds_from_args(args)
    if args.min < 1 or args.max < args.min:
        raise InputError("need 1 <= min <= max")
    failures: list[dict] = []
    worst = EXIT_OK
    count = 0
    started = time.monotonic()
    for index, combo in enumerate(
        itertools.product(range(args.min, args.max + 1), repeat=6)
    ):
        e = RelatorExponents(*combo)
        count += 1
        try:
            report = verify_tuple(
                e, args.template_reading, bounds, _sweep_parts(index, args.sample_every)
            )
        except UnclassifiedOverlap as exc:
            failures.append(
                {"exponents": list(combo), "label": None, "error": str(exc)}
            )
            print(f"{combo} UNCLASSIFIED {exc}")
            worst = max(worst, EXIT_FAIL)
            continue
        except Exception as exc:  # sweeps must survive any single red tuple
            failures.append(
                {"exponents": list(combo), "label": None, "error": repr(exc)}
            )
            print(f"{combo} ERROR {exc!r}")
            worst = max(worst, EXIT_FAIL)
            continue
        verdict = "ok" if report.ok else ("FAIL" if _hard_failure(report) else "UNDECIDED")
        print(
            f"{combo} {report.label} {verdict} "
            f"rules={len(report.system.rules)} {report.elapsed:.2f}s"
        )
        if not report.ok:
            worst = max(worst, _report_exit(report))
            entry = {
                "exponents": list(combo),
                "label": report.label,
                "failed": [
                    part
                    for part, piece in (
                        ("confluence", report.confluence),
                        ("termination", report.termination),
                        ("soundness", report.soundness),
                        ("derivability", report.derivability),
                        ("crosscheck", report.crosscheck),
                    )
                    if piece is not None and not piece.ok
                ],
            }
            if report.confluence is not None and report.confluence.failures:
                entry["non_joinable"] = [
                    {"overlap": f.pair.overlap, "left_nf": f.left_nf, "right_nf": f.right_nf}
                    for f in report.confluence.failures
                ]
            failures.append(entry)
    elapsed = time.monotonic() - started
    with open(args.failures, "w", encoding="utf-8") as fh:
        json.dump(
            {
                "range": [args.min, args.max],
                "tuples": count,
                "failures": failures,
                "elapsed_seconds": round(elapsed, 2),
            },
            fh,
            indent=2,
            sort_keys=True,
        )
        fh.write("\n")
    print(
        f"swept {count} tuples in {elapsed:.1f}s; "
        f"{len(failures)} not fully green; details in {args.failures}"
    )
    return worst


def _cmd_dehn(args: argparse.Namespace) -> int:
    bounds = _bounds_from_args(args)
    e = _parse_exponents(args.exponents)
    system = emit_system(e, args.template_reading)
    presentation = Presentation(relator_word(e))
    report = probe(
        presentation,
        system,
        args.n,
        depth_limit=bounds.depth_limit,
        length_limit=bounds.length_limit,
        step_limit=bounds.step_limit,
    )
    if args.structured:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(report.table())
    return EXIT_OK if not any(report.undecided.values()) else EXIT_UNDECIDED


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onerel",
        description=(
            "Finite complete rewriting systems for one-relator monoid "
            "presentations a^e1 b^e2 a^e3 b^e4 a^e5 b^e6 = b."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def reading_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--template-reading",
            choices=("canonical", "alternate"),
            default="canonical",
            help="exponent reading used by templates with ambiguous sources",
        )

    p = sub.add_parser("classify", help="route a tuple to its template branch")
    p.add_argument("exponents", nargs=6, type=int, metavar="E")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("emit", help="print the rewriting system for a tuple")
    p.add_argument("exponents", nargs=6, type=int, metavar="E")
    p.add_argument("--structured", action="store_true", help="JSON output")
    reading_flag(p)
    p.set_defaults(func=_cmd_emit)

    p = sub.add_parser("verify", help="run the full check pipeline")
    p.add_argument("exponents", nargs="*", type=int, metavar="E")
    p.add_argument("--system", help="serialized system file, or - for stdin")
    p.add_argument("--parts", help="comma-separated subset of checks to run")
    p.add_argument("--structured", action="store_true", help="JSON output")
    _add_bound_flags(
        p, ("step_limit", "depth", "length_limit", "coef_bound", "const_bound", "maxlen")
    )
    reading_flag(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("normalize", help="rewrite a word to normal form")
    p.add_argument("word")
    p.add_argument("--exponents", nargs=6, type=int, metavar="E")
    p.add_argument("--system", help="serialized system file, or - for stdin")
    p.add_argument("--structured", action="store_true", help="JSON output")
    _add_bound_flags(p, ("step_limit",))
    reading_flag(p)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("equal", help="decide equality of two words via normal forms")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--exponents", nargs=6, type=int, metavar="E", required=True)
    _add_bound_flags(p, ("step_limit",))
    reading_flag(p)
    p.set_defaults(func=_cmd_equal)

    p = sub.add_parser("sweep", help="verify every tuple in an exponent range")
    p.add_argument("--min", type=int, default=1)
    p.add_argument("--max", type=int, default=3)
    p.add_argument(
        "--failures",
        default="sweep_failures.json",
        help="machine-readable failure dump (JSON)",
    )
    p.add_argument(
        "--sample-every",
        type=int,
        default=10,
        help="run rule soundness on every Nth tuple (0 disables)",
    )
    _add_bound_flags(
        p, ("step_limit", "depth", "length_limit", "coef_bound", "const_bound", "maxlen")
    )
    reading_flag(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("dehn", help="probe derivation-distance growth empirically")
    p.add_argument("exponents", nargs=6, type=int, metavar="E")
    p.add_argument("--n", type=int, default=10, help="largest total pair length")
    p.add_argument("--structured", action="store_true", help="JSON output")
    _add_bound_flags(p, ("step_limit", "depth", "length_limit"))
    reading_flag(p)
    p.set_defaults(func=_cmd_dehn)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; the contract reserves 3 for those.
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
