"""Command-line front end.

Commands: check, search, monogenic, period, discriminant. Output goes to
stdout as either a human-readable text block (default) or one JSON object
(--format json) with top-level keys schema_version, command, inputs,
result. Wall-clock timing is printed to stderr so stdout stays
byte-deterministic for identical inputs; --timing embeds it in the JSON
record for callers who want it inline and accept the nondeterminism.

Exit codes: 0 success, 1 hypothesis violation, 2 invalid arguments,
3 internal inconsistency, 4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict

from .errors import FactorizationBudgetError, HypothesisError, InconsistencyError
from .intmath import DEFAULT_FACTOR_BUDGET
from .lucas import pisano_period
from .trinomial import discriminant_resultant, fp_discriminant, is_monogenic_fp, wss_trinomial
from .wss import CRITERIA, WssClassification, classify, search

SCHEMA_VERSION = "1"


def _resolve_budget(args) -> int:
    if args.factor_budget is not None:
        return args.factor_budget
    raw = os.environ.get("WSS_FACTOR_BUDGET")
    if raw is None:
        return DEFAULT_FACTOR_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"WSS_FACTOR_BUDGET must be an integer, got {raw!r}") from None


def _emit(args, command: str, inputs: dict, result: dict, text_lines: list[str], ms: float) -> None:
    if args.format == "json":
        record = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "inputs": inputs,
            "result": result,
        }
        if args.timing:
            record["timing_ms"] = round(ms, 3)
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)
    print(f"timing_ms={ms:.3f}", file=sys.stderr)


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _classification_result(c: WssClassification) -> dict:
    d = asdict(c)
    del d["k"], d["p"]
    d["is_wss"] = c.is_wss
    return d


def cmd_check(args) -> int:
    budget = _resolve_budget(args)
    t0 = time.perf_counter()
    c = classify(args.k, args.p, factor_budget=budget)
    ms = (time.perf_counter() - t0) * 1000
    delta_text = str(c.delta) if c.delta_applicable else "n/a (p = 2)"
    text = [
        f"k-Wall-Sun-Sun check: k={c.k}, p={c.p}",
        f"  delta         {delta_text}",
        f"  pi(p)         {c.pi_p}",
        f"  pi(p^2)       {c.pi_p2}",
        f"  by_period     {_yesno(c.by_period)}",
        f"  by_entry      {_yesno(c.by_entry)}" + (" (derived)" if c.entry_alpha_derived else ""),
        f"  by_alpha      {_yesno(c.by_alpha)}" + (" (derived)" if c.entry_alpha_derived else ""),
        f"  by_monogenic  {_yesno(c.by_monogenic)}",
        f"  consistent    {_yesno(c.consistent)}",
        f"  is_wss        {_yesno(c.is_wss)}",
    ]
    _emit(args, "check", {"k": args.k, "p": args.p}, _classification_result(c), text, ms)
    return 0


def cmd_search(args) -> int:
    budget = _resolve_budget(args)
    t0 = time.perf_counter()
    res = search(
        args.k_min,
        args.k_max,
        args.p_max,
        args.criterion,
        jobs=args.jobs,
        factor_budget=budget,
    )
    ms = (time.perf_counter() - t0) * 1000
    hits = []
    for h in res.hits:
        entry = {"k": h.k, "p": h.p, "pi_p": h.pi_p, "pi_p2": h.pi_p2}
        if h.classification is not None:
            entry["classification"] = _classification_result(h.classification)
        hits.append(entry)
    result = {
        "criterion": res.criterion,
        "hits": hits,
        "skipped_k": list(res.skipped_k),
    }
    text = [
        f"search k in [{res.k_min}, {res.k_max}], primes p <= {res.p_max}, criterion={res.criterion}"
    ]
    for h in res.hits:
        text.append(f"  hit k={h.k} p={h.p} pi(p)={h.pi_p} pi(p^2)={h.pi_p2}")
    text.append(f"  {len(res.hits)} hit(s), {len(res.skipped_k)} skipped k")
    if res.skipped_k:
        text.append("  skipped (hypotheses fail): " + ", ".join(map(str, res.skipped_k)))
    inputs = {
        "k_min": args.k_min,
        "k_max": args.k_max,
        "p_max": args.p_max,
        "criterion": args.criterion,
    }
    _emit(args, "search", inputs, result, text, ms)
    return 0


def cmd_monogenic(args) -> int:
    budget = _resolve_budget(args)
    t0 = time.perf_counter()
    report = is_monogenic_fp(args.k, args.p, factor_budget=budget)
    ms = (time.perf_counter() - t0) * 1000
    t = report.trinomial
    result = {
        "trinomial": {"N": t.N, "M": t.M, "A": t.A, "B": t.B},
        "discriminant": report.discriminant,
        "monogenic": report.monogenic,
    }
    text = [
        f"monogenicity of x^{t.N} + ({t.A})*x^{t.M} + ({t.B})  [k={args.k}, p={args.p}]",
        f"  discriminant {report.discriminant}",
        f"  monogenic    {_yesno(report.monogenic)}",
    ]
    if args.report:
        result["verdicts"] = [asdict(v) for v in report.verdicts]
        for v in report.verdicts:
            word = "divides" if v.divides_index else "does not divide"
            text.append(f"  q={v.q} {word} the index (item {v.item_used}: {v.detail})")
    _emit(args, "monogenic", {"k": args.k, "p": args.p}, result, text, ms)
    return 0


def cmd_period(args) -> int:
    t0 = time.perf_counter()
    pi = pisano_period(args.k, args.m)
    ms = (time.perf_counter() - t0) * 1000
    text = [f"pi({args.m}) = {pi} for k={args.k}"]
    _emit(args, "period", {"k": args.k, "m": args.m}, {"pi": pi}, text, ms)
    return 0


def cmd_discriminant(args) -> int:
    t0 = time.perf_counter()
    closed = fp_discriminant(args.k, args.p)
    resultant = discriminant_resultant(wss_trinomial(args.k, args.p))
    ms = (time.perf_counter() - t0) * 1000
    match = closed == resultant
    result = {"closed_form": closed, "resultant": resultant, "match": match}
    text = [
        f"discriminant of x^{2 * args.p} + ({-args.k})*x^{args.p} + (-1)",
        f"  closed form  {closed}",
        f"  resultant    {resultant}",
        f"  match        {_yesno(match)}",
    ]
    if not match:
        raise InconsistencyError(
            f"discriminant mismatch for k={args.k}, p={args.p}: "
            f"closed form {closed} vs resultant {resultant}"
        )
    _emit(args, "discriminant", {"k": args.k, "p": args.p}, result, text, ms)
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument(
        "--factor-budget",
        type=int,
        default=None,
        metavar="ITERS",
        help="rho iteration cap for factoring (default: WSS_FACTOR_BUDGET env or 10^7)",
    )
    sub.add_argument(
        "--timing",
        action="store_true",
        help="embed timing_ms in the JSON record (breaks byte-determinism)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wss",
        description="k-Wall-Sun-Sun prime detection and trinomial monogenicity checks",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_check = subs.add_parser("check", help="classify one (k, p) pair by all criteria")
    p_check.add_argument("--k", type=int, required=True)
    p_check.add_argument("--p", type=int, required=True)
    _add_common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_search = subs.add_parser("search", help="scan a (k, p) grid for hits")
    p_search.add_argument("--k-min", type=int, required=True)
    p_search.add_argument("--k-max", type=int, required=True)
    p_search.add_argument("--p-max", type=int, required=True)
    p_search.add_argument("--criterion", choices=CRITERIA, default="all")
    p_search.add_argument(
        "--jobs", type=int, default=None, help="worker processes (default: cpu count)"
    )
    _add_common(p_search)
    p_search.set_defaults(func=cmd_search)

    p_mono = subs.add_parser("monogenic", help="monogenicity report for x^(2p) - k x^p - 1")
    p_mono.add_argument("--k", type=int, required=True)
    p_mono.add_argument("--p", type=int, required=True)
    p_mono.add_argument("--report", action="store_true", help="include per-prime verdicts")
    _add_common(p_mono)
    p_mono.set_defaults(func=cmd_monogenic)

    p_period = subs.add_parser("period", help="period of the Lucas sequence mod m")
    p_period.add_argument("--k", type=int, required=True)
    p_period.add_argument("--m", type=int, required=True)
    _add_common(p_period)
    p_period.set_defaults(func=cmd_period)

    p_disc = subs.add_parser(
        "discriminant", help="closed-form discriminant with resultant cross-check"
    )
    p_disc.add_argument("--k", type=int, required=True)
    p_disc.add_argument("--p", type=int, required=True)
    _add_common(p_disc)
    p_disc.set_defaults(func=cmd_discriminant)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except HypothesisError as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return 1
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except FactorizationBudgetError as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
