"""Command-line front end.

Exit codes: 0 success, 1 a verification suite found a counterexample,
2 usage, parse or resource errors.  Output is byte-identical for identical
arguments and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import bound_report, classify_bound2, enumerate_next
from .errors import AmbiguousHorizon, CapExceeded, ParseError, SearchCapExceeded
from .experiments import EXPERIMENTS, SUITES, run_suites
from .greedy import lgpal, rgpal
from .pallen import minimal_factorizations, pal_fast
from .profiles import build_profile
from .streams import DSL_GRAMMAR, InfiniteWord, parse_spec
from .words import Word, render, render_style

SCHEMA_VERSION = 1


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_doc(payload: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(payload)
    return json.dumps(doc, indent=2) + "\n"


def _need_finite(spec: str, cap: int | None) -> Word:
    obj = parse_spec(spec, cap)
    if isinstance(obj, InfiniteWord):
        raise ParseError(
            f"{spec!r} is a stream; this command needs a finite word "
            f"(try lit:... or use `profile`/`bounds` with --horizon)",
            token=spec,
        )
    return obj


def cmd_len(args) -> int:
    w = _need_finite(args.word, args.cap)
    p, _ = pal_fast(w)
    lg, _ = lgpal(w)
    rg, _ = rgpal(w)
    if args.format == "json":
        _emit(_json_doc({"command": "len", "word": str(w), "pal": p,
                         "lgpal": lg, "rgpal": rg}), args.out)
    elif args.format == "csv":
        _emit(f"pal,lgpal,rgpal\n{p},{lg},{rg}\n", args.out)
    else:
        _emit(f"pal={p} lgpal={lg} rgpal={rg}\n", args.out)
    return 0


def cmd_decompose(args) -> int:
    w = _need_finite(args.word, args.cap)
    facts = minimal_factorizations(w, args.limit)
    lg, ldec = lgpal(w)
    rg, rdec = rgpal(w)
    if args.format == "json":
        _emit(
            _json_doc({
                "command": "decompose",
                "word": str(w),
                "minimal": facts.to_json(),
                "left_greedy": ldec.to_json(),
                "right_greedy": rdec.to_json(),
            }),
            args.out,
        )
    else:
        style = render_style(w)
        lines = [f"word: {w}", f"pal={facts.count} lgpal={lg} rgpal={rg}",
                 f"minimal decompositions ({len(facts)}"
                 f"{', truncated' if facts.truncated else ''}):"]
        for dec in facts:
            lines.append("  " + " . ".join(render(f, style) for f in dec.factors(w)))
        lines.append("left greedy:  "
                     + " . ".join(render(f, style) for f in ldec.factors(w)))
        lines.append("right greedy: "
                     + " . ".join(render(f, style) for f in rdec.factors(w)))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_profile(args) -> int:
    source = parse_spec(args.word, args.cap)
    profile = build_profile(source, args.horizon)
    if args.format == "json":
        _emit(_json_doc({"command": "profile", **profile.to_json()}), args.out)
    elif args.format == "csv":
        _emit(profile.to_csv(), args.out)
    else:
        attained = {k: v for k, v in profile.first_attainment.items() if v is not None}
        lines = [
            f"word: {profile.word_spec}",
            f"horizon: {profile.horizon}",
            f"max pal={profile.max_pal[-1]} lgpal={profile.max_lgpal[-1]} "
            f"rgpal={profile.max_rgpal[-1]}",
            "first attainment: "
            + " ".join(f"m({k})={v}" for k, v in sorted(attained.items())),
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_bounds(args) -> int:
    source = parse_spec(args.word, args.cap)
    report = bound_report(source, args.horizon, args.window)
    try:
        cls = classify_bound2(source, args.horizon, args.window)
        classification = cls.to_json()
    except AmbiguousHorizon as exc:
        classification = {"error": str(exc)}
    if args.format == "json":
        _emit(_json_doc({"command": "bounds", "report": report.to_json(),
                         "classification": classification}), args.out)
    else:
        lines = [
            f"word: {report.word_spec}",
            f"prefix_max={report.prefix_max} factor_max={report.factor_max} "
            f"(window {report.factor_window}, horizon {report.horizon})",
        ]
        for key, verdict in report.verdicts.items():
            lines.append(f"check {key}: {verdict}")
        fam = classification.get("family")
        if classification.get("error"):
            lines.append(f"classification: {classification['error']}")
        elif fam:
            lines.append(f"classification: {fam} {classification['params']}")
            if classification.get("bplf2"):
                lines.append(f"isolated-letter form: {classification['bplf2']}")
        else:
            lines.append("classification: no closed form")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_next(args) -> int:
    w = _need_finite(args.word, args.cap)
    ns = enumerate_next(w, args.max_len)
    if args.format == "json":
        _emit(
            _json_doc({
                "command": "next",
                "base": str(ns.base),
                "max_len": ns.max_len,
                "palindromes": [str(p) for p in ns.palindromes],
                "open_branches": [str(p) for p in ns.open_branches],
            }),
            args.out,
        )
    else:
        lines = [f"base: {ns.base} (cap {ns.max_len})",
                 f"palindromes ({len(ns.palindromes)}):"]
        lines.extend(f"  {p}" for p in ns.palindromes)
        lines.append(f"open branches ({len(ns.open_branches)}):")
        lines.extend(f"  {p}" for p in ns.open_branches)
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _suite_names(tokens: list[str], universe) -> list[str]:
    if not tokens or tokens == ["all"]:
        return sorted(universe)
    return tokens


def cmd_verify(args) -> int:
    names = _suite_names(args.suites, SUITES)
    results = run_suites(names, seed=args.seed, jobs=args.jobs)
    failed = False
    lines = []
    for res in results:
        for claim in res.claims:
            mark = {"pass": "PASS", "fail": "FAIL", "horizon-limited": "INFO"}[claim.status]
            lines.append(
                f"[{mark}] {res.name}: {claim.description} "
                f"(expected={claim.expected}, observed={claim.observed})"
            )
            if claim.status == "fail":
                failed = True
        lines.append(f"[{'OK' if res.ok else 'FAILED'}] suite {res.name} "
                     f"({len(res.claims)} claims)")
    if args.format == "json":
        _emit(_json_doc({"command": "verify",
                         "results": [r.to_json(timings=args.timings)
                                     for r in results]}), args.out)
    else:
        _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def cmd_experiments(args) -> int:
    names = _suite_names(args.suites, EXPERIMENTS)
    unknown = [n for n in names if n not in EXPERIMENTS]
    if unknown:
        raise ParseError(f"unknown experiments: {', '.join(unknown)}",
                         token=unknown[0])
    results = run_suites(names, seed=args.seed, jobs=args.jobs)
    doc = _json_doc({"command": "experiments",
                     "results": [r.to_json(timings=args.timings)
                                 for r in results]})
    failed = any(not r.ok for r in results)
    # the JSON report always exists; --out captures it, text mode adds a
    # per-claim summary on stdout
    if args.out:
        _emit(doc, args.out)
    if args.format == "text":
        lines = []
        for res in results:
            status = "ok" if res.ok else "FAILED"
            timing = f", {res.runtime:.2f}s" if args.timings else ""
            lines.append(f"{res.name}: {status} ({len(res.claims)} claims"
                         f"{timing})")
            for claim in res.claims:
                lines.append(f"  [{claim.status}] {claim.description}: "
                             f"{claim.observed}")
        _emit("\n".join(lines) + "\n", None)
    elif not args.out:
        _emit(doc, None)
    return 1 if failed else 0


def _add_common(sp, horizon_default=None):
    sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sp.add_argument("--out", default=None, help="write output to a file")
    sp.add_argument("--cap", type=int, default=None,
                    help="override the materialization cap")
    if horizon_default is not None:
        sp.add_argument("--horizon", type=int, default=horizon_default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palfact",
        description="Palindromic factorization toolkit",
        epilog=DSL_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("len", help="minimum and greedy palindromic factor "
                                    "counts of a finite word")
    sp.add_argument("word")
    _add_common(sp)
    sp.set_defaults(func=cmd_len)

    sp = sub.add_parser("decompose", help="minimal and greedy palindromic "
                                          "decompositions of a finite word")
    sp.add_argument("word")
    sp.add_argument("--limit", type=int, default=100,
                    help="cap on enumerated minimal decompositions")
    _add_common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("profile", help="per-prefix factor counts of a stream, "
                                        "with first-attainment lengths")
    sp.add_argument("word")
    _add_common(sp, horizon_default=1000)
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("bounds", help="prefix/factor bound report and "
                                       "closed-form classification")
    sp.add_argument("word")
    sp.add_argument("--window", type=int, default=100,
                    help="factor window for the factor maximum")
    _add_common(sp, horizon_default=1000)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("next", help="palindromes extending a binary word "
                                     "within the two-factor prefix bound")
    sp.add_argument("word")
    sp.add_argument("--max-len", type=int, default=32, dest="max_len")
    _add_common(sp)
    sp.set_defaults(func=cmd_next)

    sp = sub.add_parser("verify", help="run verification suites "
                                       f"({', '.join(sorted(SUITES))})")
    sp.add_argument("suites", nargs="*", default=[],
                    help="suite names, or 'all'")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--timings", action="store_true",
                    help="include wall-clock timings (breaks byte-identical "
                         "reruns)")
    _add_common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("experiments", help="run the named experiments and "
                                            "emit JSON reports "
                                            f"({', '.join(EXPERIMENTS)})")
    sp.add_argument("suites", nargs="*", default=[])
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--timings", action="store_true",
                    help="include wall-clock timings (breaks byte-identical "
                         "reruns)")
    _add_common(sp)
    sp.set_defaults(func=cmd_experiments)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, CapExceeded, SearchCapExceeded, AmbiguousHorizon,
            ValueError) as exc:
        token = getattr(exc, "token", None)
        suffix = f" (token: {token})" if token else ""
        print(f"error: {exc}{suffix}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
