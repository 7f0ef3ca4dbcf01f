"""Command-line interface.

Exit codes: 0 success (check holds / violation found for find-violation),
1 check fails (or no violation found), 2 parse error, 3 unknown label,
4 cap exceeded or prerequisite not met.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import jaccard, verify
from .errors import (
    CapExceeded,
    LengthMismatch,
    MalformedSpec,
    ModeMismatch,
    NegativeEntry,
    PrereqFailed,
    PropertyViolation,
    UnknownLabel,
)
from .report import Verdict
from .setfun import (
    DEFAULT_EPS,
    SetFunctionSpec,
    as_fraction,
    evaluate,
    is_modular,
    is_monotone,
    is_nonnegative,
    is_submodular_marginal,
    is_submodular_pairwise,
)
from .specio import (
    load_spec,
    parse_subset,
    render_value,
    report_doc,
    spec_digest,
    violation_doc,
    write_atomic,
)

EPS_ENV = "SUBJACCARD_EPS"

EXIT_OK, EXIT_FAILS, EXIT_PARSE, EXIT_LABEL, EXIT_CAP = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _eps(args) -> float:
    if args.eps is not None:
        return args.eps
    env = os.environ.get(EPS_ENV)
    if env:
        try:
            eps = float(env)
        except ValueError:
            raise UsageError(f"{EPS_ENV}={env!r} is not a number") from None
        if eps <= 0:
            raise UsageError(f"{EPS_ENV} must be positive")
        return eps
    return DEFAULT_EPS


def _emit(args, doc: dict) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if args.output:
        write_atomic(args.output, text)
    else:
        sys.stdout.write(text)


def _header(command: str, spec: SetFunctionSpec) -> dict:
    return {"command": command, "spec_digest": spec_digest(spec), "exact": spec.exact}


def cmd_eval(args) -> int:
    spec = load_spec(args.spec)
    print(render_value(evaluate(spec, parse_subset(spec.ground, args.subset))))
    return EXIT_OK


_VARIANTS = {
    "cap": jaccard.sub_jaccard_cap,
    "delta": jaccard.sub_jaccard_delta,
    "index": jaccard.sub_jaccard_index,
}


def cmd_dist(args) -> int:
    spec = load_spec(args.spec)
    a = parse_subset(spec.ground, args.set_a)
    b = parse_subset(spec.ground, args.set_b)
    if args.variant == "standard":
        value = jaccard.jaccard_distance(a, b)
    else:
        value = _VARIANTS[args.variant](spec, a, b, eps=_eps(args))
    print(render_value(value))
    return EXIT_OK


def cmd_props(args) -> int:
    spec = load_spec(args.spec)
    eps = _eps(args)
    start = time.perf_counter()
    checks = {
        "nonnegative": is_nonnegative,
        "monotone": is_monotone,
        "modular": is_modular,
        "submodular_pairwise": is_submodular_pairwise,
        "submodular_marginal": is_submodular_marginal,
    }
    reports = {name: fn(spec, eps=eps, max_witnesses=args.max_witnesses) for name, fn in checks.items()}
    doc = _header("props", spec)
    # overall verdict: the hypotheses shared by every check (modularity is reported, not required)
    hypotheses = ("nonnegative", "monotone", "submodular_pairwise")
    doc["verdict"] = "holds" if all(reports[h].ok for h in hypotheses) else "fails"
    doc["properties"] = {name: report_doc(r, exact=spec.exact) for name, r in reports.items()}
    doc["characterizations_agree"] = reports["submodular_pairwise"].ok == reports["submodular_marginal"].ok
    doc["elapsed"] = time.perf_counter() - start
    _emit(args, doc)
    return EXIT_OK


def cmd_check(args) -> int:
    spec = load_spec(args.spec)
    eps = _eps(args)
    if args.sample is not None:
        if args.check not in verify.SAMPLED_KINDS:
            raise UsageError(f"check {args.check!r} has no sampled mode")
        report = verify.sampled_check(
            spec, args.check, args.sample, args.seed, eps=eps, max_witnesses=args.max_witnesses
        )
    else:
        report = verify.CHECKS[args.check](spec, eps=eps, max_witnesses=args.max_witnesses)
    doc = _header("check", spec)
    doc.update(report_doc(report, exact=spec.exact))
    _emit(args, doc)
    return EXIT_FAILS if report.verdict is Verdict.FAILS else EXIT_OK


def cmd_find_violation(args) -> int:
    spec = load_spec(args.spec)
    start = time.perf_counter()
    record = verify.find_cap_counterexample(spec, eps=_eps(args))
    doc = _header("find-violation", spec)
    doc.update(
        {
            "check": "triangle-cap",
            "verdict": "fails" if record else "holds",
            "witnesses": [violation_doc(record)] if record else [],
            "seed": None,
            "elapsed": time.perf_counter() - start,
        }
    )
    _emit(args, doc)
    return EXIT_OK if record else EXIT_FAILS


def _vector(text):
    if isinstance(text, list):
        return [as_fraction(x) for x in text]
    return [as_fraction(x) for x in text.split(",") if x.strip()]


def cmd_vecdist(args) -> int:
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                doc = json.load(fh, parse_float=str)
        except (OSError, json.JSONDecodeError) as e:
            raise MalformedSpec(f"cannot read vectors: {e}") from None
        if not isinstance(doc, dict) or set(doc) != {"x", "y"}:
            raise MalformedSpec("vector file must be an object with exactly 'x' and 'y'")
        x, y = _vector(doc["x"]), _vector(doc["y"])
    elif args.x is not None and args.y is not None:
        x, y = _vector(args.x), _vector(args.y)
    else:
        raise UsageError("give a vector file or both --x and --y")
    print(render_value(jaccard.vector_jaccard_distance(x, y)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subjaccard", description="Submodular Jaccard distances and their inequalities."
    )
    parser.add_argument("--eps", type=float, default=None, help=f"float tolerance (default ${EPS_ENV} or 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate f on a subset")
    p.add_argument("spec")
    p.add_argument("subset", help="comma-separated labels, '-' for the empty set")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("dist", help="distance between two subsets")
    p.add_argument("spec")
    p.add_argument("set_a")
    p.add_argument("set_b")
    p.add_argument("--variant", choices=["standard", "cap", "delta", "index"], default="delta")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("props", help="nonnegativity, monotonicity, (sub)modularity")
    p.add_argument("spec")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("check", help="verify an inequality exhaustively or by sampling")
    p.add_argument("spec")
    p.add_argument("--check", required=True, choices=sorted(verify.CHECKS))
    p.add_argument("--sample", type=int, metavar="N", help="sample N random triples instead of enumerating")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("find-violation", help="search for a cap-distance triangle counterexample")
    p.add_argument("spec")
    p.set_defaults(func=cmd_find_violation)

    p = sub.add_parser("vecdist", help="generalized (vector/multiset) Jaccard distance")
    p.add_argument("file", nargs="?", help='JSON file {"x": [...], "y": [...]}')
    p.add_argument("--x", help="comma-separated entries")
    p.add_argument("--y", help="comma-separated entries")
    p.set_defaults(func=cmd_vecdist)

    for name in ("props", "check", "find-violation"):
        sp = sub.choices[name]
        sp.add_argument("--output", "-o", help="write the JSON report here instead of stdout")
        sp.add_argument("--max-witnesses", type=int, default=10)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownLabel as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LABEL
    except (MalformedSpec, UsageError, LengthMismatch, NegativeEntry, ModeMismatch) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (CapExceeded, PrereqFailed, PropertyViolation) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
