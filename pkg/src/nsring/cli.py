"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 invalid input, 3 method
inapplicable, 4 size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import ci3, family
from .corpus import DEFAULT_SEED
from .errors import (
    NotCiEdim3,
    NotGorenstein,
    Overflow,
    SemigroupError,
    TooLarge,
)
from .index import METHOD_ALIASES, index
from .paper_examples import paper_examples
from .semigroup import NumericalSemigroup
from .verify import VerifyConfig, run_verify

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_INAPPLICABLE = 3
EXIT_TOO_LARGE = 4

METHOD_CHOICES = ("auto", "apery", "direct", "ord-formula", "ci3")


class UsageError(SemigroupError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def exit_code_for(exc: Exception) -> int:
    if isinstance(exc, (NotGorenstein, NotCiEdim3)):
        return EXIT_INAPPLICABLE
    if isinstance(exc, (Overflow, TooLarge)):
        return EXIT_TOO_LARGE
    return EXIT_INVALID


def parse_generators(text: str) -> list[int]:
    parts = [t for t in text.replace(" ", ",").split(",") if t]
    if not parts:
        raise UsageError("no generators given")
    try:
        return [int(t) for t in parts]
    except ValueError:
        raise UsageError(f"cannot parse generators from {text!r}") from None


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _semigroup_from_args(args) -> NumericalSemigroup:
    if args.file:
        return NumericalSemigroup.from_json(_load_json(args.file))
    if args.generators is None:
        raise UsageError("give generators as 'a,b,c' or via --file")
    return NumericalSemigroup(parse_generators(args.generators))


def _flatten(value) -> str:
    if isinstance(value, dict):
        return ";".join(f"{k}:{_flatten(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return " ".join(_flatten(v) for v in value)
    if value is None:
        return ""
    return str(value)


def render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return "\n".join(json.dumps(r) for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        keys = list(dict.fromkeys(k for r in records for k in r))
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(keys)
        for r in records:
            writer.writerow([_flatten(r.get(k)) for k in keys])
        return buf.getvalue().rstrip("\n")
    blocks = []
    for r in records:
        width = max((len(k) for k in r), default=0)
        blocks.append("\n".join(f"{k.ljust(width)}  {_flatten(v)}" for k, v in r.items()))
    return "\n\n".join(blocks)


def render_table(records: list[dict]) -> str:
    keys = list(dict.fromkeys(k for r in records for k in r))
    rows = [keys] + [[_flatten(r.get(k)) for k in keys] for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(keys))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows)


def cmd_analyze(args) -> tuple[list[dict], int]:
    H = _semigroup_from_args(args)
    ap = H.apery_set(H.multiplicity)
    record = {
        "generators": list(H.generators),
        "redundant": list(H.redundant),
        "edim": H.edim,
        "mult": H.multiplicity,
        "frobenius": H.frobenius,
        "gaps_count": H.genus,
        "gorenstein": H.is_symmetric(),
        "apery": ap.to_json(),
    }
    return [record], EXIT_OK


def cmd_index(args) -> tuple[list[dict], int]:
    H = _semigroup_from_args(args)
    method = args.method
    if method == "auto":
        method = "ci3" if H.edim == 3 and H.is_symmetric() else "apery"
    return [index(H, METHOD_ALIASES[method]).to_json()], EXIT_OK


def cmd_ci3(args) -> tuple[list[dict], int]:
    H = _semigroup_from_args(args)
    structures = ci3.detect_ci3(H)
    records = []
    for S in structures:
        cor = ci3.shortcut_index(S)
        records.append(
            {
                "generators": list(H.generators),
                **S.to_json(),
                "frobenius": ci3.frobenius_ci3(S),
                "n_values": {str(k): v for k, v in ci3.n_values_ci3(S).items()},
                "shortcut": None if cor is None else {"branch": cor[0], "index": cor[1]},
            }
        )
    if not records:
        raise NotCiEdim3(f"{H!r} is not a complete intersection")
    return records, EXIT_OK


def cmd_glue(args) -> tuple[list[dict], int]:
    if args.file:
        step = family.GluingStep.from_json(_load_json(args.file))
    else:
        if args.generators is None or args.a is None or args.p is None:
            raise UsageError("glue needs base generators, --a and --p (or --file)")
        step = family.GluingStep(NumericalSemigroup(parse_generators(args.generators)), args.a, args.p)
    H = family.glue(step)
    f = family.frobenius_glued(step)
    record = {
        "base": list(step.base.generators),
        "a": step.a,
        "p": step.p,
        "generators": list(H.generators),
        "frobenius": f,
        "gorenstein": H.is_symmetric(),
    }
    if f <= args.check_below:
        record["frobenius_check"] = H.frobenius == f
    return [record], EXIT_OK


def cmd_family(args) -> tuple[list[dict], int]:
    if args.file:
        data = _load_json(args.file)
        specs = [family.FamilySpec.from_json(d) for d in (data if isinstance(data, list) else [data])]
    else:
        if args.n is None:
            raise UsageError("family needs --n (or --file)")
        kind = family.HNA if args.kind == "hna" else family.DING3
        n_values = range(args.n, (args.n_max or args.n) + 1)
        a_values = parse_generators(args.a) if args.a else [1]
        if kind == family.HNA:
            specs = [family.FamilySpec(kind, n, a) for n in n_values for a in a_values]
        else:
            specs = [family.FamilySpec(kind, n) for n in n_values]
    records = []
    code = EXIT_OK
    for spec in specs:
        inst = family.build_family(spec)
        report = index(inst.semigroup, "ci3" if spec.kind == family.DING3 else "ord-formula")
        match = (report.index, report.ding_gap) == tuple(inst.expected)
        if not match:
            code = EXIT_MISMATCH
        records.append(
            {
                **spec.to_json(),
                "generators": list(inst.semigroup.generators),
                "frobenius": inst.expected_frobenius,
                "expected_index": inst.expected.index,
                "expected_ding_gap": inst.expected.ding_gap,
                "report": report.to_json(),
                "match": match,
            }
        )
    return records, code


def cmd_verify(args) -> tuple[list[dict], int]:
    cfg = VerifyConfig(
        seed=args.seed,
        ci3_count=args.ci3_count,
        chain_count=args.chains,
        pair_count=args.pairs,
        hna_n_max=args.hna_n_max,
        hna_a_values=tuple(parse_generators(args.hna_a)),
        jobs=args.jobs,
        inject_fault=args.inject_fault,
    )
    summary = run_verify(cfg)
    if args.format == "json":
        return [summary.to_json()], EXIT_OK if summary.ok else EXIT_MISMATCH
    records = [c.to_json() for c in summary.checks]
    return records, EXIT_OK if summary.ok else EXIT_MISMATCH


def cmd_paper_examples(args) -> tuple[list[dict], int]:
    rows = paper_examples()
    records = [r.to_json() for r in rows]
    code = EXIT_OK if all(r.match for r in rows) else EXIT_MISMATCH
    return records, code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nsring", description="Invariants of numerical semigroup rings.")
    parser.add_argument("--max-frobenius", type=int, help="override the table size cap")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, generators=True, default_format="json"):
        p = sub.add_parser(name, help=help_text)
        if generators:
            p.add_argument("generators", nargs="?", help="comma-separated generators")
            p.add_argument("--file", help="JSON file with the input")
        p.add_argument("--format", choices=("json", "csv", "human"), default=default_format)
        p.set_defaults(func=fn)
        return p

    add("analyze", cmd_analyze, "elementary invariants and the Apery set of the multiplicity")
    p = add("index", cmd_index, "Auslander index with per-generator N values")
    p.add_argument("--method", choices=METHOD_CHOICES, default="auto")
    add("ci3", cmd_ci3, "complete-intersection structures of an edim-3 semigroup")
    p = add("glue", cmd_glue, "glue <a, pH> onto a base semigroup")
    p.add_argument("--a", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--check-below", type=int, default=10**6, help="verify f by table when f is at most this")
    p = add("family", cmd_family, "build family members as JSON lines", generators=False)
    p.add_argument("kind", nargs="?", choices=("hna", "ding"), default="hna")
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--a", help="comma-separated odd values of a (hna only)")
    p.add_argument("--file", help="JSON family spec or list of specs")
    p = add("verify", cmd_verify, "formula-versus-oracle sweeps", generators=False, default_format="human")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--ci3-count", type=int, default=200)
    p.add_argument("--chains", type=int, default=100)
    p.add_argument("--pairs", type=int, default=50)
    p.add_argument("--hna-n-max", type=int, default=8)
    p.add_argument("--hna-a", default="1,3,5,7,9")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(table=True)
    p = add("paper-examples", cmd_paper_examples, "reproduce the published numeric claims", generators=False,
            default_format="human")
    p.set_defaults(table=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    saved_cap = os.environ.get("NSRING_MAX_FROBENIUS")
    try:
        args = build_parser().parse_args(argv)
        if args.max_frobenius is not None:
            if args.max_frobenius <= 0:
                raise UsageError("--max-frobenius must be positive")
            # through the environment so pool workers see it too
            os.environ["NSRING_MAX_FROBENIUS"] = str(args.max_frobenius)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        records, code = args.func(args)
    except (SemigroupError, RecursionError, MemoryError) as exc:
        code = exit_code_for(exc) if isinstance(exc, SemigroupError) else EXIT_TOO_LARGE
        error = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
        print(json.dumps(error), file=sys.stderr)
        return code
    finally:
        if saved_cap is None:
            os.environ.pop("NSRING_MAX_FROBENIUS", None)
        else:
            os.environ["NSRING_MAX_FROBENIUS"] = saved_cap
    if args.format == "human" and getattr(args, "table", False):
        print(render_table(records))
    else:
        print(render(records, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
