"""Command-line front end: generate instances, run protocols, verify suites.

Exit codes: 0 when everything passed, 1 on any check failure or runtime
error, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import report as report_mod
from .engine import BudgetExceeded
from .families import (
    build_instance,
    load_instance_dict,
    parse_descriptor,
    validate_instance,
)
from .graph import InvalidInput, underlying_diameter
from .suites import DEFAULT_SEED, SUITES

WORKERS_ENV = "CONGEST_DIAM1_WORKERS"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="congest-diam1",
        description=(
            "Round-synchronous broadcast simulator, constant-round protocols "
            "for underlying-complete digraphs, and hard-instance tooling."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate an instance and write it as JSON")
    p_gen.add_argument("descriptor", help='e.g. "F:k=3,q=5,sigma=101" or "R1:n=32,p=0.33,seed=7"')
    p_gen.add_argument("--out", help="output path (default derived from the descriptor)")
    p_gen.add_argument("--seed", type=int, default=0, help="fallback seed for R1 descriptors")
    p_gen.add_argument("--validate", action="store_true", help="also run the instance validator")
    p_gen.set_defaults(func=cmd_gen)

    p_run = sub.add_parser("run", help="run a protocol and compare against the oracle")
    p_run.add_argument("--protocol", required=True, choices=report_mod.PROTOCOLS)
    p_run.add_argument(
        "--instance", action="append", default=[], metavar="DESC",
        help="instance descriptor (repeatable)",
    )
    p_run.add_argument(
        "--instance-file", action="append", default=[], metavar="PATH",
        help="instance JSON file written by gen (repeatable)",
    )
    p_run.add_argument("--budget-bits", type=int, help="per-message bit budget override")
    p_run.add_argument("--max-rounds", type=int, help="round limit override")
    p_run.add_argument("--source", type=int, help="source vertex for bfs (default: role s, else 0)")
    p_run.add_argument("--seed", type=int, default=0, help="fallback seed for R1 descriptors")
    p_run.add_argument("--format", choices=("json", "csv"), default="json",
                       help="csv writes a per-instance CSV alongside the JSON report")
    p_run.add_argument("--out", default="report", help="output path base (default: report)")
    p_run.add_argument("--no-figures", action="store_true", help="skip the PNG figure")
    p_run.add_argument("--summary", action="store_true",
                       help="omit full transcripts from the JSON report")
    p_run.set_defaults(func=cmd_run)

    p_verify = sub.add_parser("verify", help="run a named property suite")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--out", help="also write the JSON summary to this path")
    p_verify.set_defaults(func=cmd_verify)

    p_growth = sub.add_parser(
        "growth", help="round-growth table: flooding vs the constant-round protocols"
    )
    p_growth.add_argument("--ks", default="4,8,16,32", help="comma-separated k values")
    p_growth.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_growth.add_argument("--out", default="growth", help="output path base (default: growth)")
    p_growth.add_argument("--no-figures", action="store_true")
    p_growth.set_defaults(func=cmd_growth)
    return parser


def _out_base(out: str) -> Path:
    path = Path(out)
    if path.suffix in (".json", ".csv", ".png"):
        path = path.with_suffix("")
    return path


def cmd_gen(args: argparse.Namespace) -> int:
    desc = parse_descriptor(args.descriptor)
    inst = build_instance(desc, default_seed=args.seed)
    out = Path(args.out) if args.out else Path(
        args.descriptor.replace(":", "_").replace(",", "_").replace("=", "") + ".json"
    )
    report_mod.write_json(out, inst.to_json_dict(descriptor=desc.to_string()))
    diam = underlying_diameter(inst.graph)
    print(
        f"{desc.to_string()} -> {out}  n={inst.graph.n} "
        f"edges={len(inst.graph.edges)} underlying_diameter={diam}"
    )
    if args.validate:
        rep = validate_instance(inst, desc)
        for check in rep.checks:
            print(f"  {'ok  ' if check.passed else 'FAIL'} {check.name} {check.detail}")
        return 0 if rep.passed else 1
    return 0


def _experiment_task(payload: dict) -> dict:
    inst = load_instance_dict(payload["instance"])
    source = payload["source"] if payload["source"] is not None else inst.source
    record = report_mod.run_instance_experiment(
        inst.graph,
        payload["protocol"],
        source=source,
        budget_bits=payload["budget_bits"],
        max_rounds=payload["max_rounds"],
        label=payload["label"],
        keep_transcript=not payload["summary"],
    )
    return report_mod.strip_private(record)


def cmd_run(args: argparse.Namespace) -> int:
    payloads = []
    for text in args.instance:
        desc = parse_descriptor(text)
        inst = build_instance(desc, default_seed=args.seed)
        payloads.append(
            {
                "label": desc.to_string(),
                "instance": inst.to_json_dict(),
                "source": args.source,
                "protocol": args.protocol,
                "budget_bits": args.budget_bits,
                "max_rounds": args.max_rounds,
                "summary": args.summary,
            }
        )
    for path in args.instance_file:
        doc = json.loads(Path(path).read_text())
        payloads.append(
            {
                "label": doc.get("descriptor", str(path)),
                "instance": doc,
                "source": args.source,
                "protocol": args.protocol,
                "budget_bits": args.budget_bits,
                "max_rounds": args.max_rounds,
                "summary": args.summary,
            }
        )
    if not payloads:
        raise InvalidInput("no instances given; use --instance or --instance-file")

    workers = int(os.environ.get(WORKERS_ENV, "1"))
    workers = max(1, min(workers, len(payloads)))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_experiment_task, payloads))
    else:
        records = [_experiment_task(p) for p in payloads]

    base = _out_base(args.out)
    config = {
        "protocol": args.protocol,
        "budget_bits": args.budget_bits,
        "max_rounds": args.max_rounds,
        "seed": args.seed,
        "source": args.source,
        "instances": [p["label"] for p in payloads],
    }
    json_path = report_mod.write_json(
        base.with_suffix(".json"), {"config": config, "results": records}
    )
    written = [str(json_path)]
    if args.format == "csv":
        written.append(
            str(report_mod.write_csv(base.with_suffix(".csv"), records, report_mod.CSV_COLUMNS))
        )
    if not args.no_figures:
        written.append(str(report_mod.render_runs_figure(records, base.with_suffix(".png"))))

    ok = True
    for rec in records:
        good = report_mod.record_ok(rec)
        ok = ok and good
        extra = ""
        if rec["ratio_mean"] is not None:
            extra = (
                f" ratio[{rec['ratio_min']:.3f},{rec['ratio_mean']:.3f},"
                f"{rec['ratio_max']:.3f}]"
            )
        elif rec["oracle_match"] is not None:
            extra = f" oracle_match={rec['oracle_match']}"
        print(
            f"{rec['label']}: n={rec['n']} rounds={rec['rounds']} "
            f"max_bits={rec['max_bits']}{extra} {'ok' if good else 'FAIL'}"
        )
    print("wrote " + " ".join(written))
    return 0 if ok else 1


def cmd_verify(args: argparse.Namespace) -> int:
    result = SUITES[args.suite](seed=args.seed)
    doc = result.to_json_dict()
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        report_mod.write_json(args.out, doc)
    print(text)
    return 0 if result.passed else 1


def cmd_growth(args: argparse.Namespace) -> int:
    try:
        ks = tuple(int(x) for x in args.ks.split(",") if x.strip())
    except ValueError:
        raise InvalidInput(f"bad --ks value {args.ks!r}") from None
    if not ks:
        raise InvalidInput("need at least one k")
    rows = report_mod.round_growth_experiment(ks, seed=args.seed)
    base = _out_base(args.out)
    written = [
        str(report_mod.write_json(base.with_suffix(".json"), {"rows": rows})),
        str(report_mod.write_csv(base.with_suffix(".csv"), rows, report_mod.GROWTH_COLUMNS)),
    ]
    if not args.no_figures:
        written.append(str(report_mod.render_growth_figure(rows, base.with_suffix(".png"))))
    header = "  ".join(f"{c:>16}" for c in report_mod.GROWTH_COLUMNS)
    print(header)
    for row in rows:
        print("  ".join(f"{str(row[c]):>16}" for c in report_mod.GROWTH_COLUMNS))
    print("wrote " + " ".join(written))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, BudgetExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
