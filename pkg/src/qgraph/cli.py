"""Command-line entry points.

``qgraph run <algo>`` executes one algorithm on a file or generated instance
and reports the answer, the query ledger, and verdicts (as text, JSON, or a
one-row CSV).  ``qgraph sweep`` runs a scaling sweep from a keyfile spec and
writes the row CSV, a fit summary, and a log-log figure into a directory.

Exit codes: 0 success, 2 verification failure, 3 unparseable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .bench import (
    RunRecord,
    SweepVerificationError,
    parse_gen_spec,
    parse_sweep_keyfile,
    run_once,
    run_sweep,
    write_csv,
)
from .graphs import GraphError, IntegerNetwork, Model
from .grover import Amplification, OracleConfig
from .io import GraphParseError, read_graph_file, read_network_file

EXIT_OK = 0
EXIT_VERIFY = 2
EXIT_PARSE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgraph",
        description="Quantum-query graph algorithm simulator and benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one algorithm on one instance")
    run.add_argument(
        "algo", choices=["layers", "bipartite", "general", "flow"]
    )
    source = run.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", help="instance file (graph or network format)")
    source.add_argument("--gen", help="generator spec, e.g. k33 or graph:n=10,p=0.3")
    run.add_argument(
        "--model", choices=["adjacency", "list"], default="list"
    )
    run.add_argument("--verify", action="store_true", help="check a classical oracle")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--amp", choices=["none", "logn"], default="none")
    out = run.add_mutually_exclusive_group()
    out.add_argument("--json", metavar="OUT", help="write the report as JSON")
    out.add_argument("--csv", metavar="OUT", help="write the report as a CSV row")

    sweep = sub.add_parser("sweep", help="run a scaling sweep from a keyfile")
    sweep.add_argument("--spec", required=True, help="flat key = value spec file")
    sweep.add_argument("--out", required=True, help="output directory")
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.add_argument(
        "--no-figure",
        action="store_true",
        help="skip the log-log figure, write CSV and fit only",
    )
    return parser


def _load_instance(args) -> object:
    model = Model(args.model)
    if args.file is not None:
        if args.algo == "flow":
            return read_network_file(args.file, model=model)
        return read_graph_file(args.file, model=model)
    return parse_gen_spec(args.gen, model, args.seed)


def _record_json(record: RunRecord) -> dict:
    snap = None
    report = record.report
    if hasattr(report, "ledger_snapshot"):
        snap = report.ledger_snapshot
    return {
        "sweep_id": record.sweep_id,
        "algo": record.algo,
        "model": record.model,
        "n": record.n,
        "m": record.m,
        "U": record.U,
        "seed": record.seed,
        "answer": record.answer,
        "oracle": record.oracle,
        "charged_queries": str(record.charged_queries),
        "raw_probes": record.raw_probes,
        "phases": record.phases,
        "max_depth": record.max_depth,
        "verdicts": record.verdicts,
        "ledger": snap,
    }


def _cmd_run(args) -> int:
    try:
        instance = _load_instance(args)
    except (GraphParseError, GraphError) as exc:
        print(f"qgraph: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.algo == "flow" and not isinstance(instance, IntegerNetwork):
        print("qgraph: flow needs a network instance", file=sys.stderr)
        return EXIT_PARSE
    if args.algo != "flow" and isinstance(instance, IntegerNetwork):
        print(f"qgraph: {args.algo} needs a graph instance", file=sys.stderr)
        return EXIT_PARSE

    config = OracleConfig(seed=args.seed, amplification_mode=Amplification(args.amp))
    try:
        record = run_once(
            args.algo, instance, config, verify=args.verify, seed=args.seed
        )
    except GraphError as exc:
        print(f"qgraph: {exc}", file=sys.stderr)
        return EXIT_PARSE

    if args.json:
        Path(args.json).write_text(
            json.dumps(_record_json(record), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
    elif args.csv:
        write_csv(args.csv, [record])
    else:
        print(f"algo={record.algo} model={record.model} n={record.n} m={record.m}")
        print(f"answer={record.answer}" + (
            f" oracle={record.oracle}" if record.oracle is not None else ""
        ))
        print(
            f"charged_queries={record.charged_queries} "
            f"raw_probes={record.raw_probes} phases={record.phases} "
            f"max_depth={record.max_depth}"
        )
        print(f"verdicts={record.verdicts}")

    if not record.ok:
        print(
            f"qgraph: verification failed: answer={record.answer} "
            f"oracle={record.oracle} ({record.verdicts})",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_sweep(args) -> int:
    try:
        text = Path(args.spec).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"qgraph: cannot read spec: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        spec = parse_sweep_keyfile(text)
    except GraphParseError as exc:
        print(f"qgraph: {exc}", file=sys.stderr)
        return EXIT_PARSE

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    try:
        result = run_sweep(spec, jobs=max(1, args.jobs))
    except SweepVerificationError as exc:
        print(f"qgraph: {exc}", file=sys.stderr)
        return EXIT_VERIFY

    csv_path = out_dir / f"sweep_{result.sweep_id}.csv"
    write_csv(csv_path, result.records)
    fit_path = out_dir / f"fit_{result.sweep_id}.json"
    fit_payload = {
        "sweep_id": result.sweep_id,
        "algorithm": spec.algorithm,
        "model": spec.model.value,
        "density": spec.density.key(),
        "amp": spec.amplification.value,
        "sizes": list(spec.sizes),
        "medians": [
            {"n": n, "charged_queries": str(c)} for n, c in result.medians
        ],
        "slope": result.fit.slope,
        "intercept": result.fit.intercept,
        "residual": result.fit.residual,
        "predicted_slope": result.fit.predicted,
    }
    fit_path.write_text(
        json.dumps(fit_payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    outputs = [str(csv_path), str(fit_path)]
    if not args.no_figure:
        from .plots import render_sweep_figure

        figure_path = out_dir / f"sweep_{result.sweep_id}.png"
        render_sweep_figure(result, figure_path)
        outputs.append(str(figure_path))

    print(
        f"sweep {result.sweep_id}: slope={result.fit.slope:.4f} "
        f"predicted={result.fit.predicted:.4f} rows={len(result.records)}"
    )
    for path in outputs:
        print(f"wrote {path}")
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    return _cmd_sweep(args)


if __name__ == "__main__":
    sys.exit(main())
