"""Command-line entry point.

Stage commands (``generate``, ``split``, ``build-dataset``) share one
artifact directory and can be re-run independently; ``generate`` records
the config in ``provenance.json`` so later stages need no flags beyond
``--out``.  The remaining commands work on dataset and prediction files:
``mix`` carves SFT/RL subsets, ``evaluate`` scores predictions, ``diagnose``
attributes failures, ``stats`` audits an artifact directory, and ``reward``
answers reward queries line by line on stdin.

Exit codes: 0 success, 2 validation failure, 3 generation ran out of room
(typically an unsatisfiable split or an exhausted entity pool).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from . import storage
from .errors import (
    BenchmarkError,
    InsufficientPaths,
    InsufficientPool,
    NoRealization,
    UnknownInstanceId,
    UnsatisfiableSplit,
)
from .evaluation import PredictionRecord, binary_reward, score
from .diagnose import aggregate_errors, analyze_predictions
from .paths import ReasoningType
from .pipeline import (
    MixSpec,
    PipelineConfig,
    desk_config,
    report_stats,
    stage_build,
    stage_generate,
    stage_split,
    subset_mix,
)
from .qa import QAInstance

RESOURCE_ERRORS = (
    UnsatisfiableSplit,
    InsufficientPool,
    InsufficientPaths,
    NoRealization,
)


def _load_instances(paths: Sequence[str]) -> list[QAInstance]:
    out: list[QAInstance] = []
    for path in paths:
        for rec in storage.iter_jsonl(path):
            out.append(QAInstance.from_record(rec))
    return out


def _load_predictions(path: str) -> list[PredictionRecord]:
    return [PredictionRecord.from_record(rec) for rec in storage.iter_jsonl(path)]


def _resolve_config(args: argparse.Namespace) -> PipelineConfig:
    if args.config is not None:
        config = PipelineConfig.from_record(storage.read_json(args.config))
    elif getattr(args, "desk", False):
        config = desk_config()
    else:
        config = PipelineConfig()
    if args.seed is not None:
        config = replace(config, master_seed=args.seed)
    if args.out is not None:
        config = replace(config, out_dir=str(args.out))
    return config


def _stage_config(args: argparse.Namespace) -> PipelineConfig | None:
    """Config for split/build-dataset: explicit file (plus overrides) or
    None, in which case the stage reads provenance.json itself."""
    if args.config is None and args.seed is None:
        return None
    if args.config is not None:
        config = PipelineConfig.from_record(storage.read_json(args.config))
    else:
        from .pipeline import load_config

        config = load_config(Path(args.out))
    if args.seed is not None:
        config = replace(config, master_seed=args.seed)
    return config


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_generate(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    out = stage_generate(config)
    print(f"world and path pools written to {out}")
    return 0


def cmd_split(args: argparse.Namespace) -> int:
    out = stage_split(args.out, _stage_config(args))
    print(f"split manifests written to {out}")
    return 0


def cmd_build_dataset(args: argparse.Namespace) -> int:
    out = stage_build(args.out, _stage_config(args))
    stats = storage.read_json(Path(out) / "stats.json")
    total_train = sum(stats["counts"]["train"].values())
    total_test = sum(
        n for cells in stats["counts"]["test"].values() for n in cells.values()
    )
    print(
        f"dataset written to {out}: {total_train} train, {total_test} test, "
        f"{stats['counts']['mem_corpus']} corpus documents"
    )
    return 0


def cmd_mix(args: argparse.Namespace) -> int:
    spec = MixSpec(
        sft_fraction=args.fraction,
        sft_count=args.sft_count,
        rl_count=args.rl_count,
        reasoning_type=ReasoningType(args.type) if args.type else None,
        seed=args.seed if args.seed is not None else 0,
    )
    instances = _load_instances(args.dataset)
    sft, rl = subset_mix(instances, spec)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    storage.write_jsonl(out / "sft.jsonl", (inst.to_record() for inst in sft))
    storage.write_jsonl(out / "rl.jsonl", (inst.to_record() for inst in rl))
    print(f"{len(sft)} SFT / {len(rl)} RL instances written to {out}")
    return 0


def cmd_evaluate(args: argparse.Namespace) -> int:
    dataset = _load_instances(args.dataset)
    predictions = _load_predictions(args.predictions)
    report = score(predictions, dataset)
    if args.k_max is not None:
        report.pass_at = {
            k: v for k, v in report.pass_at.items() if k <= args.k_max
        }
    print(report.render())
    if args.report is not None:
        storage.write_json(args.report, report.to_record())
    return 0


def cmd_diagnose(args: argparse.Namespace) -> int:
    dataset = _load_instances(args.dataset)
    predictions = _load_predictions(args.predictions)
    records = analyze_predictions(predictions, dataset)
    summary = aggregate_errors(records) if any(
        r.failure_hop is not None for r in records
    ) else None
    if args.report is not None:
        def lines() -> Iterator[dict]:
            for rec in records:
                yield rec.to_record()
            if summary is not None:
                yield {"summary": summary.to_record()}

        storage.write_jsonl(args.report, lines())
    if summary is None:
        print(f"{len(records)} failed predictions, none attributable to a hop")
    else:
        print(summary.render())
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    report = report_stats(args.out)
    print(report.render())
    return 0 if report.ok else 2


def cmd_reward(args: argparse.Namespace) -> int:
    by_id = {inst.id: inst for inst in _load_instances(args.dataset)}
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        query = json.loads(line)
        inst = by_id.get(query["instance_id"])
        if inst is None:
            raise UnknownInstanceId(
                f"no instance {query['instance_id']!r} in the reward dataset"
            )
        sys.stdout.write(f"{binary_reward(query['sample_text'], inst)}\n")
        sys.stdout.flush()
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compqa",
        description="Generate, split, and score multi-hop biography QA datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="build the world graph and path pools")
    gen.add_argument("--config", help="JSON file mirroring PipelineConfig fields")
    gen.add_argument("--seed", type=int, help="override the config's master seed")
    gen.add_argument("--out", help="artifact directory (overrides config)")
    gen.add_argument(
        "--desk",
        action="store_true",
        help="use the laptop-sized preset instead of full-scale defaults",
    )
    gen.set_defaults(func=cmd_generate)

    spl = sub.add_parser("split", help="derive train/test path manifests")
    spl.add_argument("--config", help="JSON config (default: provenance.json)")
    spl.add_argument("--seed", type=int, help="override the config's master seed")
    spl.add_argument("--out", default="artifacts", help="artifact directory")
    spl.set_defaults(func=cmd_split)

    bld = sub.add_parser("build-dataset", help="emit QA instance files")
    bld.add_argument("--config", help="JSON config (default: provenance.json)")
    bld.add_argument("--seed", type=int, help="override the config's master seed")
    bld.add_argument("--out", default="artifacts", help="artifact directory")
    bld.set_defaults(func=cmd_build_dataset)

    mix = sub.add_parser("mix", help="carve an instance pool into SFT/RL subsets")
    mix.add_argument("dataset", nargs="+", help="instance JSONL file(s)")
    mix.add_argument("--fraction", type=float, help="portion assigned to SFT")
    mix.add_argument("--sft-count", type=int, help="absolute SFT subset size")
    mix.add_argument(
        "--rl-count", type=int, help="absolute RL subset size (rest goes to SFT)"
    )
    mix.add_argument(
        "--type", choices=[t.value for t in ReasoningType], help="filter by type"
    )
    mix.add_argument("--seed", type=int, help="selection seed (default 0)")
    mix.add_argument("--out", required=True, help="directory for sft.jsonl/rl.jsonl")
    mix.set_defaults(func=cmd_mix)

    ev = sub.add_parser("evaluate", help="score a prediction file")
    ev.add_argument("dataset", nargs="+", help="instance JSONL file(s)")
    ev.add_argument("--predictions", required=True, help="prediction JSONL file")
    ev.add_argument("--k-max", type=int, help="largest k for the pass@k table")
    ev.add_argument("--report", help="also write the report as JSON here")
    ev.set_defaults(func=cmd_evaluate)

    dg = sub.add_parser("diagnose", help="attribute failures to hops and sources")
    dg.add_argument("dataset", nargs="+", help="instance JSONL file(s)")
    dg.add_argument("--predictions", required=True, help="prediction JSONL file")
    dg.add_argument(
        "--report", help="write per-failure records plus a summary line here"
    )
    dg.set_defaults(func=cmd_diagnose)

    st = sub.add_parser("stats", help="audit an artifact directory's counts")
    st.add_argument("--out", default="artifacts", help="artifact directory")
    st.set_defaults(func=cmd_stats)

    rw = sub.add_parser(
        "reward",
        help='answer {"instance_id", "sample_text"} stdin lines with 0/1',
    )
    rw.add_argument("dataset", nargs="+", help="instance JSONL file(s)")
    rw.set_defaults(func=cmd_reward)

    return parser


def main(argv: Iterable[str] | None = None) -> int:
    args = build_parser().parse_args(argv if argv is None else list(argv))
    try:
        return args.func(args)
    except BenchmarkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3 if isinstance(exc, RESOURCE_ERRORS) else 2


if __name__ == "__main__":
    sys.exit(main())
