"""Command-line entry points: ``infer`` and ``export``.

Exit codes: 0 success, 2 invalid input (job fields, dataset or output
files), 3 framework unreachable, 4 partial output written — rerun the
same command to resume where it stopped.
"""

from __future__ import annotations

import argparse
import sys

from .errors import FrameworkUnavailable, InvalidJob, MalformedDataset, PartialOutput
from .export import emit_training_files
from .inference import InferenceJob, run_inference


def cmd_infer(args: argparse.Namespace) -> int:
    job = InferenceJob(
        dataset=args.dataset,
        model=args.model,
        out=args.out,
        n=args.n,
        temperature=args.temperature,
    )
    out = run_inference(job, max_in_flight=args.max_in_flight)
    print(f"wrote {out}")
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    export = emit_training_files(
        args.dataset, args.flavor, args.out, mem_corpus=args.mem_corpus
    )
    for path in export.files:
        print(f"wrote {path}")
    print(f"{export.instances} instances exported ({export.flavor.value})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="model-bridge",
        description=(
            "Run batch inference over a QA instance file, or export it as "
            "fine-tuning inputs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    inf = sub.add_parser("infer", help="answer every instance via a model framework")
    inf.add_argument("--dataset", required=True, help="instance JSONL file")
    inf.add_argument(
        "--model",
        required=True,
        help="opaque model identifier, e.g. cmd:<command line>",
    )
    inf.add_argument("--out", required=True, help="prediction JSONL to write")
    inf.add_argument("--n", type=int, default=1, help="samples per instance")
    inf.add_argument(
        "--temperature", type=float, default=0.0, help="decoding temperature"
    )
    inf.add_argument(
        "--max-in-flight", type=int, default=4, help="bounded request concurrency"
    )
    inf.set_defaults(func=cmd_infer)

    exp = sub.add_parser("export", help="emit SFT or RL training files")
    exp.add_argument("--dataset", required=True, help="instance JSONL file")
    exp.add_argument("--flavor", required=True, choices=["sft", "rl"])
    exp.add_argument("--out", required=True, help="output directory")
    exp.add_argument(
        "--mem-corpus",
        help="biography corpus JSONL to convert alongside SFT pairs",
    )
    exp.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PartialOutput as exc:
        print(f"error: {exc} (rerun the same command to resume; {exc.resume_token})",
              file=sys.stderr)
        return 4
    except FrameworkUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidJob, MalformedDataset) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
