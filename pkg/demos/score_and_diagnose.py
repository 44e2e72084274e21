#!/usr/bin/env python3
"""Score a simulated model and attribute its failures hop by hop.

Loads every test instance from a built dataset directory (building one
first if needed), fabricates predictions from a "model" that answers
most questions perfectly but derails at a random hop of the rest, then
runs the scorer and the per-hop failure analysis on the result.

    python3 demos/score_and_diagnose.py [artifacts_dir]
"""

import json
import random
import sys
from pathlib import Path

from compqa import (
    ANSWER_MARKER,
    GENERALIZATION_LEVELS,
    REASONING_TYPES,
    PredictionRecord,
    QAInstance,
    aggregate_errors,
    analyze_predictions,
    desk_config,
    run_pipeline,
    score,
    test_file,
)

FAIL_RATE = 0.3


def load_test_instances(out: Path) -> list[QAInstance]:
    instances = []
    for rtype in REASONING_TYPES:
        for level in GENERALIZATION_LEVELS:
            with open(out / test_file(rtype, level), encoding="utf-8") as fh:
                instances += [QAInstance.from_record(json.loads(ln)) for ln in fh]
    return instances


def derail(inst: QAInstance, rng: random.Random) -> str:
    """Answer text that goes wrong at one hop: every gold entity from that
    hop on is replaced, including the final answer after the marker."""
    hop = rng.randrange(1, len(inst.gold_chain))
    text = inst.cot_answer
    for i, entity in enumerate(inst.gold_chain[hop:], start=hop):
        text = text.replace(entity, f"Wrong Entity {i}")
    return text


def main() -> int:
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_artifacts")
    if not (out / "provenance.json").exists():
        print(f"building desk-scale dataset in {out}/ ...")
        run_pipeline(desk_config(out_dir=str(out)))

    instances = load_test_instances(out)
    rng = random.Random(7)
    predictions = [
        PredictionRecord(
            instance_id=inst.id,
            samples=[derail(inst, rng) if rng.random() < FAIL_RATE else inst.cot_answer],
        )
        for inst in instances
    ]

    report = score(predictions, instances)
    print(f"simulated model over {len(instances)} test instances "
          f"(fails ~{FAIL_RATE:.0%} of them):\n")
    print(report.render())

    errors = analyze_predictions(predictions, instances)
    summary = aggregate_errors(errors)
    print("\nfailure attribution:")
    print(f"  attributed to a hop : {summary.attributed}")
    print(f"  unattributed        : {summary.unattributed}")
    print(f"  failing on ctx facts: {summary.ctx_fraction:.0%}")
    print(f"  failing on mem facts: {summary.mem_fraction:.0%}")
    print(f"  mean progress before derailing: {summary.mean_progress:.2f}")

    sample = next(r for r in errors if r.failure_hop is not None)
    print(f"\nexample error record: {json.dumps(sample.to_record())}")
    print(f"(marker every prediction ends with: {ANSWER_MARKER!r} + answer)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
