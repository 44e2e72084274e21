#!/usr/bin/env python3
"""Build a desk-scale dataset and look at one instance of each kind.

Runs the full pipeline (population -> paths -> splits -> instance files)
into ./demo_artifacts, then prints the artifact inventory and the first
test instance of each reasoning type so you can see what a model is
actually asked.

    python3 demos/build_and_peek.py [out_dir]
"""

import json
import sys
import time
from pathlib import Path

from compqa import (
    GENERALIZATION_LEVELS,
    REASONING_TYPES,
    QAInstance,
    dataset_files,
    desk_config,
    run_pipeline,
    test_file,
)


def first_instance(path: Path) -> QAInstance:
    with open(path, encoding="utf-8") as fh:
        return QAInstance.from_record(json.loads(fh.readline()))


def main() -> int:
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_artifacts")
    config = desk_config(out_dir=str(out))

    print(f"building desk-scale dataset in {out}/ ...")
    start = time.perf_counter()
    run_pipeline(config)
    print(f"done in {time.perf_counter() - start:.1f}s\n")

    print("instance files:")
    for name in dataset_files():
        lines = sum(1 for _ in open(out / name, encoding="utf-8"))
        print(f"  {name:<28} {lines:>5} instances")
    corpus = sum(1 for _ in open(out / "mem_corpus.jsonl", encoding="utf-8"))
    print(f"  {'mem_corpus.jsonl':<28} {corpus:>5} biography docs\n")

    level = GENERALIZATION_LEVELS[0]  # iid
    for rtype in REASONING_TYPES:
        inst = first_instance(out / test_file(rtype, level))
        print("=" * 72)
        print(f"{rtype.value} / {level.value}  ({inst.id})")
        print("=" * 72)
        if inst.contexts:
            print(f"[{len(inst.contexts)} context document(s); first one:]")
            print(inst.contexts[0])
        else:
            print("[no context: this type is answered from memorized facts]")
        print()
        print(f"Q: {inst.question}")
        print(f"gold chain: {' -> '.join(inst.gold_chain)}")
        print(f"reference answer:\n{inst.cot_answer}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
