#!/usr/bin/env python3
"""Full loop through the bridge: dataset -> inference -> score, via CLIs.

Builds a desk-scale dataset with the `compqa` command line, writes a toy
framework server (a script that gives the same answer to every prompt),
runs `model-bridge infer` against it with the `cmd:` backend, and scores
the prediction file with `compqa evaluate`.  Everything crosses process
boundaries exactly the way a real model framework would.

    python3 demos/bridge_roundtrip.py [work_dir]
"""

import subprocess
import sys
import textwrap
from pathlib import Path

TOY_FRAMEWORK = textwrap.dedent(
    """\
    import json, sys
    for line in sys.stdin:
        req = json.loads(line)
        text = "So, the answer is: Philately"
        reply = {"samples": [text] * req["n"]}
        print(json.dumps(reply), flush=True)
    """
)


def run(argv: list[str]) -> None:
    print("$", " ".join(argv))
    proc = subprocess.run(argv, capture_output=True, text=True)
    if proc.stdout:
        print(textwrap.indent(proc.stdout.rstrip(), "  "))
    if proc.returncode != 0:
        print(textwrap.indent(proc.stderr.rstrip(), "  "), file=sys.stderr)
        raise SystemExit(proc.returncode)


def main() -> int:
    work = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_bridge")
    out = work / "artifacts"
    work.mkdir(parents=True, exist_ok=True)

    if not (out / "provenance.json").exists():
        run(["compqa", "generate", "--desk", "--out", str(out)])
        run(["compqa", "split", "--out", str(out)])
        run(["compqa", "build-dataset", "--out", str(out)])

    server = work / "toy_framework.py"
    server.write_text(TOY_FRAMEWORK, encoding="utf-8")

    dataset = out / "test_comp_iid.jsonl"
    preds = work / "predictions.jsonl"
    if preds.exists():
        preds.unlink()
    run([
        "model-bridge", "infer",
        "--dataset", str(dataset),
        "--model", f"cmd:{sys.executable} {server}",
        "--out", str(preds),
        "--n", "4",
    ])

    print("\nthe toy framework answers 'Philately' to everything, so expect")
    print("accuracy at the base rate of that answer being right:\n")
    run(["compqa", "evaluate", str(dataset), "--predictions", str(preds)])
    return 0


if __name__ == "__main__":
    sys.exit(main())
