"""Shared fixtures: a small real dataset built through the generator's CLI.

The generator is exercised strictly as an installed command-line tool; the
bridge's contract is file formats plus subprocesses, so the tests stay on
that boundary too.
"""

import json
import subprocess
from pathlib import Path

import pytest

CONFIG = {
    "counts": {"n_mem": 60, "n_ctx": 60, "n_shared": 20},
    "paths_per_type": 120,
    "train_sizes": {"mem": 20, "ctx": 20, "comp": 24},
    "test_sizes": {
        "mem": {"iid": 6, "composition": 4, "zero_shot": 2},
        "ctx": {"iid": 6, "composition": 4, "zero_shot": 2},
        "comp": {"iid": 6, "composition": 4, "zero_shot": 2},
    },
}

INSTANCE_FILES = [
    "train_mem.jsonl",
    "train_ctx.jsonl",
    "train_comp.jsonl",
    "test_mem_iid.jsonl",
    "test_mem_composition.jsonl",
    "test_mem_zero_shot.jsonl",
    "test_ctx_iid.jsonl",
    "test_ctx_composition.jsonl",
    "test_ctx_zero_shot.jsonl",
    "test_comp_iid.jsonl",
    "test_comp_composition.jsonl",
    "test_comp_zero_shot.jsonl",
]


def run_generator(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        ["compqa", *args], capture_output=True, text=True, timeout=300
    )


@pytest.fixture(scope="session")
def dataset_dir(tmp_path_factory) -> Path:
    """A complete 100-instance artifact directory."""
    root = tmp_path_factory.mktemp("dataset")
    config = root / "config.json"
    config.write_text(json.dumps(CONFIG))
    art = root / "art"
    for stage in (
        ["generate", "--config", str(config), "--out", str(art)],
        ["split", "--out", str(art)],
        ["build-dataset", "--out", str(art)],
    ):
        proc = run_generator(*stage)
        assert proc.returncode == 0, proc.stderr
    return art


@pytest.fixture(scope="session")
def all_instances(dataset_dir) -> Path:
    """Every train and test instance concatenated into one 100-line file."""
    merged = dataset_dir.parent / "all_instances.jsonl"
    with open(merged, "w", encoding="utf-8") as out:
        for name in INSTANCE_FILES:
            out.write((dataset_dir / name).read_text())
    assert sum(1 for _ in open(merged)) == 100
    return merged


@pytest.fixture(scope="session")
def comp_test(dataset_dir) -> Path:
    return dataset_dir / "test_comp_iid.jsonl"


def load_rows(path: Path) -> list[dict]:
    """Plain JSONL reader; duplicated in test modules that never see fixtures."""
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


@pytest.fixture(scope="session")
def gold_answers(all_instances) -> dict:
    """model_input -> gold chain-of-thought, for fake frameworks."""
    return {row["model_input"]: row["cot_answer"] for row in load_rows(all_instances)}


@pytest.fixture(scope="session")
def gold_framework(tmp_path_factory, gold_answers) -> str:
    """A cmd: model identifier that answers every prompt with the gold text."""
    root = tmp_path_factory.mktemp("framework")
    answers = root / "answers.json"
    answers.write_text(json.dumps(gold_answers))
    script = root / "fake_model.py"
    script.write_text(
        "import json, sys\n"
        "answers = json.load(open(sys.argv[1], encoding='utf-8'))\n"
        "for line in sys.stdin:\n"
        "    req = json.loads(line)\n"
        "    text = answers.get(req['prompt'], 'So, the answer is: unknown')\n"
        "    print(json.dumps({'samples': [text] * req['n']}), flush=True)\n"
    )
    return f"cmd:python3 {script} {answers}"
