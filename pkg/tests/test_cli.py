"""Command-line surface: exit codes, file outputs, and the reward loop."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from compqa import storage
from compqa.cli import main


@pytest.fixture(scope="session")
def cli_dir(tmp_path_factory) -> Path:
    """Artifacts produced by running the three stage subcommands."""
    out = tmp_path_factory.mktemp("artifacts") / "cli"
    for argv in (
        ["generate", "--desk", "--out", str(out)],
        ["split", "--out", str(out)],
        ["build-dataset", "--out", str(out)],
    ):
        assert main(argv) == 0, argv
    return out


def read_instances(path: Path) -> list[dict]:
    return list(storage.read_jsonl(path))


def gold_predictions_file(art_dir: Path, tmp_path: Path) -> tuple[Path, list]:
    insts = read_instances(art_dir / "test_comp_iid.jsonl")
    path = tmp_path / "predictions.jsonl"
    storage.write_jsonl(
        path,
        ({"instance_id": i["id"], "samples": [i["cot_answer"]]} for i in insts),
    )
    return path, insts


def test_staged_cli_matches_library_pipeline(cli_dir, desk_dir):
    cli_names = sorted(p.name for p in cli_dir.iterdir())
    lib_names = sorted(p.name for p in desk_dir.iterdir())
    assert cli_names == lib_names
    diffs = [
        name
        for name in cli_names
        if (cli_dir / name).read_bytes() != (desk_dir / name).read_bytes()
    ]
    assert diffs == []


def test_stats_exit_codes(cli_dir, capsys):
    assert main(["stats", "--out", str(cli_dir)]) == 0
    assert "balanced" in capsys.readouterr().out

    target = cli_dir / "test_ctx_iid.jsonl"
    original = target.read_bytes()
    target.write_bytes(original + b'{"id": "bogus"}\n')
    try:
        assert main(["stats", "--out", str(cli_dir)]) == 2
        assert "MISMATCH" in capsys.readouterr().out
    finally:
        target.write_bytes(original)


def test_split_on_missing_dir_fails_cleanly(tmp_path, capsys):
    assert main(["split", "--out", str(tmp_path / "nowhere")]) == 2
    assert "error:" in capsys.readouterr().err


def test_generate_reports_resource_exhaustion(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(
        json.dumps(
            {
                "counts": {"n_mem": 40, "n_ctx": 40, "n_shared": 10},
                "paths_per_type": 1_000_000,
            }
        )
    )
    code = main(
        ["generate", "--config", str(config), "--out", str(tmp_path / "art")]
    )
    assert code == 3
    assert "error:" in capsys.readouterr().err


def test_mix_writes_both_subsets(cli_dir, tmp_path):
    out = tmp_path / "mix"
    code = main(
        [
            "mix",
            str(cli_dir / "train_comp.jsonl"),
            "--fraction",
            "0.1",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    sft = read_instances(out / "sft.jsonl")
    rl = read_instances(out / "rl.jsonl")
    total = len(read_instances(cli_dir / "train_comp.jsonl"))
    assert len(sft) == round(0.1 * total)
    assert len(sft) + len(rl) == total
    ids = {r["id"] for r in sft} | {r["id"] for r in rl}
    assert len(ids) == total


def test_mix_rl_count_mode(cli_dir, tmp_path):
    out = tmp_path / "mix"
    code = main(
        [
            "mix",
            str(cli_dir / "train_comp.jsonl"),
            "--rl-count",
            "300",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    assert len(read_instances(out / "rl.jsonl")) == 300


def test_mix_empty_pool_is_a_validation_error(cli_dir, tmp_path, capsys):
    code = main(
        [
            "mix",
            str(cli_dir / "train_comp.jsonl"),
            "--fraction",
            "0.5",
            "--type",
            "mem",
            "--out",
            str(tmp_path / "mix"),
        ]
    )
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_evaluate_scores_gold_at_one(cli_dir, tmp_path, capsys):
    preds, _ = gold_predictions_file(cli_dir, tmp_path)
    report_path = tmp_path / "report.json"
    code = main(
        [
            "evaluate",
            str(cli_dir / "test_comp_iid.jsonl"),
            "--predictions",
            str(preds),
            "--k-max",
            "1",
            "--report",
            str(report_path),
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "overall" in out
    rec = json.loads(report_path.read_text())
    assert rec["overall"]["correct"] == rec["overall"]["count"]
    assert list(rec["pass_at_k"]) == ["1"]


def test_evaluate_rejects_unknown_ids(cli_dir, tmp_path, capsys):
    preds = tmp_path / "predictions.jsonl"
    storage.write_jsonl(
        preds, [{"instance_id": "not-a-real-id", "samples": ["text"]}]
    )
    code = main(
        [
            "evaluate",
            str(cli_dir / "test_comp_iid.jsonl"),
            "--predictions",
            str(preds),
        ]
    )
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_diagnose_summarizes_failures(cli_dir, tmp_path, capsys):
    insts = read_instances(cli_dir / "test_comp_iid.jsonl")[:20]
    preds = tmp_path / "predictions.jsonl"
    storage.write_jsonl(
        preds,
        (
            {
                "instance_id": i["id"],
                "samples": [i["cot_answer"].replace(i["final_answer"], "Nobody")],
            }
            for i in insts
        ),
    )
    report_path = tmp_path / "errors.jsonl"
    code = main(
        [
            "diagnose",
            str(cli_dir / "test_comp_iid.jsonl"),
            "--predictions",
            str(preds),
            "--report",
            str(report_path),
        ]
    )
    assert code == 0
    assert "Prog." in capsys.readouterr().out
    lines = read_instances(report_path)
    assert "summary" in lines[-1]
    assert len(lines) == len(insts) + 1
    assert all(rec["failure_hop"] is not None for rec in lines[:-1])


def test_diagnose_with_gold_predictions_reports_nothing(cli_dir, tmp_path, capsys):
    preds, _ = gold_predictions_file(cli_dir, tmp_path)
    code = main(
        [
            "diagnose",
            str(cli_dir / "test_comp_iid.jsonl"),
            "--predictions",
            str(preds),
        ]
    )
    assert code == 0
    assert "none attributable" in capsys.readouterr().out


def test_reward_subprocess_streams_binary_grades(cli_dir):
    insts = read_instances(cli_dir / "test_mem_iid.jsonl")[:3]
    queries = [
        {"instance_id": insts[0]["id"], "sample_text": insts[0]["cot_answer"]},
        {"instance_id": insts[1]["id"], "sample_text": "So, the answer is: wrong"},
        {"instance_id": insts[2]["id"], "sample_text": insts[2]["cot_answer"]},
    ]
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "compqa.cli",
            "reward",
            str(cli_dir / "test_mem_iid.jsonl"),
        ],
        input="".join(json.dumps(q) + "\n" for q in queries),
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.split() == ["1", "0", "1"]


def test_reward_rejects_unknown_instance(cli_dir):
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "compqa.cli",
            "reward",
            str(cli_dir / "test_mem_iid.jsonl"),
        ],
        input='{"instance_id": "ghost", "sample_text": "x"}\n',
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 2
    assert "error:" in proc.stderr


def test_console_script_help():
    proc = subprocess.run(
        ["compqa", "--help"], capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == 0
    for name in (
        "generate",
        "split",
        "build-dataset",
        "mix",
        "evaluate",
        "diagnose",
        "stats",
        "reward",
    ):
        assert name in proc.stdout
