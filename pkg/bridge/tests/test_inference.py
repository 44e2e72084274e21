"""Batch inference: cardinality, ordering, resume, and framework faults."""

import json
import time

import pytest

from model_bridge import (
    CommandBackend,
    FrameworkUnavailable,
    InferenceJob,
    InvalidJob,
    MalformedDataset,
    PartialOutput,
    read_dataset,
    resolve_backend,
    run_inference,
)


def load_predictions(path):
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def echo_backend(prompt, n, temperature):
    return [f"So, the answer is: reply {i}" for i in range(n)]


def make_job(dataset, tmp_path, **kw):
    return InferenceJob(
        dataset=str(dataset), model="cmd:unused", out=str(tmp_path / "pred.jsonl"), **kw
    )


def test_job_field_validation(comp_test, tmp_path):
    with pytest.raises(InvalidJob):
        make_job(comp_test, tmp_path, n=0)
    with pytest.raises(InvalidJob):
        make_job(comp_test, tmp_path, temperature=-0.5)


def test_one_sample_per_instance(comp_test, tmp_path):
    job = make_job(comp_test, tmp_path, n=1)
    out = run_inference(job, backend=echo_backend)
    records = load_predictions(out)
    rows = read_dataset(comp_test)
    assert len(records) == len(rows)
    assert [r["instance_id"] for r in records] == [row.id for row in rows]
    assert all(len(r["samples"]) == 1 for r in records)


def test_many_samples_supports_large_k(comp_test, tmp_path):
    job = make_job(comp_test, tmp_path, n=512)
    out = run_inference(job, backend=echo_backend)
    assert all(len(r["samples"]) == 512 for r in load_predictions(out))


def test_output_order_is_dataset_order_despite_concurrency(comp_test, tmp_path):
    def slow_on_even(prompt, n, temperature):
        time.sleep(0.02 if hash(prompt) % 2 == 0 else 0.0)
        return ["So, the answer is: x"] * n

    job = make_job(comp_test, tmp_path)
    out = run_inference(job, backend=slow_on_even, max_in_flight=6)
    ids = [r["instance_id"] for r in load_predictions(out)]
    assert ids == [row.id for row in read_dataset(comp_test)]


def test_completed_output_short_circuits(comp_test, tmp_path):
    job = make_job(comp_test, tmp_path)
    run_inference(job, backend=echo_backend)
    first = (tmp_path / "pred.jsonl").read_bytes()

    def exploding(prompt, n, temperature):
        raise AssertionError("a finished job must not call the framework")

    out = run_inference(job, backend=exploding)
    assert out.read_bytes() == first


def test_mid_run_failure_keeps_prefix_and_resumes(comp_test, tmp_path):
    calls = {"n": 0}

    def dies_after_two(prompt, n, temperature):
        calls["n"] += 1
        if calls["n"] > 2:
            raise ConnectionError("gpu node rebooted")
        return ["So, the answer is: early"] * n

    job = make_job(comp_test, tmp_path)
    with pytest.raises(PartialOutput) as info:
        run_inference(job, backend=dies_after_two, max_in_flight=1)
    assert info.value.completed == 2
    assert "records=2" in info.value.resume_token
    assert len(load_predictions(tmp_path / "pred.jsonl")) == 2

    out = run_inference(job, backend=echo_backend)
    records = load_predictions(out)
    assert len(records) == len(read_dataset(comp_test))
    # the salvaged prefix is untouched, only the tail was regenerated
    assert records[0]["samples"] == ["So, the answer is: early"]
    assert records[-1]["samples"] == ["So, the answer is: reply 0"]


def test_wrong_sample_count_is_partial_output(comp_test, tmp_path):
    def short_changes(prompt, n, temperature):
        return ["only one"]

    job = make_job(comp_test, tmp_path, n=3)
    with pytest.raises(PartialOutput) as info:
        run_inference(job, backend=short_changes)
    assert info.value.completed == 0


def test_torn_final_line_is_dropped_on_resume(comp_test, tmp_path):
    job = make_job(comp_test, tmp_path)
    pred = tmp_path / "pred.jsonl"
    rows = read_dataset(comp_test)
    pred.write_text(
        json.dumps({"instance_id": rows[0].id, "samples": ["a"]})
        + "\n"
        + '{"instance_id": "cut off mid-wri'
    )
    out = run_inference(job, backend=echo_backend)
    records = load_predictions(out)
    assert len(records) == len(rows)
    assert records[0]["samples"] == ["a"]
    assert records[1]["samples"] == ["So, the answer is: reply 0"]


def test_foreign_output_file_is_rejected(comp_test, tmp_path):
    job = make_job(comp_test, tmp_path)
    (tmp_path / "pred.jsonl").write_text(
        '{"instance_id": "someone-elses-run", "samples": ["x"]}\n'
    )
    with pytest.raises(MalformedDataset, match="another job"):
        run_inference(job, backend=echo_backend)


def test_unknown_model_scheme(comp_test, tmp_path):
    with pytest.raises(FrameworkUnavailable, match="cmd:"):
        resolve_backend("hosted:gpt-xxl")
    job = InferenceJob(
        dataset=str(comp_test), model="hosted:gpt-xxl", out=str(tmp_path / "p.jsonl")
    )
    with pytest.raises(FrameworkUnavailable):
        run_inference(job)


def test_command_backend_round_trip(gold_framework, comp_test, tmp_path):
    job = InferenceJob(
        dataset=str(comp_test),
        model=gold_framework,
        out=str(tmp_path / "pred.jsonl"),
        n=2,
    )
    out = run_inference(job)
    rows = read_dataset(comp_test)
    for row, rec in zip(rows, load_predictions(out)):
        assert rec["instance_id"] == row.id
        assert rec["samples"] == [row.cot_answer, row.cot_answer]


def test_command_backend_spawn_failure(comp_test, tmp_path):
    job = InferenceJob(
        dataset=str(comp_test),
        model="cmd:/no/such/binary --flag",
        out=str(tmp_path / "pred.jsonl"),
    )
    with pytest.raises(FrameworkUnavailable, match="cannot start"):
        run_inference(job)


def test_command_backend_death_mid_run(comp_test, tmp_path):
    script = tmp_path / "dies.py"
    script.write_text(
        "import json, sys\n"
        "for i, line in enumerate(sys.stdin):\n"
        "    if i == 2:\n"
        "        sys.exit(1)\n"
        "    req = json.loads(line)\n"
        "    print(json.dumps({'samples': ['ok'] * req['n']}), flush=True)\n"
    )
    job = InferenceJob(
        dataset=str(comp_test),
        model=f"cmd:python3 {script}",
        out=str(tmp_path / "pred.jsonl"),
    )
    with pytest.raises(PartialOutput) as info:
        run_inference(job, max_in_flight=1)
    assert info.value.completed == 2


def test_command_backend_needs_a_command():
    with pytest.raises(FrameworkUnavailable):
        CommandBackend([])
