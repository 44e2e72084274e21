"""Training-file export: SFT pairs, RL prompt/lookup, corpus conversion."""

import json

import pytest

from model_bridge import Flavor, MalformedDataset, emit_training_files, read_dataset


def load_rows(path):
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def test_sft_pairs_mirror_the_dataset(all_instances, tmp_path):
    export = emit_training_files(all_instances, Flavor.SFT, tmp_path)
    rows = read_dataset(all_instances)
    pairs = load_rows(export.sft_pairs)
    assert export.instances == len(rows) == len(pairs) == 100
    for row, pair in zip(rows, pairs):
        assert pair == {"model_input": row.model_input, "target": row.cot_answer}
    assert export.mem_corpus is None
    assert export.rl_prompts is None


def test_flavor_accepts_strings(all_instances, tmp_path):
    export = emit_training_files(all_instances, "sft", tmp_path)
    assert export.flavor is Flavor.SFT


def test_mem_pairs_are_question_only(dataset_dir, tmp_path):
    export = emit_training_files(
        dataset_dir / "train_mem.jsonl", Flavor.SFT, tmp_path
    )
    rows = read_dataset(dataset_dir / "train_mem.jsonl")
    for row, pair in zip(rows, load_rows(export.sft_pairs)):
        assert pair["model_input"] == row.question


def test_corpus_conversion(dataset_dir, all_instances, tmp_path):
    export = emit_training_files(
        all_instances,
        Flavor.SFT,
        tmp_path,
        mem_corpus=dataset_dir / "mem_corpus.jsonl",
    )
    docs = load_rows(export.mem_corpus)
    source = load_rows(dataset_dir / "mem_corpus.jsonl")
    assert all(set(d) == {"text"} for d in docs)
    assert [d["text"] for d in docs] == [s["text"] for s in source]
    assert len(docs) == 60


def test_corpus_errors(all_instances, tmp_path):
    with pytest.raises(MalformedDataset, match="does not exist"):
        emit_training_files(
            all_instances, Flavor.SFT, tmp_path, mem_corpus=tmp_path / "no.jsonl"
        )
    bad = tmp_path / "bad_corpus.jsonl"
    bad.write_text('{"person_id": "p1"}\n')
    with pytest.raises(MalformedDataset, match="text field"):
        emit_training_files(all_instances, Flavor.SFT, tmp_path, mem_corpus=bad)


def test_rl_prompts_hold_no_answers(all_instances, tmp_path):
    export = emit_training_files(all_instances, Flavor.RL, tmp_path)
    rows = read_dataset(all_instances)
    prompts = load_rows(export.rl_prompts)
    assert all(set(p) == {"prompt"} for p in prompts)
    assert [p["prompt"] for p in prompts] == [r.model_input for r in rows]
    joined = export.rl_prompts.read_text()
    assert all(row.cot_answer not in joined for row in rows)
    assert export.sft_pairs is None


def test_rl_lookup_aligns_with_prompts(all_instances, tmp_path):
    export = emit_training_files(all_instances, Flavor.RL, tmp_path)
    rows = read_dataset(all_instances)
    lookup = load_rows(export.rl_lookup)
    assert [e["index"] for e in lookup] == list(range(len(rows)))
    assert [e["instance_id"] for e in lookup] == [r.id for r in rows]


def test_malformed_dataset_propagates(tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"id": "x"}\n')
    with pytest.raises(MalformedDataset):
        emit_training_files(bad, Flavor.SFT, tmp_path)
