"""Dataset reading and validation."""

import json

import pytest

from model_bridge import MalformedDataset, read_dataset


def load_rows(path):
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def write_rows(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row) + "\n")


def test_reads_real_files_in_order(comp_test):
    rows = read_dataset(comp_test)
    assert [r.id for r in rows] == [r["id"] for r in load_rows(comp_test)]
    assert all(r.type == "comp" for r in rows)


def test_missing_file_rejected(tmp_path):
    with pytest.raises(MalformedDataset, match="does not exist"):
        read_dataset(tmp_path / "nope.jsonl")


def test_empty_file_rejected(tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("\n\n")
    with pytest.raises(MalformedDataset, match="no instances"):
        read_dataset(path)


def test_broken_json_rejected(tmp_path):
    path = tmp_path / "broken.jsonl"
    path.write_text('{"id": "x"\n')
    with pytest.raises(MalformedDataset, match="not JSON"):
        read_dataset(path)


def test_missing_fields_rejected(tmp_path, comp_test):
    row = load_rows(comp_test)[0]
    del row["model_input"]
    path = tmp_path / "short.jsonl"
    write_rows(path, [row])
    with pytest.raises(MalformedDataset, match="missing fields"):
        read_dataset(path)


def test_duplicate_ids_rejected(tmp_path, comp_test):
    row = load_rows(comp_test)[0]
    path = tmp_path / "dupes.jsonl"
    write_rows(path, [row, row])
    with pytest.raises(MalformedDataset, match="duplicate instance id"):
        read_dataset(path)


def test_mem_with_context_rejected(tmp_path, dataset_dir):
    row = load_rows(dataset_dir / "train_mem.jsonl")[0]
    row["contexts"] = ["An illicit biography document."]
    path = tmp_path / "bad_mem.jsonl"
    write_rows(path, [row])
    with pytest.raises(MalformedDataset, match="carries context"):
        read_dataset(path)


def test_mem_input_must_equal_question(tmp_path, dataset_dir):
    row = load_rows(dataset_dir / "train_mem.jsonl")[0]
    row["model_input"] = "Some context.\n\n" + row["question"]
    path = tmp_path / "bad_mem.jsonl"
    write_rows(path, [row])
    with pytest.raises(MalformedDataset, match="model_input != question"):
        read_dataset(path)


def test_comp_input_must_carry_contexts(tmp_path, comp_test):
    row = load_rows(comp_test)[0]
    row["model_input"] = row["question"]
    path = tmp_path / "bad_comp.jsonl"
    write_rows(path, [row])
    with pytest.raises(MalformedDataset, match="missing a context"):
        read_dataset(path)


def test_unknown_type_rejected(tmp_path, comp_test):
    row = load_rows(comp_test)[0]
    row["type"] = "hybrid"
    path = tmp_path / "bad_type.jsonl"
    write_rows(path, [row])
    with pytest.raises(MalformedDataset, match="unknown instance type"):
        read_dataset(path)
