"""Training-file emission: SFT pairs, RL prompts, and corpus passthrough.

SFT files hold ``{"model_input", "target"}`` pairs where the target is the
instance's full chain-of-thought answer.  RL files split the same data into
a prompt file (model inputs only, no answers anywhere near the policy) and
a lookup file mapping prompt line numbers back to instance ids, which is
what the scorer's reward endpoint keys on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .datasets import read_dataset
from .errors import MalformedDataset


class Flavor(Enum):
    SFT = "sft"
    RL = "rl"


@dataclass(frozen=True)
class TrainingExport:
    """Where one export run put its files, and how many rows each holds."""

    flavor: Flavor
    instances: int
    sft_pairs: Path | None = None
    mem_corpus: Path | None = None
    rl_prompts: Path | None = None
    rl_lookup: Path | None = None

    @property
    def files(self) -> list[Path]:
        return [
            p
            for p in (self.sft_pairs, self.mem_corpus, self.rl_prompts, self.rl_lookup)
            if p is not None
        ]


def _dumps(record: dict) -> str:
    return json.dumps(record, ensure_ascii=False, separators=(",", ":"))


def _write_jsonl(path: Path, records) -> int:
    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(_dumps(rec) + "\n")
            count += 1
    return count


def _convert_corpus(source: Path, target: Path) -> int:
    """Biography records -> plain ``{"text": ...}`` pretraining rows."""
    if not source.exists():
        raise MalformedDataset(f"corpus file {source} does not exist")
    rows = []
    with open(source, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                text = rec["text"]
            except (json.JSONDecodeError, KeyError, TypeError):
                raise MalformedDataset(
                    f"{source.name}:{lineno}: expected a record with a text field"
                ) from None
            rows.append({"text": str(text)})
    if not rows:
        raise MalformedDataset(f"corpus file {source} holds no documents")
    return _write_jsonl(target, rows)


def emit_training_files(
    dataset: str | Path,
    flavor: Flavor | str,
    out_dir: str | Path,
    mem_corpus: str | Path | None = None,
) -> TrainingExport:
    """Write the files one fine-tuning stage needs into ``out_dir``.

    ``mem_corpus`` (SFT flavor only) additionally converts the generator's
    biography corpus into plain text records alongside the pairs.
    """
    flavor = Flavor(flavor) if not isinstance(flavor, Flavor) else flavor
    rows = read_dataset(dataset)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    if flavor is Flavor.SFT:
        pairs = out / "sft_pairs.jsonl"
        _write_jsonl(
            pairs,
            ({"model_input": r.model_input, "target": r.cot_answer} for r in rows),
        )
        corpus_path = None
        if mem_corpus is not None:
            corpus_path = out / "mem_corpus.jsonl"
            _convert_corpus(Path(mem_corpus), corpus_path)
        return TrainingExport(
            flavor=flavor,
            instances=len(rows),
            sft_pairs=pairs,
            mem_corpus=corpus_path,
        )

    prompts = out / "rl_prompts.jsonl"
    lookup = out / "rl_lookup.jsonl"
    _write_jsonl(prompts, ({"prompt": r.model_input} for r in rows))
    _write_jsonl(
        lookup,
        ({"index": i, "instance_id": r.id} for i, r in enumerate(rows)),
    )
    return TrainingExport(
        flavor=flavor, instances=len(rows), rl_prompts=prompts, rl_lookup=lookup
    )
