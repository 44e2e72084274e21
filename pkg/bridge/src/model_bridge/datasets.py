"""Reading the generator's instance files.

The bridge only relies on the documented subset of the instance format:
``id``, ``type``, ``question``, ``contexts``, ``cot_answer`` and
``model_input``.  Memorized-type instances carry no contexts and their
model input is exactly the question; the other two types prepend every
context document to the question.  Anything else is rejected up front so
inference never burns model calls on a broken file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .errors import MalformedDataset

INSTANCE_TYPES = ("mem", "ctx", "comp")
REQUIRED_FIELDS = ("id", "type", "question", "contexts", "cot_answer", "model_input")


@dataclass(frozen=True)
class InstanceRow:
    """One QA instance, reduced to the fields the bridge works with."""

    id: str
    type: str
    question: str
    contexts: tuple[str, ...]
    cot_answer: str
    model_input: str


def _check(row: InstanceRow, where: str) -> None:
    if row.type not in INSTANCE_TYPES:
        raise MalformedDataset(f"{where}: unknown instance type {row.type!r}")
    if row.type == "mem":
        if row.contexts:
            raise MalformedDataset(
                f"{where}: memorized instance {row.id} carries context documents"
            )
        if row.model_input != row.question:
            raise MalformedDataset(
                f"{where}: memorized instance {row.id} has model_input != question"
            )
    else:
        if row.question not in row.model_input:
            raise MalformedDataset(
                f"{where}: instance {row.id} model_input does not contain "
                "its question"
            )
        for doc in row.contexts:
            if doc not in row.model_input:
                raise MalformedDataset(
                    f"{where}: instance {row.id} model_input is missing a "
                    "context document"
                )


def iter_dataset(path: str | Path) -> Iterator[InstanceRow]:
    """Validated rows of one instance file, in file order."""
    path = Path(path)
    if not path.exists():
        raise MalformedDataset(f"dataset file {path} does not exist")
    seen: set[str] = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            where = f"{path.name}:{lineno}"
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedDataset(f"{where}: not JSON ({exc})") from None
            missing = [f for f in REQUIRED_FIELDS if f not in rec]
            if missing:
                raise MalformedDataset(f"{where}: missing fields {missing}")
            if not isinstance(rec["contexts"], list) or not all(
                isinstance(d, str) for d in rec["contexts"]
            ):
                raise MalformedDataset(f"{where}: contexts must be a string list")
            row = InstanceRow(
                id=str(rec["id"]),
                type=str(rec["type"]),
                question=str(rec["question"]),
                contexts=tuple(rec["contexts"]),
                cot_answer=str(rec["cot_answer"]),
                model_input=str(rec["model_input"]),
            )
            if row.id in seen:
                raise MalformedDataset(f"{where}: duplicate instance id {row.id!r}")
            seen.add(row.id)
            _check(row, where)
            yield row


def read_dataset(path: str | Path) -> list[InstanceRow]:
    rows = list(iter_dataset(path))
    if not rows:
        raise MalformedDataset(f"dataset file {path} holds no instances")
    return rows
