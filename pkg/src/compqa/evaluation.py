"""Scoring: answer extraction, exact match, per-cell accuracy, pass@k.

Predictions are scored against dataset instances by exact match on the
extracted final answer only — the reasoning chain never affects the score
or the reward.  Accuracy is reported per (reasoning type × generalization
level) cell; pass@k uses the exact combinatorial estimator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import DuplicateInstanceId, InvalidCounts, UnknownInstanceId
from .paths import REASONING_TYPES, ReasoningType
from .qa import ANSWER_MARKER, QAInstance
from .splits import GENERALIZATION_LEVELS, GeneralizationLevel

PASS_AT_K_GRID = (1, 2, 4, 8, 16, 32, 64, 128, 256, 512)

_WHITESPACE = re.compile(r"\s+")


def extract_final_answer(text: str) -> str | None:
    """Text after the last answer marker, stripped of surrounding whitespace
    and one trailing period; None when the marker never occurs."""
    idx = text.rfind(ANSWER_MARKER)
    if idx < 0:
        return None
    answer = text[idx + len(ANSWER_MARKER):].strip()
    if answer.endswith("."):
        answer = answer[:-1].rstrip()
    return answer


def normalize_answer(text: str) -> str:
    return _WHITESPACE.sub(" ", text.strip()).casefold()


def exact_match(predicted: str | None, gold: str) -> bool:
    if predicted is None:
        return False
    return normalize_answer(predicted) == normalize_answer(gold)


def binary_reward(sample_text: str, instance: QAInstance) -> int:
    """1 iff the extracted final answer matches the gold answer; the
    reasoning chain itself is never judged."""
    return int(exact_match(extract_final_answer(sample_text), instance.final_answer))


def pass_at_k(n: int, c: int, k: int) -> float:
    """Probability that at least one of k samples drawn (without
    replacement) from n total with c correct is correct:
    1 - C(n-c, k)/C(n, k), computed exactly before the final float."""
    if not (0 <= c <= n) or not (1 <= k <= n):
        raise InvalidCounts(f"pass@k undefined for n={n}, c={c}, k={k}")
    if c == 0:
        return 0.0
    if n - c < k:
        return 1.0
    return float(1 - Fraction(comb(n - c, k), comb(n, k)))


@dataclass(frozen=True)
class PredictionRecord:
    instance_id: str
    samples: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.samples:
            raise InvalidCounts(
                f"prediction {self.instance_id!r} carries zero samples"
            )

    def to_record(self) -> dict:
        return {"instance_id": self.instance_id, "samples": list(self.samples)}

    @classmethod
    def from_record(cls, rec: Mapping) -> "PredictionRecord":
        return cls(
            instance_id=rec["instance_id"], samples=tuple(rec["samples"])
        )


@dataclass
class CellTally:
    count: int = 0
    correct: int = 0

    @property
    def accuracy(self) -> float | None:
        return self.correct / self.count if self.count else None


@dataclass
class EvalReport:
    cells: dict[str, dict[str, CellTally]] = field(default_factory=dict)
    overall_count: int = 0
    overall_correct: int = 0
    pass_at: dict[int, float] = field(default_factory=dict)
    samples_per_record: int | None = None

    @property
    def overall_accuracy(self) -> float | None:
        if not self.overall_count:
            return None
        return self.overall_correct / self.overall_count

    def cell(self, rtype: ReasoningType, level: GeneralizationLevel) -> CellTally:
        return self.cells[rtype.value][level.value]

    def to_record(self) -> dict:
        return {
            "overall": {
                "count": self.overall_count,
                "correct": self.overall_correct,
                "accuracy": self.overall_accuracy,
            },
            "cells": {
                t: {
                    lvl: {
                        "count": tally.count,
                        "correct": tally.correct,
                        "accuracy": tally.accuracy,
                    }
                    for lvl, tally in levels.items()
                }
                for t, levels in self.cells.items()
            },
            "pass_at_k": {str(k): v for k, v in sorted(self.pass_at.items())},
            "samples_per_record": self.samples_per_record,
        }

    def render(self) -> str:
        """Accuracy grid and pass@k table as aligned plain text."""
        lines = []
        header = f"{'type':<14}" + "".join(
            f"{lvl.value:>14}" for lvl in GENERALIZATION_LEVELS
        )
        lines.append(header)
        for rtype in REASONING_TYPES:
            row = [f"{rtype.value:<14}"]
            for lvl in GENERALIZATION_LEVELS:
                tally = self.cells.get(rtype.value, {}).get(lvl.value)
                if tally is None or tally.count == 0:
                    row.append(f"{'-':>14}")
                else:
                    row.append(f"{tally.accuracy:>13.4f} ")
            lines.append("".join(row))
        acc = self.overall_accuracy
        lines.append(
            f"overall: {acc:.4f} ({self.overall_correct}/{self.overall_count})"
            if acc is not None
            else "overall: - (0 instances)"
        )
        if self.pass_at:
            lines.append("")
            lines.append("pass@k:")
            for k, v in sorted(self.pass_at.items()):
                lines.append(f"  k={k:<4d} {v:.4f}")
        return "\n".join(lines)


def score(
    predictions: Iterable[PredictionRecord | Mapping],
    dataset: Sequence[QAInstance],
) -> EvalReport:
    """Score predictions against a dataset.

    The first sample of each record drives accuracy; all samples feed the
    pass@k table (computed for grid points k not exceeding the uniform
    sample count).  Dataset instances without a prediction count as
    incorrect.
    """
    by_id: dict[str, QAInstance] = {}
    for inst in dataset:
        if inst.id in by_id:
            raise DuplicateInstanceId(f"dataset repeats instance id {inst.id!r}")
        by_id[inst.id] = inst

    report = EvalReport()
    for rtype in REASONING_TYPES:
        report.cells[rtype.value] = {
            lvl.value: CellTally() for lvl in GENERALIZATION_LEVELS
        }

    seen: set[str] = set()
    n_uniform: int | None = None
    per_record: list[tuple[int, int]] = []  # (n, c)
    correct_ids: set[str] = set()
    for rec in predictions:
        if not isinstance(rec, PredictionRecord):
            rec = PredictionRecord.from_record(rec)
        if rec.instance_id in seen:
            raise DuplicateInstanceId(
                f"duplicate prediction for instance {rec.instance_id!r}"
            )
        seen.add(rec.instance_id)
        inst = by_id.get(rec.instance_id)
        if inst is None:
            raise UnknownInstanceId(
                f"prediction references unknown instance {rec.instance_id!r}"
            )
        n = len(rec.samples)
        n_uniform = n if n_uniform is None else min(n_uniform, n)
        c = sum(binary_reward(s, inst) for s in rec.samples)
        per_record.append((n, c))
        if binary_reward(rec.samples[0], inst):
            correct_ids.add(rec.instance_id)

    for inst in dataset:
        tally = report.cells[inst.reasoning_type.value][inst.level.value]
        tally.count += 1
        report.overall_count += 1
        if inst.id in correct_ids:
            tally.correct += 1
            report.overall_correct += 1

    if per_record and n_uniform:
        report.samples_per_record = n_uniform
        for k in PASS_AT_K_GRID:
            if k > n_uniform:
                break
            report.pass_at[k] = sum(
                pass_at_k(n, c, k) for n, c in per_record
            ) / len(per_record)
    return report
