"""Step-level error attribution for failed predictions.

Aligns the predicted chain-of-thought against the gold hop chain by
monotone surface matching: hop i passes when the gold entity reached at
hop i appears in the prediction no earlier than the previous hop's match.
The first failing hop is attributed to its knowledge source (memorized or
contextual side), and the normalized failure position — progress — is
failure_hop / path_length, 1-based, so a last-hop failure scores 1.0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import EmptyInput, IndexOutOfRange
from .evaluation import PredictionRecord, binary_reward
from .paths import RelationPath
from .qa import QAInstance
from .schema import CTX, MEM


def align_cot(predicted_text: str, instance: QAInstance) -> int | None:
    """First hop (1-based) whose gold entity string is missing from the
    prediction under monotone ordering, or None when every hop matches.

    If the prediction echoes the question verbatim, matching starts after
    the last echo so entity names inside the restated question don't
    count as reasoning steps.
    """
    floor = 0
    echo = predicted_text.rfind(instance.question)
    if echo >= 0:
        floor = echo + len(instance.question)
    for hop, target in enumerate(instance.gold_chain[1:], start=1):
        pos = predicted_text.find(target, floor)
        if pos < 0:
            return hop
        floor = pos
    return None


def classify_failure(failure_hop: int, path: RelationPath) -> str:
    """Knowledge source of the failed hop: ``mem`` or ``ctx``."""
    if not 1 <= failure_hop <= len(path):
        raise IndexOutOfRange(
            f"hop {failure_hop} outside 1..{len(path)}"
        )
    return path.hop_sources[failure_hop - 1]


@dataclass(frozen=True)
class ErrorRecord:
    instance_id: str
    failure_hop: int | None
    failure_source: str | None
    progress: float | None

    def to_record(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "failure_hop": self.failure_hop,
            "failure_source": self.failure_source,
            "progress": self.progress,
        }

    @classmethod
    def from_record(cls, rec: Mapping) -> "ErrorRecord":
        return cls(
            instance_id=rec["instance_id"],
            failure_hop=rec["failure_hop"],
            failure_source=rec["failure_source"],
            progress=rec["progress"],
        )


def diagnose_prediction(text: str, instance: QAInstance) -> ErrorRecord:
    """Attribute one failed prediction. A wrong final answer with a fully
    matching chain yields an unattributed record (all fields None)."""
    hop = align_cot(text, instance)
    if hop is None:
        return ErrorRecord(instance.id, None, None, None)
    return ErrorRecord(
        instance_id=instance.id,
        failure_hop=hop,
        failure_source=classify_failure(hop, instance.path),
        progress=hop / len(instance.path),
    )


def analyze_predictions(
    predictions: Iterable[PredictionRecord | Mapping],
    dataset: Sequence[QAInstance],
) -> list[ErrorRecord]:
    """Error records for every prediction whose first sample fails the
    reward check; correct predictions produce no record."""
    by_id = {inst.id: inst for inst in dataset}
    out: list[ErrorRecord] = []
    for rec in predictions:
        if not isinstance(rec, PredictionRecord):
            rec = PredictionRecord.from_record(rec)
        inst = by_id.get(rec.instance_id)
        if inst is None:
            continue
        text = rec.samples[0]
        if binary_reward(text, inst):
            continue
        out.append(diagnose_prediction(text, inst))
    return out


@dataclass(frozen=True)
class ErrorSummary:
    ctx_fraction: float
    mem_fraction: float
    mean_progress: float
    attributed: int
    unattributed: int

    def to_record(self) -> dict:
        return {
            "ctx_fraction": self.ctx_fraction,
            "mem_fraction": self.mem_fraction,
            "mean_progress": self.mean_progress,
            "attributed": self.attributed,
            "unattributed": self.unattributed,
        }

    def render(self) -> str:
        return (
            f"{'Ctx':>8} {'Mem':>8} {'Prog.':>8} {'errors':>8}\n"
            f"{self.ctx_fraction:>7.1%} {self.mem_fraction:>7.1%} "
            f"{self.mean_progress:>7.1%} {self.attributed:>8d}"
        )


def aggregate_errors(records: Sequence[ErrorRecord]) -> ErrorSummary:
    """Source fractions and mean progress over attributed failures."""
    attributed = [r for r in records if r.failure_hop is not None]
    if not attributed:
        raise EmptyInput("no attributable failures to aggregate")
    ctx = sum(1 for r in attributed if r.failure_source == CTX)
    mem = sum(1 for r in attributed if r.failure_source == MEM)
    total = len(attributed)
    return ErrorSummary(
        ctx_fraction=ctx / total,
        mem_fraction=mem / total,
        mean_progress=sum(r.progress for r in attributed) / total,
        attributed=total,
        unattributed=len(records) - total,
    )
