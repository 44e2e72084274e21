"""Batch inference against an opaque text-generation framework.

The framework is addressed by an opaque model identifier.  The one scheme
this package ships is ``cmd:<argv>``: a subprocess is started once and
spoken to over a line-oriented JSON protocol — one request
``{"prompt", "n", "temperature"}`` per line in, one ``{"samples": [...]}``
per line out.  Library callers may instead inject any callable with the
``(prompt, n, temperature) -> list[str]`` shape.

Output is a prediction file in the scorer's format: one JSON object
``{"instance_id", "samples"}`` per line, in dataset order.  Writes are
flushed per record, so an interrupted run leaves a clean prefix; running
the same job again salvages that prefix and continues after it.
"""

from __future__ import annotations

import json
import shlex
import subprocess
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Protocol

from .datasets import InstanceRow, read_dataset
from .errors import BridgeError, FrameworkUnavailable, InvalidJob, MalformedDataset, PartialOutput

Backend = Callable[[str, int, float], "list[str]"]


@dataclass(frozen=True)
class InferenceJob:
    """One batch-inference request.

    ``model`` is passed through to the framework untouched; ``n`` samples
    are drawn per instance at the given temperature.
    """

    dataset: str
    model: str
    out: str
    n: int = 1
    temperature: float = 0.0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidJob(f"samples per instance must be >= 1, got {self.n}")
        if self.temperature < 0.0:
            raise InvalidJob(f"temperature must be >= 0, got {self.temperature}")


def _dumps(record: dict) -> str:
    return json.dumps(record, ensure_ascii=False, separators=(",", ":"))


class CommandBackend:
    """A ``cmd:`` framework: one long-lived subprocess, JSON lines each way.

    Calls are serialized on a lock because there is a single pipe pair; the
    process is started lazily on first use.
    """

    def __init__(self, argv: list[str]):
        if not argv:
            raise FrameworkUnavailable("cmd: framework needs a command line")
        self.argv = argv
        self._proc: subprocess.Popen | None = None
        self._lock = threading.Lock()

    def _ensure_running(self) -> subprocess.Popen:
        if self._proc is None or self._proc.poll() is not None:
            try:
                self._proc = subprocess.Popen(
                    self.argv,
                    stdin=subprocess.PIPE,
                    stdout=subprocess.PIPE,
                    text=True,
                    bufsize=1,
                )
            except OSError as exc:
                raise FrameworkUnavailable(
                    f"cannot start model process {self.argv}: {exc}"
                ) from None
        return self._proc

    def __call__(self, prompt: str, n: int, temperature: float) -> list[str]:
        with self._lock:
            proc = self._ensure_running()
            request = _dumps({"prompt": prompt, "n": n, "temperature": temperature})
            try:
                proc.stdin.write(request + "\n")
                proc.stdin.flush()
                line = proc.stdout.readline()
            except (BrokenPipeError, OSError) as exc:
                raise FrameworkUnavailable(f"model process pipe failed: {exc}") from None
            if not line:
                raise FrameworkUnavailable(
                    "model process closed its output before answering"
                )
            try:
                reply = json.loads(line)
                samples = reply["samples"]
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise FrameworkUnavailable(
                    f"model process sent an unreadable reply: {exc}"
                ) from None
            return [str(s) for s in samples]

    def close(self) -> None:
        if self._proc is not None and self._proc.poll() is None:
            self._proc.stdin.close()
            self._proc.terminate()
            self._proc.wait(timeout=10)


def resolve_backend(model: str) -> Backend:
    """Map a model identifier to a callable framework."""
    if model.startswith("cmd:"):
        return CommandBackend(shlex.split(model[len("cmd:"):]))
    raise FrameworkUnavailable(
        f"no framework understands model identifier {model!r}; "
        "use cmd:<command line>"
    )


def _salvage_prefix(out: Path, rows: list[InstanceRow], n: int) -> list[str]:
    """Complete, job-consistent prediction lines already in the output file.

    A torn final line (interrupted write) is dropped silently; anything
    else that disagrees with the job — wrong order, wrong ids, wrong sample
    count, or more records than the dataset has instances — is an error, as
    the file clearly belongs to a different job.
    """
    if not out.exists():
        return []
    raw = out.read_text(encoding="utf-8").splitlines()
    kept: list[str] = []
    for i, line in enumerate(raw):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            instance_id, samples = rec["instance_id"], rec["samples"]
        except (json.JSONDecodeError, KeyError, TypeError):
            if i == len(raw) - 1:
                break  # torn tail from an interrupted write
            raise MalformedDataset(f"{out.name}:{i + 1}: unreadable prediction line")
        if len(kept) >= len(rows):
            raise MalformedDataset(f"{out.name} has more records than the dataset")
        expected = rows[len(kept)].id
        if instance_id != expected:
            raise MalformedDataset(
                f"{out.name}:{i + 1}: found {instance_id!r}, dataset order "
                f"expects {expected!r}; this output belongs to another job"
            )
        if len(samples) != n:
            raise MalformedDataset(
                f"{out.name}:{i + 1}: {len(samples)} samples, job wants {n}; "
                "delete the file to change n"
            )
        kept.append(line)
    return kept


def run_inference(
    job: InferenceJob,
    backend: Backend | None = None,
    max_in_flight: int = 4,
) -> Path:
    """Answer every dataset instance, resuming any earlier partial output.

    Requests go out in batches of ``max_in_flight``; records land in
    dataset order regardless of completion order.  On a mid-run framework
    failure the finished prefix stays on disk and ``PartialOutput`` reports
    how far it got.
    """
    rows = read_dataset(job.dataset)
    out = Path(job.out)
    kept = _salvage_prefix(out, rows, job.n)
    written = len(kept)

    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        for line in kept:
            fh.write(line + "\n")
    if written == len(rows):
        return out

    owns_backend = backend is None
    if backend is None:
        backend = resolve_backend(job.model)

    def ask(row: InstanceRow) -> list[str]:
        return backend(row.model_input, job.n, job.temperature)

    try:
        with open(out, "a", encoding="utf-8") as fh, ThreadPoolExecutor(
            max_workers=max_in_flight
        ) as pool:
            todo = rows[written:]
            for start in range(0, len(todo), max_in_flight):
                batch = todo[start : start + max_in_flight]
                try:
                    results = list(pool.map(ask, batch))
                except BridgeError:
                    raise
                except Exception as exc:
                    raise PartialOutput(
                        f"framework failed after {written} records: {exc}",
                        completed=written,
                    ) from exc
                for row, samples in zip(batch, results):
                    if len(samples) != job.n:
                        raise PartialOutput(
                            f"framework returned {len(samples)} samples for "
                            f"{row.id}, job wants {job.n}; stopped after "
                            f"{written} records",
                            completed=written,
                        )
                    fh.write(
                        _dumps({"instance_id": row.id, "samples": samples}) + "\n"
                    )
                    fh.flush()
                    written += 1
    except FrameworkUnavailable as exc:
        if written:
            raise PartialOutput(
                f"framework became unavailable after {written} records: {exc}",
                completed=written,
            ) from exc
        raise
    finally:
        if owns_backend and hasattr(backend, "close"):
            backend.close()
    return out
