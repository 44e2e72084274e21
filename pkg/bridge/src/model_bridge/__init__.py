"""Adapter between QA dataset files and external text-generation frameworks.

Two jobs: batch inference producing prediction files the scorer accepts
as-is, and exporting datasets as SFT input/target pairs or RL prompt and
reward-lookup files.  The dataset generator and scorer are reached only
through their file formats and command-line interface; nothing is imported
from them.
"""

from .datasets import InstanceRow, iter_dataset, read_dataset
from .errors import (
    BridgeError,
    FrameworkUnavailable,
    InvalidJob,
    MalformedDataset,
    PartialOutput,
)
from .export import Flavor, TrainingExport, emit_training_files
from .inference import (
    CommandBackend,
    InferenceJob,
    resolve_backend,
    run_inference,
)

__version__ = "0.1.0"

__all__ = [
    "BridgeError",
    "CommandBackend",
    "Flavor",
    "FrameworkUnavailable",
    "InferenceJob",
    "InstanceRow",
    "InvalidJob",
    "MalformedDataset",
    "PartialOutput",
    "TrainingExport",
    "emit_training_files",
    "iter_dataset",
    "read_dataset",
    "resolve_backend",
    "run_inference",
]
