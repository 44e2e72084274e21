"""End-to-end orchestration: config in, artifact directory out.

The pipeline runs three stages over one output directory:

1. ``generate``      - world graph, biographies, and sampled path pools
2. ``split``         - train/test path manifests per reasoning type
3. ``build-dataset`` - QA instance files, memorized corpus, statistics

Each stage reads its inputs back from the artifact directory rather than
passing objects in memory, so stages can be re-run independently and a
staged run is byte-identical to a single `run_pipeline` call.  A lock file
guards the directory against concurrent runs; every artifact is a pure
function of the config, so re-running with the same config rewrites the
same bytes.
"""

from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator, Mapping, Sequence

from . import storage
from .errors import (
    ArtifactLocked,
    BenchmarkError,
    EmptyPool,
    InvalidCounts,
    MissingArtifact,
    UnsatisfiableSplit,
)
from .paths import (
    DEFAULT_HOP_RANGE,
    REASONING_TYPES,
    PathPool,
    ReasoningType,
)
from .qa import DEFAULT_DISTRACTORS, DatasetSizes, QAInstance, build_dataset
from .schema import CTX, MEM, SourcePartition, load_schema, partition_relations
from .seeds import rng_for
from .splits import (
    GENERALIZATION_LEVELS,
    SplitConfig,
    SplitManifest,
    make_split,
    verify_split,
)
from .world import (
    KnowledgeGraph,
    PopulationCounts,
    generate_population,
    render_biography,
)

TOOL_VERSION = "0.1.0"

LOCK_FILE = ".pipeline.lock"

# Training-set and test-cell size targets of the full-scale dataset
# (Parametric / Contextual / Complementary by I.I.D. / Com. / 0-shot).
FULL_TRAIN_TARGETS = {"mem": 88_031, "ctx": 2_651, "comp": 180_919}
FULL_TEST_TARGETS = {
    "mem": {"iid": 1_921, "composition": 1_141, "zero_shot": 782},
    "ctx": {"iid": 1_910, "composition": 1_320, "zero_shot": 453},
    "comp": {"iid": 2_135, "composition": 1_415, "zero_shot": 918},
}


# ---------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class PipelineConfig:
    """Everything a run needs; serializes round-trip stable as JSON.

    Defaults describe the full-scale dataset: 10k biographies per knowledge
    side with 5k shared bridge characters, and the published train/test
    size targets.  Use :func:`desk_config` for a laptop-sized run.
    """

    master_seed: int = 0
    counts: PopulationCounts = PopulationCounts(10_000, 10_000, 5_000)
    paths_per_type: int = 4_000
    hop_range: tuple[int, int] = DEFAULT_HOP_RANGE
    split: SplitConfig = SplitConfig()
    train_sizes: Mapping[str, int] = field(
        default_factory=lambda: dict(FULL_TRAIN_TARGETS)
    )
    test_sizes: Mapping[str, Mapping[str, int]] = field(
        default_factory=lambda: {k: dict(v) for k, v in FULL_TEST_TARGETS.items()}
    )
    distractor_count: int = DEFAULT_DISTRACTORS
    out_dir: str = "artifacts"

    def __post_init__(self) -> None:
        if self.paths_per_type < 0:
            raise InvalidCounts("paths_per_type must be nonnegative")
        if self.distractor_count < 0:
            raise InvalidCounts("distractor_count must be nonnegative")
        lo, hi = self.hop_range
        if not (1 <= lo <= hi):
            raise InvalidCounts(f"bad hop range {self.hop_range}")
        for name, value in self.train_sizes.items():
            if value < 0:
                raise InvalidCounts(f"negative train target for {name}")
        for name, cells in self.test_sizes.items():
            for level, value in cells.items():
                if value < 0:
                    raise InvalidCounts(f"negative test target {name}/{level}")

    @property
    def sizes(self) -> DatasetSizes:
        return DatasetSizes(
            train=dict(self.train_sizes),
            test={k: dict(v) for k, v in self.test_sizes.items()},
            distractor_count=self.distractor_count,
        )

    def to_record(self) -> dict:
        return {
            "master_seed": self.master_seed,
            "counts": {
                "n_mem": self.counts.n_mem,
                "n_ctx": self.counts.n_ctx,
                "n_shared": self.counts.n_shared,
            },
            "paths_per_type": self.paths_per_type,
            "hop_range": list(self.hop_range),
            "split": {
                "iid_fraction": self.split.iid_fraction,
                "comp_test_fraction": self.split.comp_test_fraction,
                "unseen_per_side": self.split.unseen_per_side,
                "max_retries": self.split.max_retries,
            },
            "train_sizes": dict(self.train_sizes),
            "test_sizes": {k: dict(v) for k, v in self.test_sizes.items()},
            "distractor_count": self.distractor_count,
            "out_dir": self.out_dir,
        }

    @classmethod
    def from_record(cls, rec: Mapping) -> "PipelineConfig":
        base = cls()
        kwargs: dict = {}
        if "master_seed" in rec:
            kwargs["master_seed"] = int(rec["master_seed"])
        if "counts" in rec:
            kwargs["counts"] = PopulationCounts.coerce(rec["counts"])
        if "paths_per_type" in rec:
            kwargs["paths_per_type"] = int(rec["paths_per_type"])
        if "hop_range" in rec:
            lo, hi = rec["hop_range"]
            kwargs["hop_range"] = (int(lo), int(hi))
        if "split" in rec:
            kwargs["split"] = SplitConfig.coerce(rec["split"])
        if "train_sizes" in rec:
            kwargs["train_sizes"] = {
                k: int(v) for k, v in rec["train_sizes"].items()
            }
        if "test_sizes" in rec:
            kwargs["test_sizes"] = {
                k: {lvl: int(n) for lvl, n in v.items()}
                for k, v in rec["test_sizes"].items()
            }
        if "distractor_count" in rec:
            kwargs["distractor_count"] = int(rec["distractor_count"])
        if "out_dir" in rec:
            kwargs["out_dir"] = str(rec["out_dir"])
        return replace(base, **kwargs)


def desk_config(out_dir: str = "artifacts", master_seed: int = 0) -> PipelineConfig:
    """A configuration sized for a laptop: about 4,500 instances in well
    under two minutes, with path pools large enough that the split
    protocol's relation-set equality stays satisfiable."""
    return PipelineConfig(
        master_seed=master_seed,
        counts=PopulationCounts(200, 200, 80),
        paths_per_type=400,
        train_sizes={"mem": 1_000, "ctx": 1_000, "comp": 1_400},
        test_sizes={
            t: {"iid": 160, "composition": 120, "zero_shot": 80}
            for t in ("mem", "ctx", "comp")
        },
        out_dir=out_dir,
    )


# ---------------------------------------------------------------------------
# artifact layout


def train_file(rtype: ReasoningType) -> str:
    return f"train_{rtype.value}.jsonl"


def test_file(rtype: ReasoningType, level) -> str:
    lvl = level.value if hasattr(level, "value") else str(level)
    return f"test_{rtype.value}_{lvl}.jsonl"


def dataset_files() -> list[str]:
    names = [train_file(t) for t in REASONING_TYPES]
    names += [
        test_file(t, lvl) for t in REASONING_TYPES for lvl in GENERALIZATION_LEVELS
    ]
    return names


@contextmanager
def _locked(out_dir: Path) -> Iterator[None]:
    lock = out_dir / LOCK_FILE
    try:
        fd = open(lock, "x", encoding="utf-8")
    except FileExistsError:
        raise ArtifactLocked(
            f"{lock} exists; another run owns this directory "
            "(delete the file if that run is dead)"
        ) from None
    except FileNotFoundError:
        raise MissingArtifact(f"artifact directory {out_dir} does not exist") from None
    try:
        fd.write("locked\n")
        fd.close()
        yield
    finally:
        lock.unlink(missing_ok=True)


@contextmanager
def _stage(name: str) -> Iterator[None]:
    """Re-raise benchmark errors with the failing stage in the message."""
    try:
        yield
    except BenchmarkError as exc:
        if str(exc).startswith("["):
            raise
        raise type(exc)(f"[{name}] {exc}") from exc


def _require(out_dir: Path, name: str) -> Path:
    path = out_dir / name
    if not path.exists():
        raise MissingArtifact(f"{name} not found in {out_dir}")
    return path


def load_config(out_dir: Path) -> PipelineConfig:
    """Recover the run's config from its provenance record.

    Provenance stores content only, so ``out_dir`` on the returned config
    is the directory the record was actually loaded from.
    """
    out = Path(out_dir)
    rec = storage.read_json(_require(out, "provenance.json"))
    return replace(PipelineConfig.from_record(rec["config"]), out_dir=str(out))


# ---------------------------------------------------------------------------
# stages


def stage_generate(config: PipelineConfig, out_dir: str | Path | None = None) -> Path:
    """World + path pools: writes provenance, schema, partition, graph,
    biographies, and the sampled path pool."""
    out = Path(out_dir if out_dir is not None else config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with _locked(out), _stage("generate"):
        # Provenance describes content, not location: the same substance
        # written to two different directories should compare byte-equal.
        config_record = config.to_record()
        config_record.pop("out_dir", None)
        storage.write_json(
            out / "provenance.json",
            {
                "tool": "compqa",
                "version": TOOL_VERSION,
                "master_seed": config.master_seed,
                "config": config_record,
            },
        )
        schema = load_schema()
        storage.write_json(out / "schema.json", schema.to_dict())
        partition = partition_relations(schema, config.master_seed)
        storage.write_json(out / "partition.json", partition.to_dict())

        kg = generate_population(
            schema, partition, config.counts, config.master_seed
        )
        storage.write_jsonl(out / "graph.jsonl", kg.to_records())
        bios = []
        for side in (MEM, CTX):
            for pid in kg.persons_on(side):
                bios.append(render_biography(kg, pid, side).to_record())
        storage.write_jsonl(out / "biographies.jsonl", bios)

        pool = sample_pool_for(config, schema, partition)
        storage.write_jsonl(out / "pools.jsonl", pool.to_records())
    return out


def sample_pool_for(
    config: PipelineConfig, schema=None, partition=None
) -> PathPool:
    from .paths import sample_path_pool

    if schema is None:
        schema = load_schema()
    if partition is None:
        partition = partition_relations(schema, config.master_seed)
    return sample_path_pool(
        schema,
        partition,
        config.paths_per_type,
        config.master_seed,
        config.hop_range,
    )


def stage_split(out_dir: str | Path, config: PipelineConfig | None = None) -> Path:
    """Reads pools.jsonl, writes manifests.json; verifies before writing."""
    out = Path(out_dir)
    with _locked(out), _stage("split"):
        if config is None:
            config = load_config(out)
        pool = PathPool.from_records(storage.read_jsonl(_require(out, "pools.jsonl")))
        manifests = make_split(pool, config.split, config.master_seed)
        report = verify_split(manifests, pool)
        if not report.ok:
            raise UnsatisfiableSplit(
                "split failed verification: " + "; ".join(report.violations)
            )
        storage.write_json(
            out / "manifests.json",
            {rtype.value: m.to_record() for rtype, m in manifests.items()},
        )
    return out


def load_manifests(out_dir: Path) -> dict[ReasoningType, SplitManifest]:
    raw = storage.read_json(_require(out_dir, "manifests.json"))
    return {
        ReasoningType(key): SplitManifest.from_record(rec)
        for key, rec in raw.items()
    }


def load_graph(out_dir: Path) -> KnowledgeGraph:
    schema = load_schema(storage.read_json(_require(out_dir, "schema.json")))
    partition = SourcePartition.from_dict(
        storage.read_json(_require(out_dir, "partition.json"))
    )
    return KnowledgeGraph.from_records(
        schema,
        partition,
        storage.read_jsonl(_require(out_dir, "graph.jsonl")),
    )


def stage_build(out_dir: str | Path, config: PipelineConfig | None = None) -> Path:
    """Reads graph + manifests, writes the dataset files, the memorized-side
    corpus, and stats.json."""
    out = Path(out_dir)
    with _locked(out), _stage("build-dataset"):
        if config is None:
            config = load_config(out)
        kg = load_graph(out)
        manifests = load_manifests(out)
        pool = PathPool.from_records(storage.read_jsonl(_require(out, "pools.jsonl")))
        bundle = build_dataset(kg, manifests, config.sizes, config.master_seed)

        for rtype in REASONING_TYPES:
            storage.write_jsonl(
                out / train_file(rtype),
                (inst.to_record() for inst in bundle.train[rtype]),
            )
            for level in GENERALIZATION_LEVELS:
                storage.write_jsonl(
                    out / test_file(rtype, level),
                    (inst.to_record() for inst in bundle.test[rtype][level]),
                )
        storage.write_jsonl(
            out / "mem_corpus.jsonl",
            ({"person_id": doc.person_id, "text": doc.text} for doc in bundle.mem_corpus),
        )
        storage.write_json(out / "stats.json", _stats_record(bundle, pool, manifests))
    return out


def _stats_record(bundle, pool: PathPool, manifests) -> dict:
    histograms = {
        rtype.value: {
            str(h): n for h, n in sorted(pool.hop_histogram(rtype).items())
        }
        for rtype in REASONING_TYPES
    }
    split_sizes = {
        rtype.value: {
            "p_iid": len(m.p_iid),
            "p_train_comp": len(m.p_train_comp),
            "p_test_comp": len(m.p_test_comp),
            "zero_shot": len(m.zero_shot),
            "r_unseen": sorted(m.r_unseen),
        }
        for rtype, m in manifests.items()
    }
    return {
        "counts": bundle.counts,
        "hop_histograms": histograms,
        "histograms_balanced": len({tuple(sorted(h.items())) for h in histograms.values()}) == 1,
        "split_sizes": split_sizes,
    }


def run_pipeline(config: PipelineConfig, out_dir: str | Path | None = None) -> Path:
    """All three stages in order over one directory."""
    out = stage_generate(config, out_dir)
    stage_split(out, config)
    stage_build(out, config)
    return out


# ---------------------------------------------------------------------------
# data-mix subsetting


@dataclass(frozen=True)
class MixSpec:
    """How to carve an SFT/RL pair out of one instance pool.

    Exactly one of ``sft_fraction`` (portion going to SFT), ``sft_count``
    (absolute SFT size), or ``rl_count`` (absolute RL size, remainder to
    SFT) must be given.  The two outputs always partition the pool, and
    hop-count proportions are preserved within one instance per stratum.
    """

    sft_fraction: float | None = None
    sft_count: int | None = None
    rl_count: int | None = None
    reasoning_type: ReasoningType | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        modes = [
            v for v in (self.sft_fraction, self.sft_count, self.rl_count)
            if v is not None
        ]
        if len(modes) != 1:
            raise InvalidCounts(
                "exactly one of sft_fraction, sft_count, rl_count is required"
            )
        if self.sft_fraction is not None and not 0.0 <= self.sft_fraction <= 1.0:
            raise InvalidCounts(f"sft_fraction {self.sft_fraction} outside [0, 1]")
        for name in ("sft_count", "rl_count"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise InvalidCounts(f"{name} must be nonnegative")

    def sft_total(self, pool_size: int) -> int:
        if self.sft_fraction is not None:
            return round(self.sft_fraction * pool_size)
        if self.sft_count is not None:
            if self.sft_count > pool_size:
                raise InvalidCounts(
                    f"sft_count {self.sft_count} exceeds pool of {pool_size}"
                )
            return self.sft_count
        assert self.rl_count is not None
        if self.rl_count > pool_size:
            raise InvalidCounts(
                f"rl_count {self.rl_count} exceeds pool of {pool_size}"
            )
        return pool_size - self.rl_count


def subset_mix(
    instances: Sequence[QAInstance], mix: MixSpec
) -> tuple[list[QAInstance], list[QAInstance]]:
    """Split a pool into (sft, rl) with hop-count stratification.

    Quotas per hop-count stratum are assigned by largest remainder so each
    stratum's SFT share differs from the exact proportional share by less
    than one instance; members are then drawn by seeded sampling inside the
    stratum.  Both outputs keep the input's original order.
    """
    if mix.reasoning_type is not None:
        pool = [
            inst for inst in instances if inst.reasoning_type == mix.reasoning_type
        ]
    else:
        pool = list(instances)
    if not pool:
        raise EmptyPool(
            "no instances to mix"
            + (
                f" for reasoning type {mix.reasoning_type.value!r}"
                if mix.reasoning_type is not None
                else ""
            )
        )

    total_sft = mix.sft_total(len(pool))
    strata: dict[int, list[int]] = {}
    for idx, inst in enumerate(pool):
        strata.setdefault(len(inst.path), []).append(idx)

    hops = sorted(strata)
    exact = {h: total_sft * len(strata[h]) / len(pool) for h in hops}
    quota = {h: int(exact[h]) for h in hops}
    shortfall = total_sft - sum(quota.values())
    by_remainder = sorted(
        hops, key=lambda h: (exact[h] - quota[h], -len(strata[h]), h), reverse=True
    )
    for h in by_remainder[:shortfall]:
        quota[h] += 1

    chosen: set[int] = set()
    for h in hops:
        members = strata[h]
        take = min(quota[h], len(members))
        rng = rng_for("mix", mix.seed, h)
        chosen.update(rng.sample(members, take))

    sft = [pool[i] for i in range(len(pool)) if i in chosen]
    rl = [pool[i] for i in range(len(pool)) if i not in chosen]
    return sft, rl


# ---------------------------------------------------------------------------
# statistics report


@dataclass
class StatsReport:
    """Counts recomputed from the dataset files, checked against stats.json."""

    counts: dict[str, dict[str, int]]
    histograms: dict[str, dict[str, int]]
    balanced: bool
    mismatches: list[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.balanced

    def render(self) -> str:
        labels = {"mem": "Parametric", "ctx": "Contextual", "comp": "Complementary"}
        header = f"{'Group':<15}{'Training':>10}{'I.I.D.':>10}{'Com.':>10}{'0-shot':>10}"
        lines = [header]
        for rtype in REASONING_TYPES:
            row = self.counts[rtype.value]
            lines.append(
                f"{labels[rtype.value]:<15}"
                f"{row['train']:>10,}{row['iid']:>10,}"
                f"{row['composition']:>10,}{row['zero_shot']:>10,}"
            )
        lines.append(
            "hop histograms: " + ("balanced" if self.balanced else "UNBALANCED")
        )
        for msg in self.mismatches:
            lines.append(f"MISMATCH: {msg}")
        return "\n".join(lines)


def report_stats(out_dir: str | Path) -> StatsReport:
    """Recount every dataset file and compare with the recorded stats."""
    out = Path(out_dir)
    recorded = storage.read_json(_require(out, "stats.json"))
    pool = PathPool.from_records(storage.read_jsonl(_require(out, "pools.jsonl")))

    counts: dict[str, dict[str, int]] = {}
    mismatches: list[str] = []
    for rtype in REASONING_TYPES:
        row = {"train": _count_lines(_require(out, train_file(rtype)))}
        for level in GENERALIZATION_LEVELS:
            row[level.value] = _count_lines(_require(out, test_file(rtype, level)))
        counts[rtype.value] = row

        want_train = recorded["counts"]["train"].get(rtype.value)
        if want_train != row["train"]:
            mismatches.append(
                f"{train_file(rtype)}: {row['train']} records, stats say {want_train}"
            )
        for level in GENERALIZATION_LEVELS:
            want = recorded["counts"]["test"].get(rtype.value, {}).get(level.value)
            if want != row[level.value]:
                mismatches.append(
                    f"{test_file(rtype, level)}: {row[level.value]} records, "
                    f"stats say {want}"
                )

    histograms = {
        rtype.value: {
            str(h): n for h, n in sorted(pool.hop_histogram(rtype).items())
        }
        for rtype in REASONING_TYPES
    }
    balanced = len({tuple(sorted(h.items())) for h in histograms.values()}) == 1
    if histograms != recorded.get("hop_histograms"):
        mismatches.append("pools.jsonl hop histograms differ from stats.json")

    mem_count = _count_lines(_require(out, "mem_corpus.jsonl"))
    want_mem = recorded["counts"].get("mem_corpus")
    if want_mem != mem_count:
        mismatches.append(
            f"mem_corpus.jsonl: {mem_count} records, stats say {want_mem}"
        )

    return StatsReport(
        counts=counts,
        histograms=histograms,
        balanced=balanced,
        mismatches=mismatches,
    )


def _count_lines(path: Path) -> int:
    with open(path, "r", encoding="utf-8") as fh:
        return sum(1 for line in fh if line.strip())
