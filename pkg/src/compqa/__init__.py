"""Deterministic multi-hop biography QA: generation, splits, and scoring.

The package builds a synthetic person graph whose relations are divided
into a memorized side and a contextual side, samples multi-hop relational
paths over it, assigns the paths to train/test groups at three
generalization levels, renders question/chain-of-thought instance files,
and scores model predictions (exact match, pass@k, binary reward, and
per-hop failure attribution).  Everything downstream of a config and a
master seed is reproducible byte for byte.
"""

from .errors import BenchmarkError
from .schema import (
    CTX,
    MEM,
    RelationDef,
    RelationSchema,
    SourcePartition,
    TailKind,
    atomic_groups,
    load_schema,
    partition_relations,
)
from .world import (
    BiographyDoc,
    Fact,
    KnowledgeGraph,
    Person,
    PopulationCounts,
    close_graph,
    generate_population,
    is_closed,
    render_biography,
)
from .paths import (
    DEFAULT_HOP_RANGE,
    REASONING_TYPES,
    PathPool,
    ReasoningType,
    RelationPath,
    classify_reasoning_type,
    enumerate_paths,
    make_path,
    sample_path_pool,
    validate_path,
)
from .splits import (
    GENERALIZATION_LEVELS,
    GeneralizationLevel,
    SplitConfig,
    SplitManifest,
    SplitReport,
    level_of,
    make_split,
    verify_split,
)
from .qa import (
    ANSWER_MARKER,
    DatasetBundle,
    DatasetSizes,
    HopChain,
    QAInstance,
    assemble_context,
    build_dataset,
    compose_question,
    instantiate_path,
    make_instance,
    render_cot,
    render_question,
)
from .evaluation import (
    PASS_AT_K_GRID,
    EvalReport,
    PredictionRecord,
    binary_reward,
    exact_match,
    extract_final_answer,
    normalize_answer,
    pass_at_k,
    score,
)
from .diagnose import (
    ErrorRecord,
    ErrorSummary,
    aggregate_errors,
    align_cot,
    analyze_predictions,
    classify_failure,
    diagnose_prediction,
)
from .pipeline import (
    TOOL_VERSION,
    MixSpec,
    PipelineConfig,
    StatsReport,
    dataset_files,
    desk_config,
    load_config,
    report_stats,
    run_pipeline,
    stage_build,
    stage_generate,
    stage_split,
    subset_mix,
    test_file,
    train_file,
)

__version__ = TOOL_VERSION

__all__ = [
    "ANSWER_MARKER",
    "BenchmarkError",
    "BiographyDoc",
    "CTX",
    "DEFAULT_HOP_RANGE",
    "DatasetBundle",
    "DatasetSizes",
    "ErrorRecord",
    "ErrorSummary",
    "EvalReport",
    "Fact",
    "GENERALIZATION_LEVELS",
    "GeneralizationLevel",
    "HopChain",
    "KnowledgeGraph",
    "MEM",
    "MixSpec",
    "PASS_AT_K_GRID",
    "PathPool",
    "Person",
    "PipelineConfig",
    "PopulationCounts",
    "PredictionRecord",
    "QAInstance",
    "REASONING_TYPES",
    "ReasoningType",
    "RelationDef",
    "RelationPath",
    "RelationSchema",
    "SourcePartition",
    "SplitConfig",
    "SplitManifest",
    "SplitReport",
    "StatsReport",
    "TOOL_VERSION",
    "TailKind",
    "aggregate_errors",
    "align_cot",
    "analyze_predictions",
    "assemble_context",
    "atomic_groups",
    "binary_reward",
    "build_dataset",
    "classify_failure",
    "classify_reasoning_type",
    "close_graph",
    "compose_question",
    "dataset_files",
    "desk_config",
    "diagnose_prediction",
    "enumerate_paths",
    "exact_match",
    "extract_final_answer",
    "generate_population",
    "instantiate_path",
    "is_closed",
    "level_of",
    "load_config",
    "load_schema",
    "make_instance",
    "make_path",
    "make_split",
    "normalize_answer",
    "partition_relations",
    "pass_at_k",
    "render_biography",
    "render_cot",
    "render_question",
    "report_stats",
    "run_pipeline",
    "sample_path_pool",
    "score",
    "stage_build",
    "stage_generate",
    "stage_split",
    "subset_mix",
    "test_file",
    "train_file",
    "validate_path",
    "verify_split",
]
