"""Session-wide fixtures: one small world, pool, split, and dataset.

Everything here is deterministic, so session scope is safe and keeps the
suite fast — the dataset bundle takes a couple of seconds to build and
most test modules share it.
"""

from pathlib import Path

import pytest

from compqa import (
    PopulationCounts,
    build_dataset,
    desk_config,
    generate_population,
    load_schema,
    make_split,
    partition_relations,
    run_pipeline,
    sample_path_pool,
)

SEED = 7


@pytest.fixture(scope="session")
def schema():
    return load_schema()


@pytest.fixture(scope="session")
def partition(schema):
    return partition_relations(schema, SEED)


@pytest.fixture(scope="session")
def kg(schema, partition):
    return generate_population(schema, partition, PopulationCounts(200, 200, 80), SEED)


@pytest.fixture(scope="session")
def pool(schema, partition):
    return sample_path_pool(schema, partition, 400, SEED)


@pytest.fixture(scope="session")
def manifests(pool):
    return make_split(pool, None, SEED)


@pytest.fixture(scope="session")
def bundle(kg, manifests):
    sizes = desk_config().sizes
    return build_dataset(kg, manifests, sizes, SEED)


@pytest.fixture(scope="session")
def desk_dir(tmp_path_factory) -> Path:
    """One desk-scale artifact directory, produced by the library pipeline."""
    out = tmp_path_factory.mktemp("artifacts") / "desk"
    run_pipeline(desk_config(out_dir=str(out)))
    return out
