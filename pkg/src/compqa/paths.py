"""Relational paths: typed multi-hop relation sequences and pool sampling.

A path is an ordered tuple of relations (r1, ..., rk).  Every hop except the
last must be person-tailed, otherwise there is nothing to hop onward from;
the final hop may end in a person or a value.  Each hop carries the source
side of its relation, and the whole path gets a reasoning type:

* ``mem``  — every hop lives on the memorized side,
* ``ctx``  — every hop lives on the contextual side,
* ``comp`` — both sides appear, so answering requires combining them.

Pools are sampled with equal hop-length histograms across types, which
keeps later per-type comparisons fair.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Mapping

from .errors import EmptyResult, InsufficientPaths, MalformedTemplate
from .schema import CTX, MEM, RelationSchema, SourcePartition
from .seeds import rng_for

DEFAULT_HOP_RANGE = (2, 5)


class ReasoningType(str, Enum):
    MEM = "mem"
    CTX = "ctx"
    COMP = "comp"


REASONING_TYPES = (ReasoningType.MEM, ReasoningType.CTX, ReasoningType.COMP)


@dataclass(frozen=True)
class RelationPath:
    """An ordered relation sequence with per-hop source sides."""

    relations: tuple[str, ...]
    hop_sources: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.relations) != len(self.hop_sources):
            raise MalformedTemplate("hop_sources must align with relations")

    def __len__(self) -> int:
        return len(self.relations)

    @property
    def reasoning_type(self) -> ReasoningType:
        sides = set(self.hop_sources)
        if sides == {MEM}:
            return ReasoningType.MEM
        if sides == {CTX}:
            return ReasoningType.CTX
        return ReasoningType.COMP

    def to_record(self) -> dict:
        return {"relations": list(self.relations), "hop_sources": list(self.hop_sources)}

    @classmethod
    def from_record(cls, rec: Mapping) -> "RelationPath":
        return cls(tuple(rec["relations"]), tuple(rec["hop_sources"]))


def make_path(partition: SourcePartition, relations: Iterable[str]) -> RelationPath:
    rels = tuple(relations)
    return RelationPath(rels, tuple(partition.side_of(r) for r in rels))


def classify_reasoning_type(
    path: RelationPath | Iterable[str],
    partition: SourcePartition | None = None,
) -> ReasoningType:
    """Reasoning type of a path, or of a bare relation sequence + partition."""
    if isinstance(path, RelationPath):
        return path.reasoning_type
    if partition is None:
        raise MalformedTemplate("bare relation sequences need a partition")
    return make_path(partition, path).reasoning_type


def validate_path(
    schema: RelationSchema,
    relations: tuple[str, ...],
    hop_range: tuple[int, int] = DEFAULT_HOP_RANGE,
) -> None:
    """Structural checks: length bounds, person-tailed interior, no immediate
    symmetric repeats (those walk straight back to the start)."""
    lo, hi = hop_range
    if not lo <= len(relations) <= hi:
        raise MalformedTemplate(
            f"path length {len(relations)} outside [{lo}, {hi}]: {relations}"
        )
    for r in relations[:-1]:
        if not schema[r].is_person:
            raise MalformedTemplate(f"interior hop {r!r} is not person-tailed")
    schema[relations[-1]]
    for a, b in zip(relations, relations[1:]):
        if a == b and schema[a].symmetric:
            raise MalformedTemplate(f"immediate symmetric repeat {a!r}")


def _interior_choices(
    schema: RelationSchema, partition: SourcePartition, rtype: ReasoningType
) -> list[str]:
    person = schema.person_relations
    if rtype is ReasoningType.MEM:
        return [r for r in person if r in partition.mem]
    if rtype is ReasoningType.CTX:
        return [r for r in person if r in partition.ctx]
    return list(person)


def _final_choices(
    schema: RelationSchema, partition: SourcePartition, rtype: ReasoningType
) -> tuple[list[str], list[str]]:
    """(person-tailed, value-tailed) candidates for the last hop."""
    if rtype is ReasoningType.MEM:
        allowed = partition.mem
    elif rtype is ReasoningType.CTX:
        allowed = partition.ctx
    else:
        allowed = partition.mem | partition.ctx
    person = [r for r in schema.person_relations if r in allowed]
    value = [r for r in schema.value_relations if r in allowed]
    return person, value


def enumerate_paths(
    schema: RelationSchema,
    partition: SourcePartition,
    rtype: ReasoningType,
    hop_range: tuple[int, int] = DEFAULT_HOP_RANGE,
) -> list[RelationPath]:
    """Every valid path of the given type.  Grows combinatorially with the
    hop range; intended for small schemas and tests."""
    interior = _interior_choices(schema, partition, rtype)
    fin_person, fin_value = _final_choices(schema, partition, rtype)
    final = fin_person + fin_value
    out: list[RelationPath] = []
    lo, hi = hop_range
    for k in range(lo, hi + 1):
        for combo in product(interior, repeat=k - 1):
            for last in final:
                rels = combo + (last,)
                if any(
                    a == b and schema[a].symmetric for a, b in zip(rels, rels[1:])
                ):
                    continue
                path = make_path(partition, rels)
                if path.reasoning_type is rtype:
                    out.append(path)
    if not out:
        raise EmptyResult(f"no {rtype.value} paths exist under this partition")
    return out


def _hop_allocation(count: int, hop_range: tuple[int, int]) -> dict[int, int]:
    """Spread a count evenly over hop lengths; remainder goes to short hops."""
    lo, hi = hop_range
    lengths = list(range(lo, hi + 1))
    base, extra = divmod(count, len(lengths))
    return {k: base + (1 if i < extra else 0) for i, k in enumerate(lengths)}


@dataclass(frozen=True)
class PathPool:
    """Sampled paths per reasoning type, with aligned hop-length histograms."""

    paths: dict[ReasoningType, tuple[RelationPath, ...]]

    def __getitem__(self, rtype: ReasoningType) -> tuple[RelationPath, ...]:
        return self.paths[rtype]

    def hop_histogram(self, rtype: ReasoningType) -> Counter:
        return Counter(len(p) for p in self.paths[rtype])

    def to_records(self) -> list[dict]:
        return [
            {"type": rtype.value, **path.to_record()}
            for rtype in REASONING_TYPES
            if rtype in self.paths
            for path in self.paths[rtype]
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "PathPool":
        acc: dict[ReasoningType, list[RelationPath]] = {}
        for rec in records:
            acc.setdefault(ReasoningType(rec["type"]), []).append(
                RelationPath.from_record(rec)
            )
        return cls({t: tuple(ps) for t, ps in acc.items()})


def sample_path_pool(
    schema: RelationSchema,
    partition: SourcePartition,
    count_per_type: int | Mapping[ReasoningType, int],
    seed: int,
    hop_range: tuple[int, int] = DEFAULT_HOP_RANGE,
) -> PathPool:
    """Sample distinct paths per type with equal hop-length allocation.

    The last hop flips a fair coin between person-tailed and value-tailed
    relations, then picks the least-used candidate inside the group (seeded
    tie-break).  Balancing the final hop keeps every relation's multiplicity
    high enough that the split protocol's exact relation-set equality stays
    satisfiable even after the held-out peel; chains ending in attribute
    lookups also stay as common as chains ending in persons.
    """
    if isinstance(count_per_type, int):
        targets = {t: count_per_type for t in REASONING_TYPES}
    else:
        targets = {t: int(count_per_type.get(t, 0)) for t in REASONING_TYPES}

    pools: dict[ReasoningType, tuple[RelationPath, ...]] = {}
    for rtype in REASONING_TYPES:
        total = targets[rtype]
        if total <= 0:
            pools[rtype] = ()
            continue
        interior = _interior_choices(schema, partition, rtype)
        fin_person, fin_value = _final_choices(schema, partition, rtype)
        if not interior:
            raise InsufficientPaths(
                f"no person-tailed relations available for {rtype.value}"
            )
        alloc = _hop_allocation(total, hop_range)
        chosen: list[RelationPath] = []
        seen: set[tuple[str, ...]] = set()
        usage: Counter = Counter()

        def least_used(rng: random.Random, group: list[str]) -> str:
            low = min(usage[r] for r in group)
            return rng.choice([r for r in group if usage[r] == low])

        for k, want in alloc.items():
            # Overcount of distinct length-k paths (ignores the symmetric
            # -repeat and type filters); a target beyond it can never fill.
            space = len(interior) ** (k - 1) * len(fin_person + fin_value)
            if want > space:
                raise InsufficientPaths(
                    f"{want} distinct {rtype.value} paths of length {k} "
                    f"requested but at most {space} exist"
                )
            rng = rng_for("pool", seed, rtype.value, k)
            tries = 0
            limit = max(2000, 500 * want)
            got = 0
            while got < want:
                tries += 1
                if tries > limit:
                    raise InsufficientPaths(
                        f"could not sample {want} distinct {rtype.value} paths "
                        f"of length {k} (found {got})"
                    )
                rels = [rng.choice(interior) for _ in range(k - 1)]
                group = fin_person if rng.random() < 0.5 else fin_value
                if not group:
                    group = fin_person or fin_value
                rels.append(least_used(rng, group))
                rels_t = tuple(rels)
                if rels_t in seen:
                    continue
                if any(
                    a == b and schema[a].symmetric
                    for a, b in zip(rels_t, rels_t[1:])
                ):
                    continue
                path = make_path(partition, rels_t)
                if path.reasoning_type is not rtype:
                    continue
                seen.add(rels_t)
                usage[rels_t[-1]] += 1
                chosen.append(path)
                got += 1
        pools[rtype] = tuple(chosen)
    return PathPool(pools)
