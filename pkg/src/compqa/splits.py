"""Train/test split protocol over path pools.

Per reasoning type, the pool is carved into four groups:

* ``zero_shot``   — every path touching a held-out relation (test only),
* ``p_iid``       — paths seen in training and re-instantiated at test time,
* ``p_train_comp``— remaining training paths,
* ``p_test_comp`` — unseen paths built only from seen relations.

The held-out relation draw comes first; peeling those paths off before
reserving the iid group is the only order under which "no training-side
path contains a held-out relation" can hold at realistic pool densities.

The composition groups must satisfy an exact relation-set equality:
``relations(p_test_comp) == relations(p_train_comp ∪ p_iid)``.  A random
partition essentially never satisfies this, so the partition is built
constructively: a seeded greedy cover picks test paths until every relation
of the remainder is represented, a repair pass moves surplus paths back so
the training side also covers everything outside the iid group, and a final
balancing pass walks toward the configured test fraction using only moves
that keep both covers intact.  Held-out draws are retried (bounded) if the
resulting geometry is infeasible.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .errors import UnknownRelation, UnsatisfiableSplit
from .paths import PathPool, REASONING_TYPES, ReasoningType, RelationPath
from .schema import CTX, MEM
from .seeds import rng_for


class GeneralizationLevel(str, Enum):
    IID = "iid"
    COMPOSITION = "composition"
    ZERO_SHOT = "zero_shot"


GENERALIZATION_LEVELS = (
    GeneralizationLevel.IID,
    GeneralizationLevel.COMPOSITION,
    GeneralizationLevel.ZERO_SHOT,
)


@dataclass(frozen=True)
class SplitConfig:
    iid_fraction: float = 0.4
    comp_test_fraction: float = 0.3
    unseen_per_side: int = 4
    max_retries: int = 64

    @classmethod
    def coerce(cls, config: "SplitConfig | Mapping | None") -> "SplitConfig":
        if config is None:
            return cls()
        if isinstance(config, cls):
            return config
        return cls(**dict(config))


@dataclass(frozen=True)
class SplitManifest:
    """The four path groups plus held-out relations for one reasoning type."""

    reasoning_type: ReasoningType
    p_iid: tuple[RelationPath, ...]
    p_train_comp: tuple[RelationPath, ...]
    p_test_comp: tuple[RelationPath, ...]
    zero_shot: tuple[RelationPath, ...]
    r_unseen: frozenset[str]
    seed: int

    @property
    def train_paths(self) -> frozenset[tuple[str, ...]]:
        return frozenset(
            p.relations for p in self.p_iid + self.p_train_comp
        )

    @property
    def r_train(self) -> frozenset[str]:
        return frozenset(
            r for p in self.p_iid + self.p_train_comp for r in p.relations
        )

    @property
    def relations_seen(self) -> frozenset[str]:
        rels = set(self.r_unseen)
        for group in (self.p_iid, self.p_train_comp, self.p_test_comp, self.zero_shot):
            for p in group:
                rels.update(p.relations)
        return frozenset(rels)

    def group_of(self, path: RelationPath) -> str | None:
        for name, group in (
            ("iid", self.p_iid),
            ("train_comp", self.p_train_comp),
            ("test_comp", self.p_test_comp),
            ("zero_shot", self.zero_shot),
        ):
            if path in group:
                return name
        return None

    def to_record(self) -> dict:
        return {
            "reasoning_type": self.reasoning_type.value,
            "seed": self.seed,
            "r_unseen": sorted(self.r_unseen),
            "p_iid": [p.to_record() for p in self.p_iid],
            "p_train_comp": [p.to_record() for p in self.p_train_comp],
            "p_test_comp": [p.to_record() for p in self.p_test_comp],
            "zero_shot": [p.to_record() for p in self.zero_shot],
        }

    @classmethod
    def from_record(cls, rec: Mapping) -> "SplitManifest":
        def paths(key: str) -> tuple[RelationPath, ...]:
            return tuple(RelationPath.from_record(r) for r in rec[key])

        return cls(
            reasoning_type=ReasoningType(rec["reasoning_type"]),
            p_iid=paths("p_iid"),
            p_train_comp=paths("p_train_comp"),
            p_test_comp=paths("p_test_comp"),
            zero_shot=paths("zero_shot"),
            r_unseen=frozenset(rec["r_unseen"]),
            seed=int(rec["seed"]),
        )


def level_of(
    path: RelationPath | Iterable[str], manifest: SplitManifest
) -> GeneralizationLevel:
    """Generalization level of a path relative to a manifest (total function)."""
    rels = path.relations if isinstance(path, RelationPath) else tuple(path)
    seen = manifest.relations_seen
    for r in rels:
        if r not in seen:
            raise UnknownRelation(
                f"relation {r!r} unknown to this {manifest.reasoning_type.value} split"
            )
    if rels in manifest.train_paths:
        return GeneralizationLevel.IID
    if all(r in manifest.r_train for r in rels):
        return GeneralizationLevel.COMPOSITION
    return GeneralizationLevel.ZERO_SHOT


# ---------------------------------------------------------------------------
# construction


def _relations_of(paths: Iterable[RelationPath]) -> set[str]:
    return {r for p in paths for r in p.relations}


def _partition_rest(
    rest: list[RelationPath],
    iid_rels: set[str],
    test_fraction: float,
    rng,
) -> tuple[list[int], list[int]] | None:
    """Indices (train, test) of a partition of ``rest`` such that the test
    side covers relations(rest) and the train side plus iid covers the same.
    Returns None when the geometry is infeasible for this draw."""
    rel_sets = [set(p.relations) for p in rest]
    universe: set[str] = set().union(*rel_sets) if rel_sets else set()
    if not universe:
        return None
    must_cover_train = universe - iid_rels
    # every relation needed on both sides must occur in >= 2 paths
    occurrence: dict[str, int] = {}
    for rels in rel_sets:
        for r in rels:
            occurrence[r] = occurrence.get(r, 0) + 1
    for r in must_cover_train:
        if occurrence.get(r, 0) < 2:
            return None

    order = list(range(len(rest)))
    rng.shuffle(order)

    # greedy cover: test side takes paths until every relation is present
    test: set[int] = set()
    needed = set(universe)
    while needed:
        best = None
        best_gain = -1
        for i in order:
            if i in test:
                continue
            gain = len(rel_sets[i] & needed)
            if gain > best_gain:
                best, best_gain = i, gain
        if best is None or best_gain <= 0:
            return None
        test.add(best)
        needed -= rel_sets[best]

    train = [i for i in order if i not in test]
    count_test: dict[str, int] = {}
    for i in test:
        for r in rel_sets[i]:
            count_test[r] = count_test.get(r, 0) + 1
    count_train: dict[str, int] = {}
    for i in train:
        for r in rel_sets[i]:
            count_train[r] = count_train.get(r, 0) + 1

    def movable_from_test(i: int) -> bool:
        return all(count_test[r] >= 2 for r in rel_sets[i])

    def movable_from_train(i: int) -> bool:
        return all(
            count_train.get(r, 0) >= 2
            for r in rel_sets[i]
            if r in must_cover_train
        )

    def move(i: int, to_test: bool) -> None:
        src, dst = (count_train, count_test) if to_test else (count_test, count_train)
        for r in rel_sets[i]:
            src[r] = src.get(r, 0) - 1
            dst[r] = dst.get(r, 0) + 1
        if to_test:
            train.remove(i)
            test.add(i)
        else:
            test.remove(i)
            train.append(i)

    # repair: the train side must cover everything the iid group doesn't
    for r in sorted(must_cover_train):
        if count_train.get(r, 0) > 0:
            continue
        fixed = False
        for i in sorted(test, key=order.index):
            if r in rel_sets[i] and movable_from_test(i):
                move(i, to_test=False)
                fixed = True
                break
        if not fixed:
            return None

    # balance toward the configured test share with coverage-safe moves only
    target = round(test_fraction * len(rest))
    guard = 2 * len(rest)
    while len(test) > target and guard:
        guard -= 1
        for i in sorted(test, key=order.index):
            if movable_from_test(i):
                move(i, to_test=False)
                break
        else:
            break
    while len(test) < target and guard:
        guard -= 1
        for i in list(train):
            if movable_from_train(i):
                move(i, to_test=True)
                break
        else:
            break

    test_rels = set().union(*(rel_sets[i] for i in test)) if test else set()
    train_rels = set().union(*(rel_sets[i] for i in train)) if train else set()
    if test_rels != universe or (train_rels | iid_rels) < universe:
        return None
    return sorted(train), sorted(test)


def make_split(
    pool: PathPool,
    config: SplitConfig | Mapping | None,
    seed: int,
) -> dict[ReasoningType, SplitManifest]:
    """Split every reasoning type's paths; retries the held-out draw on
    infeasible geometry and raises UnsatisfiableSplit when retries run out."""
    config = SplitConfig.coerce(config)
    side_candidates: dict[str, list[str]] = {MEM: [], CTX: []}
    for rtype in REASONING_TYPES:
        for path in pool.paths.get(rtype, ()):
            for rel, side in zip(path.relations, path.hop_sources):
                if rel not in side_candidates[side]:
                    side_candidates[side].append(rel)
    for side in (MEM, CTX):
        side_candidates[side].sort()
        if side_candidates[side] and config.unseen_per_side >= len(
            side_candidates[side]
        ):
            raise UnsatisfiableSplit(
                f"cannot hold out {config.unseen_per_side} of "
                f"{len(side_candidates[side])} usable {side} relations"
            )

    last_reason = "no attempts made"
    for attempt in range(config.max_retries):
        rng_unseen = rng_for("split", seed, "unseen", attempt)
        unseen_mem = frozenset(
            rng_unseen.sample(side_candidates[MEM], config.unseen_per_side)
            if side_candidates[MEM]
            else ()
        )
        unseen_ctx = frozenset(
            rng_unseen.sample(side_candidates[CTX], config.unseen_per_side)
            if side_candidates[CTX]
            else ()
        )
        unseen_all = unseen_mem | unseen_ctx

        manifests: dict[ReasoningType, SplitManifest] = {}
        failed = None
        for rtype in REASONING_TYPES:
            paths = list(pool.paths.get(rtype, ()))
            if rtype is ReasoningType.MEM:
                r_unseen = unseen_mem
            elif rtype is ReasoningType.CTX:
                r_unseen = unseen_ctx
            else:
                r_unseen = unseen_all
            zero_shot = [p for p in paths if set(p.relations) & unseen_all]
            clean = [p for p in paths if not set(p.relations) & unseen_all]
            if paths and not clean:
                failed = f"{rtype.value}: held-out draw consumed every path"
                break

            # a relation occurring exactly once after the peel cannot sit on
            # both sides of the composition partition, so the relation-set
            # equality is unreachable for any assignment — redraw instead
            occurrence = Counter(r for p in clean for r in p.relations)
            singletons = sorted(r for r, c in occurrence.items() if c == 1)
            if singletons:
                failed = (
                    f"{rtype.value}: relations {singletons} occur once after "
                    "the held-out peel"
                )
                break

            rng_iid = rng_for("split", seed, "iid", rtype.value, attempt)
            n_iid = round(config.iid_fraction * len(clean))
            iid_idx = sorted(rng_iid.sample(range(len(clean)), n_iid))
            iid_set = set(iid_idx)
            p_iid = [clean[i] for i in iid_idx]
            rest = [p for i, p in enumerate(clean) if i not in iid_set]

            # relations drawn wholly into the iid group would be absent from
            # the composition universe; push one carrier path back per pass
            while True:
                missing = _relations_of(p_iid) - _relations_of(rest)
                if not missing:
                    break
                for i, p in enumerate(p_iid):
                    if set(p.relations) & missing:
                        rest.append(p_iid.pop(i))
                        break
            iid_rels = _relations_of(p_iid)
            if rest:
                rng_cover = rng_for("split", seed, "cover", rtype.value, attempt)
                result = _partition_rest(
                    rest, iid_rels, config.comp_test_fraction, rng_cover
                )
                if result is None:
                    failed = f"{rtype.value}: no covering partition found"
                    break
                train_idx, test_idx = result
                p_train_comp = [rest[i] for i in train_idx]
                p_test_comp = [rest[i] for i in test_idx]
            else:
                p_train_comp = []
                p_test_comp = []

            manifests[rtype] = SplitManifest(
                reasoning_type=rtype,
                p_iid=tuple(p_iid),
                p_train_comp=tuple(p_train_comp),
                p_test_comp=tuple(p_test_comp),
                zero_shot=tuple(zero_shot),
                r_unseen=r_unseen,
                seed=seed,
            )
        if failed is None:
            return manifests
        last_reason = failed
    raise UnsatisfiableSplit(
        f"no feasible split after {config.max_retries} held-out draws "
        f"(last failure: {last_reason})"
    )


# ---------------------------------------------------------------------------
# verification


@dataclass
class SplitReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_split(
    manifests: Mapping[ReasoningType, SplitManifest],
    pool: PathPool,
) -> SplitReport:
    """Check every split invariant; reports violations instead of raising."""
    report = SplitReport()

    def flag(msg: str) -> None:
        report.violations.append(msg)

    for rtype in REASONING_TYPES:
        manifest = manifests.get(rtype)
        pool_paths = pool.paths.get(rtype, ())
        if manifest is None:
            if pool_paths:
                flag(f"{rtype.value}: manifest missing")
            continue
        groups = {
            "iid": manifest.p_iid,
            "train_comp": manifest.p_train_comp,
            "test_comp": manifest.p_test_comp,
            "zero_shot": manifest.zero_shot,
        }

        names = list(groups)
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                dup = set(groups[a]) & set(groups[b])
                if dup:
                    flag(f"{rtype.value}: groups {a} and {b} share {len(dup)} paths")

        combined = [p for g in groups.values() for p in g]
        if set(combined) != set(pool_paths) or len(combined) != len(pool_paths):
            flag(f"{rtype.value}: groups do not partition the pool")

        for name in ("iid", "train_comp", "test_comp"):
            for p in groups[name]:
                hit = set(p.relations) & manifest.r_unseen
                if hit:
                    flag(
                        f"{rtype.value}: {name} path {p.relations} contains "
                        f"held-out {sorted(hit)}"
                    )

        for p in manifest.zero_shot:
            if not set(p.relations) & manifest.r_unseen:
                flag(
                    f"{rtype.value}: zero-shot path {p.relations} has no "
                    "held-out relation"
                )

        test_rels = _relations_of(manifest.p_test_comp)
        train_rels = _relations_of(manifest.p_train_comp) | _relations_of(
            manifest.p_iid
        )
        if manifest.p_test_comp and test_rels != train_rels:
            only_test = sorted(test_rels - train_rels)
            only_train = sorted(train_rels - test_rels)
            flag(
                f"{rtype.value}: relation sets differ "
                f"(test-only {only_test}, train-only {only_train})"
            )
    return report
