"""Question/answer instances: entity walks, surface rendering, datasets.

A sampled relation path becomes a concrete *hop chain* by walking the
knowledge graph from a seeded topic person.  The chain is then rendered
three ways:

* a **question** — nested noun phrases around the topic entity, so the
  intermediate entities never leak into the prompt,
* a **chain-of-thought answer** — one statement sentence per hop followed by
  the answer marker and the final answer,
* a **context block** — the contextual-side biographies that state every
  contextual hop fact, plus seeded distractor biographies.

``build_dataset`` assembles train/test instance sets for all reasoning
types and generalization levels, enforcing entity disjointness between
train and i.i.d.-test instantiations via a global person split.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    InsufficientPaths,
    InvalidType,
    MissingTemplate,
    NoRealization,
)
from .paths import REASONING_TYPES, ReasoningType, RelationPath
from .schema import CTX, MEM, RelationSchema
from .seeds import derive_seed, rng_for
from .splits import GeneralizationLevel, SplitManifest, level_of
from .world import BiographyDoc, Fact, KnowledgeGraph, render_biography

ANSWER_MARKER = "So, the answer is:"

QUESTION_VARIANTS = 3
WALK_RESTARTS = 128
DEFAULT_DISTRACTORS = 3


@dataclass(frozen=True)
class EntityPool:
    """A named set of person ids a walk may visit (train/test separation)."""

    name: str
    members: frozenset[str]

    def __contains__(self, person_id: str) -> bool:
        return person_id in self.members


@dataclass(frozen=True)
class HopChain:
    """A path realized against the graph: entities, traversed facts, surface
    forms.  ``entities[0]`` is the topic; ``entities[-1]`` is the answer
    (a person id or a literal value)."""

    path: RelationPath
    entities: tuple[str, ...]
    displays: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.entities) != len(self.path) + 1:
            raise NoRealization(
                f"chain has {len(self.entities)} entities for "
                f"{len(self.path)} hops"
            )
        if len(self.displays) != len(self.entities):
            raise NoRealization("chain displays misaligned with entities")

    @property
    def topic(self) -> str:
        return self.entities[0]

    @property
    def answer(self) -> str:
        return self.displays[-1]

    @property
    def facts(self) -> tuple[Fact, ...]:
        return tuple(
            Fact(self.entities[i], rel, self.entities[i + 1])
            for i, rel in enumerate(self.path.relations)
        )

    def persons(self) -> frozenset[str]:
        """Every person id on the chain (excludes a literal final value).
        Person entities are ids displayed as names; value entities display
        as themselves."""
        ids = list(self.entities[:-1])
        if self.entities[-1] != self.displays[-1]:
            ids.append(self.entities[-1])
        return frozenset(ids)

    def to_record(self) -> dict:
        return {
            "path": self.path.to_record(),
            "entities": list(self.entities),
            "displays": list(self.displays),
        }


def instantiate_path(
    kg: KnowledgeGraph,
    path: RelationPath,
    seed: int,
    pool: EntityPool | None = None,
) -> HopChain:
    """Walk the graph along ``path`` from a seeded topic person.

    The walk never revisits an entity, so chains are acyclic; when an
    ``EntityPool`` is given, every person on the chain must belong to it.
    Dead ends restart the walk (bounded) before giving up.
    """
    relations = path.relations
    starts = kg.heads_with(relations[0])
    if pool is not None:
        starts = [p for p in starts if p in pool.members]
    if not starts:
        raise NoRealization(
            f"no eligible topic person has relation {relations[0]!r}"
        )
    rng = rng_for("walk", seed)
    for _ in range(WALK_RESTARTS):
        topic = rng.choice(starts)
        entities = [topic]
        visited = {topic}
        dead = False
        for rel in relations:
            candidates = kg.tails(entities[-1], rel)
            if kg.schema[rel].is_person:
                candidates = [c for c in candidates if c not in visited]
                if pool is not None:
                    candidates = [c for c in candidates if c in pool.members]
            if not candidates:
                dead = True
                break
            step = rng.choice(candidates)
            entities.append(step)
            visited.add(step)
        if dead:
            continue
        displays = [kg.name_of(topic)]
        for i, rel in enumerate(relations):
            displays.append(kg.display(entities[i + 1], rel))
        return HopChain(
            path=path, entities=tuple(entities), displays=tuple(displays)
        )
    raise NoRealization(
        f"no acyclic chain realizes path {list(relations)} "
        f"after {WALK_RESTARTS} restarts"
        + (f" within pool {pool.name!r}" if pool is not None else "")
    )


# ---------------------------------------------------------------------------
# surface rendering


def compose_question(
    schema: RelationSchema,
    path: RelationPath,
    topic_name: str,
    variant: int,
) -> str:
    """Nest noun phrases hop by hop around the topic, then phrase the final
    hop as a question.  One variant index drives every hop."""
    noun_phrase = topic_name
    for rel in path.relations[:-1]:
        templates = schema[rel].np_templates
        if variant >= len(templates):
            raise MissingTemplate(
                f"relation {rel!r} has no noun-phrase variant {variant}"
            )
        noun_phrase = templates[variant].format(np=noun_phrase)
    last = path.relations[-1]
    questions = schema[last].question_templates
    if variant >= len(questions):
        raise MissingTemplate(
            f"relation {last!r} has no question variant {variant}"
        )
    return questions[variant].format(e1=noun_phrase)


def render_question(
    schema: RelationSchema,
    path: RelationPath,
    topic_name: str,
    seed: int,
) -> str:
    variant = rng_for("question", seed).randrange(QUESTION_VARIANTS)
    return compose_question(schema, path, topic_name, variant)


def render_cot(
    schema: RelationSchema,
    chain: HopChain,
    seed: int,
) -> tuple[str, str]:
    """One statement sentence per hop (seeded template variant each), then
    the answer marker and the final answer.  Returns (cot, final_answer)."""
    rng = rng_for("cot", seed)
    sentences = []
    for i, rel in enumerate(chain.path.relations):
        templates = schema[rel].statement_templates
        if not templates:
            raise MissingTemplate(f"relation {rel!r} has no statement templates")
        tmpl = templates[rng.randrange(len(templates))]
        sentences.append(
            tmpl.format(e1=chain.displays[i], e2=chain.displays[i + 1])
        )
    answer = chain.answer
    cot = " ".join(sentences) + f" {ANSWER_MARKER} {answer}"
    return cot, answer


def assemble_context(
    kg: KnowledgeGraph,
    chain: HopChain,
    rtype: ReasoningType,
    distractor_count: int = DEFAULT_DISTRACTORS,
    seed: int = 0,
) -> list[str]:
    """Biography documents accompanying a ctx or comp question.

    Includes the contextual-side biography of every chain person heading a
    contextual hop fact (that biography states the fact), plus distractor
    biographies of uninvolved persons, in a seeded shuffle order.
    """
    if rtype is ReasoningType.MEM:
        raise InvalidType("mem instances take no context documents")
    owners: list[str] = []
    for fact, side in zip(chain.facts, chain.path.hop_sources):
        if side == CTX and fact.head not in owners:
            owners.append(fact.head)
    docs = [render_biography(kg, pid, CTX).text for pid in owners]

    rng = rng_for("context", seed)
    involved = set(chain.entities)
    candidates = [
        pid for pid in kg.persons_on(CTX)
        if pid not in involved and pid not in owners
    ]
    picks = rng.sample(candidates, min(distractor_count, len(candidates)))
    docs.extend(render_biography(kg, pid, CTX).text for pid in picks)
    rng.shuffle(docs)
    return docs


# ---------------------------------------------------------------------------
# dataset assembly


@dataclass(frozen=True)
class QAInstance:
    id: str
    reasoning_type: ReasoningType
    level: GeneralizationLevel
    path: RelationPath
    question: str
    contexts: tuple[str, ...]
    gold_chain: tuple[str, ...]
    cot_answer: str
    final_answer: str
    model_input: str

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "type": self.reasoning_type.value,
            "level": self.level.value,
            "path": self.path.to_record(),
            "question": self.question,
            "contexts": list(self.contexts),
            "gold_chain": list(self.gold_chain),
            "cot_answer": self.cot_answer,
            "final_answer": self.final_answer,
            "model_input": self.model_input,
        }

    @classmethod
    def from_record(cls, rec: Mapping) -> "QAInstance":
        return cls(
            id=rec["id"],
            reasoning_type=ReasoningType(rec["type"]),
            level=GeneralizationLevel(rec["level"]),
            path=RelationPath.from_record(rec["path"]),
            question=rec["question"],
            contexts=tuple(rec["contexts"]),
            gold_chain=tuple(rec["gold_chain"]),
            cot_answer=rec["cot_answer"],
            final_answer=rec["final_answer"],
            model_input=rec["model_input"],
        )


@dataclass(frozen=True)
class DatasetSizes:
    """Instance count targets: train per type, test per (type, level)."""

    train: Mapping[str, int]
    test: Mapping[str, Mapping[str, int]]
    distractor_count: int = DEFAULT_DISTRACTORS

    @classmethod
    def coerce(cls, sizes: "DatasetSizes | Mapping") -> "DatasetSizes":
        if isinstance(sizes, cls):
            return sizes
        return cls(
            train=dict(sizes["train"]),
            test={k: dict(v) for k, v in sizes["test"].items()},
            distractor_count=int(sizes.get("distractor_count", DEFAULT_DISTRACTORS)),
        )

    def train_target(self, rtype: ReasoningType) -> int:
        return int(self.train.get(rtype.value, 0))

    def test_target(self, rtype: ReasoningType, level: GeneralizationLevel) -> int:
        return int(self.test.get(rtype.value, {}).get(level.value, 0))


@dataclass
class DatasetBundle:
    train: dict[ReasoningType, list[QAInstance]]
    test: dict[ReasoningType, dict[GeneralizationLevel, list[QAInstance]]]
    mem_corpus: list[BiographyDoc]
    counts: dict

    def all_instances(self) -> list[QAInstance]:
        out = [inst for insts in self.train.values() for inst in insts]
        for cells in self.test.values():
            for insts in cells.values():
                out.extend(insts)
        return out


def make_instance(
    kg: KnowledgeGraph,
    path: RelationPath,
    instance_id: str,
    level: GeneralizationLevel,
    seed: int,
    pool: EntityPool | None = None,
    distractor_count: int = DEFAULT_DISTRACTORS,
) -> QAInstance:
    """Instantiate, render, and package one QA instance deterministically."""
    chain = instantiate_path(kg, path, seed, pool)
    rtype = path.reasoning_type
    question = render_question(kg.schema, path, chain.displays[0], seed)
    cot, answer = render_cot(kg.schema, chain, seed)
    if rtype is ReasoningType.MEM:
        contexts: tuple[str, ...] = ()
        model_input = question
    else:
        docs = assemble_context(kg, chain, rtype, distractor_count, seed)
        contexts = tuple(docs)
        model_input = "\n\n".join([*docs, question])
    return QAInstance(
        id=instance_id,
        reasoning_type=rtype,
        level=level,
        path=path,
        question=question,
        contexts=contexts,
        gold_chain=chain.displays,
        cot_answer=cot,
        final_answer=answer,
        model_input=model_input,
    )


def split_entity_pools(
    kg: KnowledgeGraph, seed: int
) -> tuple[EntityPool, EntityPool]:
    """Seeded half/half person split backing train-vs-test entity
    disjointness for i.i.d. paths."""
    ids = sorted(kg.persons)
    rng_for("entities", seed).shuffle(ids)
    half = (len(ids) + 1) // 2
    return (
        EntityPool("train", frozenset(ids[:half])),
        EntityPool("test", frozenset(ids[half:])),
    )


def _fill_cell(
    kg: KnowledgeGraph,
    paths: Sequence[RelationPath],
    manifest: SplitManifest,
    rtype: ReasoningType,
    group: str,
    want: int,
    seed: int,
    pool: EntityPool | None,
    distractor_count: int,
    unique_chains: bool = False,
) -> list[QAInstance]:
    """Round-robin paths until the target count is met or every path has
    proven unrealizable.  A wholly empty cell with a positive target is an
    error; a partial cell is recorded as-is.

    Training cells prefer fresh hop chains but will repeat one (with a new
    phrasing seed) once five draws in a row collide; test cells set
    ``unique_chains`` and never repeat a chain, falling short of the target
    instead when the world has no more distinct chains to give."""
    if want <= 0:
        return []
    if not paths:
        raise InsufficientPaths(f"no paths available for {rtype.value}/{group}")
    usable = list(paths)
    instances: list[QAInstance] = []
    seen_chains: set[tuple] = set()
    slot = 0
    misses = 0
    while len(instances) < want and usable:
        path = usable[slot % len(usable)]
        instance_id = f"{rtype.value}-{group}-{len(instances):06d}"
        placed = False
        for salt in range(5):
            iseed = derive_seed(
                "instance", seed, rtype.value, group, slot, salt
            )
            try:
                inst = make_instance(
                    kg, path, instance_id, level_of(path, manifest),
                    iseed, pool, distractor_count,
                )
            except NoRealization:
                usable.remove(path)
                break
            key = (path.relations, tuple(inst.gold_chain))
            if key in seen_chains and (unique_chains or salt < 4):
                continue
            seen_chains.add(key)
            instances.append(inst)
            placed = True
            break
        slot += 1
        if placed:
            misses = 0
        else:
            misses += 1
            if misses >= 3 * max(1, len(usable)):
                break  # several full cycles without one new chain: exhausted
    if not instances:
        raise NoRealization(
            f"cell {rtype.value}/{group}: no path realizable "
            f"(first tried {list(paths[0].relations)})"
        )
    return instances


def build_dataset(
    kg: KnowledgeGraph,
    manifests: Mapping[ReasoningType, SplitManifest],
    sizes: DatasetSizes | Mapping,
    seed: int,
) -> DatasetBundle:
    """Emit train/test instances for every type and level plus the
    memorized-side corpus.  Targets are approached, not guaranteed: the
    achieved counts are recorded in the bundle."""
    sizes = DatasetSizes.coerce(sizes)
    pool_train, pool_test = split_entity_pools(kg, seed)
    train: dict[ReasoningType, list[QAInstance]] = {}
    test: dict[ReasoningType, dict[GeneralizationLevel, list[QAInstance]]] = {}

    for rtype in REASONING_TYPES:
        manifest = manifests[rtype]
        train_paths = list(manifest.p_iid + manifest.p_train_comp)
        train[rtype] = _fill_cell(
            kg, train_paths, manifest, rtype, "train",
            sizes.train_target(rtype), seed, pool_train,
            sizes.distractor_count,
        ) if sizes.train_target(rtype) > 0 else []

        cells: dict[GeneralizationLevel, list[QAInstance]] = {}
        groups = (
            (GeneralizationLevel.IID, manifest.p_iid, pool_test),
            (GeneralizationLevel.COMPOSITION, manifest.p_test_comp, None),
            (GeneralizationLevel.ZERO_SHOT, manifest.zero_shot, None),
        )
        for level, paths, pool in groups:
            want = sizes.test_target(rtype, level)
            cells[level] = _fill_cell(
                kg, list(paths), manifest, rtype, level.value,
                want, seed, pool, sizes.distractor_count,
                unique_chains=True,
            ) if want > 0 else []
        test[rtype] = cells

    mem_corpus = [
        render_biography(kg, pid, MEM) for pid in kg.persons_on(MEM)
    ]
    counts = {
        "train": {t.value: len(train[t]) for t in REASONING_TYPES},
        "test": {
            t.value: {lvl.value: len(test[t][lvl]) for lvl in test[t]}
            for t in REASONING_TYPES
        },
        "mem_corpus": len(mem_corpus),
    }
    return DatasetBundle(
        train=train, test=test, mem_corpus=mem_corpus, counts=counts
    )
