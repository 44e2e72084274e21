"""Synthetic biography world: persons, facts, closure, and rendered documents.

A world is a knowledge graph over invented persons.  Each person belongs to
the memorized side, the contextual side, or both ("shared" persons are the
bridge that lets one question mix knowledge sources).  Facts are (head,
relation, tail) triples; person-tailed facts point at other person ids,
value-tailed facts carry literal strings (dates, emails, pet names, ...).

Invariants maintained here:

* the graph is closed: every symmetric fact has its flip, every fact whose
  relation has an inverse partner has the partnered fact;
* closure never crosses the source partition (partners share a side);
* functional slots stay within capacity (one spouse, one boss, at most two
  parents);
* person-tailed facts only ever join persons that share the fact's side.

Rendering is deterministic: biography sentence order and template choice
derive from the world seed, so identical seeds give byte-identical text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from . import wordlists
from .errors import (
    ConflictingFact,
    EmptyProfile,
    InsufficientPool,
    UnsupportedKind,
)
from .schema import CTX, MEM, RelationSchema, SourcePartition, TailKind
from .seeds import rng_for

# out-degree capacity per head for person relations; everything else unlimited
FUNCTIONAL_CAPS = {"spouse": 1, "boss": 1, "parent": 2}

# how many person-tailed facts a person initiates per side (inclusive bounds)
LINK_BUDGET = (3, 8)


class Fact(NamedTuple):
    head: str
    relation: str
    tail: str


@dataclass(frozen=True)
class Person:
    id: str
    name: str
    sides: tuple[str, ...]


@dataclass(frozen=True)
class BiographyDoc:
    """One rendered profile: a person's facts on one side, as prose."""

    person_id: str
    name: str
    side: str
    text: str
    facts: tuple[Fact, ...]  # in sentence order

    def to_record(self) -> dict:
        return {
            "person_id": self.person_id,
            "name": self.name,
            "side": self.side,
            "text": self.text,
            "facts": [list(f) for f in self.facts],
        }


@dataclass(frozen=True)
class PopulationCounts:
    n_mem: int
    n_ctx: int
    n_shared: int

    def __post_init__(self) -> None:
        if min(self.n_mem, self.n_ctx, self.n_shared) < 0:
            raise InsufficientPool("population counts must be non-negative")
        if self.n_shared > min(self.n_mem, self.n_ctx):
            raise InsufficientPool(
                f"n_shared={self.n_shared} exceeds min(n_mem={self.n_mem}, "
                f"n_ctx={self.n_ctx})"
            )

    @property
    def total(self) -> int:
        return self.n_mem + self.n_ctx - self.n_shared

    @classmethod
    def coerce(cls, counts: "PopulationCounts | Mapping") -> "PopulationCounts":
        if isinstance(counts, cls):
            return counts
        return cls(
            n_mem=int(counts["n_mem"]),
            n_ctx=int(counts["n_ctx"]),
            n_shared=int(counts["n_shared"]),
        )


class KnowledgeGraph:
    """Persons plus facts, with adjacency indexes and rendering caches."""

    def __init__(
        self,
        schema: RelationSchema,
        partition: SourcePartition,
        persons: Iterable[Person],
        facts: Iterable[Fact] = (),
        seed: int = 0,
    ):
        self.schema = schema
        self.partition = partition
        self.seed = seed
        self.persons: dict[str, Person] = {p.id: p for p in persons}
        self.facts: list[Fact] = []
        self._fact_set: set[Fact] = set()
        self._adjacency: dict[tuple[str, str], list[str]] = {}
        self._by_head: dict[str, list[Fact]] = {}
        self._heads_by_relation: dict[str, list[str]] = {}
        self._bio_cache: dict[tuple[str, str], BiographyDoc] = {}
        self._start_cache: dict[tuple[str, str], tuple[str, ...]] = {}
        for f in facts:
            self.add_fact(f)

    # -- construction -------------------------------------------------------

    def add_fact(self, fact: Fact) -> bool:
        """Insert a fact once; returns False if it was already present."""
        if fact in self._fact_set:
            return False
        self.schema[fact.relation]  # raises UnknownRelation early
        self.facts.append(fact)
        self._fact_set.add(fact)
        key = (fact.head, fact.relation)
        if key not in self._adjacency:
            self._adjacency[key] = []
            self._heads_by_relation.setdefault(fact.relation, []).append(fact.head)
        self._adjacency[key].append(fact.tail)
        self._by_head.setdefault(fact.head, []).append(fact)
        return True

    # -- queries --------------------------------------------------------------

    def has_fact(self, fact: Fact) -> bool:
        return fact in self._fact_set

    def tails(self, head: str, relation: str) -> list[str]:
        return self._adjacency.get((head, relation), [])

    def out_degree(self, head: str, relation: str) -> int:
        return len(self._adjacency.get((head, relation), ()))

    def heads_with(self, relation: str) -> list[str]:
        return self._heads_by_relation.get(relation, [])

    def facts_of(self, person_id: str) -> list[Fact]:
        return self._by_head.get(person_id, [])

    def persons_on(self, side: str) -> list[str]:
        return [p.id for p in self.persons.values() if side in p.sides]

    def side_of_fact(self, fact: Fact) -> str:
        return self.partition.side_of(fact.relation)

    def display(self, token: str, relation: str) -> str:
        """Surface form of a fact tail: person name or the literal itself."""
        if self.schema[relation].is_person:
            return self.persons[token].name
        return token

    def name_of(self, person_id: str) -> str:
        return self.persons[person_id].name

    # -- serialization ---------------------------------------------------------

    def to_records(self) -> list[dict]:
        records: list[dict] = [{"kind": "meta", "seed": self.seed}]
        for p in self.persons.values():
            records.append(
                {"kind": "person", "id": p.id, "name": p.name, "sides": list(p.sides)}
            )
        for f in self.facts:
            records.append(
                {"kind": "fact", "head": f.head, "relation": f.relation, "tail": f.tail}
            )
        return records

    @classmethod
    def from_records(
        cls,
        schema: RelationSchema,
        partition: SourcePartition,
        records: Iterable[Mapping],
    ) -> "KnowledgeGraph":
        seed = 0
        persons: list[Person] = []
        facts: list[Fact] = []
        for rec in records:
            kind = rec.get("kind")
            if kind == "meta":
                seed = int(rec["seed"])
            elif kind == "person":
                persons.append(
                    Person(id=rec["id"], name=rec["name"], sides=tuple(rec["sides"]))
                )
            elif kind == "fact":
                facts.append(Fact(rec["head"], rec["relation"], rec["tail"]))
        return cls(schema, partition, persons, facts, seed=seed)


# ---------------------------------------------------------------------------
# value synthesis


def _draw_value(rng, kind: TailKind, topic: str | None) -> str:
    if kind is TailKind.DATE:
        return f"{rng.randint(1902, 2019):04d}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"
    if kind is TailKind.PLACE:
        return rng.choice(wordlists.CITY_STEMS) + rng.choice(wordlists.CITY_SUFFIXES)
    if kind is TailKind.EMAIL:
        local = rng.choice(wordlists.LAST_NAMES).lower() + rng.choice(
            wordlists.FIRST_NAMES
        ).lower()
        return f"{local}@{rng.choice(wordlists.EMAIL_DOMAINS)}"
    if kind is TailKind.PHONE:
        digits = [str(rng.randint(2, 9))] + [str(rng.randint(0, 9)) for _ in range(9)]
        d = "".join(digits)
        style = rng.randrange(3)
        if style == 0:
            return f"{d[0:3]}.{d[3:6]}.{d[6:10]}"
        if style == 1:
            return f"{d[0:3]}-{d[3:6]}-{d[6:10]}"
        return f"({d[0:3]}) {d[3:6]}-{d[6:10]}"
    if kind is TailKind.TEXT:
        if topic == "address":
            return (
                f"{rng.randint(2, 998)} "
                f"{rng.choice(wordlists.STREET_NAMES)} "
                f"{rng.choice(wordlists.STREET_TYPES)}"
            )
        vocab = wordlists.TEXT_VOCABULARIES.get(topic or "")
        if vocab:
            return rng.choice(vocab)
        return rng.choice(wordlists.GENERIC_TEXT_VALUES)
    if kind is TailKind.PERSON:
        return (
            rng.choice(wordlists.FIRST_NAMES) + " " + rng.choice(wordlists.LAST_NAMES)
        )
    raise UnsupportedKind(f"no generator for tail kind {kind!r}")


def fake_value(kind: TailKind | str, stream_seed: int, topic: str | None = None) -> str:
    """Deterministic synthetic value for a tail kind.

    Same (kind, stream_seed, topic) always yields the same string.  ``topic``
    selects a themed vocabulary for Text values (pet names vs book titles).
    """
    try:
        kind = TailKind(kind)
    except ValueError:
        raise UnsupportedKind(f"unknown tail kind {kind!r}") from None
    return _draw_value(rng_for("value", stream_seed, kind.value, topic or ""), kind, topic)


# ---------------------------------------------------------------------------
# population generation


def _mirror(schema: RelationSchema, fact: Fact) -> Fact | None:
    """The closure partner of a person-tailed fact, if any."""
    rel = schema[fact.relation]
    if rel.symmetric:
        if fact.head == fact.tail:
            return None
        return Fact(fact.tail, fact.relation, fact.head)
    if rel.inverse is not None:
        return Fact(fact.tail, rel.inverse, fact.head)
    return None


def _cap_ok(kg: KnowledgeGraph, fact: Fact) -> bool:
    cap = FUNCTIONAL_CAPS.get(fact.relation)
    return cap is None or kg.out_degree(fact.head, fact.relation) < cap


def generate_population(
    schema: RelationSchema,
    partition: SourcePartition,
    counts: PopulationCounts | Mapping,
    seed: int,
) -> KnowledgeGraph:
    """Create a closed world with the requested mem/ctx/shared layout.

    Every person gets one value for each value relation on each side they
    belong to, plus a seeded budget of person-tailed links into the same
    side's pool.  Links and their closure mirrors are inserted together, so
    the returned graph is already closed.
    """
    counts = PopulationCounts.coerce(counts)
    total = counts.total
    name_space = len(wordlists.FIRST_NAMES) * len(wordlists.LAST_NAMES)
    if total > name_space:
        raise InsufficientPool(
            f"{total} persons requested but only {name_space} distinct names exist"
        )

    rng_names = rng_for("world", seed, "names")
    n_first = len(wordlists.FIRST_NAMES)
    picks = rng_names.sample(range(name_space), total)
    width = max(6, len(str(total)))

    persons: list[Person] = []
    mem_only = counts.n_mem - counts.n_shared
    for i, pick in enumerate(picks):
        name = (
            wordlists.FIRST_NAMES[pick % n_first]
            + " "
            + wordlists.LAST_NAMES[pick // n_first]
        )
        if i < mem_only:
            sides: tuple[str, ...] = (MEM,)
        elif i < counts.n_mem:
            sides = (MEM, CTX)
        else:
            sides = (CTX,)
        persons.append(Person(id=f"p{i + 1:0{width}d}", name=name, sides=sides))

    kg = KnowledgeGraph(schema, partition, persons, seed=seed)

    side_value_rels = {
        side: [
            name
            for name in schema.value_relations
            if name in partition.relations_on(side)
        ]
        for side in (MEM, CTX)
    }
    side_person_rels = {
        side: [
            name
            for name in schema.person_relations
            if name in partition.relations_on(side)
        ]
        for side in (MEM, CTX)
    }
    pools = {side: kg.persons_on(side) for side in (MEM, CTX)}
    for side in (MEM, CTX):
        if side_person_rels[side] and len(pools[side]) < 2:
            raise InsufficientPool(
                f"side {side!r} has {len(pools[side])} persons but person-tailed "
                "relations need at least 2"
            )

    # one value per applicable value relation, per person per side
    for person in kg.persons.values():
        for side in person.sides:
            rng = rng_for("world", seed, "values", person.id, side)
            for rel_name in side_value_rels[side]:
                kind = schema[rel_name].tail_kind
                kg.add_fact(Fact(person.id, rel_name, _draw_value(rng, kind, rel_name)))

    # seeded person-to-person links within each side's pool
    for side in (MEM, CTX):
        rels = side_person_rels[side]
        pool = pools[side]
        if not rels or len(pool) < 2:
            continue
        for pid in pool:
            rng = rng_for("world", seed, "links", pid, side)
            budget = rng.randint(*LINK_BUDGET)
            added = 0
            for _ in range(8 * budget):
                if added >= budget:
                    break
                rel = rng.choice(rels)
                partner = rng.choice(pool)
                if partner == pid:
                    continue
                fact = Fact(pid, rel, partner)
                if kg.has_fact(fact) or not _cap_ok(kg, fact):
                    continue
                mirror = _mirror(schema, fact)
                if mirror is not None and not _cap_ok(kg, mirror):
                    continue
                kg.add_fact(fact)
                if mirror is not None:
                    kg.add_fact(mirror)
                added += 1
    return kg


# ---------------------------------------------------------------------------
# closure


def close_graph(kg: KnowledgeGraph) -> KnowledgeGraph:
    """Add all symmetric flips and inverse partners; validate functional slots.

    Closing is idempotent: a closed graph comes back with an identical fact
    list.  Raises ConflictingFact if the closed graph would give a head more
    tails than a functional slot allows, or two values for one value slot.
    """
    closed: list[Fact] = []
    seen: set[Fact] = set()
    for fact in kg.facts:
        if fact not in seen:
            seen.add(fact)
            closed.append(fact)
    for fact in kg.facts:
        mirror = _mirror(kg.schema, fact)
        if mirror is not None and mirror not in seen:
            seen.add(mirror)
            closed.append(mirror)

    out: dict[tuple[str, str], set[str]] = {}
    for fact in closed:
        out.setdefault((fact.head, fact.relation), set()).add(fact.tail)
    for (head, rel_name), tails in out.items():
        cap = FUNCTIONAL_CAPS.get(rel_name)
        if cap is not None and len(tails) > cap:
            raise ConflictingFact(
                f"{head} would have {len(tails)} tails under {rel_name} (cap {cap})"
            )
        if not kg.schema[rel_name].is_person and len(tails) > 1:
            raise ConflictingFact(
                f"{head} would have {len(tails)} values for {rel_name}"
            )

    return KnowledgeGraph(
        kg.schema, kg.partition, kg.persons.values(), closed, seed=kg.seed
    )


def is_closed(kg: KnowledgeGraph) -> bool:
    """True when every fact's closure partner is already present."""
    for fact in kg.facts:
        mirror = _mirror(kg.schema, fact)
        if mirror is not None and not kg.has_fact(mirror):
            return False
    return True


# ---------------------------------------------------------------------------
# rendering and parsing


def statement_sentence(
    schema: RelationSchema,
    relation: str,
    head_display: str,
    tail_display: str,
    variant: int,
) -> str:
    template = schema[relation].statement_templates[variant]
    return template.format(e1=head_display, e2=tail_display)


def render_biography(
    kg: KnowledgeGraph,
    person_id: str,
    side: str,
    seed: int | None = None,
) -> BiographyDoc:
    """One-sentence-per-fact prose profile for a person on one side.

    Sentence order and template variants are drawn from a stream derived
    from the world seed (or an explicit override), so the same world always
    renders the same document.  Raises EmptyProfile when the person owns no
    facts on the requested side.
    """
    person = kg.persons.get(person_id)
    if person is None:
        raise EmptyProfile(f"unknown person {person_id!r}")
    cache_key = (person_id, side)
    if seed is None and cache_key in kg._bio_cache:
        return kg._bio_cache[cache_key]
    facts = [f for f in kg.facts_of(person_id) if kg.side_of_fact(f) == side]
    if not facts:
        raise EmptyProfile(f"{person_id} has no facts on side {side!r}")
    rng = rng_for("bio", kg.seed if seed is None else seed, person_id, side)
    order = list(facts)
    rng.shuffle(order)
    sentences = []
    for fact in order:
        templates = kg.schema[fact.relation].statement_templates
        variant = rng.randrange(len(templates))
        sentences.append(
            statement_sentence(
                kg.schema,
                fact.relation,
                person.name,
                kg.display(fact.tail, fact.relation),
                variant,
            )
        )
    doc = BiographyDoc(
        person_id=person_id,
        name=person.name,
        side=side,
        text=" ".join(sentences),
        facts=tuple(order),
    )
    if seed is None:
        kg._bio_cache[cache_key] = doc
    return doc


def split_sentences(text: str) -> list[str]:
    """Undo the space-join of one-sentence-per-fact documents.

    Values never contain the two-byte sequence ". ", so splitting there is
    exact for rendered biographies and reasoning chains.
    """
    parts = text.split(". ")
    out = []
    for i, part in enumerate(parts):
        if i < len(parts) - 1:
            out.append(part + ".")
        else:
            out.append(part)
    return [p for p in out if p]


def _statement_patterns(schema: RelationSchema):
    cached = getattr(schema, "_stmt_patterns", None)
    if cached is not None:
        return cached
    patterns = []
    for rel in schema:
        for idx, template in enumerate(rel.statement_templates):
            regex = re.escape(template)
            regex = regex.replace(re.escape("{e1}"), "(?P<e1>.+?)")
            regex = regex.replace(re.escape("{e2}"), "(?P<e2>.+?)")
            patterns.append((rel.name, idx, re.compile("^" + regex + "$")))
    schema._stmt_patterns = patterns  # type: ignore[attr-defined]
    return patterns


def parse_statement(schema: RelationSchema, sentence: str) -> list[tuple[str, str, str]]:
    """All (head_display, relation, tail_display) readings of one sentence."""
    found = []
    for rel_name, _idx, pattern in _statement_patterns(schema):
        m = pattern.match(sentence)
        if m:
            found.append((m.group("e1"), rel_name, m.group("e2")))
    return found


def parse_statement_canonical(
    schema: RelationSchema, sentence: str
) -> set[tuple[str, str, str]]:
    """Readings collapsed to closure-canonical form.

    A sentence like "A is the boss of B" legitimately parses as (B, boss, A)
    and as (A, boss_of, B); both collapse to the same canonical fact.  An
    unambiguous template set yields exactly one canonical reading per
    rendered sentence.
    """
    return {
        schema.canonical_fact(h, r, t) for (h, r, t) in parse_statement(schema, sentence)
    }
