"""Relation schema: typed relations, surface templates, and the source partition.

The biography world speaks a closed vocabulary of relations.  Each relation
knows

* the kind of entity allowed in tail position (person, date, place, ...),
* whether it is symmetric, or one half of an inverse pair,
* three statement templates (used to render facts as sentences),
* three question templates (used as the outermost frame of a question),
* for person-tailed relations, three noun-phrase templates used to nest
  multi-hop questions ("the employee of X", "X's sibling", ...).

The *source partition* assigns every relation to exactly one knowledge
side: ``mem`` relations are only ever expressed in the memorized corpus,
``ctx`` relations only in context documents supplied at question time.
Inverse partners and symmetric relations always land on the same side,
otherwise closure would leak facts across the boundary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import (
    DanglingInverse,
    DuplicateName,
    MalformedTemplate,
    UnknownRelation,
)
from .seeds import rng_for

MEM = "mem"
CTX = "ctx"
SIDES = (MEM, CTX)


class TailKind(str, Enum):
    PERSON = "Person"
    DATE = "Date"
    PLACE = "Place"
    EMAIL = "Email"
    PHONE = "Phone"
    TEXT = "Text"


def _check_template(template: str, slots: tuple[str, ...], context: str) -> None:
    """Each named slot must occur exactly once; no stray braces allowed."""
    rest = template
    for slot in slots:
        token = "{%s}" % slot
        if rest.count(token) != 1:
            raise MalformedTemplate(
                f"{context}: expected exactly one {token} in {template!r}"
            )
        rest = rest.replace(token, "")
    if "{" in rest or "}" in rest:
        raise MalformedTemplate(f"{context}: unexpected brace in {template!r}")


@dataclass(frozen=True)
class RelationDef:
    """One relation: name, tail type, algebraic role, and surface templates."""

    name: str
    tail_kind: TailKind
    statement_templates: tuple[str, ...]
    question_templates: tuple[str, ...]
    symmetric: bool = False
    inverse: str | None = None
    np_templates: tuple[str, ...] = ()

    def validate(self) -> None:
        if not self.statement_templates:
            raise MalformedTemplate(f"{self.name}: no statement templates")
        if not self.question_templates:
            raise MalformedTemplate(f"{self.name}: no question templates")
        for t in self.statement_templates:
            _check_template(t, ("e1", "e2"), f"{self.name} statement")
        for t in self.question_templates:
            _check_template(t, ("e1",), f"{self.name} question")
        for t in self.np_templates:
            _check_template(t, ("np",), f"{self.name} noun phrase")
        if self.symmetric and self.tail_kind is not TailKind.PERSON:
            raise MalformedTemplate(f"{self.name}: symmetric relations join persons")
        if self.symmetric and self.inverse is not None:
            raise MalformedTemplate(f"{self.name}: symmetric and inverse are exclusive")
        if self.tail_kind is TailKind.PERSON and not self.np_templates:
            raise MalformedTemplate(f"{self.name}: person-tailed needs noun phrases")

    @property
    def is_person(self) -> bool:
        return self.tail_kind is TailKind.PERSON


class RelationSchema:
    """An ordered, validated collection of relation definitions."""

    def __init__(self, relations: Iterable[RelationDef]):
        self._defs: dict[str, RelationDef] = {}
        for rel in relations:
            if rel.name in self._defs:
                raise DuplicateName(f"relation {rel.name!r} declared twice")
            rel.validate()
            self._defs[rel.name] = rel
        for rel in self._defs.values():
            if rel.inverse is None:
                continue
            partner = self._defs.get(rel.inverse)
            if partner is None:
                raise DanglingInverse(f"{rel.name}: inverse {rel.inverse!r} undefined")
            if partner.inverse != rel.name:
                raise DanglingInverse(
                    f"{rel.name} names inverse {rel.inverse!r}, "
                    f"but {partner.name} names {partner.inverse!r}"
                )
            if not (rel.is_person and partner.is_person):
                raise DanglingInverse(f"{rel.name}: inverse pairs must join persons")
            if partner.name == rel.name:
                raise DanglingInverse(f"{rel.name}: relation cannot invert itself")

    def __iter__(self) -> Iterator[RelationDef]:
        return iter(self._defs.values())

    def __len__(self) -> int:
        return len(self._defs)

    def __contains__(self, name: str) -> bool:
        return name in self._defs

    def __getitem__(self, name: str) -> RelationDef:
        try:
            return self._defs[name]
        except KeyError:
            raise UnknownRelation(f"unknown relation {name!r}") from None

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._defs)

    @property
    def person_relations(self) -> tuple[str, ...]:
        return tuple(r.name for r in self if r.is_person)

    @property
    def value_relations(self) -> tuple[str, ...]:
        return tuple(r.name for r in self if not r.is_person)

    def inverse_of(self, name: str) -> str | None:
        """Partner under closure: itself if symmetric, pair partner, or None."""
        rel = self[name]
        if rel.symmetric:
            return rel.name
        return rel.inverse

    def canonical_fact(
        self, head: str, relation: str, tail: str
    ) -> tuple[str, str, str]:
        """Collapse a fact to the canonical member of its closure family.

        Symmetric facts order their endpoints; inverse pairs are expressed
        through the lexicographically smaller relation name.  Two renderings
        describe the same knowledge iff their canonical facts are equal.
        """
        rel = self[relation]
        if rel.symmetric:
            a, b = sorted((head, tail))
            return (a, relation, b)
        if rel.inverse is not None and rel.inverse < relation:
            return (tail, rel.inverse, head)
        return (head, relation, tail)

    def to_dict(self) -> dict:
        out = []
        for rel in self:
            entry: dict = {
                "name": rel.name,
                "tail_kind": rel.tail_kind.value,
                "statement_templates": list(rel.statement_templates),
                "question_templates": list(rel.question_templates),
            }
            if rel.symmetric:
                entry["symmetric"] = True
            if rel.inverse:
                entry["inverse"] = rel.inverse
            if rel.np_templates:
                entry["np_templates"] = list(rel.np_templates)
            out.append(entry)
        return {"relations": out}


def load_schema(source: None | str | Path | Mapping = None) -> RelationSchema:
    """Build a schema from the default catalog, a mapping, or a JSON file."""
    if source is None:
        return RelationSchema(DEFAULT_RELATIONS)
    if isinstance(source, Mapping):
        data = source
    else:
        data = json.loads(Path(source).read_text(encoding="utf-8"))
    rels = []
    for entry in data["relations"]:
        rels.append(
            RelationDef(
                name=entry["name"],
                tail_kind=TailKind(entry["tail_kind"]),
                statement_templates=tuple(entry["statement_templates"]),
                question_templates=tuple(entry["question_templates"]),
                symmetric=bool(entry.get("symmetric", False)),
                inverse=entry.get("inverse"),
                np_templates=tuple(entry.get("np_templates", ())),
            )
        )
    return RelationSchema(rels)


# ---------------------------------------------------------------------------
# source partition


@dataclass(frozen=True)
class SourcePartition:
    """Disjoint assignment of every relation to the mem or ctx side."""

    mem: frozenset[str]
    ctx: frozenset[str]

    def __post_init__(self) -> None:
        overlap = self.mem & self.ctx
        if overlap:
            raise DuplicateName(f"relations on both sides: {sorted(overlap)}")

    def side_of(self, relation: str) -> str:
        if relation in self.mem:
            return MEM
        if relation in self.ctx:
            return CTX
        raise UnknownRelation(f"relation {relation!r} not in partition")

    def relations_on(self, side: str) -> frozenset[str]:
        if side == MEM:
            return self.mem
        if side == CTX:
            return self.ctx
        raise UnknownRelation(f"unknown side {side!r}")

    def to_dict(self) -> dict:
        return {"mem": sorted(self.mem), "ctx": sorted(self.ctx)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "SourcePartition":
        return cls(mem=frozenset(data["mem"]), ctx=frozenset(data["ctx"]))


def atomic_groups(schema: RelationSchema) -> list[tuple[str, ...]]:
    """Relations bound together by closure: inverse pairs move as one unit."""
    seen: set[str] = set()
    groups: list[tuple[str, ...]] = []
    for rel in schema:
        if rel.name in seen:
            continue
        if rel.inverse is not None:
            group = tuple(sorted((rel.name, rel.inverse)))
        else:
            group = (rel.name,)
        seen.update(group)
        groups.append(group)
    return sorted(groups)


def partition_relations(schema: RelationSchema, seed: int) -> SourcePartition:
    """Split the schema into two near-equal halves of atomic groups.

    Inverse partners never straddle the boundary.  The result depends only
    on the schema contents and the seed, not on declaration order.
    """
    groups = atomic_groups(schema)
    rng = rng_for("partition", seed)
    order = list(groups)
    rng.shuffle(order)
    half = (len(order) + 1) // 2
    mem = frozenset(name for group in order[:half] for name in group)
    ctx = frozenset(name for group in order[half:] for name in group)
    return SourcePartition(mem=mem, ctx=ctx)


# ---------------------------------------------------------------------------
# built-in relation catalog
#
# Statement template #1 and one question variant per relation follow the
# standard single-hop phrasing for that relation; the remaining variants
# supply surface diversity.  Question variant #1 is always of the form
# "... of {e1}?" so nested noun phrases compose into natural questions.

def _person(
    name: str,
    statements: tuple[str, str, str],
    questions: tuple[str, str, str],
    nps: tuple[str, str, str],
    *,
    symmetric: bool = False,
    inverse: str | None = None,
) -> RelationDef:
    return RelationDef(
        name=name,
        tail_kind=TailKind.PERSON,
        statement_templates=statements,
        question_templates=questions,
        np_templates=nps,
        symmetric=symmetric,
        inverse=inverse,
    )


def _value(
    name: str,
    kind: TailKind,
    statements: tuple[str, str, str],
    questions: tuple[str, str, str],
) -> RelationDef:
    return RelationDef(
        name=name,
        tail_kind=kind,
        statement_templates=statements,
        question_templates=questions,
    )


DEFAULT_RELATIONS: tuple[RelationDef, ...] = (
    _value(
        "address",
        TailKind.TEXT,
        (
            "{e1} resides at {e2}.",
            "{e1}'s home address is {e2}.",
            "The residence of {e1} is located at {e2}.",
        ),
        (
            "What is the address of {e1}?",
            "What is {e1}'s address?",
            "Can you tell me where {e1} resides?",
        ),
    ),
    _value(
        "awards",
        TailKind.TEXT,
        (
            "{e1} won the {e2} award.",
            "{e1} received the {e2} award.",
            "The {e2} award went to {e1}.",
        ),
        (
            "Which award did {e1} win?",
            "Can you name the award {e1} won?",
            "What awards has {e1} won?",
        ),
    ),
    _person(
        "best_friend",
        (
            "{e1}'s best friend is {e2}.",
            "{e2} is {e1}'s closest friend.",
            "{e1} and {e2} are best friends.",
        ),
        (
            "Who is the best friend of {e1}?",
            "Who is {e1}'s closest friend?",
            "Can you tell me the best friend of {e1}?",
        ),
        (
            "the best friend of {np}",
            "{np}'s best friend",
            "the closest friend of {np}",
        ),
        symmetric=True,
    ),
    _value(
        "birth_date",
        TailKind.DATE,
        (
            "{e1} was born on {e2}.",
            "{e1}'s date of birth is {e2}.",
            "The birth date of {e1} is {e2}.",
        ),
        (
            "When was {e1} born?",
            "Can you tell me the birth date of {e1}?",
            "What is the date of birth of {e1}?",
        ),
    ),
    _value(
        "birth_place",
        TailKind.PLACE,
        (
            "{e1} hails from {e2}.",
            "{e1} was born in {e2}.",
            "The birthplace of {e1} is {e2}.",
        ),
        (
            "Where was {e1} born?",
            "Can you tell me the birthplace of {e1}?",
            "Which place does {e1} hail from?",
        ),
    ),
    _person(
        "boss",
        (
            "{e1} works under {e2}.",
            "{e2} is the boss of {e1}.",
            "{e1} answers to {e2} at work.",
        ),
        (
            "Who is the boss of {e1}?",
            "Who is {e1}'s boss?",
            "Can you tell me who {e1} works under?",
        ),
        (
            "the boss of {np}",
            "{np}'s boss",
            "the person {np} works under",
        ),
        inverse="boss_of",
    ),
    _person(
        "boss_of",
        (
            "{e1} manages {e2}.",
            "{e1} is the boss of {e2}.",
            "{e2} works under {e1}.",
        ),
        (
            "Who is the employee of {e1}?",
            "Can you name someone managed by {e1}?",
            "Who works under {e1}?",
        ),
        (
            "the employee of {np}",
            "the person managed by {np}",
            "the person working under {np}",
        ),
        inverse="boss",
    ),
    _person(
        "child",
        (
            "{e2} is the child of {e1}.",
            "{e1} is the parent of {e2}.",
            "{e1} has a child named {e2}.",
        ),
        (
            "Who is the child of {e1}?",
            "Who is {e1}'s child?",
            "Can you name the child of {e1}?",
        ),
        (
            "the child of {np}",
            "{np}'s child",
            "the person raised by {np}",
        ),
        inverse="parent",
    ),
    _person(
        "classmate",
        (
            "{e1} studied alongside {e2}.",
            "{e1} was a classmate of {e2}.",
            "{e1} and {e2} attended classes together.",
        ),
        (
            "Who is the classmate of {e1}?",
            "Can you name someone who studied alongside {e1}?",
            "Who attended school with {e1}?",
        ),
        (
            "the classmate of {np}",
            "{np}'s classmate",
            "the person who studied alongside {np}",
        ),
        symmetric=True,
    ),
    _person(
        "colleague",
        (
            "{e1} works alongside {e2}.",
            "{e1} and {e2} are colleagues.",
            "{e1} shares a workplace with {e2}.",
        ),
        (
            "Who is the colleague of {e1}?",
            "Who are {e1}'s colleagues?",
            "Can you name a colleague of {e1}?",
        ),
        (
            "the colleague of {np}",
            "{np}'s colleague",
            "the person working alongside {np}",
        ),
        symmetric=True,
    ),
    _value(
        "died_in",
        TailKind.PLACE,
        (
            "{e1} passed away in {e2}.",
            "{e1}'s place of death was {e2}.",
            "{e1} spent their final days in {e2}.",
        ),
        (
            "Where did {e1} die?",
            "What was {e1}'s place of death?",
            "In which city did {e1} pass away?",
        ),
    ),
    _value(
        "died_on",
        TailKind.DATE,
        (
            "{e1} died on {e2}.",
            "{e1} passed away on {e2}.",
            "The date of {e1}'s death was {e2}.",
        ),
        (
            "When did {e1} pass away?",
            "Can you tell me the date {e1} died?",
            "On what date did {e1} die?",
        ),
    ),
    _value(
        "email",
        TailKind.EMAIL,
        (
            "You can reach {e1} at {e2}.",
            "The contact email for {e1} is {e2}.",
            "{e1}'s email address is {e2}.",
        ),
        (
            "What is the email address of {e1}?",
            "What is {e1}'s email address?",
            "Can you tell me how to reach {e1} by email?",
        ),
    ),
    _value(
        "favorite_food",
        TailKind.TEXT,
        (
            "{e1}'s favorite dish was {e2}.",
            "{e1} loved eating {e2}.",
            "{e1} enjoyed {e2} more than any other food.",
        ),
        (
            "What food does {e1} enjoy the most?",
            "What was {e1}'s favorite dish?",
            "Which dish did {e1} love eating?",
        ),
    ),
    _value(
        "first_language",
        TailKind.TEXT,
        (
            "{e1}'s native language was {e2}.",
            "{e1} spoke {e2} as their first language.",
            "{e1} grew up speaking {e2}.",
        ),
        (
            "What is the first language of {e1}?",
            "What is {e1}'s first language?",
            "Can you tell me the native language of {e1}?",
        ),
    ),
    _value(
        "hobby",
        TailKind.TEXT,
        (
            "A favorite activity of {e1} is {e2}.",
            "{e1} enjoys {e2} in their spare time.",
            "{e1} often spends free time on {e2}.",
        ),
        (
            "What does {e1} enjoy doing?",
            "Can you name a hobby of {e1}?",
            "What activity does {e1} favor?",
        ),
    ),
    _person(
        "influence",
        (
            "{e1} shaped the career of {e2}.",
            "{e2} was inspired by {e1}.",
            "{e1} had a strong influence on {e2}.",
        ),
        (
            "Who was influenced by {e1}?",
            "Can you name someone whose career {e1} shaped?",
            "Whose career did {e1} shape?",
        ),
        (
            "the person influenced by {np}",
            "the person whose career was shaped by {np}",
            "the person inspired by {np}",
        ),
        inverse="influenced_by",
    ),
    _person(
        "influenced_by",
        (
            "{e1} looked up to {e2}.",
            "{e1} was inspired by {e2}.",
            "{e2} shaped the career of {e1}.",
        ),
        (
            "Who inspired {e1}?",
            "Can you tell me who {e1} looked up to?",
            "Who did {e1} look up to?",
        ),
        (
            "the person who inspired {np}",
            "the person admired by {np}",
            "the role model of {np}",
        ),
        inverse="influence",
    ),
    _value(
        "known_for",
        TailKind.TEXT,
        (
            "{e1} gained recognition for {e2}.",
            "{e1} was famous for {e2}.",
            "{e1} is best known for {e2}.",
        ),
        (
            "What is {e1} famous for?",
            "Can you tell me what made {e1} famous?",
            "What did {e1} gain recognition for?",
        ),
    ),
    _value(
        "leader_of",
        TailKind.TEXT,
        (
            "{e1} was the leader of {e2}.",
            "{e1} headed {e2}.",
            "{e1} led the group known as {e2}.",
        ),
        (
            "Which group was {e1} in charge of?",
            "Can you name the group {e1} led?",
            "What group did {e1} lead?",
        ),
    ),
    _value(
        "lived_in",
        TailKind.PLACE,
        (
            "{e1} resided in {e2}.",
            "{e1} made a home in {e2}.",
            "For many years {e1} lived in {e2}.",
        ),
        (
            "Where has {e1} lived?",
            "Can you tell me where {e1} resided?",
            "In which place did {e1} reside?",
        ),
    ),
    _value(
        "major",
        TailKind.TEXT,
        (
            "{e1} majored in {e2}.",
            "{e1} specialized in {e2} at university.",
            "{e1}'s field of study was {e2}.",
        ),
        (
            "What did {e1} specialize in?",
            "Can you tell me the major of {e1}?",
            "What subject did {e1} major in?",
        ),
    ),
    _person(
        "mentored_by",
        (
            "{e1} received guidance from {e2}.",
            "{e1} was trained by {e2}.",
            "{e2} mentors {e1}.",
        ),
        (
            "Who is the mentor of {e1}?",
            "Can you tell me who mentored {e1}?",
            "Who mentored {e1}?",
        ),
        (
            "the person mentoring {np}",
            "the person who mentored {np}",
            "the mentor of {np}",
        ),
        inverse="mentoring",
    ),
    _person(
        "mentoring",
        (
            "{e2} is a student of {e1}.",
            "{e1} mentors {e2}.",
            "{e1} serves as a mentor to {e2}.",
        ),
        (
            "Who is the student of {e1}?",
            "Can you name someone mentored by {e1}?",
            "Who does {e1} mentor?",
        ),
        (
            "the student of {np}",
            "the person mentored by {np}",
            "the person {np} mentors",
        ),
        inverse="mentored_by",
    ),
    _value(
        "nationality",
        TailKind.TEXT,
        (
            "{e1} is a citizen of {e2}.",
            "{e1} holds citizenship in {e2}.",
            "{e1}'s nationality is {e2}.",
        ),
        (
            "What is the nationality of {e1}?",
            "What is {e1}'s nationality?",
            "Can you tell me which country {e1} is a citizen of?",
        ),
    ),
    _person(
        "neighbor",
        (
            "{e1} lives next to {e2}.",
            "{e1} and {e2} are neighbors.",
            "{e2} lives next door to {e1}.",
        ),
        (
            "Who is the neighbor of {e1}?",
            "Can you tell me who lives next to {e1}?",
            "Who resides beside {e1}?",
        ),
        (
            "the neighbor of {np}",
            "{np}'s neighbor",
            "the person living next to {np}",
        ),
        symmetric=True,
    ),
    _value(
        "occupation",
        TailKind.TEXT,
        (
            "{e1} is employed as {e2}.",
            "{e1} works as a {e2}.",
            "{e1}'s profession is {e2}.",
        ),
        (
            "What does {e1} do for a living?",
            "What is {e1}'s profession?",
            "Can you tell me the occupation of {e1}?",
        ),
    ),
    _person(
        "parent",
        (
            "{e1}'s parent is {e2}.",
            "{e2} is a parent of {e1}.",
            "The parent of {e1} is {e2}.",
        ),
        (
            "Who is the parent of {e1}?",
            "Who is {e1}'s parent?",
            "Can you tell me who raised {e1}?",
        ),
        (
            "the parent of {np}",
            "{np}'s parent",
            "the person who raised {np}",
        ),
        inverse="child",
    ),
    _value(
        "pet",
        TailKind.TEXT,
        (
            "{e1} owns a pet called {e2}.",
            "{e1} has a pet named {e2}.",
            "{e1}'s pet is called {e2}.",
        ),
        (
            "What is the name of {e1}'s pet?",
            "What is {e1}'s pet called?",
            "Can you tell me the pet name of {e1}?",
        ),
    ),
    _value(
        "philanthropy",
        TailKind.TEXT,
        (
            "{e1} donated to {e2}.",
            "{e1} supported the cause of {e2}.",
            "{e1} gave generously to {e2}.",
        ),
        (
            "Which causes did {e1} support?",
            "Can you name the cause {e1} donated to?",
            "What cause did {e1} give to?",
        ),
    ),
    _value(
        "phone",
        TailKind.PHONE,
        (
            "{e1} can be reached at {e2}.",
            "{e1}'s phone number is {e2}.",
            "The phone number for {e1} is {e2}.",
        ),
        (
            "What is the phone number of {e1}?",
            "What is {e1}'s phone number?",
            "Can you share the phone number of {e1}?",
        ),
    ),
    _person(
        "rival",
        (
            "{e1} had a rivalry with {e2}.",
            "{e1} and {e2} are rivals.",
            "{e2} is the rival of {e1}.",
        ),
        (
            "Who is the rival of {e1}?",
            "Can you name the rival of {e1}?",
            "Who did {e1} compete with?",
        ),
        (
            "the rival of {np}",
            "{np}'s rival",
            "the person who competed with {np}",
        ),
        symmetric=True,
    ),
    _person(
        "roommate",
        (
            "{e1} shared a room with {e2}.",
            "{e1} and {e2} are roommates.",
            "{e2} is the roommate of {e1}.",
        ),
        (
            "Who is the roommate of {e1}?",
            "Can you tell me who shared a room with {e1}?",
            "Who lived with {e1}?",
        ),
        (
            "the roommate of {np}",
            "{np}'s roommate",
            "the person who shared a room with {np}",
        ),
        symmetric=True,
    ),
    _value(
        "service",
        TailKind.TEXT,
        (
            "{e1} was a member of {e2}.",
            "{e1} served in {e2}.",
            "{e1} volunteered with {e2}.",
        ),
        (
            "Which organization did {e1} serve in?",
            "Can you name the organization {e1} belonged to?",
            "What organization was {e1} a member of?",
        ),
    ),
    _person(
        "sibling",
        (
            "{e1} and {e2} are siblings.",
            "{e2} is a sibling of {e1}.",
            "{e1} has a sibling named {e2}.",
        ),
        (
            "Who is the sibling of {e1}?",
            "Who are {e1}'s siblings?",
            "Can you name a sibling of {e1}?",
        ),
        (
            "the sibling of {np}",
            "{np}'s sibling",
            "the sibling that {np} has",
        ),
        symmetric=True,
    ),
    _person(
        "spouse",
        (
            "{e1} is married to {e2}.",
            "{e1} and {e2} are married to each other.",
            "{e1}'s spouse is {e2}.",
        ),
        (
            "Who is the spouse of {e1}?",
            "Who is {e1}'s spouse?",
            "Can you tell me who {e1} is married to?",
        ),
        (
            "the spouse of {np}",
            "{np}'s spouse",
            "the person married to {np}",
        ),
        symmetric=True,
    ),
    _value(
        "university",
        TailKind.TEXT,
        (
            "{e1} went to {e2}.",
            "{e1} studied at {e2}.",
            "{e1} graduated from {e2}.",
        ),
        (
            "Which university did {e1} attend?",
            "Can you tell me where {e1} went to university?",
            "What university did {e1} graduate from?",
        ),
    ),
    _value(
        "worked_at",
        TailKind.TEXT,
        (
            "{e1} held a position at {e2}.",
            "{e1} was employed at {e2}.",
            "{e1} spent part of their career at {e2}.",
        ),
        (
            "Where did {e1} work?",
            "Can you name the company {e1} worked at?",
            "At which company did {e1} work?",
        ),
    ),
    _value(
        "wrote",
        TailKind.TEXT,
        (
            "{e1} authored the book {e2}.",
            "{e1} penned {e2}.",
            "{e1} is the author of {e2}.",
        ),
        (
            "Which book did {e1} write?",
            "Can you name the book {e1} authored?",
            "What book did {e1} pen?",
        ),
    ),
)
