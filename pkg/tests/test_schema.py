"""Relation catalog: structure, templates, and the source partition."""

import random

import pytest

from compqa import atomic_groups, load_schema, partition_relations
from compqa.errors import (
    DanglingInverse,
    DuplicateName,
    MalformedTemplate,
    UnknownRelation,
)

FROZEN_SEED0_MEM = [
    "awards", "best_friend", "birth_date", "birth_place", "boss", "boss_of",
    "colleague", "died_in", "died_on", "email", "first_language", "neighbor",
    "occupation", "phone", "rival", "service", "sibling", "university",
    "worked_at",
]


def test_default_catalog_shape(schema):
    assert len(schema.names) == 39
    assert sum(1 for r in schema if r.symmetric) == 8
    person = [r for r in schema if r.is_person]
    value = [r for r in schema if not r.is_person]
    assert (len(person), len(value)) == (16, 23)


def test_inverse_pairing_is_an_involution(schema):
    paired = [r for r in schema if r.inverse]
    assert len(paired) == 8  # four pairs
    for rel in paired:
        partner = schema[rel.inverse]
        assert partner.inverse == rel.name
        assert rel.is_person and partner.is_person
    names = {tuple(sorted((r.name, r.inverse))) for r in paired}
    assert names == {
        ("boss", "boss_of"),
        ("child", "parent"),
        ("influence", "influenced_by"),
        ("mentored_by", "mentoring"),
    }


def test_inverse_of_lookup(schema):
    assert schema.inverse_of("child") == "parent"
    assert schema.inverse_of("spouse") == "spouse"  # symmetric maps to itself
    assert schema.inverse_of("birth_date") is None
    with pytest.raises(UnknownRelation):
        schema.inverse_of("owns_a_yacht")


def test_symmetric_relations_are_person_tailed(schema):
    for rel in schema:
        if rel.symmetric:
            assert rel.is_person


def test_statement_templates_name_both_entities(schema):
    for rel in schema:
        assert len(rel.statement_templates) >= 1
        for tmpl in rel.statement_templates:
            assert tmpl.count("{e1}") == 1 and tmpl.count("{e2}") == 1
        for tmpl in rel.question_templates:
            assert tmpl.count("{e1}") == 1 and "{e2}" not in tmpl


def test_known_template_wordings(schema):
    assert schema["address"].statement_templates[0] == "{e1} resides at {e2}."
    assert schema["child"].statement_templates[0] == "{e2} is the child of {e1}."
    assert schema["spouse"].statement_templates[0] == "{e1} is married to {e2}."
    assert "What is the address of {e1}?" in schema["address"].question_templates


def test_question_variants_are_distinct(schema):
    for rel in schema:
        assert len(set(rel.question_templates)) == len(rel.question_templates) == 3


def test_person_relations_carry_three_noun_phrases(schema):
    for rel in schema:
        if rel.is_person:
            assert len(rel.np_templates) == 3
            for tmpl in rel.np_templates:
                assert tmpl.count("{np}") == 1
        else:
            assert rel.np_templates == ()


def test_possessive_wrappers_never_meet_open_phrases(schema):
    """A noun phrase that ends in a verb (e.g. "the person X works under")
    cannot host a trailing possessive.  Within each variant column, such
    open-ended phrases and possessive wrappers must not coexist, otherwise
    nested questions degenerate into "...works under's name"."""
    person = [r for r in schema if r.is_person]
    for v in range(3):
        open_ended = [
            r.name
            for r in person
            if not r.np_templates[v].endswith("{np}")
            and "{np}'s" not in r.np_templates[v]
        ]
        wrappers = [r.name for r in schema if "{e1}'s" in r.question_templates[v]]
        wrappers += [r.name for r in person if "{np}'s" in r.np_templates[v]]
        assert not (open_ended and wrappers), (
            f"variant {v}: open-ended {open_ended} vs possessive {wrappers}"
        )


def test_load_rejects_missing_slot():
    with pytest.raises(MalformedTemplate):
        load_schema(
            {
                "relations": [
                    {
                        "name": "pet",
                        "tail_kind": "Text",
                        "statement_templates": ["{e1} has a pet."],
                        "question_templates": ["What pet does {e1} have?"],
                    }
                ]
            }
        )


def test_load_rejects_dangling_inverse():
    with pytest.raises(DanglingInverse):
        load_schema(
            {
                "relations": [
                    {
                        "name": "child",
                        "tail_kind": "Person",
                        "inverse": "parent",
                        "statement_templates": ["{e2} is the child of {e1}."],
                        "question_templates": ["Who is the child of {e1}?"],
                        "np_templates": ["the child of {np}"] * 3,
                    }
                ]
            }
        )


def test_load_rejects_duplicate_names(schema):
    entries = schema.to_dict()["relations"]
    with pytest.raises(DuplicateName):
        load_schema({"relations": entries + [entries[0]]})


def test_catalog_round_trips_through_config(schema):
    again = load_schema(schema.to_dict())
    assert again.to_dict() == schema.to_dict()


def test_partition_covers_catalog_disjointly(schema):
    part = partition_relations(schema, 123)
    assert part.mem | part.ctx == set(schema.names)
    assert not part.mem & part.ctx


def test_partition_keeps_inverse_pairs_together(schema):
    for seed in range(10):
        part = partition_relations(schema, seed)
        for rel in schema:
            if rel.inverse:
                assert part.side_of(rel.name) == part.side_of(rel.inverse)


def test_partition_is_deterministic(schema):
    a = partition_relations(schema, 7)
    b = partition_relations(schema, 7)
    assert a.mem == b.mem and a.ctx == b.ctx


def test_partition_varies_with_seed(schema):
    sides = {frozenset(partition_relations(schema, s).mem) for s in range(8)}
    assert len(sides) > 1


def test_partition_frozen_for_seed_zero(schema):
    part = partition_relations(schema, 0)
    assert sorted(part.mem) == FROZEN_SEED0_MEM


def test_partition_ignores_declaration_order(schema):
    entries = schema.to_dict()["relations"]
    rng = random.Random(99)
    for _ in range(3):
        shuffled = entries[:]
        rng.shuffle(shuffled)
        reordered = load_schema({"relations": shuffled})
        a = partition_relations(schema, 42)
        b = partition_relations(reordered, 42)
        assert (a.mem, a.ctx) == (b.mem, b.ctx)


def test_atomic_groups_merge_inverse_pairs(schema):
    groups = atomic_groups(schema)
    flat = [name for group in groups for name in group]
    assert sorted(flat) == sorted(schema.names)
    by_name = {name: group for group in groups for name in group}
    assert set(by_name["child"]) == {"child", "parent"}
    assert by_name["spouse"] == ("spouse",)
