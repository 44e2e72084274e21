"""Instance construction: walks, questions, chains of thought, contexts."""

import pytest

from compqa import (
    ANSWER_MARKER,
    GeneralizationLevel,
    REASONING_TYPES,
    ReasoningType,
    compose_question,
    instantiate_path,
    make_instance,
    make_path,
    render_cot,
    render_question,
)
from compqa.errors import InvalidType, MissingTemplate, NoRealization
from compqa.qa import EntityPool, QAInstance, split_entity_pools
from compqa.world import parse_statement_canonical, split_sentences


def _some_path(pool, rtype, length=3):
    for path in pool[rtype]:
        if len(path) == length:
            return path
    raise AssertionError(f"no {length}-hop {rtype} path in pool")


# --- questions ----------------------------------------------------------------


def test_nested_question_wording(partition, schema):
    path = make_path(partition, ("sibling", "boss_of", "mentored_by", "best_friend"))
    question = compose_question(schema, path, "Karen Clark", 0)
    assert question == (
        "Who is the best friend of the person mentoring "
        "the employee of the sibling of Karen Clark?"
    )


def test_possessive_variant_chains_genitives(partition, schema):
    path = make_path(partition, ("sibling", "boss"))
    assert (
        compose_question(schema, path, "Karen Clark", 1)
        == "Who is Karen Clark's sibling's boss?"
    )


def test_verb_final_phrase_is_never_wrapped_possessively(partition, schema):
    path = make_path(partition, ("sibling", "boss"))
    question = compose_question(schema, path, "Karen Clark", 2)
    assert question == (
        "Can you tell me who the sibling that Karen Clark has works under?"
    )
    assert "has's" not in question


def test_question_variant_is_seed_stable(schema, pool):
    path = _some_path(pool, ReasoningType.MEM)
    a = render_question(schema, path, "Alice Fox", 42)
    b = render_question(schema, path, "Alice Fox", 42)
    assert a == b
    variants = {compose_question(schema, path, "Alice Fox", v) for v in range(3)}
    assert a in variants


def test_composing_past_available_variants_fails(partition, schema):
    path = make_path(partition, ("sibling", "boss"))
    with pytest.raises(MissingTemplate):
        compose_question(schema, path, "Alice Fox", 7)


# --- walks --------------------------------------------------------------------


def test_chain_matches_its_path(kg, pool):
    path = _some_path(pool, ReasoningType.COMP, 4)
    chain = instantiate_path(kg, path, 3)
    assert chain.path is path
    assert len(chain.displays) == len(path) + 1
    # every hop is a real graph fact
    for fact in chain.facts:
        assert kg.has_fact(fact)


def test_walks_are_acyclic_in_persons(kg, pool):
    for rtype in REASONING_TYPES:
        path = _some_path(pool, rtype, 4)
        chain = instantiate_path(kg, path, 9)
        persons = chain.entities[:-1]
        assert len(set(persons)) == len(persons)


def test_walks_are_deterministic(kg, pool):
    path = _some_path(pool, ReasoningType.MEM)
    a = instantiate_path(kg, path, 5)
    b = instantiate_path(kg, path, 5)
    assert a.displays == b.displays


def test_walk_respects_entity_pool(kg, pool):
    train_pool, test_pool = split_entity_pools(kg, 0)
    path = _some_path(pool, ReasoningType.COMP)
    chain = instantiate_path(kg, path, 8, test_pool)
    for pid in chain.persons():
        assert pid in test_pool


def test_walk_fails_cleanly_on_starved_pool(kg, pool):
    tiny = EntityPool("tiny", frozenset(list(kg.persons)[:1]))
    path = _some_path(pool, ReasoningType.COMP, 5)
    with pytest.raises(NoRealization):
        instantiate_path(kg, path, 0, tiny)


# --- chains of thought ----------------------------------------------------------


def test_cot_shape(kg, schema, pool):
    path = _some_path(pool, ReasoningType.CTX, 3)
    chain = instantiate_path(kg, path, 2)
    cot, answer = render_cot(schema, chain, 2)
    assert cot.endswith(f"{ANSWER_MARKER} {answer}")
    assert not cot.endswith(".")
    body = cot[: cot.rindex(ANSWER_MARKER)].strip()
    assert len(split_sentences(body)) == len(path)
    assert answer == chain.displays[-1]


def test_cot_sentences_state_the_hop_facts(kg, schema, pool):
    path = _some_path(pool, ReasoningType.MEM, 3)
    chain = instantiate_path(kg, path, 4)
    cot, _ = render_cot(schema, chain, 4)
    body = cot[: cot.rindex(ANSWER_MARKER)].strip()
    for i, sentence in enumerate(split_sentences(body)):
        readings = parse_statement_canonical(schema, sentence)
        want = schema.canonical_fact(
            chain.displays[i], path.relations[i], chain.displays[i + 1]
        )
        assert want in readings


def test_cot_is_deterministic(kg, schema, pool):
    path = _some_path(pool, ReasoningType.MEM)
    chain = instantiate_path(kg, path, 4)
    assert render_cot(schema, chain, 11) == render_cot(schema, chain, 11)


# --- contexts -------------------------------------------------------------------


def test_mem_takes_no_context(kg, pool):
    path = _some_path(pool, ReasoningType.MEM)
    chain = instantiate_path(kg, path, 1)
    from compqa import assemble_context

    with pytest.raises(InvalidType):
        assemble_context(kg, chain, ReasoningType.MEM)


def test_context_states_every_ctx_hop_fact(kg, schema, partition, bundle):
    checked = 0
    for inst in bundle.test[ReasoningType.COMP][GeneralizationLevel.IID][:20]:
        corpus_facts = set()
        for doc in inst.contexts:
            for sentence in split_sentences(doc):
                corpus_facts |= parse_statement_canonical(schema, sentence)
        for i, rel in enumerate(inst.path.relations):
            if inst.path.hop_sources[i] == "ctx":
                want = schema.canonical_fact(
                    inst.gold_chain[i], rel, inst.gold_chain[i + 1]
                )
                assert want in corpus_facts
                checked += 1
    assert checked > 0


def test_context_contains_no_mem_side_statements(kg, schema, partition, bundle):
    """No context sentence may state a fact that actually lives on the
    memorized side.  Surface readings that happen to match a mem template
    but name no real fact (one template's literal text absorbed into
    another's slot) do not count."""
    name_to_id = {p.name: pid for pid, p in kg.persons.items()}
    for inst in bundle.test[ReasoningType.CTX][GeneralizationLevel.COMPOSITION][:20]:
        for doc in inst.contexts:
            for sentence in split_sentences(doc):
                readings = parse_statement_canonical(schema, sentence)
                assert any(rel in partition.ctx for _, rel, _ in readings)
                for head, rel, tail in readings:
                    if rel not in partition.mem:
                        continue
                    pid = name_to_id.get(head)
                    if pid is None:
                        continue  # head is not a person: artifact reading
                    stated = any(
                        f.relation == rel
                        and f.head == pid
                        and kg.display(f.tail, rel) == tail
                        for f in kg.facts_of(pid)
                    )
                    assert not stated, (sentence, rel)


def test_distractors_pad_the_context(kg, pool):
    from compqa import assemble_context

    path = _some_path(pool, ReasoningType.CTX, 2)
    chain = instantiate_path(kg, path, 6)
    ctx_owners = {
        f.head
        for f, side in zip(chain.facts, path.hop_sources)
        if side == "ctx"
    }
    docs = assemble_context(kg, chain, ReasoningType.CTX, 3, 6)
    assert len(docs) == len(ctx_owners) + 3
    assert assemble_context(kg, chain, ReasoningType.CTX, 3, 6) == docs


# --- instances and datasets ------------------------------------------------------


def test_instance_input_layouts(bundle):
    mem = bundle.train[ReasoningType.MEM][0]
    assert mem.contexts == ()
    assert mem.model_input == mem.question
    comp = bundle.train[ReasoningType.COMP][0]
    assert comp.contexts
    assert comp.model_input == "\n\n".join([*comp.contexts, comp.question])
    assert comp.model_input.endswith(comp.question)


def test_instance_records_round_trip(bundle):
    inst = bundle.train[ReasoningType.COMP][0]
    rec = inst.to_record()
    assert set(rec) == {
        "id", "type", "level", "path", "question", "contexts",
        "gold_chain", "cot_answer", "final_answer", "model_input",
    }
    again = QAInstance.from_record(rec)
    assert again.to_record() == rec


def test_dataset_hits_desk_targets(bundle):
    assert bundle.counts["train"] == {"mem": 1000, "ctx": 1000, "comp": 1400}
    for rtype in REASONING_TYPES:
        assert bundle.counts["test"][rtype.value] == {
            "iid": 160, "composition": 120, "zero_shot": 80,
        }
    assert bundle.counts["mem_corpus"] == 200


def test_instance_ids_are_unique(bundle):
    ids = [inst.id for inst in bundle.all_instances()]
    assert len(set(ids)) == len(ids)


def test_test_cells_never_repeat_a_chain(bundle):
    for rtype in REASONING_TYPES:
        for level, insts in bundle.test[rtype].items():
            keys = {(inst.path.relations, inst.gold_chain) for inst in insts}
            assert len(keys) == len(insts), (rtype, level)


def test_train_cells_prefer_fresh_chains(bundle):
    # Training may reuse a hop chain once five draws in a row collide, so
    # repeats exist but fresh chains dominate.
    for rtype in REASONING_TYPES:
        insts = bundle.train[rtype]
        keys = {(inst.path.relations, inst.gold_chain) for inst in insts}
        assert len(keys) > len(insts) // 2


def test_levels_recorded_per_group(bundle):
    for rtype in REASONING_TYPES:
        for level, insts in bundle.test[rtype].items():
            assert insts, (rtype, level)
            assert all(inst.level is level for inst in insts)
        train_levels = {inst.level for inst in bundle.train[rtype]}
        assert train_levels <= {
            GeneralizationLevel.IID, GeneralizationLevel.COMPOSITION
        }


def test_entity_pools_split_the_world(kg):
    train_pool, test_pool = split_entity_pools(kg, 4)
    assert not set(train_pool.members) & set(test_pool.members)
    assert set(train_pool.members) | set(test_pool.members) == set(kg.persons)
    again = split_entity_pools(kg, 4)
    assert again[0].members == train_pool.members


def test_make_instance_is_deterministic(kg, pool):
    path = _some_path(pool, ReasoningType.COMP)
    a = make_instance(kg, path, "x-1", GeneralizationLevel.IID, 13)
    b = make_instance(kg, path, "x-1", GeneralizationLevel.IID, 13)
    assert a.to_record() == b.to_record()
