import pytest

from flopcycles.classifier import (
    ANALYTIC,
    D_AT_MOST_3,
    RULES,
    THEOREM_TABLE,
    ClassificationReport,
    InferenceRule,
    classify,
    verify_all,
    verify_proof_facts,
    verify_uniqueness,
)
from flopcycles.dynkin import ADEType
from flopcycles.flop_model import mark, partial_resolution

EXPECTED = ["A1", "D4", "E6", "E7", "E8", "E8"]


@pytest.fixture(scope="module")
def reports():
    return {length: classify(length, 12) for length in range(1, 7)}


def test_theorem_table(reports):
    assert [str(reports[length].survivor.type) for length in range(1, 7)] == EXPECTED
    assert all(r.passed for r in reports.values())


def test_survivor_vertices(reports):
    assert [reports[length].survivor.k0 for length in range(1, 7)] == [1, 2, 3, 3, 4, 3]


@pytest.mark.parametrize("length", range(1, 7))
def test_every_candidate_accounted_for(reports, length):
    r = reports[length]
    eliminated = [e.candidate for e in r.eliminations]
    assert sorted(map(str, eliminated + list(r.survivors))) == sorted(map(str, r.candidates))
    assert len(set(map(str, eliminated))) == len(eliminated)


def test_length_2_names_non_a1_component(reports):
    for e in reports[2].eliminations:
        last = e.rules[-1]
        comp = partial_resolution(e.candidate).components[last.component]
        assert comp.type != ADEType("A", 1)
        assert str(comp.type) in last.detail


def test_length_6_single_candidate(reports):
    assert len(reports[6].candidates) == 1
    assert reports[6].eliminations == ()


def test_length_3_and_4_use_axioms_with_quotes(reports):
    for length in (3, 4):
        assert reports[length].eliminations
        for e in reports[length].eliminations:
            assert any(u.rule.kind == ANALYTIC for u in e.rules)
            assert all(p.passed for p in e.premises)
            for u in e.rules:
                assert u.rule.quote


def test_low_lengths_use_only_the_d_rule(reports):
    for length in (1, 2, 5, 6):
        assert all(u.rule is D_AT_MOST_3 for u in reports[length].analytic_uses())


def test_every_rule_has_a_quote():
    assert all(r.quote for r in RULES)
    assert len({r.name for r in RULES}) == len(RULES)
    with pytest.raises(ValueError):
        InferenceRule("x", ANALYTIC, "no quote", "")
    with pytest.raises(ValueError):
        InferenceRule("x", "guess", "bad kind", "q")


@pytest.mark.parametrize("length", [1, 2])
def test_stable_in_rank(length):
    small, big = classify(length, 8), classify(length, 20)
    assert str(small.survivor) == str(big.survivor)
    verdicts_small = {str(e.candidate): e.rules[-1].rule.name for e in small.eliminations}
    verdicts_big = {str(e.candidate): e.rules[-1].rule.name for e in big.eliminations}
    assert all(verdicts_big[k] == v for k, v in verdicts_small.items())
    assert len(big.eliminations) > len(small.eliminations)


@pytest.mark.parametrize("length", range(3, 7))
def test_high_lengths_rank_independent(length):
    assert str(classify(length, 8).survivor) == str(classify(length, 20).survivor)


def test_uniqueness_examples(reports):
    assert verify_uniqueness(reports[2])
    assert verify_uniqueness(reports[4])
    e7 = mark(ADEType("E", 7), 2)
    fake = ClassificationReport(3, 12, (e7,), (), (e7,), ())
    assert not verify_uniqueness(fake)


def test_multiple_survivors_fail():
    e6, e7 = mark(ADEType("E", 6), 3), mark(ADEType("E", 7), 2)
    r = ClassificationReport(3, 12, (e6, e7), (), (e6, e7), ())
    assert r.survivor is None and not r.passed


def test_classify_rejects_bad_input():
    with pytest.raises(ValueError):
        classify(7)
    with pytest.raises(ValueError):
        classify(0)
    with pytest.raises(ValueError):
        classify(3, max_rank=6)


def test_theorem_table_constant():
    assert [str(THEOREM_TABLE[length]) for length in range(1, 7)] == EXPECTED


@pytest.mark.parametrize("max_rank", [8, 12])
def test_proof_facts_pass(max_rank):
    facts = verify_proof_facts(max_rank)
    assert [f.name for f in facts if not f.passed] == []
    names = " | ".join(f.name for f in facts)
    for needle in ["{A1,A5}", "{A1,E6}", "{D5,A2}", "d_2 = 3", "{3,2}", "{2,2}", "every d_i <= 3"]:
        assert needle in names


def test_verify_all_without_oracles():
    facts = verify_all(8, oracles=False)
    assert all(f.passed for f in facts)
    assert sum("survivor" in f.name for f in facts) == 6
