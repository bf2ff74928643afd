import random

import pytest

from posetdiaries import posets as P
from posetdiaries import words as W
from posetdiaries.diaries import (AmbiguousLevel, DiaryError, EventError, InvalidLevel, Leaf, NewPerp,
                                  NewPrec, Split, apply_event, big_ramsey_degree, check_level_axioms,
                                  classify_transition, closure_levels, codes, color_embedding,
                                  count_diaries, count_unlabeled_by_size, enumerate_diaries,
                                  enumerate_labeled_diaries, event_log_json, find_labeled_diary,
                                  format_diary, parse_diary, random_labeled_diary, sum_over_size,
                                  validate_diary)
from oracles import naive_diaries


def test_classify_examples():
    assert classify_transition([""], ["X", "R"]) == Split("")
    assert classify_transition(["X", "R"], ["XR", "RX"]) == NewPerp("X", "R")
    assert classify_transition(["X", "R"], ["XL", "RR"]) == NewPrec("X", "R")
    with pytest.raises(InvalidLevel) as err:
        classify_transition(["X", "R"], ["XX", "RR"], level=1)
    assert err.value.level == 1


def test_apply_event_examples():
    assert apply_event(["X", "R"], NewPerp("X", "R")) == ["XR", "RX"]
    assert apply_event(["XR", "RX"], Leaf("XR")) == ["RXX"]
    with pytest.raises(EventError):
        apply_event(["X", "R"], NewPrec("R", "X"))


def test_validate_examples():
    log = validate_diary({"XR", "RXX"})
    assert [x.event for x in log] == [Split(""), NewPerp("X", "R"), Leaf("XR")]
    assert validate_diary({""}) == []
    with pytest.raises(DiaryError):
        validate_diary({"XR", "RX"})
    with pytest.raises(DiaryError):
        validate_diary({"X", "XR"})
    with pytest.raises(DiaryError):
        validate_diary(set())


def test_event_log_json():
    text = event_log_json(validate_diary({"XR", "RXX"}))
    assert text.startswith('[{"level": 0, "kind": "Split", "words": ["-"]}')


def test_diary_file_roundtrip():
    text = format_diary({"XL", "RRX"}, {0: "XL", 1: "RRX"})
    assert text == "0\tXL\n1\tRRX\n"
    assert parse_diary(text) == (["XL", "RRX"], {0: "XL", 1: "RRX"})
    assert parse_diary("# comment\nXR\nRXX\n") == (["XR", "RXX"], None)


def test_levels_of_diary_satisfy_axioms():
    for S in [{"XR", "RXX"}, {"XL", "RRX"}] + list(enumerate_diaries(P.antichain(3)))[:20]:
        for lv in closure_levels(S):
            assert check_level_axioms(lv) == []


def test_exact_small_sets():
    assert enumerate_diaries(P.antichain(2)) == [frozenset({"XR", "RXX"}), frozenset({"XRX", "RX"})]
    assert enumerate_diaries(P.chain(2)) == [frozenset({"XL", "RRX"}), frozenset({"XLX", "RR"})]
    assert enumerate_diaries(P.antichain(1)) == [frozenset({""})]


def test_labeled_stream():
    got = list(enumerate_labeled_diaries(P.antichain(2)))
    assert len(got) == 4
    assert {S for S, _ in got} == {frozenset({"XR", "RXX"}), frozenset({"XRX", "RX"})}
    assert len(list(enumerate_labeled_diaries(P.chain(2)))) == 2


@pytest.mark.parametrize("Q,labeled,unlabeled", [
    (P.antichain(1), 1, 1), (P.chain(2), 2, 2), (P.antichain(2), 4, 2),
    (P.chain(3), 52, 52), (P.antichain(3), 504, 84), (P.chain(4), 11000, 11000),
])
def test_counts(Q, labeled, unlabeled):
    assert count_diaries(Q) == (labeled, unlabeled)


def test_count_matches_stream():
    for Q in P.enumerate_posets(3):
        assert count_diaries(Q)[0] == sum(1 for _ in enumerate_labeled_diaries(Q))


def test_degree_values():
    assert big_ramsey_degree(P.antichain(4)) == 1816128
    assert big_ramsey_degree(P.chain(1)) == 1


def test_sum_over_size_small():
    assert [sum_over_size(n) for n in (1, 2, 3)] == [1, 4, 464]
    assert count_unlabeled_by_size(3) == 464


def test_naive_generator_agrees_n3():
    for n in (1, 2, 3):
        for Q in P.enumerate_posets(n):
            assert naive_diaries(Q) == set(enumerate_diaries(Q))


def test_find_labeled_diary():
    Q = P.antichain(2)
    assert find_labeled_diary(Q, {"XR", "RXX"}, {0: "XR", 1: "RXX"})
    assert not find_labeled_diary(Q, {"XR", "RXX"}, {0: "XR"})
    assert not find_labeled_diary(P.chain(2), {"XR", "RXX"}, {0: "XR", 1: "RXX"})


def test_random_labeled_diary():
    rng = random.Random(4)
    Q = P.builtin("diamond")
    for _ in range(30):
        S, f = random_labeled_diary(Q, rng)
        assert codes(Q, f) and find_labeled_diary(Q, S, f)


def test_color_embedding_examples():
    assert color_embedding({"XR", "RXX"}, {0: "XR", 1: "RXX"}, [0]) == ({""}, {0: ""})
    base = {"XR", "RXX"}
    assert color_embedding(base, {0: "XR", 1: "RXX"}, [0, 1])[0] == base
    with pytest.raises(DiaryError):
        color_embedding(base, {0: "XR", 1: "RXX"}, [])


def test_bound_guard():
    from posetdiaries.diaries import BoundError
    with pytest.raises(BoundError):
        count_diaries(P.antichain(6))
