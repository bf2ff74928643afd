import random

import pytest

from posetdiaries import posets as P
from oracles import brute_automorphisms, brute_posets


def test_load_examples():
    C2 = P.load_poset("2\n0 < 1")
    assert C2 == P.chain(2)
    assert P.load_poset("antichain:3") == P.antichain(3)
    with pytest.raises(P.PosetError):
        P.load_poset("2\n0 < 1\n1 < 0")


def test_parse_reports_line():
    with pytest.raises(P.PosetError, match="line 3"):
        P.parse_poset("3\n0 < 1\n1 <\n")


def test_transitive_closure_on_load():
    Q = P.parse_poset("3\n0 < 1\n1 < 2")
    assert Q.lt(0, 2) and not Q.lt(2, 0)


def test_format_roundtrip():
    for name in ["diamond", "vee", "wedge", "chain:4", "antichain:2"]:
        Q = P.builtin(name)
        assert P.parse_poset(P.format_poset(Q)) == Q


def test_isomorphism_examples():
    C2 = P.chain(2)
    flipped = P.parse_poset("2\n1 < 0")
    assert P.is_isomorphic(C2, flipped) == (1, 0)
    assert P.is_isomorphic(P.antichain(2), C2) is None
    D = P.builtin("diamond")
    assert P.is_isomorphic(D, D) is not None


def test_automorphism_counts():
    for n in range(1, 6):
        assert P.automorphism_count(P.chain(n)) == 1
    assert P.automorphism_count(P.antichain(3)) == 6
    assert P.automorphism_count(P.antichain(4)) == 24
    assert P.automorphism_count(P.builtin("diamond")) == 2


def test_automorphisms_against_brute_force():
    rng = random.Random(5)
    for _ in range(40):
        Q = P.random_poset(rng.randint(1, 5), rng)
        assert P.automorphism_count(Q) == brute_automorphisms(Q)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 16)])
def test_catalog_sizes(n, count):
    classes = P.enumerate_posets(n)
    assert len(classes) == count
    for a in range(len(classes)):
        for b in range(a + 1, len(classes)):
            assert P.is_isomorphic(classes[a], classes[b]) is None


@pytest.mark.parametrize("n", [2, 3])
def test_catalog_covers_brute_force(n):
    classes = P.enumerate_posets(n)
    for Q in brute_posets(n):
        assert sum(P.is_isomorphic(Q, R) is not None for R in classes) == 1


def test_word_poset():
    Q, ws = P.word_poset({"XL", "RRX"})
    assert ws == ["XL", "RRX"] and Q == P.chain(2)
    assert P.word_poset({"XR", "RXX"})[0] == P.antichain(2)
    assert P.word_poset({""})[0] == P.antichain(1)


def test_random_poset_is_order():
    rng = random.Random(2)
    for _ in range(50):
        Q = P.random_poset(rng.randint(1, 7), rng)
        for a, b in Q.below:
            assert not Q.lt(b, a)
            assert all(Q.lt(a, c) for c in range(Q.n) if Q.lt(b, c))
