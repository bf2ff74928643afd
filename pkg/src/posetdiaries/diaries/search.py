"""Exhaustive search for poset-diaries over abstract level states.

A state lists the nodes of one closure level in lex order.  In the labeled
search each node carries the bitmask of poset vertices whose leaves lie above
it; every unordered node pair carries one of three statuses (the level is
pairwise compatible, so ≺ and ⊥ never hold together):

    FREE  unrelated (the lex-smaller node is ⊴ the larger)
    PREC  lex-smaller ≺ larger
    PERP  ⊥

Events act on states exactly as the word-level successor formulas act on
levels, so a path of events fixes the words; ``enumerate_labeled_diaries``
replays each path through :func:`apply_event` and re-validates the result.
"""
from __future__ import annotations

import sys
from functools import lru_cache
from typing import Iterator

from .. import posets as P
from .. import words as W
from .events import (Event, DiaryError, Leaf, NewPerp, NewPrec, Split, apply_event,
                     validate_diary)

FREE, PREC, PERP = 0, 1, 2
DEFAULT_BOUND = 5


class BoundError(ValueError):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _get(rel: tuple, i: int, j: int) -> int:
    return rel[i][j]


def _remove(rel: tuple, i: int) -> tuple:
    return tuple(row[:i] + row[i + 1:] for r, row in enumerate(rel) if r != i)


def _split(rel: tuple, i: int) -> tuple:
    """Duplicate node i; the two copies are FREE to each other."""
    rows = [row[:i + 1] + row[i:] for row in rel]
    rows.insert(i + 1, rows[i])
    rows[i] = rows[i][:i + 1] + (FREE,) + rows[i][i + 2:]
    rows[i + 1] = rows[i + 1][:i] + (FREE,) + rows[i + 1][i + 1:]
    return tuple(rows)


def _set(rel: tuple, i: int, j: int, value: int) -> tuple:
    rows = list(rel)
    rows[i] = rows[i][:j] + (value,) + rows[i][j + 1:]
    rows[j] = rows[j][:i] + (value,) + rows[j][i + 1:]
    return tuple(rows)


def _perp_ok(rel: tuple, i: int, j: int) -> bool:
    return all(_get(rel, k, i) == PERP or _get(rel, k, j) == PERP for k in range(i + 1, j))


def _prec_ok(rel: tuple, i: int, j: int) -> bool:
    k_total = len(rel)
    for k in range(i):
        if not (_get(rel, k, j) == PREC or _get(rel, k, i) == PERP):
            return False
    for k in range(j + 1, k_total):
        if not (_get(rel, i, k) == PREC or _get(rel, j, k) == PERP):
            return False
    return True


def _leaf_ok(rel: tuple, i: int) -> bool:
    return all(_get(rel, i, k) != FREE for k in range(len(rel)) if k != i)


class _LabeledSearch:
    """Transitions of the labeled search for one poset Q."""

    def __init__(self, Q: P.FinitePoset):
        self.Q = Q
        self.up = Q.up_mask
        self.down = Q.down_mask
        n = Q.n
        self.incomp = tuple(((1 << n) - 1) & ~(self.up[a] | self.down[a] | (1 << a)) for a in range(n))

    def all_below(self, a_mask: int, b_mask: int) -> bool:
        return all(self.up[a] & b_mask == b_mask for a in _bits(a_mask))

    def all_incomparable(self, a_mask: int, b_mask: int) -> bool:
        return all(self.incomp[a] & b_mask == b_mask for a in _bits(a_mask))

    def lex_consistent(self, a_mask: int, b_mask: int) -> bool:
        """No vertex of the lex-later node may lie below one of the earlier node."""
        return all(self.down[a] & b_mask == 0 for a in _bits(a_mask))

    def moves(self, nodes: tuple, rel: tuple) -> Iterator[tuple]:
        """(kind, i, j_or_split, new_nodes, new_rel) in canonical event order."""
        k = len(nodes)
        if k >= 2:
            for i in range(k):
                if nodes[i] & (nodes[i] - 1) == 0 and _leaf_ok(rel, i):
                    yield ("leaf", i, None, nodes[:i] + nodes[i + 1:], _remove(rel, i))
        for i in range(k):
            m = nodes[i]
            if m & (m - 1) == 0:
                continue
            sub = (m - 1) & m
            lefts = []
            while sub:
                lefts.append(sub)
                sub = (sub - 1) & m
            for left in sorted(lefts):
                right = m & ~left
                if not self.lex_consistent(left, right):
                    continue
                yield ("split", i, left, nodes[:i] + (left, right) + nodes[i + 1:], _split(rel, i))
        for i in range(k):
            for j in range(i + 1, k):
                if rel[i][j] == FREE and self.all_incomparable(nodes[i], nodes[j]) and _perp_ok(rel, i, j):
                    yield ("perp", i, j, nodes, _set(rel, i, j, PERP))
        for i in range(k):
            for j in range(i + 1, k):
                if rel[i][j] == FREE and self.all_below(nodes[i], nodes[j]) and _prec_ok(rel, i, j):
                    yield ("prec", i, j, nodes, _set(rel, i, j, PREC))


def _check_bound(Q: P.FinitePoset, bound: int) -> None:
    if Q.n > bound:
        raise BoundError(f"diary search limited to |Q| <= {bound}, got {Q.n} (raise the bound to opt in)")
    if Q.n < 1:
        raise BoundError("the poset must be nonempty")


def _initial(Q: P.FinitePoset) -> tuple:
    return ((1 << Q.n) - 1,), ((FREE,),)


def _counter(search: _LabeledSearch):
    @lru_cache(maxsize=None)
    def count(nodes: tuple, rel: tuple) -> int:
        if len(nodes) == 1 and nodes[0] & (nodes[0] - 1) == 0:
            return 1
        return sum(count(nn, nr) for _, _, _, nn, nr in search.moves(nodes, rel))

    return count


def count_labeled(Q: P.FinitePoset, bound: int = DEFAULT_BOUND) -> int:
    """|T^lab(Q)| by memoised search over abstract states."""
    _check_bound(Q, bound)
    return _counter(_LabeledSearch(Q))(*_initial(Q))


def random_labeled_diary(Q: P.FinitePoset, rng, bound: int = DEFAULT_BOUND) -> tuple[frozenset, dict]:
    """One labeled diary of Q drawn uniformly, by walking the search weighted by subtree counts."""
    _check_bound(Q, bound)
    search = _LabeledSearch(Q)
    count = _counter(search)
    nodes, rel = _initial(Q)
    words, labels = [""], {}
    while not (len(nodes) == 1 and nodes[0] & (nodes[0] - 1) == 0):
        options = list(search.moves(nodes, rel))
        pick = rng.randrange(count(nodes, rel))
        for kind, i, j, nn, nr in options:
            c = count(nn, nr)
            if pick < c:
                break
            pick -= c
        if kind == "leaf":
            labels[_bits(nodes[i])[0]] = words[i]
        words = apply_event(words, _to_event(kind, i, words, j))
        nodes, rel = nn, nr
    labels[_bits(nodes[0])[0]] = words[0]
    S = frozenset(labels.values())
    _revalidate(Q, S, labels)
    return S, labels


def count_unlabeled_by_size(n: int) -> int:
    """Number of diaries with n members, counted without reference to any poset."""
    if n < 1:
        raise BoundError("size must be positive")

    @lru_cache(maxsize=None)
    def count(rel: tuple, budget: int) -> int:
        k = len(rel)
        if k == 1 and budget == 0:
            return 1
        total = 0
        if k >= 2:
            for i in range(k):
                if _leaf_ok(rel, i):
                    total += count(_remove(rel, i), budget)
        if budget:
            for i in range(k):
                total += count(_split(rel, i), budget - 1)
        for i in range(k):
            for j in range(i + 1, k):
                if rel[i][j] == FREE:
                    if _perp_ok(rel, i, j):
                        total += count(_set(rel, i, j, PERP), budget)
                    if _prec_ok(rel, i, j):
                        total += count(_set(rel, i, j, PREC), budget)
        return total

    return count(((FREE,),), n - 1)


def _to_event(kind: str, i: int, words: list[str], j) -> Event:
    if kind == "leaf":
        return Leaf(words[i])
    if kind == "split":
        return Split(words[i])
    if kind == "perp":
        return NewPerp(words[i], words[j])
    return NewPrec(words[i], words[j])


def enumerate_labeled_diaries(Q: P.FinitePoset, bound: int = DEFAULT_BOUND,
                              validate: bool = True) -> Iterator[tuple[frozenset, dict]]:
    """Every labeled diary (S, f) of Q, once each, in depth-first event order.

    ``f`` maps vertices of Q to members of S and is an isomorphism onto (S, ≺).
    """
    _check_bound(Q, bound)
    search = _LabeledSearch(Q)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))
    labels: dict[int, str] = {}

    def walk(nodes: tuple, rel: tuple, words: list[str]) -> Iterator[tuple[frozenset, dict]]:
        if len(nodes) == 1 and nodes[0] & (nodes[0] - 1) == 0:
            f = dict(labels)
            f[_bits(nodes[0])[0]] = words[0]
            S = frozenset(f.values())
            if validate:
                _revalidate(Q, S, f)
            yield S, f
            return
        for kind, i, j, nn, nr in search.moves(nodes, rel):
            nxt = apply_event(words, _to_event(kind, i, words, j))
            if kind == "leaf":
                v = _bits(nodes[i])[0]
                labels[v] = words[i]
                yield from walk(nn, nr, nxt)
                del labels[v]
            else:
                yield from walk(nn, nr, nxt)

    nodes, rel = _initial(Q)
    yield from walk(nodes, rel, [""])


def codes(Q: P.FinitePoset, f: dict) -> bool:
    """Whether the vertex map ``f`` is an order isomorphism from Q onto its image under ≺."""
    if set(f) != set(range(Q.n)) or len(set(f.values())) != Q.n:
        return False
    return all(Q.lt(a, b) == W.is_prec(f[a], f[b]) for a in range(Q.n) for b in range(Q.n) if a != b)


def _revalidate(Q: P.FinitePoset, S: frozenset, f: dict) -> None:
    validate_diary(S)
    if not codes(Q, f):
        raise DiaryError(f"internal: labeling is not an isomorphism for {sorted(S)}")


def find_labeled_diary(Q: P.FinitePoset, S, f: dict, bound: int = DEFAULT_BOUND) -> bool:
    """Whether the search for Q emits (S, f), following only the branch that S dictates."""
    _check_bound(Q, bound)
    S = frozenset(S)
    if len(S) != Q.n or set(f) != set(range(Q.n)) or set(f.values()) != S:
        return False
    cl = W.closure(S)
    word_of = dict(f)
    search = _LabeledSearch(Q)
    nodes, rel = _initial(Q)
    words = [""]
    while not (len(nodes) == 1 and nodes[0] & (nodes[0] - 1) == 0):
        ell = len(words[0])
        target = W.lex_sorted(w for w in cl if len(w) == ell + 1)
        for kind, i, j, nn, nr in search.moves(nodes, rel):
            nxt = apply_event(words, _to_event(kind, i, words, j))
            if nxt != target:
                continue
            if kind == "leaf" and word_of.get(_bits(nodes[i])[0]) != words[i]:
                continue
            if kind == "split" and not (
                    all(word_of[v].startswith(words[i] + "X") for v in _bits(nn[i]))
                    and all(word_of[v].startswith(words[i] + "R") for v in _bits(nn[i + 1]))):
                continue
            nodes, rel, words = nn, nr, nxt
            break
        else:
            return False
    return word_of.get(_bits(nodes[0])[0]) == words[0] and S == frozenset(word_of.values())


def enumerate_diaries(Q: P.FinitePoset, bound: int = DEFAULT_BOUND) -> list[frozenset]:
    """T(Q) as word sets, sorted by their lex-sorted word tuples."""
    seen = {S for S, _ in enumerate_labeled_diaries(Q, bound)}
    return sorted(seen, key=diary_sort_key)


def diary_sort_key(S) -> tuple:
    return tuple(W.lex_key(w) for w in W.lex_sorted(S))
