"""Level structures: same-length words with ≤lex, ≺, ⊴ (and ⊥ derived from ⊴)."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable

from . import words as W


@dataclass(frozen=True)
class LevelStructure:
    words: tuple
    length: int = field(init=False)

    def __init__(self, words: Iterable[str]):
        ws = tuple(W.lex_sorted(set(words)))
        if len({len(w) for w in ws}) > 1:
            raise W.LengthMismatch("a level structure holds words of a single length")
        object.__setattr__(self, "words", ws)
        object.__setattr__(self, "length", len(ws[0]) if ws else 0)

    def __len__(self) -> int:
        return len(self.words)

    def relation(self, i: int, j: int) -> str:
        return W.relation_summary(self.words[i], self.words[j])

    def signature(self) -> tuple:
        """Complete invariant up to lex-order-preserving isomorphism."""
        ws = self.words
        return (len(ws),) + tuple(
            (W.is_prec(u, v), W.is_prec(v, u), W.dominated(u, v), W.dominated(v, u))
            for u, v in combinations(ws, 2)
        )


def isomorphic(a: Iterable[str], b: Iterable[str]) -> bool:
    """Isomorphism of level structures; with ≤lex part of the structure the candidate map is unique."""
    return LevelStructure(a).signature() == LevelStructure(b).signature()


def check_level_axioms(ls: LevelStructure | Iterable[str]) -> list[str]:
    """Violations of P1-P7, each with a witnessing pair or triple; empty when all hold."""
    if not isinstance(ls, LevelStructure):
        ls = LevelStructure(ls)
    ws = ls.words
    prec = W.is_prec
    dom = W.dominated
    out = []
    for u in ws:
        if prec(u, u):
            out.append(f"P1: {W.format_word(u)} precedes itself")
    for u, v in permutations(ws, 2):
        if prec(u, v) and prec(v, u):
            out.append(f"P1: {u} and {v} precede each other")
        if dom(u, v) and dom(v, u):
            out.append(f"P2: {u} and {v} dominate each other")
        if prec(u, v) and W.lex_key(v) < W.lex_key(u):
            out.append(f"P4: {u} precedes {v} but is lex-larger")
        if dom(u, v) and W.lex_key(v) < W.lex_key(u):
            out.append(f"P5: {u} dominated by {v} but is lex-larger")
    for u, v, w in permutations(ws, 3):
        if prec(u, v) and prec(v, w) and not prec(u, w):
            out.append(f"P1: {u} < {v} < {w} not transitive")
        if dom(u, v) and dom(v, w) and not dom(u, w):
            out.append(f"P2: {u} ⊴ {v} ⊴ {w} not transitive")
        if prec(u, v) and dom(v, w) and not prec(u, w):
            out.append(f"P6: {u} ≺ {v} ⊴ {w} but not {u} ≺ {w}")
        if dom(u, v) and prec(v, w) and not prec(u, w):
            out.append(f"P6: {u} ⊴ {v} ≺ {w} but not {u} ≺ {w}")
    if all(W.compatible(u, v) for u, v in combinations(ws, 2)):
        for u, v in permutations(ws, 2):
            if prec(u, v) and not dom(u, v):
                out.append(f"P7: {u} ≺ {v} without {u} ⊴ {v}")
    return out
