"""The four per-level diary events, their successor formulas, and the validator."""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .. import words as W

LEAF = "Leaf"
SPLIT = "Split"
NEW_PERP = "NewPerp"
NEW_PREC = "NewPrec"
KINDS = (LEAF, SPLIT, NEW_PERP, NEW_PREC)


class DiaryError(ValueError):
    pass


class EventError(DiaryError):
    """An event whose side condition fails at the given level."""


class InvalidLevel(DiaryError):
    def __init__(self, msg: str, level: int | None = None):
        super().__init__(msg if level is None else f"level {level}: {msg}")
        self.level = level


class AmbiguousLevel(InvalidLevel):
    pass


@dataclass(frozen=True)
class Event:
    kind: str
    words: tuple

    def __str__(self) -> str:
        return f"{self.kind}({', '.join(W.format_word(w) for w in self.words)})"


def Leaf(w: str) -> Event:
    return Event(LEAF, (w,))


def Split(w: str) -> Event:
    return Event(SPLIT, (w,))


def NewPerp(v: str, w: str) -> Event:
    return Event(NEW_PERP, (v, w))


def NewPrec(v: str, w: str) -> Event:
    return Event(NEW_PREC, (v, w))


def _before(a: str, b: str) -> bool:
    return W.lex_key(a) < W.lex_key(b)


def _check_pair(cur: Sequence[str], v: str, w: str) -> None:
    if v not in cur or w not in cur:
        raise EventError("both words must belong to the level")
    if not _before(v, w):
        raise EventError(f"{W.format_word(v)} must be lex-smaller than {W.format_word(w)}")
    if W.related(v, w):
        raise EventError(f"{v} and {w} are already related")


def apply_event(cur: Iterable[str], e: Event) -> list[str]:
    """Successor level (lex-sorted) produced by ``e``; raises EventError on a failed side condition."""
    cur = W.lex_sorted(set(cur))
    if len({len(z) for z in cur}) > 1:
        raise W.LengthMismatch("a level holds words of one length")
    if e.kind == LEAF:
        (w,) = e.words
        if w not in cur:
            raise EventError(f"{W.format_word(w)} is not on this level")
        for u in cur:
            if u != w and not W.related(u, w):
                raise EventError(f"relatedness: {W.format_word(w)} is unrelated to {u}")
        return [z + "X" for z in cur if z != w]
    if e.kind == SPLIT:
        (w,) = e.words
        if w not in cur:
            raise EventError(f"{W.format_word(w)} is not on this level")
        out = []
        for z in cur:
            if z == w:
                out += [w + "X", w + "R"]
            else:
                out.append(z + ("X" if _before(z, w) else "R"))
        return out
    if e.kind == NEW_PERP:
        v, w = e.words
        _check_pair(cur, v, w)
        between = [u for u in cur if _before(v, u) and _before(u, w)]
        for u in between:
            if not (W.perp(u, v) or W.perp(u, w)):
                raise EventError(f"(A2): {u} is ⊥ to neither {v} nor {w}")
        out = []
        for z in cur:
            if _before(z, v):
                out.append(z + "X")
            elif z == v:
                out.append(z + "R")
            elif _before(z, w):
                out.append(z + ("X" if W.perp(z, v) else "R"))
            elif z == w:
                out.append(z + "X")
            else:
                out.append(z + "R")
        return out
    if e.kind == NEW_PREC:
        v, w = e.words
        _check_pair(cur, v, w)
        for u in cur:
            if _before(u, v) and not (W.is_prec(u, w) or W.perp(u, v)):
                raise EventError(f"(B1): {u} neither precedes {w} nor is ⊥ to {v}")
            if _before(w, u) and not (W.is_prec(v, u) or W.perp(w, u)):
                raise EventError(f"(B2): {v} does not precede {u} and {w} is not ⊥ to it")
        out = []
        for z in cur:
            if _before(z, v):
                out.append(z + ("X" if W.perp(z, v) else "L"))
            elif z == v:
                out.append(z + "L")
            elif _before(z, w):
                out.append(z + "X")
            elif z == w:
                out.append(z + "R")
            else:
                out.append(z + ("X" if W.perp(w, z) else "R"))
        return out
    raise EventError(f"unknown event kind {e.kind!r}")


def candidate_events(cur: Sequence[str]) -> list[Event]:
    """Every event shape that could be tried on a level, in a fixed order."""
    cur = W.lex_sorted(cur)
    out = [Leaf(w) for w in cur] + [Split(w) for w in cur]
    pairs = list(combinations(cur, 2))
    out += [NewPerp(v, w) for v, w in pairs] + [NewPrec(v, w) for v, w in pairs]
    return out


def successors(cur: Sequence[str]) -> list[tuple[Event, list[str]]]:
    """All events whose side conditions hold, with the level each produces."""
    out = []
    for e in candidate_events(cur):
        try:
            out.append((e, apply_event(cur, e)))
        except EventError:
            pass
    return out


def classify_transition(cur: Iterable[str], nxt: Iterable[str], level: int | None = None) -> Event:
    cur = W.lex_sorted(set(cur))
    target = W.lex_sorted(set(nxt))
    matches = [e for e, out in successors(cur) if out == target]
    if not matches:
        raise InvalidLevel("matches none of Leaf, Split, New ⊥, New ≺", level)
    if len(matches) > 1:
        raise AmbiguousLevel("matches several events: " + ", ".join(map(str, matches)), level)
    return matches[0]


@dataclass(frozen=True)
class LoggedEvent:
    level: int
    event: Event

    def as_json(self) -> dict:
        return {"level": self.level, "kind": self.event.kind, "words": [W.format_word(w) for w in self.event.words]}


def closure_levels(S: Iterable[str]) -> list[list[str]]:
    cl = W.closure(S)
    top = max((len(w) for w in cl), default=-1)
    return [W.lex_sorted(W.level(cl, i)) for i in range(top + 1)]


def validate_diary(S: Iterable[str]) -> list[LoggedEvent]:
    """Event log of a poset-diary, or DiaryError explaining the first failure."""
    S = set(S)
    if not S:
        raise DiaryError("a diary is nonempty")
    if not W.is_prefix_antichain(S):
        raise DiaryError("some member extends another")
    top = max(len(w) for w in S)
    if sum(1 for w in S if len(w) == top) != 1:
        raise DiaryError(f"{sum(1 for w in S if len(w) == top)} words share the maximal length {top}")
    levels = closure_levels(S)
    return [LoggedEvent(i, classify_transition(levels[i], levels[i + 1], i)) for i in range(top)]


def is_diary(S: Iterable[str]) -> bool:
    try:
        validate_diary(S)
    except DiaryError:
        return False
    return True


def event_log_json(log: Sequence[LoggedEvent]) -> str:
    return json.dumps([x.as_json() for x in log])


# -- diary files -------------------------------------------------------------

def format_diary(S: Iterable[str], labeling: dict | None = None) -> str:
    if labeling is None:
        return "".join(W.format_word(w) + "\n" for w in W.lex_sorted(set(S)))
    rank = {w: i for i, w in enumerate(W.lex_sorted(set(S)))}
    items = sorted(labeling.items(), key=lambda kv: rank[kv[1]])
    return "".join(f"{v}\t{W.format_word(w)}\n" for v, w in items)


def parse_diary(text: str) -> tuple[list[str], dict | None]:
    """Words of a diary file and the labeling, when lines carry ``label<TAB>word``."""
    ws, labels = [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if len(parts) == 2:
                labels[int(parts[0])] = W.parse_word(parts[1])
                ws.append(labels[int(parts[0])])
            elif len(parts) == 1:
                ws.append(W.parse_word(parts[0]))
            else:
                raise ValueError(f"unexpected fields {line!r}")
        except ValueError as exc:
            raise DiaryError(f"line {lineno}: {exc}") from None
    if labels and len(labels) != len(ws):
        raise DiaryError("labels must be given on every line or on none")
    return ws, (labels or None)
