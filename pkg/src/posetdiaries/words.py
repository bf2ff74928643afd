"""Words over the alphabet {L, X, R} and the orders between them.

Words are plain ``str`` values over ``"LXR"``.  The empty word is ``""`` and
renders as ``-`` in text form.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

ALPHABET = "LXR"
RANK = {"L": 0, "X": 1, "R": 2}
_LEX = str.maketrans("LXR", "012")

LT, EQ, GT = -1, 0, 1

# relation_summary values
PREC = "prec"
SUCC = "succ"
PERP = "perp-only"
PREC_PERP = "prec-and-perp"
SUCC_PERP = "succ-and-perp"
UNRELATED = "unrelated"


class LengthMismatch(ValueError):
    pass


def parse_word(text: str) -> str:
    text = text.strip()
    if text == "-":
        return ""
    if not text or any(c not in RANK for c in text):
        raise ValueError(f"not a word over L, X, R: {text!r}")
    return text


def format_word(w: str) -> str:
    return w if w else "-"


def lex_key(w: str) -> str:
    """Sort key realising L < X < R with proper prefixes first."""
    return w.translate(_LEX)


def lex_compare(u: str, v: str) -> int:
    ku, kv = lex_key(u), lex_key(v)
    return (ku > kv) - (ku < kv)


def lex_sorted(words: Iterable[str]) -> list[str]:
    return sorted(words, key=lex_key)


def precedes(u: str, v: str) -> int | None:
    """Witness of ``u ≺ v``: least i with (u_i, v_i) = (L, R) and u_j <= v_j below i."""
    for i in range(min(len(u), len(v))):
        a, b = u[i], v[i]
        if a == "L" and b == "R":
            return i
        if RANK[a] > RANK[b]:
            return None
    return None


def is_prec(u: str, v: str) -> bool:
    return precedes(u, v) is not None


def dominated(u: str, v: str) -> bool:
    """Elementwise order on words of one length."""
    if len(u) != len(v):
        raise LengthMismatch(f"dominated() needs equal lengths, got {len(u)} and {len(v)}")
    return all(RANK[a] <= RANK[b] for a, b in zip(u, v))


def perp(u: str, v: str) -> bool:
    return not dominated(u, v) and not dominated(v, u)


def relation_summary(u: str, v: str) -> str:
    p = perp(u, v)
    if is_prec(u, v):
        return PREC_PERP if p else PREC
    if is_prec(v, u):
        return SUCC_PERP if p else SUCC
    return PERP if p else UNRELATED


def related(u: str, v: str) -> bool:
    return relation_summary(u, v) != UNRELATED


def compatible(u: str, v: str) -> bool:
    if lex_key(v) < lex_key(u):
        u, v = v, u
    n = min(len(u), len(v))
    has_lr = False
    monotone = True
    for i in range(n):
        a, b = u[i], v[i]
        if a == "R" and b == "L":
            return False
        if a == "L" and b == "R":
            has_lr = True
        if RANK[a] > RANK[b]:
            monotone = False
    return monotone or not has_lr


def closure(words: Iterable[str]) -> set[str]:
    out = set()
    for w in words:
        for i in range(len(w) + 1):
            out.add(w[:i])
    return out


def level(words: Iterable[str], ell: int) -> set[str]:
    return {w for w in words if len(w) == ell}


def is_prefix_antichain(words: Iterable[str]) -> bool:
    ws = set(words)
    for w in ws:
        for i in range(len(w)):
            if w[:i] in ws:
                return False
    return True


def append(level_words: Sequence[str], e: Sequence[str]) -> list[str]:
    """Extend the i-th word (in lex order) by the letter ``e[i]``."""
    if len(level_words) != len(e):
        raise ValueError(f"{len(level_words)} words but extension of length {len(e)}")
    ordered = lex_sorted(level_words)
    if list(ordered) != list(level_words):
        raise ValueError("level words must be given in lex order")
    if len({len(w) for w in ordered}) > 1:
        raise LengthMismatch("level words must share one length")
    return [w + c for w, c in zip(ordered, e)]


# -- parameter words -------------------------------------------------------
# A parameter word is a tuple whose entries are letters ("L", "X", "R") or
# non-negative ints standing for the parameters λ_0, λ_1, ...

def param_count(W: Sequence) -> int:
    params = [s for s in W if isinstance(s, int)]
    return max(params) + 1 if params else 0


def is_parameter_word(W: Sequence) -> bool:
    seen = -1
    for s in W:
        if isinstance(s, int):
            if s < 0 or s > seen + 1:
                return False
            seen = max(seen, s)
        elif s not in RANK:
            return False
    return True


def substitute(W: Sequence, U: Sequence) -> tuple:
    """W(U): put U_i for λ_i and cut W just before its first λ_{|U|}."""
    n = param_count(W)
    k = len(U)
    if k > n:
        raise ValueError(f"cannot substitute a word of length {k} into {n} parameters")
    out = []
    for s in W:
        if isinstance(s, int):
            if s == k:
                break
            out.append(U[s])
        else:
            out.append(s)
    return tuple(out)


_TOKEN = re.compile(r"\$(\d+)|([LXR])")


def parse_parameter_word(text: str) -> tuple:
    text = text.strip()
    if text == "-":
        return ()
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad parameter word {text!r} at offset {pos}")
        out.append(int(m.group(1)) if m.group(1) is not None else m.group(2))
        pos = m.end()
    W = tuple(out)
    if not is_parameter_word(W):
        raise ValueError(f"parameters out of order in {text!r}")
    return W


def format_parameter_word(W: Sequence) -> str:
    if not W:
        return "-"
    return "".join(f"${s}" if isinstance(s, int) else s for s in W)
