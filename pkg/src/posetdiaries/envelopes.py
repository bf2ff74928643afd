"""Interesting levels, embedding types and boring extensions."""
from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from . import levels
from . import words as W

LEVEL_BOUND = 4
BORING_SCAN_BOUND = 12


class EnvelopeError(ValueError):
    pass


def all_words(ell: int) -> list[str]:
    """Σ*_ℓ in lex order."""
    return ["".join(p) for p in product(W.ALPHABET, repeat=ell)]


def _newly_incompatible(upper: Sequence[str], i: int) -> bool:
    for u, v in combinations(upper, 2):
        if not W.compatible(u, v) and W.compatible(u[:i], v[:i]):
            return True
    return False


def interesting_levels(S: Iterable[str]) -> set[int]:
    S = set(S)
    if not S:
        return set()
    cl = W.closure(S)
    top = max(len(w) for w in S)
    by_len = [W.lex_sorted(W.level(cl, i)) for i in range(top + 2)]
    out = set()
    for i in range(top + 1):
        if any(len(u) == i for u in S):
            out.add(i)
        elif not levels.isomorphic(by_len[i], by_len[i + 1]):
            out.add(i)
        elif _newly_incompatible(by_len[i + 1], i):
            out.add(i)
    return out


def tau(S: Iterable[str]) -> tuple[set[str], dict[str, str]]:
    """Embedding type of S and the per-word map deleting uninteresting indices."""
    S = set(S)
    keep = interesting_levels(S)
    mapping = {w: "".join(c for i, c in enumerate(w) if i in keep) for w in S}
    return set(mapping.values()), mapping


def is_boring(A: Sequence[str], e: Sequence[str]) -> bool:
    """Whether level |A| of A⌢e is uninteresting; A lex-sorted, same length."""
    ext = W.append(A, e)
    if not levels.isomorphic(A, ext):
        return False
    return not _newly_incompatible(ext, len(A[0]) if A else 0)


def _check_level_set(A: Sequence[str]) -> list[str]:
    A = list(A)
    if not A:
        raise EnvelopeError("empty level")
    if W.lex_sorted(set(A)) != A:
        raise EnvelopeError("words must be distinct and lex-sorted")
    if len({len(w) for w in A}) != 1 or len(A[0]) == 0:
        raise EnvelopeError("words must share one positive length")
    return A


def boring_extensions(A: Sequence[str]) -> list[tuple[str, ...]]:
    """Π_A: all e in Σ^{|A|} with A⌢e creating no interesting level, in lex order."""
    A = _check_level_set(A)
    if len(A) > BORING_SCAN_BOUND:
        raise EnvelopeError(f"3^|A| scan limited to |A| <= {BORING_SCAN_BOUND}")
    return [e for e in product(W.ALPHABET, repeat=len(A)) if is_boring(A, e)]


def _pair_matches(u: str, v: str, u2: str, v2: str) -> bool:
    return levels.isomorphic([u, v], [u2, v2]) and W.lex_compare(u, v) == W.lex_compare(u2, v2)


def extend_boring(S: Sequence[str], e: Sequence[str]) -> tuple[str, ...]:
    """A boring extension of all of Σ*_ℓ that agrees with e on S.

    Words outside S take the first of X, L, R that keeps every two-word
    structure with a compatible member of S unchanged.
    """
    S = _check_level_set(S)
    ell = len(S[0])
    if ell > LEVEL_BOUND:
        raise EnvelopeError(f"extend_boring limited to word length <= {LEVEL_BOUND}")
    bad = [(u, v) for u, v in combinations(S, 2) if not W.compatible(u, v)]
    if bad:
        raise EnvelopeError(f"S must be pairwise compatible, {bad[0]} is not")
    if len(e) != len(S) or not is_boring(S, e):
        raise EnvelopeError("e is not a boring extension of S")
    given = dict(zip(S, e))
    out = []
    for v in all_words(ell):
        if v in given:
            out.append(given[v])
            continue
        partners = [(u, given[u]) for u in S if W.compatible(u, v)]
        for c in "XLR":
            if all(_pair_matches(u, v, u + cu, v + c) for u, cu in partners):
                out.append(c)
                break
        else:
            raise EnvelopeError(f"no safe letter for {v}")
    if not is_boring(all_words(ell), out):
        raise EnvelopeError("internal: constructed extension is not boring")
    return tuple(out)


def lift_boring(e: Sequence[str], ell: int, ell2: int) -> tuple[str, ...]:
    """Copy a boring extension of Σ*_ℓ up to Σ*_ℓ′ through restriction to length ℓ."""
    if not 0 < ell <= ell2:
        raise EnvelopeError("need 0 < ℓ <= ℓ′")
    if ell2 > LEVEL_BOUND:
        raise EnvelopeError(f"lift_boring limited to word length <= {LEVEL_BOUND}")
    base = all_words(ell)
    if len(e) != len(base):
        raise EnvelopeError(f"extension of Σ*_{ell} needs length {len(base)}")
    index = {u: j for j, u in enumerate(base)}
    out = tuple(e[index[v[:ell]]] for v in all_words(ell2))
    if not is_boring(all_words(ell2), out):
        raise EnvelopeError("internal: lifted extension is not boring")
    return out


def is_shape_preserving(f: Mapping[str, str]) -> bool:
    _, t_src = tau(f.keys())
    _, t_img = tau(f.values())
    return all(t_src[w] == t_img[f[w]] for w in f)


def triple(w: str) -> str:
    return "".join(c * 3 for c in w)
