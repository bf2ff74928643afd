"""Embeddings of finite enumerated posets into (Σ*, ≺) and into poset-diaries."""
from __future__ import annotations

from itertools import combinations, product

from . import levels
from . import posets as P
from . import words as W
from .diaries.events import DiaryError, Leaf, NewPerp, NewPrec, Split, apply_event

DIARIZE_BOUND = 7


def phi(Q: P.FinitePoset, j: int) -> str:
    if not 0 <= j < Q.n:
        raise IndexError(f"vertex {j} out of range 0..{Q.n - 1}")
    out = []
    for i in range(j):
        if Q.lt(j, i):
            out.append("LL")
        elif Q.lt(i, j):
            out.append("RR")
        else:
            out.append("XX")
    out.append("LR")
    return "".join(out)


def phi_tree(Q: P.FinitePoset) -> set[str]:
    return W.closure(phi(Q, j) for j in range(Q.n))


def _first_rule(T_level: list[str], image: dict[str, str]) -> tuple | None:
    """First applicable construction for the current images of one source level."""
    img_words = W.lex_sorted(set(image.values()))
    for w in T_level:
        if any(x != w and image[x] == image[w] for x in T_level):
            return Split(image[w]), w
    pairs = list(combinations(T_level, 2))
    for w, w2 in pairs:
        if W.perp(w, w2) and not W.perp(image[w], image[w2]):
            e = NewPerp(image[w], image[w2])
            try:
                return e, apply_event(img_words, e)
            except DiaryError:
                pass
    for w, w2 in pairs:
        if W.is_prec(w, w2) and not W.is_prec(image[w], image[w2]):
            e = NewPrec(image[w], image[w2])
            try:
                return e, apply_event(img_words, e)
            except DiaryError:
                pass
    return None


def _extend_images(T_level, image, event, split_at=None):
    """Images after one event: each word gets the letter its image received."""
    if event.kind == "Split":
        w = split_at
        return {u: image[u] + ("X" if W.lex_key(u) <= W.lex_key(w) else "R") for u in T_level}
    nxt = apply_event(W.lex_sorted(set(image.values())), event)
    old = W.lex_sorted(set(image.values()))
    letter = {o: n[-1] for o, n in zip(old, nxt)}
    return {u: image[u] + letter[image[u]] for u in T_level}


def diarize(Q: P.FinitePoset, bound: int = DIARIZE_BOUND) -> tuple[set[str], dict[int, str]]:
    """A poset-diary coding Q, built level by level over the tree of phi-words.

    Returns the diary and the labeling vertex -> word.
    """
    if Q.n > bound:
        raise DiaryError(f"diarize limited to |Q| <= {bound}")
    if Q.n == 0:
        raise DiaryError("empty poset")
    T = phi_tree(Q)
    ends = {len(phi(Q, j)): j for j in range(Q.n)}
    top = 2 * Q.n
    prev = {"": ""}
    labels: dict[int, str] = {}
    for ell in range(1, top + 1):
        T_level = W.lex_sorted(W.level(T, ell))
        if ell - 1 in ends:
            # phi(j) stopped at the previous level: its image leaves the diary here
            j = ends[ell - 1]
            gone = prev[phi(Q, j)]
            labels[j] = gone
            survivors = W.lex_sorted(set(prev.values()))
            nxt = apply_event(survivors, Leaf(gone))
            letter = {o: n[-1] for o, n in zip([s for s in survivors if s != gone], nxt)}
            image = {u: prev[u[:-1]] + letter[prev[u[:-1]]] for u in T_level}
        else:
            image = {u: prev[u[:-1]] for u in T_level}
        for _ in range(4 * top * top + 16):
            step = _first_rule(T_level, image)
            if step is None:
                break
            event, extra = step
            image = _extend_images(T_level, image, event, split_at=extra if event.kind == "Split" else None)
        else:
            raise DiaryError("internal: level construction did not terminate")
        if len(set(image.values())) != len(T_level) or not levels.isomorphic(T_level, image.values()):
            raise DiaryError(f"internal: images at source level {ell} are not an isomorphic copy")
        prev = image
    last = Q.n - 1
    labels[last] = prev[phi(Q, last)]
    return set(labels.values()), labels


def type_words(Q: P.FinitePoset, n: int) -> tuple[set[str], str | None]:
    """Words of length n describing one-point extensions over vertices 0..n-1.

    Position i holds L when the new point lies below i, R when above, X when
    incomparable.  Also returns the word of vertex n itself when n < |Q|.
    """
    if not 0 <= n <= Q.n:
        raise IndexError(f"level {n} out of range 0..{Q.n}")
    out = set()
    for letters in product(W.ALPHABET, repeat=n):
        ok = True
        for i in range(n):
            for j in range(n):
                if Q.lt(i, j) and (letters[j] == "R" and letters[i] != "R"
                                   or letters[i] == "L" and letters[j] != "L"):
                    ok = False
                if letters[i] == "R" and letters[j] == "L" and not Q.lt(i, j):
                    ok = False
        if ok:
            out.add("".join(letters))
    coding = None
    if n < Q.n:
        coding = "".join("L" if Q.lt(n, i) else "R" if Q.lt(i, n) else "X" for i in range(n))
    return out, coding
