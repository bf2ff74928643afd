"""Two relatives of poset-diaries: Devlin types over {L, R} and triangle-free types over {0, 1}."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator

from . import words as W
from .diaries.events import AmbiguousLevel, DiaryError, InvalidLevel

DEVLIN_BOUND = 5


def _antichain_and_top(S: set, alphabet: str) -> int:
    if not S:
        raise DiaryError("a type is nonempty")
    if any(c not in alphabet for w in S for c in w):
        raise DiaryError(f"words must use only {alphabet}")
    if not W.is_prefix_antichain(S):
        raise DiaryError("some member extends another")
    top = max(len(w) for w in S)
    if sum(1 for w in S if len(w) == top) != 1:
        raise DiaryError(f"several words share the maximal length {top}")
    return top


def _levels(S: set, top: int, key=None) -> list[list[str]]:
    cl = W.closure(S)
    return [sorted(W.level(cl, i), key=key) for i in range(top + 1)]


def _classify(moves: list[tuple[tuple, list[str]]], target: list[str], level: int) -> tuple:
    hits = [ev for ev, out in moves if sorted(out) == sorted(target)]
    if not hits:
        raise InvalidLevel("matches no event", level)
    if len(hits) > 1:
        raise AmbiguousLevel(f"matches several events: {hits}", level)
    return hits[0]


# -- Devlin types --------------------------------------------------------------

def _lr_key(w: str) -> str:
    return w.translate(str.maketrans("LR", "01"))


def devlin_moves(cur: list[str]) -> list[tuple[tuple, list[str]]]:
    cur = sorted(cur, key=_lr_key)
    out = []
    for w in cur:
        out.append((("Leaf", w), [z + "L" for z in cur if z != w]))
    for w in cur:
        nxt = []
        for z in cur:
            if z == w:
                nxt += [w + "L", w + "R"]
            else:
                nxt.append(z + ("L" if _lr_key(z) < _lr_key(w) else "R"))
        out.append((("Split", w), nxt))
    return out


def devlin_validate(S: Iterable[str]) -> list[tuple[int, tuple]]:
    S = set(S)
    top = _antichain_and_top(S, "LR")
    lv = _levels(S, top, _lr_key)
    return [(i, _classify(devlin_moves(lv[i]), lv[i + 1], i)) for i in range(top)]


def devlin_enumerate(n: int) -> list[frozenset]:
    """T′(n) by following Leaf/Split events, sorted."""
    if not 1 <= n <= DEVLIN_BOUND:
        raise DiaryError(f"devlin_enumerate needs 1 <= n <= {DEVLIN_BOUND}")
    found = set()

    def walk(cur: list[str], leaves: tuple, budget: int) -> None:
        if len(cur) == 1 and budget == 0:
            found.add(frozenset(leaves + (cur[0],)))
            return
        for (kind, w), nxt in devlin_moves(cur):
            if kind == "Leaf" and len(cur) >= 2:
                walk(nxt, leaves + (w,), budget)
            elif kind == "Split" and budget:
                walk(nxt, leaves, budget - 1)

    walk([""], (), n - 1)
    for S in found:
        devlin_validate(S)
    return sorted(found, key=lambda S: sorted(map(_lr_key, S)))


def devlin_naive(n: int) -> list[frozenset]:
    """T′(n) by growing every prefix tree level by level and keeping what validates."""
    found = set()
    max_depth = 2 * n - 2

    def grow(cur: list[str], leaves: tuple, depth: int) -> None:
        if len(cur) == 1 and len(leaves) == n - 1:
            S = set(leaves) | {cur[0]}
            try:
                devlin_validate(S)
                found.add(frozenset(S))
            except DiaryError:
                pass
        if depth == max_depth or len(leaves) + len(cur) > n:
            return
        options = [((), (w + "L",), (w + "R",), (w + "L", w + "R")) for w in cur]
        for choice in _product(options):
            nxt = [x for part in choice for x in part]
            stopped = tuple(w for w, part in zip(cur, choice) if not part)
            if nxt:
                grow(nxt, leaves + stopped, depth + 1)

    grow([""], (), 0)
    return sorted(found, key=lambda S: sorted(map(_lr_key, S)))


def _product(options: list) -> Iterator[tuple]:
    if not options:
        yield ()
        return
    for head in options[0]:
        for rest in _product(options[1:]):
            yield (head,) + rest


# -- triangle-free types ---------------------------------------------------------

@dataclass(frozen=True)
class FiniteGraph:
    n: int
    edges: frozenset  # pairs (a, b) with a < b

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "FiniteGraph":
        es = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) outside 0..{n - 1}")
            es.add((min(a, b), max(a, b)))
        return cls(n, frozenset(es))

    def adjacent(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def has_triangle(self) -> bool:
        return any(self.adjacent(a, b) and self.adjacent(b, c) and self.adjacent(a, c)
                   for a, b, c in combinations(range(self.n), 3))


def parse_graph(text: str) -> FiniteGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ValueError(f"line {lineno}: expected vertex count") from None
            continue
        parts = line.split()
        if len(parts) != 3 or parts[1] != "-":
            raise ValueError(f"line {lineno}: expected 'i - j', got {line!r}")
        edges.append((int(parts[0]), int(parts[2])))
    if n is None:
        raise ValueError("empty graph description")
    return FiniteGraph.from_edges(n, edges)


def graph_isomorphism(G: FiniteGraph, H: FiniteGraph) -> tuple | None:
    if G.n != H.n or len(G.edges) != len(H.edges):
        return None
    for perm in permutations(range(G.n)):
        if all(H.adjacent(perm[a], perm[b]) for a, b in G.edges):
            return perm
    return None


def graph_automorphism_count(G: FiniteGraph) -> int:
    return sum(1 for perm in permutations(range(G.n))
               if all(G.adjacent(perm[a], perm[b]) for a, b in G.edges))


def tri_adjacent(u: str, v: str) -> bool:
    if len(u) == len(v):
        raise W.LengthMismatch("words of equal length are never adjacent")
    if len(u) > len(v):
        u, v = v, u
    return v[len(u)] == "1" and not any(u[i] == v[i] == "1" for i in range(len(u)))


def tri_perp(u: str, v: str) -> bool:
    if len(u) > len(v):
        u, v = v, u
    if any(u[i] == v[i] == "1" for i in range(len(u))):
        return True
    if "1" not in v[:len(u)]:
        return True
    return "1" not in u


def leaf_graph(S: Iterable[str]) -> tuple[FiniteGraph, list[str]]:
    """Graph induced on S, vertices ordered by length then lex."""
    ws = sorted(set(S), key=lambda w: (len(w), w))
    edges = [(i, j) for i, j in combinations(range(len(ws)), 2)
             if len(ws[i]) != len(ws[j]) and tri_adjacent(ws[i], ws[j])]
    return FiniteGraph.from_edges(len(ws), edges), ws


def tri_moves(cur: list[str]) -> list[tuple[tuple, list[str]]]:
    cur = sorted(cur)
    i = len(cur[0]) if cur else 0
    zero = "0" * i
    out = []
    for w in cur:
        if w == zero:
            continue
        near = [z for z in cur if z != w and not tri_perp(z, w)]
        if all(tri_perp(a, b) for a, b in combinations(near, 2)):
            out.append((("Leaf", w), [z + ("0" if tri_perp(z, w) else "1") for z in cur if z != w]))
    for w in cur:
        out.append((("Split", w), [z + "0" for z in cur] + [w + "1"]))
    if zero in cur:
        out.append((("FirstNeighbour",), [z + "0" for z in cur if z != zero] + [zero + "1"]))
    for v, w in combinations(cur, 2):
        if zero not in (v, w) and not tri_perp(v, w):
            out.append((("NewPerp", v, w), [z + ("1" if z in (v, w) else "0") for z in cur]))
    return out


def tri_validate(S: Iterable[str]) -> list[tuple[int, tuple]]:
    S = set(S)
    top = _antichain_and_top(S, "01")
    lv = _levels(S, top)
    return [(i, _classify(tri_moves(lv[i]), lv[i + 1], i)) for i in range(top)]


def tri_enumerate(H: FiniteGraph, max_levels: int) -> list[frozenset]:
    """Triangle-free types of depth <= max_levels whose members induce a copy of H."""
    if H.has_triangle():
        raise ValueError("H contains a triangle")
    if H.n < 1:
        raise ValueError("H must be nonempty")
    found = set()

    def walk(cur: list[str], leaves: tuple) -> None:
        if len(cur) == 1 and len(leaves) == H.n - 1:
            S = frozenset(leaves + (cur[0],))
            if S not in found:
                try:
                    tri_validate(S)
                except DiaryError:
                    pass
                else:
                    if graph_isomorphism(leaf_graph(S)[0], H) is not None:
                        found.add(S)
        if len(cur[0]) >= max_levels:
            return
        for ev, nxt in tri_moves(cur):
            if not nxt:
                continue
            extra = (ev[1],) if ev[0] == "Leaf" else ()
            if len(leaves) + len(extra) + len(nxt) > H.n:
                continue
            walk(sorted(nxt), leaves + extra)

    walk([""], ())
    return sorted(found, key=lambda S: sorted(S, key=lambda w: (len(w), w)))


def tri_degree_lower_bound(H: FiniteGraph, max_levels: int) -> int:
    """Labeled count of types found within the depth budget."""
    return len(tri_enumerate(H, max_levels)) * graph_automorphism_count(H)
