"""Finite enumerated strict partial orders on {0, ..., n-1}."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from . import words as W

AUT_BOUND = 10
CATALOG_BOUND = 5


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class FinitePoset:
    n: int
    below: frozenset  # pairs (a, b) with a <_P b

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "FinitePoset":
        rel = [[False] * n for _ in range(n)]
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise PosetError(f"pair ({a}, {b}) outside 0..{n - 1}")
            rel[a][b] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    for j in range(n):
                        if rel[k][j]:
                            rel[i][j] = True
        for i in range(n):
            if rel[i][i]:
                raise PosetError(f"cycle through vertex {i}")
        return cls(n, frozenset((a, b) for a in range(n) for b in range(n) if rel[a][b]))

    def lt(self, a: int, b: int) -> bool:
        return (a, b) in self.below

    def comparable(self, a: int, b: int) -> bool:
        return (a, b) in self.below or (b, a) in self.below

    @cached_property
    def matrix(self) -> tuple:
        return tuple(tuple((a, b) in self.below for b in range(self.n)) for a in range(self.n))

    @cached_property
    def up_mask(self) -> tuple:
        """Bitmask of the strict up-set of each vertex."""
        return tuple(sum(1 << b for b in range(self.n) if (a, b) in self.below) for a in range(self.n))

    @cached_property
    def down_mask(self) -> tuple:
        return tuple(sum(1 << a for a in range(self.n) if (a, b) in self.below) for b in range(self.n))

    def relabel(self, perm: Sequence[int]) -> "FinitePoset":
        """Image under the vertex map ``v -> perm[v]``."""
        return FinitePoset(self.n, frozenset((perm[a], perm[b]) for a, b in self.below))

    def induced(self, vertices: Sequence[int]) -> "FinitePoset":
        """Subposet on ``vertices``, renumbered in the given order."""
        idx = {v: i for i, v in enumerate(vertices)}
        return FinitePoset(
            len(vertices),
            frozenset((idx[a], idx[b]) for a, b in self.below if a in idx and b in idx),
        )

    def __str__(self) -> str:
        return format_poset(self)


def chain(n: int) -> FinitePoset:
    return FinitePoset.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> FinitePoset:
    return FinitePoset(n, frozenset())


BUILTINS = {
    "diamond": (4, [(0, 1), (0, 2), (1, 3), (2, 3)]),
    "vee": (3, [(0, 1), (0, 2)]),
    "wedge": (3, [(0, 2), (1, 2)]),
    "chain+point": (3, [(0, 1)]),
}


def builtin(name: str) -> FinitePoset:
    kind, _, arg = name.partition(":")
    if kind in ("chain", "antichain") and arg:
        try:
            n = int(arg)
        except ValueError:
            raise PosetError(f"bad size in {name!r}") from None
        if n < 1:
            raise PosetError(f"size must be positive in {name!r}")
        return chain(n) if kind == "chain" else antichain(n)
    if name in BUILTINS:
        n, pairs = BUILTINS[name]
        return FinitePoset.from_pairs(n, pairs)
    raise PosetError(f"unknown builtin poset {name!r}")


def parse_poset(text: str) -> FinitePoset:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise PosetError(f"line {lineno}: expected vertex count, got {line!r}") from None
            if n < 0:
                raise PosetError(f"line {lineno}: negative vertex count")
            continue
        parts = line.split()
        if len(parts) != 3 or parts[1] != "<":
            raise PosetError(f"line {lineno}: expected 'i < j', got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[2])
        except ValueError:
            raise PosetError(f"line {lineno}: vertices must be integers") from None
        if not (0 <= a < n and 0 <= b < n):
            raise PosetError(f"line {lineno}: vertex out of range 0..{n - 1}")
        pairs.append((a, b))
    if n is None:
        raise PosetError("empty poset description")
    return FinitePoset.from_pairs(n, pairs)


def load_poset(text: str) -> FinitePoset:
    """Parse a poset file body, or a builtin name such as ``chain:3``."""
    stripped = text.strip()
    if "\n" not in stripped and not stripped.isdigit():
        return builtin(stripped)
    return parse_poset(text)


def format_poset(P: FinitePoset) -> str:
    lines = [str(P.n)] + [f"{a} < {b}" for a, b in sorted(P.below)]
    return "\n".join(lines) + "\n"


# -- isomorphism -----------------------------------------------------------

def _signature(P: FinitePoset, v: int) -> tuple[int, int]:
    return (bin(P.down_mask[v]).count("1"), bin(P.up_mask[v]).count("1"))


def _isomorphisms(P: FinitePoset, Q: FinitePoset) -> Iterator[tuple[int, ...]]:
    if P.n != Q.n or len(P.below) != len(Q.below):
        return
    n = P.n
    sp = [_signature(P, v) for v in range(n)]
    sq = [_signature(Q, v) for v in range(n)]
    if sorted(sp) != sorted(sq):
        return
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(image)
            return
        for w in range(n):
            if used[w] or sq[w] != sp[v]:
                continue
            if any(P.lt(u, v) != Q.lt(image[u], w) or P.lt(v, u) != Q.lt(w, image[u]) for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            yield from extend(v + 1)
            used[w] = False
        image[v] = -1

    yield from extend(0)


def is_isomorphic(P: FinitePoset, Q: FinitePoset) -> tuple[int, ...] | None:
    """Vertex bijection f with a <_P b iff f(a) <_Q f(b), or None."""
    return next(_isomorphisms(P, Q), None)


def automorphisms(P: FinitePoset) -> Iterator[tuple[int, ...]]:
    if P.n > AUT_BOUND:
        raise PosetError(f"automorphism search limited to n <= {AUT_BOUND}, got {P.n}")
    return _isomorphisms(P, P)


def automorphism_count(P: FinitePoset) -> int:
    return sum(1 for _ in automorphisms(P))


def canonical_form(P: FinitePoset) -> tuple:
    """Lexicographically least relation matrix (row-major bits) over all relabelings."""
    n = P.n
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(int(P.lt(perm[a], perm[b])) for a in range(n) for b in range(n))
        if best is None or key < best:
            best = key
    return best


def _from_canonical(n: int, key: tuple) -> FinitePoset:
    return FinitePoset(n, frozenset((a, b) for a in range(n) for b in range(n) if key[a * n + b]))


def enumerate_posets(n: int) -> list[FinitePoset]:
    """One poset per isomorphism class on n points, in canonical order."""
    if n > CATALOG_BOUND:
        raise PosetError(f"catalog limited to n <= {CATALOG_BOUND}, got {n}")
    if n < 0:
        raise PosetError("negative size")
    # every poset has a linear extension, so naturally labelled ones cover all classes
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    keys = set()
    for bits in range(1 << len(pairs)):
        chosen = {pairs[i] for i in range(len(pairs)) if bits >> i & 1}
        if any((a, c) not in chosen for a, b in chosen for b2, c in chosen if b == b2):
            continue
        keys.add(canonical_form(FinitePoset(n, frozenset(chosen))))
    return [_from_canonical(n, k) for k in sorted(keys, key=lambda k: (sum(k), k))]


def random_poset(n: int, rng, density: float = 0.4) -> FinitePoset:
    """Transitive closure of a random DAG under a shuffled vertex order."""
    order = list(range(n))
    rng.shuffle(order)
    pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return FinitePoset.from_pairs(n, pairs)


# -- posets coded by words ---------------------------------------------------

def word_poset(S: Iterable[str]) -> tuple[FinitePoset, list[str]]:
    """The order ≺ on S; vertex i is the i-th word of S in lex order."""
    ws = W.lex_sorted(set(S))
    pairs = [(i, j) for i, u in enumerate(ws) for j, v in enumerate(ws) if i != j and W.is_prec(u, v)]
    return FinitePoset.from_pairs(len(ws), pairs), ws
