"""Diary counts, big Ramsey degrees and the induced-subdiary colouring."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Mapping

from .. import envelopes
from .. import posets as P
from .events import DiaryError, validate_diary
from .search import DEFAULT_BOUND, BoundError, count_labeled

SUM_BOUND = 4


def count_diaries(Q: P.FinitePoset, bound: int = DEFAULT_BOUND) -> tuple[int, int]:
    """(|T^lab(Q)|, |T(Q)|)."""
    labeled = count_labeled(Q, bound)
    aut = P.automorphism_count(Q)
    unlabeled, rest = divmod(labeled, aut)
    if rest:
        raise DiaryError(f"internal: {labeled} labeled diaries not divisible by |Aut| = {aut}")
    return labeled, unlabeled


def big_ramsey_degree(Q: P.FinitePoset, bound: int = DEFAULT_BOUND) -> int:
    """Degree counted over embeddings, |T(Q)|·|Aut(Q)|."""
    return count_diaries(Q, bound)[0]


def _unlabeled(Q: P.FinitePoset) -> int:
    return count_diaries(Q, bound=Q.n)[1]


def sum_over_size(n: int, bound: int = SUM_BOUND, threads: int = 1) -> int:
    """Σ |T(Q)| over isomorphism classes Q of size n."""
    if n > bound:
        raise BoundError(f"sum_over_size limited to n <= {bound}, got {n} (raise the bound to opt in)")
    classes = P.enumerate_posets(n)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return sum(pool.map(_unlabeled, classes))
    return sum(_unlabeled(Q) for Q in classes)


def color_embedding(base: Iterable[str], labeling: Mapping[int, str],
                    subset: Iterable[int]) -> tuple[set[str], dict[int, str]]:
    """Embedding type of the words labeled by ``subset``, with the induced labeling."""
    validate_diary(base)
    subset = list(subset)
    if not subset:
        raise DiaryError("subset must be nonempty")
    missing = [v for v in subset if v not in labeling]
    if missing:
        raise DiaryError(f"labels not present in the diary: {missing}")
    chosen = {labeling[v] for v in subset}
    typ, tmap = envelopes.tau(chosen)
    return typ, {v: tmap[labeling[v]] for v in subset}
