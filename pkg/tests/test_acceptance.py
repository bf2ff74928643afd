"""Acceptance checks, one per criterion.  Each prints a single PASS/FAIL line.

Run under pytest (lines appear in the live output) or directly with
``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from posetdiaries import coding as C
from posetdiaries import envelopes as V
from posetdiaries import posets as P
from posetdiaries import variants as T
from posetdiaries import words as W
from posetdiaries.cli import run
from posetdiaries.diaries import (DiaryError, big_ramsey_degree, codes, color_embedding, count_diaries,
                                  enumerate_diaries, find_labeled_diary, random_labeled_diary,
                                  sum_over_size, validate_diary)
from oracles import brute_triangle_types, naive_diaries

@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {detail}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return emit


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_c01_exact_small_diaries(report, capsys):
    def both():
        out = []
        for name in ("antichain:2", "chain:2"):
            run(["enumerate", "--poset", name])
            out.append(capsys.readouterr().out)
        return out
    (a2, c2), dt = timed(both)
    ok = a2 == "XR RXX\nXRX RX\n" and c2 == "XL RRX\nXLX RR\n" and dt < 0.1
    report(1, ok, f"T(A2)={a2.strip().splitlines()} T(C2)={c2.strip().splitlines()} in {dt:.3f}s (< 0.1s)")


def test_c02_counts(report):
    rows = []
    ok = True
    for Q, name, want, limit in [(P.chain(3), "C3", 52, 1), (P.antichain(3), "A3", 84, 1),
                                 (P.chain(4), "C4", 11000, 10), (P.antichain(4), "A4", 75642, 60)]:
        (lab, unl), dt = timed(lambda: count_diaries(Q))
        good = unl == want and dt < limit
        ok &= good
        rows.append(f"|T({name})|={unl} want {want} {dt:.2f}s<{limit}s{'' if good else ' MISMATCH'}")
    report(2, ok, "; ".join(rows))


def test_c03_totals(report):
    rows = []
    ok = True
    for n, want, limit in [(2, 4, 5), (3, 464, 5), (4, 1874880, 600)]:
        got, dt = timed(lambda: sum_over_size(n))
        ok &= got == want and dt < limit
        rows.append(f"size {n}: {got} want {want} {dt:.2f}s<{limit}s")
    report(3, ok, "; ".join(rows))


def test_c04_degrees(report):
    table = [(P.antichain(1), "A1", 1), (P.chain(1), "C1", 1), (P.antichain(2), "A2", 4), (P.chain(2), "C2", 2),
             (P.antichain(3), "A3", 504), (P.chain(3), "C3", 52), (P.antichain(4), "A4", 1816128),
             (P.chain(4), "C4", 11000)]
    got = {name: big_ramsey_degree(Q) for Q, name, _ in table}
    bad = [f"{name}={got[name]}!={want}" for _, name, want in table if got[name] != want]
    report(4, not bad, "all eight degrees exact" if not bad else ", ".join(bad))


def test_c05_coding_round_trip(report):
    def go():
        rng = random.Random(2024)
        posets = [Q for n in range(1, 5) for Q in P.enumerate_posets(n)]
        posets += [P.random_poset(rng.randint(1, 6), rng) for _ in range(100)]
        fails = 0
        for Q in posets:
            S, f = C.diarize(Q)
            try:
                validate_diary(S)
            except DiaryError:
                fails += 1
                continue
            if not codes(Q, f) or (Q.n <= 4 and not find_labeled_diary(Q, S, f)):
                fails += 1
        return len(posets), fails
    (count, fails), dt = timed(go)
    report(5, fails == 0 and count == 124 and dt < 30, f"{count} posets, {fails} failures, {dt:.2f}s (< 30s)")


def test_c06_subdiary_closure(report):
    def go():
        rng = random.Random(65)
        fails = 0
        for _ in range(1000):
            Q = P.random_poset(rng.randint(1, 4), rng)
            S, f = random_labeled_diary(Q, rng)
            sub = sorted(rng.sample(range(Q.n), rng.randint(1, Q.n)))
            typ, g = color_embedding(S, f, sub)
            try:
                validate_diary(typ)
            except DiaryError:
                fails += 1
                continue
            if not codes(Q.induced(sub), {i: g[v] for i, v in enumerate(sub)}):
                fails += 1
        return fails
    fails, dt = timed(go)
    report(6, fails == 0, f"1000 trials, {fails} failures, {dt:.2f}s")


def _related_triple(rng):
    """Three words sharing a random stem, so that ≺ chains actually occur."""
    stem = "".join(rng.choice("LXR") for _ in range(rng.randint(0, 6)))
    out = []
    for _ in range(3):
        tail = "".join(rng.choice("LXR") for _ in range(rng.randint(0, 12 - len(stem))))
        w = list(stem + tail)
        for _ in range(rng.randint(0, 2)):
            if w:
                w[rng.randrange(len(w))] = rng.choice("LXR")
        out.append("".join(w)[:12])
    return out


def test_c07_order_axioms(report):
    def go():
        rng = random.Random(7)
        fails = chains = safe = 0
        for t in range(100_000):
            if t % 2:
                u, v, w = ("".join(rng.choice("LXR") for _ in range(rng.randint(0, 12))) for _ in range(3))
            else:
                u, v, w = _related_triple(rng)
            i, j = W.precedes(u, v), W.precedes(v, w)
            if i is not None and j is not None:
                chains += 1
                k = W.precedes(u, w)
                fails += k is None or k > min(i, j)
            for a, b in ((u, v), (v, w), (u, w)):
                if W.precedes(a, b) is not None and W.lex_compare(a, b) != -1:
                    fails += 1
            ell = min(len(u), len(v))
            a, b = u[:ell], v[:ell]
            if W.lex_compare(a, b) == 1:
                a, b = b, a
            if a == b:
                continue
            c, c2 = rng.choice("LXR"), rng.choice("LXR")
            if W.RANK[c] > W.RANK[c2] or (c, c2) == ("L", "R"):
                continue
            safe += 1
            a2, b2 = a + c, b + c2
            fails += W.perp(a, b) != W.perp(a2, b2)
            fails += W.compatible(a, b) and not W.compatible(a2, b2)
            fails += W.is_prec(a, b) != W.is_prec(a2, b2)
        return fails, chains, safe
    (fails, chains, safe), dt = timed(go)
    report(7, fails == 0, f"1e5 triples ({chains} ≺-chains, {safe} safe extensions), {fails} failures, {dt:.2f}s")


def test_c08_cross_oracle(report):
    def go():
        bad = []
        for n in (1, 2, 3):
            for Q in P.enumerate_posets(n):
                if naive_diaries(Q) != set(enumerate_diaries(Q)):
                    bad.append(str(Q))
        return bad
    bad, dt = timed(go)
    report(8, not bad and dt < 60, f"8 posets with n <= 3, disagreements {bad or 'none'}, {dt:.2f}s (< 60s)")


def test_c09_devlin(report):
    def go():
        return [(len(T.devlin_enumerate(n)), len(T.devlin_naive(n)), T.devlin_enumerate(n) == T.devlin_naive(n))
                for n in (1, 2, 3)]
    rows, dt = timed(go)
    ok = [r[0] for r in rows] == [1, 2, 16] and all(r[2] for r in rows) and dt < 5
    report(9, ok, f"event/naive counts {[(a, b) for a, b, _ in rows]}, {dt:.2f}s (< 5s)")


def test_c10_triangle_free(report):
    K2 = T.FiniteGraph.from_edges(2, [(0, 1)])
    graphs = [T.FiniteGraph.from_edges(1, []), K2, T.FiniteGraph.from_edges(2, []),
              T.FiniteGraph.from_edges(3, [(0, 1), (1, 2)])]
    ok = True
    try:
        T.tri_validate({"10", "011"})
    except DiaryError:
        ok = False
    found = T.tri_enumerate(K2, 4)
    ok &= frozenset({"10", "011"}) in found
    total = 0
    for H, depth in zip(graphs, (3, 4, 4, 5)):
        got = T.tri_enumerate(H, depth)
        ok &= set(got) == brute_triangle_types(H, depth)
        for S in got:
            total += 1
            G, _ = T.leaf_graph(S)
            try:
                T.tri_validate(S)
            except DiaryError:
                ok = False
            ok &= T.graph_isomorphism(G, H) is not None and not G.has_triangle()
    report(10, ok, f"{{10, 011}} valid and found; {total} enumerated types all validate, induce H, and match brute force")


def test_c11_envelopes(report):
    def go():
        rng = random.Random(11)
        fails = trials = 0
        for ell in (1, 2, 3):
            full = V.all_words(ell)
            cases = [(full, e) for e in V.boring_extensions(full)] if ell == 1 else []
            for S, e in cases:
                trials += 1
                fails += not V.is_boring(full, V.extend_boring(S, e))
        while trials < 200 + 9:
            ell = rng.randint(1, 3)
            S = W.lex_sorted(rng.sample(V.all_words(ell), rng.randint(1, min(6, 3 ** ell))))
            if not all(W.compatible(a, b) for a, b in combinations(S, 2)):
                continue
            e = rng.choice(V.boring_extensions(S))
            trials += 1
            ell2 = rng.randint(ell, 3)
            try:
                out = V.extend_boring(S, e)
                lifted = V.lift_boring(out, ell, ell2)
            except V.EnvelopeError:
                fails += 1
                continue
            full = V.all_words(ell)
            fails += not V.is_boring(full, out) or [out[full.index(u)] for u in S] != list(e)
            fails += not V.is_boring(V.all_words(ell2), lifted)
        return trials, fails
    (trials, fails), dt = timed(go)
    report(11, fails == 0 and dt < 60, f"{trials} (S, e) pairs over ℓ <= 3, {fails} failures, {dt:.2f}s (< 60s)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
