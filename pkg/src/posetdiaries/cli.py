"""Command-line front end: ``python -m posetdiaries <command> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import coding, envelopes, posets, variants
from . import words as W
from .diaries import events as E
from .diaries import degrees, search

OK, INVALID, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None


def _poset(source: str) -> posets.FinitePoset:
    try:
        if os.path.exists(source):
            return posets.parse_poset(_read(source))
        return posets.builtin(source)
    except posets.PosetError as exc:
        raise UsageError(f"{source}: {exc}") from None


def _words(path: str) -> list[str]:
    try:
        ws, _ = E.parse_diary(_read(path))
    except E.DiaryError as exc:
        raise UsageError(f"{path}: {exc}") from None
    return ws


def render_ascii(S) -> str:
    log = E.validate_diary(S)
    levels = E.closure_levels(S)
    members = set(S)
    width = len(str(len(levels)))
    notes = [str(x.event) for x in log] + ["end"]
    pad = max(len(x) for x in notes)
    rows = []
    for i, lv in enumerate(levels):
        cells = " ".join(f"[{W.format_word(w)}]" if w in members else W.format_word(w) for w in lv)
        rows.append(f"{i:>{width}} | {notes[i]:<{pad}} | {cells}")
    return "\n".join(rows) + "\n"


def render_dot(S) -> str:
    E.validate_diary(S)
    members = set(S)
    cl = W.lex_sorted(W.closure(S))
    ids = {w: f"n{i}" for i, w in enumerate(cl)}
    lines = ["digraph diary {", "  rankdir=BT;"]
    for w in cl:
        style = ', style=filled, fillcolor="gold"' if w in members else ""
        lines.append(f'  {ids[w]} [label="{W.format_word(w)}"{style}];')
    for w in cl:
        if w:
            lines.append(f'  {ids[w[:-1]]} -> {ids[w]} [label="{w[-1]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    ws = _words(args.file)
    check = {"poset": E.validate_diary, "devlin": variants.devlin_validate,
             "triangle": variants.tri_validate}[args.variant]
    try:
        log = check(ws)
    except E.DiaryError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return INVALID
    if args.variant == "poset":
        print(E.event_log_json(log))
    else:
        print(json.dumps([{"level": i, "kind": ev[0], "words": list(ev[1:])} for i, ev in log]))
    return OK


def cmd_enumerate(args) -> int:
    Q = _poset(args.poset)
    if args.count_only:
        labeled, unlabeled = degrees.count_diaries(Q, bound=args.bound)
        n = labeled if args.labeled else unlabeled
        _emit(args, {"count": n, "labeled": args.labeled}, f"{n}\n")
        return OK
    if args.labeled:
        items = sorted(search.enumerate_labeled_diaries(Q, bound=args.bound),
                       key=lambda sf: (search.diary_sort_key(sf[0]), sorted(sf[1].items())))
        if args.json:
            print(json.dumps([{str(v): W.format_word(w) for v, w in sorted(f.items())} for _, f in items]))
        else:
            for _, f in items:
                print(" ".join(f"{v}:{W.format_word(w)}" for v, w in
                               sorted(f.items(), key=lambda kv: W.lex_key(kv[1]))))
        return OK
    diaries = search.enumerate_diaries(Q, bound=args.bound)
    if args.json:
        print(json.dumps([[W.format_word(w) for w in W.lex_sorted(S)] for S in diaries]))
    else:
        for S in diaries:
            print(" ".join(W.format_word(w) for w in W.lex_sorted(S)))
    return OK


def cmd_degree(args) -> int:
    Q = _poset(args.poset)
    t0 = time.perf_counter()
    labeled, unlabeled = degrees.count_diaries(Q, bound=args.bound)
    aut = posets.automorphism_count(Q)
    ms = round((time.perf_counter() - t0) * 1000, 3)
    payload = {"labeled": labeled, "unlabeled": unlabeled, "aut": aut, "poset": args.poset, "elapsed_ms": ms}
    _emit(args, payload, f"degree {labeled} = {unlabeled} diaries x {aut} automorphisms\n")
    return OK


def cmd_sum(args) -> int:
    total = degrees.sum_over_size(args.size, bound=args.bound, threads=args.threads)
    _emit(args, {"size": args.size, "diaries": total}, f"{total}\n")
    return OK


def cmd_diarize(args) -> int:
    S, f = coding.diarize(_poset(args.poset))
    sys.stdout.write(E.format_diary(S, f))
    return OK


def cmd_tau(args) -> int:
    ws = _words(args.file)
    typ, mapping = envelopes.tau(ws)
    for w in W.lex_sorted(mapping):
        print(f"{W.format_word(w)}\t{W.format_word(mapping[w])}")
    return OK


def cmd_phi(args) -> int:
    Q = _poset(args.poset)
    for v in range(Q.n):
        print(f"{v}\t{W.format_word(coding.phi(Q, v))}")
    return OK


def cmd_types(args) -> int:
    Q = _poset(args.poset)
    try:
        ws, c = coding.type_words(Q, args.level)
    except IndexError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps({"words": [W.format_word(w) for w in W.lex_sorted(ws)],
                          "coding": None if c is None else W.format_word(c)}))
    else:
        for w in W.lex_sorted(ws):
            print(W.format_word(w) + ("\t*" if w == c else ""))
    return OK


def cmd_triangle(args) -> int:
    try:
        H = variants.parse_graph(_read(args.graph))
        found = variants.tri_enumerate(H, args.max_levels)
    except ValueError as exc:
        raise UsageError(f"{args.graph}: {exc}") from None
    bound = len(found) * variants.graph_automorphism_count(H)
    if args.json:
        print(json.dumps({"types": [sorted(S, key=lambda w: (len(w), w)) for S in found],
                          "count": len(found), "degree_lower_bound": bound, "max_levels": args.max_levels}))
    else:
        for S in found:
            print(" ".join(W.format_word(w) for w in sorted(S, key=lambda w: (len(w), w))))
        print(f"# {len(found)} types within {args.max_levels} levels; degree >= {bound}")
    return OK


def cmd_devlin(args) -> int:
    try:
        found = variants.devlin_enumerate(args.n)
    except E.DiaryError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps({"n": args.n, "count": len(found)}))
    else:
        for S in found:
            print(" ".join(W.format_word(w) for w in sorted(S, key=lambda w: w.translate(str.maketrans("LR", "01")))))
        print(f"# {len(found)}")
    return OK


def cmd_render(args) -> int:
    ws = _words(args.file)
    try:
        out = render_ascii(ws) if args.format == "ascii" else render_dot(ws)
    except E.DiaryError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return INVALID
    sys.stdout.write(out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetdiaries", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("validate", cmd_validate, "check a diary file and print its event log")
    p.add_argument("file")
    p.add_argument("--variant", choices=["poset", "devlin", "triangle"], default="poset")

    p = add("enumerate", cmd_enumerate, "list T(Q) or T^lab(Q)")
    p.add_argument("--poset", required=True)
    p.add_argument("--labeled", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--bound", type=int, default=search.DEFAULT_BOUND)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p = add("degree", cmd_degree, "big Ramsey degree of a poset")
    p.add_argument("--poset", required=True)
    p.add_argument("--bound", type=int, default=search.DEFAULT_BOUND)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p = add("sum", cmd_sum, "number of diaries over all posets of one size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--bound", type=int, default=degrees.SUM_BOUND)
    p.add_argument("--threads", type=int, default=1)

    p = add("diarize", cmd_diarize, "labeled diary coding a poset")
    p.add_argument("--poset", required=True)

    p = add("tau", cmd_tau, "embedding type of a word set")
    p.add_argument("file")

    p = add("phi", cmd_phi, "phi-words of a poset")
    p.add_argument("--poset", required=True)

    p = add("types", cmd_types, "one-point extension words at a level")
    p.add_argument("--poset", required=True)
    p.add_argument("--level", type=int, required=True)

    p = add("triangle", cmd_triangle, "triangle-free types of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-levels", type=int, required=True)

    p = add("devlin", cmd_devlin, "Devlin types with n leaves")
    p.add_argument("--n", type=int, required=True)

    p = add("render", cmd_render, "draw a diary")
    p.add_argument("file")
    p.add_argument("--format", choices=["ascii", "dot"], default="ascii")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, search.BoundError, posets.PosetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())
