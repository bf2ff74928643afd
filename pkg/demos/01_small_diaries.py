# Poset-diaries for the two posets of size 2, level by level.
#
# A diary is a set of words over L < X < R.  Reading its closure one level at a
# time, each step is exactly one event: a leaf leaves, a word splits, or an
# unrelated pair becomes perpendicular or comparable.

from posetdiaries import posets, words
from posetdiaries.cli import render_ascii
from posetdiaries.diaries import enumerate_diaries, validate_diary

for name in ["antichain:2", "chain:2"]:
    Q = posets.builtin(name)
    print(f"== {name}: {Q}")
    for S in enumerate_diaries(Q):
        print("   diary", " ".join(words.lex_sorted(S)))
        print(render_ascii(S))

# a near miss: two words of the same maximal length is not a diary
try:
    validate_diary({"XR", "RX"})
except Exception as exc:
    print("{XR, RX} rejected:", exc)

# words carry the order directly; XL sits below RRX
print("precedes(XL, RRX) witness:", words.precedes("XL", "RRX"))
print("relation of LR and RL:", words.relation_summary("LR", "RL"))
