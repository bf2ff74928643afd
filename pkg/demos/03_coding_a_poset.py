# From a poset to a diary that codes it, and back down to sub-diaries.
#
# phi places vertex j at a word of length 2j+2 that records how j relates to
# the earlier vertices.  diarize then squeezes the tree of phi-words into a
# diary, one event per level.

from posetdiaries import coding, posets, words
from posetdiaries.cli import render_ascii
from posetdiaries.diaries import codes, color_embedding, find_labeled_diary

Q = posets.builtin("diamond")
print("diamond:", Q)
for v in range(Q.n):
    print(f"  phi({v}) = {coding.phi(Q, v)}")

S, f = coding.diarize(Q)
print("\ndiary coding the diamond:", f)
print(render_ascii(S))
print("labeling is an isomorphism:", codes(Q, f))
print("found by the exhaustive search:", find_labeled_diary(Q, S, f))

# any subset of vertices carries its own diary: the embedding type of its words
for sub in ([0, 3], [1, 2], [0, 1, 3]):
    typ, g = color_embedding(S, f, sub)
    print(f"vertices {sub}: type {words.lex_sorted(typ)}  labels {g}")

# one-point extensions over the first two vertices of the 3-chain
ws, c = coding.type_words(posets.chain(3), 2)
print("\n1-types over 0 < 1:", words.lex_sorted(ws), " vertex 2 has", c)
