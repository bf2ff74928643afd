# Two relatives of poset-diaries.
#
# Over {L, R} with only Leaf and Split events we get Devlin's types, counted by
# the tangent numbers 1, 2, 16, 272.  Over {0, 1} with the triangle-free events
# we get types for finite triangle-free graphs.

from posetdiaries import variants

for n in range(1, 5):
    print(f"Devlin types with {n} leaves: {len(variants.devlin_enumerate(n))}")
print("   n=2:", [sorted(S) for S in variants.devlin_enumerate(2)])

print("\nlog of {10, 011}:", variants.tri_validate({"10", "011"}))

edge = variants.FiniteGraph.from_edges(2, [(0, 1)])
non_edge = variants.FiniteGraph.from_edges(2, [])
path = variants.FiniteGraph.from_edges(3, [(0, 1), (1, 2)])
for name, H, depth in [("edge", edge, 4), ("non-edge", non_edge, 4), ("path", path, 5)]:
    found = variants.tri_enumerate(H, depth)
    print(f"{name}: {len(found)} types within {depth} levels, degree >= "
          f"{variants.tri_degree_lower_bound(H, depth)}")
    for S in found[:4]:
        print("   ", sorted(S, key=lambda w: (len(w), w)))
