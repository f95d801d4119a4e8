"""A walk through the hook block at p = 3.

Builds the Omega complexes, the Schur and simple functors inside them, and
recomputes a few Ext groups from resolutions next to their closed forms.
"""

from hookblock import closed_forms as cf
from hookblock import complexes as cx
from hookblock.partitions import hook_partition, to_text

p = 3
B = cx.hook_block(p)

print(f"hook block at p={p}, evaluated on k^{p}")
for i in range(p):
    S, F = B.schur(i)[0], B.simple(i)[0]
    print(f"  i={i}: hook ({to_text(hook_partition(p, i))})  dim S={S.dim}  dim F={F.dim}  dim Omega={B.omega(i).dim}")

print("\nKoszul complex homology:", cx.koszul_complex(p).homology_dims() or "acyclic")
print("de Rham complex homology:", cx.derham_complex(p).homology_dims())

print("\nExt from resolutions against the closed forms")
for X, Y in [("F:0", "F:0"), ("S:0", "W:0"), ("F:1", "S:2"), ("W:0", "F:1")]:
    got = cx.ext_oracle(X, Y, p).as_dict()
    want = cf.ext_table(X, Y, p).as_dict()
    print(f"  Ext*({X}, {Y}) = {got}   closed form {want}")

print("\ndecomposition matrix [W_l : F_m]:")
print(cf.decomposition_by_characters(p))
