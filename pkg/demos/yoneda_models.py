"""The two Yoneda algebras of the block, as models and as chain maps."""

from hookblock import closed_forms as cf
from hookblock import complexes as cx

p = 3
A = cf.model_schur_yoneda(p)
B = cf.model_simple_yoneda(p)
print(f"Ext*(S,S) model: dim {A.dim}, graded {A.graded_dims()}")
print(f"Ext*(F,F) model: dim {B.dim}, graded {B.graded_dims()}")

hom, anti, bij = cf.square_zero_iso(p)
lit = cf.square_zero_iso(p, reflect=False)
print(f"\nreflected matrix-unit map: homomorphism={hom}, bijective={bij}")
print(f"literal matrix-unit map: homomorphism={lit[0]}, reverses products={lit[1]}")

for i in range(p):
    r = cf.truncated_poly_iso(i, p)
    print(f"e_{i} B e_{i} is a truncated polynomial ring in degree 2: {r['status']}")

g = cx.chain_map_gamma(2, 0, p)
print(f"\n{g.name} has degree {g.t}; null-homotopic: {cx.null_homotopy(g) is not None}")
for fam in ("schur", "simple"):
    rep = cx.formality_certificate(fam, p)
    print(f"formality certificate ({fam}): {rep['status']}, cocycles per degree {rep['witness-dims']['per_degree']}")
