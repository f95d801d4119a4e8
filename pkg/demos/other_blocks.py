"""Moving the hook block to other weight-one blocks with the abacus."""

import numpy as np

from hookblock import abacus as ab
from hookblock import blockmap as bm
from hookblock import lr
from hookblock.partitions import Partition, to_text

p = 5
core = Partition((2,))
assert ab.is_p_core(core, p)
print(f"p={p}, core ({to_text(core)})")
for i in range(p):
    mu = ab.mu_index(core, p, i)
    print(f"  mu_{i} = ({to_text(mu)}), rim hook over {ab.rim_hook_rows(mu, core)} rows")

t = bm.weight1_block_tables(core, p)
print("order-preserving:", t["order_isomorphism"], " theta sends S_i to S_mu_i:", t["theta_on_costandards"])

tab = lr.lr_tableaux((4, 3, 3, 1), (2, 2), (4, 1, 1, 1))[0]
print("\nthe unique Yamanouchi filling of (4,3,3,1)/(2,2) with content (4,1,1,1):")
for row in tab.rows():
    print("  " + " ".join("." if v is None else str(v) for v in row))
print("  column word:", tab.column_word())

print("\nweight two at p=2: theta(S_(2,2)) =",
      {to_text(m): c for m, c in lr.theta_multiplicities(Partition((1,)), Partition((2, 2)), 2).items()})

rng = np.random.default_rng(7)
print("\nrandom 7-cores and their weight-one labels:")
for _ in range(3):
    c = ab.random_core(rng, 7, 30)
    print(f"  core ({to_text(c)}):", [to_text(ab.mu_index(c, 7, i)) for i in range(7)])
