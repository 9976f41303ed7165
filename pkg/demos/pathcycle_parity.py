"""The family labeler needs an even number of trails of length 2 mod 4.

Endpoint increments on the 0-mod-4 trails are computed from the labels
already used, and those sums are even only when the count p of 2-mod-4
trails is even.  With p odd an endpoint sum can land on an interior Y sum.
The constructions never hit this: with s odd the parity of p is forced
even, and with s even p = 0.

    python3 demos/pathcycle_parity.py
"""

from collections import Counter

from antimagic.decomposition import DecompositionPlan, Trail
from antimagic.gadgets import label_family
from antimagic.graph import BipartiteGraph

# one 6-edge trail (p = 1) and one 4-edge trail (q = 1)
g = BipartiteGraph(7, 7, ((6, 0), (6, 1), (4, 1), (4, 2), (3, 2), (3, 3), (3, 4), (3, 5), (6, 5), (6, 6)))
t6 = Trail((0, 1, 2, 3, 4, 5), (0, 1, 2, 3), (6, 4, 3))
t4 = Trail((6, 7, 8, 9), (4, 5, 6), (3, 6))
res = label_family(DecompositionPlan(mod2_trails=(t6,), mod0_trails=(t4,)), 3, 12)

ys = Counter()
for e, lab in res.labels.items():
    ys[g.edges[e][1]] += lab
for ex in res.endpoint_expectations:
    ys[ex.y] += ex.increment
print("labels:", [res.labels[e] for e in range(10)])
print("Y sums with endpoint increments:", [ys[y] for y in range(7)])
dup = [v for v, c in Counter(ys.values()).items() if c > 1]
print("repeated values:", dup)
