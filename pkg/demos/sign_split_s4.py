"""Why the s = 4, t = 2 construction can leave some Y sums negative.

Every 6-or-longer cycle of length 2 mod 4 left after removing the 2-factor
gets its edge x1 yk reversed with label 2m - i + 1, while yk's other edge
carries only h + 2i.  So yk ends at -2m + h + 3i - 1, which is negative
unless the cycle index i is close to 2m/3.  The labeling is still
antimagic: all sums differ, they just do not split by sign.

    python3 demos/sign_split_s4.py
"""

from antimagic import antimagic_orientation, canonicalize
from antimagic.construction import t2_s_even_layout
from antimagic.generate import named_instances, random_grid_instances

g = named_instances()["t2_s4_mixed_cycles"]
canon, prof = canonicalize(g)
lay = t2_s_even_layout(canon, prof)
_, _, tag, report = antimagic_orientation(g)
h, m = len(lay.mod2_cycles), prof.m
print(f"case {tag}: m={m}, h={h} cycles of length 2 mod 4, verified {report.ok}")
for i, c in enumerate(lay.mod2_cycles, start=1):
    y1, yk = c.ys[0], c.ys[-1]
    print(
        f"  cycle {i} (length {c.length}): y1 sum {report.sums.y_sums[y1]:4d} (h+i-1 = {h + i - 1}),"
        f" yk sum {report.sums.y_sums[yk]:4d} (-2m+h+3i-1 = {-2 * m + h + 3 * i - 1})"
    )

# How often does it happen on random instances?
total = negative = 0
for g in random_grid_instances(4, 2, 200, seed=1):
    _, _, _, rep = antimagic_orientation(g)
    assert rep.ok
    total += 1
    negative += not rep.sign_split_ok
print(f"\n{negative}/{total} random s=4 instances have a negative Y sum; all {total} are antimagic")
