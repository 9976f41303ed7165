"""Run the construction on one small graph per case and show what comes out.

    python3 demos/walkthrough_cases.py
"""

from antimagic import antimagic_orientation
from antimagic.generate import named_instances

SHOW = ["K_1_3", "C8", "K_3_3", "K_4_4", "t2_s3_mixed_trails", "t2_s4_mixed_cycles", "t2_s6_mixed_cycles"]

catalog = named_instances()
for name in SHOW:
    g = catalog[name]
    orient, labels, tag, report = antimagic_orientation(g)
    xs, ys = report.sums.x_sums, report.sums.y_sums
    print(f"{name:22s} case {tag!s:11s} |E|={g.edge_count:3d} reversed={len(orient.reversed_edges()):2d}")
    print(f"    X sums {min(xs)}..{max(xs)}   Y sums {min(ys)}..{max(ys)}   ok={report.ok}")

# The smallest cases are easy to read in full.
g = catalog["K_3_3"]
orient, labels, _, report = antimagic_orientation(g)
print("\nK_3_3, every arc X -> Y:")
for e, (x, y) in enumerate(g.edges):
    print(f"  x{x} -> y{y}  label {labels[e]}")
print("  X sums", report.sums.x_sums, " Y sums", report.sums.y_sums)
