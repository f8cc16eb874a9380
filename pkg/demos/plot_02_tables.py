"""
Triangle groups on three complex lines
======================================

Restrict the line stabilizers to each line, read off the triangle group,
look up arithmeticity, and compare with the stored tables.
"""

# %%
from mostow_hybrids.restrict import Gamma, stabilizer_restrictions, triangle_signature
from mostow_hybrids.mostow import build_group
from mostow_hybrids.tables import diff_table, render_markdown_table

# %%
# For one pair: the two generators and their product, restricted to v312-perp.
g = build_group(5, "11/30")
chart, a, b, ma, mb, mp = stabilizer_restrictions(Gamma.G312, g)
sig, types = triangle_signature(Gamma.G312, g, detail=True)
print("A =", a.name, " B =", b.name)
print("types:", [str(t) for t in types], "->", sig)

# %%
# The full tables, regenerated from the generators.
for which in (2, 3, 4):
    print(f"Table {which}")
    print(render_markdown_table(which))

# %%
# Cell-level comparison with the golden copies. One cell of table 3 differs;
# the README explains why.
for which in (2, 3, 4):
    for c in diff_table(which):
        if not c.passed:
            print(c.id, c.certificate.get("diff"))
