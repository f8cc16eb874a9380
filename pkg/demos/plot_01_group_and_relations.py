"""
A Mostow group from its generators
==================================

Build the group for one admissible pair, check its defining relations
exactly, and look at a few elements.
"""

# %%
# Everything lives in a cyclotomic field; for p = 3, t = 1/12 it is Q(zeta_72).
from fractions import Fraction

from mostow_hybrids import admissible_pairs, build_group, classify, projective_order, verify_relations
from mostow_hybrids.mostow import polar_norm_signs

g = build_group(3, Fraction(1, 12))
print(g, "over", g.field, "of degree", g.field.degree)
print("phase shift:", g.phase.value)

# %%
# The form has signature (2, 1), decided from exact minors.
print("signature of H:", g.form.signature())

# %%
# Relations: J^3, R_i^p, braids, and J R_i J^-1 = R_(i+1), all up to scalar.
for c in verify_relations(g):
    print(f"{c.status:4}  {c.certificate['relation']}")

# %%
# Elements are classified from |tr|^2 and tr^3 conj(det), so no cube roots.
for w in ["R1", "J", "R1 R2", "J R1 R3", "R1^2 R2^-1 R3"]:
    a = g.word(w)
    print(f"{w:15} {classify(a).tag.value:18} order {projective_order(a)}")

# %%
# The six polar vectors: three are always positive, the other three change
# sign with the phase.
print(polar_norm_signs(g))

# %%
# The catalogue of admissible pairs ships as data.
for mp in admissible_pairs():
    print(mp.key, mp.phase.value)
