"""
From identities to hybrids of noncommensurable lattices
=======================================================

Walk through the chain for (p, t) = (5, 11/30): normality identities, the
finite quotient, the hybrid words, and the two arithmetic restrictions.
"""

# %%
from mostow_hybrids import build_group, quotient_presentation, todd_coxeter, verify_K_normal
from mostow_hybrids.arith import check_noncommensurable
from mostow_hybrids.fpgroup import quotient_chain, verify_hybrid_words
from mostow_hybrids.hybrid import HybridLabel, build_hybrid, theorem_suite
from mostow_hybrids.restrict import Gamma, triangle_signature

g = build_group(5, "11/30")

# %%
# K = <J R_i R_(i-1)> is normal: twelve matrix identities up to scalar.
print(all(c.passed for c in verify_K_normal(g)))

# %%
# Killing K leaves a quotient of the (2,3,5) triangle group; the Tietze
# steps each enumerate to 60 cosets.
for desc, pres in quotient_chain(5):
    print(todd_coxeter(pres).n, " ", desc)
print(quotient_presentation(5))

# %%
# The hybrid of the e1-perp and v312-perp stabilizers contains K.
h = build_hybrid(g, HybridLabel.G1_G312)
for c in h.conditions() + verify_hybrid_words(g):
    print(c.status, c.anchor)

# %%
# Both restrictions are arithmetic, in different commensurability classes.
s1, s2 = triangle_signature(Gamma.G1, g), triangle_signature(Gamma.G312, g)
v = check_noncommensurable(s1, s2)
print(v.verdict.value, v.evidence())

# %%
# The same chain packaged.
print(theorem_suite(g).verdicts)
