"""
Tropical Pluecker vectors and chirotopes
========================================

Three-term relations, the two membership tests, and how a chirotope
singles out one term of every relation.
"""

from chirotrop import Chirotope, PlueckerVector, generate_three_term, satisfy_eqn, satisfy_eqn_chi
from chirotrop.chirotope import lone_terms, parse_negative_triple_notation
from chirotrop.membership import chi_violation, first_violation

# the 30 relations of (3,6)
rel = generate_three_term(3, 6)
print(len(rel), "relations; the first one:")
print(" ", rel[0])

# e_123 is a tropical Pluecker vector, -e_123 is not
e123 = PlueckerVector.unit(3, 6, (1, 2, 3))
print("e_123 in Dr(3,6):", satisfy_eqn(e123, rel))
print("-e_123 in Dr(3,6):", satisfy_eqn(-e123, rel), "| fails at", first_violation(-e123, rel))

# under the all-plus chirotope the middle term is always the lone one
pos = Chirotope.positive(3, 6)
print("lone terms of +:", set(lone_terms(pos.array(), rel).tolist()))

# so a unit vector on a middle-term subset is ruled out
e124 = PlueckerVector.unit(3, 6, (1, 2, 4))
print("e_124 in Dr^+(3,6):", satisfy_eqn_chi(pos, e124, rel), "| fails at", chi_violation(pos, e124, rel))

# another chirotope moves the lone terms around
chi = parse_negative_triple_notation("356,456", 3, 6)
print("chirotope", chi.negative_notation(), "lone-term counts:",
      {j: int((lone_terms(chi.array(), rel) == j).sum()) for j in range(3)})
print("e_124 in Dr^chi(3,6):", satisfy_eqn_chi(chi, e124, rel))
