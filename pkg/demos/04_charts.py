"""
Positive charts of the (3,6) configuration spaces
=================================================

For each of the four chirotope types a 3x6 matrix depending on four
positive parameters has all its maximal minors of a fixed sign, and
cross-ratios of the minors give the parameters back.
"""

from fractions import Fraction

from chirotrop.charts import CHARTS, evaluate_chart, maximal_minors, minor_sign_vector, recover_parameters

y = (Fraction(2), Fraction(1, 3), Fraction(5), Fraction(7, 2))
for t in sorted(CHARTS):
    M = evaluate_chart(t, y)
    chi = minor_sign_vector(M)
    back = recover_parameters(t, maximal_minors(M))
    print(f"type {t}: negatives {chi.negative_notation():36s} round trip {back == y}")
    for row in M:
        print("   ", "  ".join(f"{str(v):>10s}" for v in row))
