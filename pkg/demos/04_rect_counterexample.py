# coding: utf-8

# # The 3×3 rectangle does not sieve
#
# The natural q-analogue of |Inc_1(3×3)| = 84 fails to predict fixed points of
# K-promotion.

from tabkit.csp import rect_counterexample
from tabkit.polynomial import format_poly

rec = rect_counterexample()
print("X(q) =", format_poly(rec.polynomial))
print("X(1) =", rec.value_at_one)
print("promotion order:", rec.order)
print("fixed by two promotions:", rec.fixed_by_square)

# At a primitive 8th root ω, X(ω²) is a Gaussian integer, so it cannot count anything.

print("X(w^2) =", rec.value_at_omega2.describe(), "≈", rec.value_at_omega2.approx)
print(rec.report.to_table())
