# coding: utf-8

# # K-promotion on hooks and cyclic sieving
#
# K-promotion removes the 1s, slides the holes outward, decrements, and fills
# the holes with the new maximum.

from tabkit import validate
from tabkit.csp import hook_csp_report, lemma2_fiber_count
from tabkit.promotion import k_promote, orbit_decomposition, psi, psi_fiber
from tabkit.tableaux import Partition, content

t = validate([[1, 2, 4, 5], [2], [3], [5]])
for _ in range(5):
    print(t.to_text(), content(t).alpha)
    t = k_promote(t)

# Each step rotates the content vector. On Inc_1(4,1,1) every orbit has length 4.

orbs = orbit_decomposition(Partition.hook(6, 2), 1)
print([o.period for o in orbs])

# ## The sieving polynomial
#
# For Inc_k(N−r,1^r) the polynomial [N−k−1 r]_q [r k]_q evaluated at powers of a
# primitive (N−k−1)-th root counts fixed points.

print(hook_csp_report(6, 2, 1).to_table())
print()
print(hook_csp_report(8, 3, 2).to_table())

# ## Fibers of ψ
#
# ψ forgets the repeated column values. Over a fixed standard tableau there are
# C(r,k) preimages; 3 of these 15 keep their content under four promotions.

s = validate([[1, 4, 8], [2], [3], [5], [6], [7], [9]])
fiber = psi_fiber(s, 2)
print(len(fiber), all(psi(u) == s for u in fiber), lemma2_fiber_count(s, 11, 6, 2, 4))
