# coding: utf-8

# # Counting increasing tableaux
#
# An increasing tableau of shape λ fills the diagram with strictly increasing
# rows and columns, using every value 1..N−k at least once. The deficit k counts
# how many labels are "missing" compared with a standard tableau.

from math import comb

from tabkit import Partition, enumerate_inc, hook_length_count
from tabkit.paths import enumerate_chain_paths, ascents, narayana_row, narayana_polynomial

# ## A first look at 2×3
#
# Five standard tableaux, five with one repeated value, one with two.

shape = Partition.rectangle(2, 3)
for k in range(3):
    tabs = enumerate_inc(shape, k)
    print(f"k={k}: {len(tabs)}")
    for t in tabs:
        print("   ", t.to_text())

# ## Narayana numbers from lattice paths
#
# Chain-ordered paths to (n,…,n) are counted by ascents. The closed form and
# the brute-force histogram agree.

m, n = 3, 3
hist = [0] * ((m - 1) * (n - 1) + 1)
for p in enumerate_chain_paths(m, n):
    hist[len(ascents(p))] += 1
print("brute force :", hist)
print("closed form :", narayana_row(m, n))

# ## Tableau counts as Narayana combinations
#
# |Inc_k(m×n)| is Σ_ℓ C(ℓ,k)·N(m,n,ℓ). Summing over k gives the Narayana
# polynomial at 2.

row = narayana_row(m, n)
for k in range(len(row)):
    predicted = sum(comb(ell, k) * row[ell] for ell in range(k, len(row)))
    print(f"k={k}: enumerated {len(enumerate_inc(Partition.rectangle(m, n), k)):>3}, predicted {predicted:>3}")
print("N_{3,3}(2) =", narayana_polynomial(m, n)(2))

# The standard count is the hook-length number; for 3×3 that is 42, and
# exactly 84 tableaux repeat one value.

print(hook_length_count(Partition.rectangle(3, 3)), len(enumerate_inc(Partition.rectangle(3, 3), 1)))
