# coding: utf-8

# # Tableaux, paths and Schröder paths
#
# Reading a tableau value by value gives a lattice path: step i moves every
# coordinate whose row contains i. Repeated values become multi-coordinate steps.

from tabkit import validate
from tabkit.bijections import inc_to_schroder, phi, phi_fiber, schroder_to_inc
from tabkit.paths import enumerate_schroder
from tabkit.tableaux import Partition, enumerate_all_inc

# ## Collapsing to a standard tableau
#
# φ removes repeated values one at a time. The fiber over a standard tableau
# with ℓ ascents has C(ℓ,k) elements.

t = validate([[1, 3, 4], [2, 4, 5], [4, 5, 6]])
s = phi(t)
print(t.to_text(), "->", s.to_text())
for u in phi_fiber(s, 3):
    print("  fiber:", u.to_text())

# ## A two-row example
#
# The repeated 4 and 5 give two diagonal steps.

p = inc_to_schroder(validate([[1, 3, 4, 5], [2, 4, 5, 6]]))
print("steps    :", p.vectors())
print("positions:", p.positions())

# ## The bijection on 3×3
#
# Every increasing 3×3 tableau maps to a distinct small Schröder path, and the
# inverse recovers it.

tabs = enumerate_all_inc(Partition.rectangle(3, 3))
paths = {inc_to_schroder(t) for t in tabs}
small = enumerate_schroder(3, 3, small=True)
print(len(tabs), len(paths), len(small))
assert paths == set(small)
assert all(schroder_to_inc(inc_to_schroder(t)) == t for t in tabs)
