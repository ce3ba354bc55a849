# coding: utf-8

# # Bass numbers and local cohomology
#
# Three ways to the Bass numbers of a module, and local cohomology with
# several torus-invariant supports.

# In[1]:

from toric_syzygy import (FiltrationData, from_filtrations, free_resolution, bass_table,
                          injective_resolution, bass_from_gcd_lattice, SupportFamily,
                          support_local_cohomology, point_local_cohom_table)
from toric_syzygy.duality import bass_from_injective
from toric_syzygy.exactla import Subspace


# In[2]:

V = Subspace.full(2)
fd = FiltrationData(2, [[(0, Subspace([v], 2)), (1, V)] for v in ([1, 0], [0, 1], [1, 1])])
m = from_filtrations(fd)
res = free_resolution(m)
b = bass_table(m, res)
for (i, I, g), v in sorted(b.items(), key=str):
    print("mu^%d  support %-9s corner %s  x%d" % (i, I, g, v))


# In[3]:

inj = injective_resolution(m, res)
print("injective route agrees:", bass_from_injective(inj) == b)
print("gcd lattice route agrees:", bass_from_gcd_lattice(m) == b)


# In[4]:

table = point_local_cohom_table(m, res)
print(sorted(table.nonzero().items()))
for maximal in ([()], [(0,)], [(0, 1)], [(0, 1), (2,)]):
    W = SupportFamily.closure(3, maximal)
    print(maximal, support_local_cohomology(m, W, (-1, -1, -1), inj),
          support_local_cohomology(m, W, (0, 0, 0), inj))
