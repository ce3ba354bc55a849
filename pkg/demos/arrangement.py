# coding: utf-8

# # Hyperplane arrangements
#
# Five planes in K^3. The Betti numbers of the module built from the
# arrangement are beta invariants of its intersection lattice.

# In[1]:

from toric_syzygy import Arrangement, intersection_lattice, predicted_betti, predicted_local_cohom
from toric_syzygy import free_resolution, betti_table, point_local_cohom_table
from toric_syzygy.arrangement import beta


# In[2]:

normals = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1]]
shifts = [(0, 1), (0, 2), (1, 2), (0, 1), (-1, 1)]
a = Arrangement(normals, shifts)
L = intersection_lattice(a)
for X in L:
    print("dim %d  degree %s  beta %d" % (X.dim, a.degree(X), beta(L, X) if X.dim else 0))


# In[3]:

m = a.module()
res = free_resolution(m)
print("computed  ", sorted(betti_table(res).items()))
print("predicted ", sorted(predicted_betti(a).items()))


# Local cohomology at the fixed point, on the gcd lattice of the shifted
# intersection degrees.

# In[4]:

pred, G = predicted_local_cohom(a)
table = point_local_cohom_table(m, res)
for d in sorted(table.nonzero()):
    print(d, table.values[d], pred[d])
