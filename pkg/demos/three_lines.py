# coding: utf-8

# # Three lines in the plane
#
# A module over K[x, y, z] from three filtrations of V = K^2. Coordinate k
# is 0 below degree 0, the line V_k on [0, 1) and all of V from 1 on.

# In[1]:

from fractions import Fraction

from toric_syzygy import FiltrationData, from_filtrations, free_resolution, betti_table
from toric_syzygy.exactla import Subspace
from toric_syzygy.gradedmod import bounding_box, verify_exactness


# In[2]:

V = Subspace.full(2)
lines = [Subspace([[1, 0]], 2), Subspace([[0, 1]], 2), Subspace([[1, Fraction(-1)]], 2)]
fd = FiltrationData(2, [[(0, X), (1, V)] for X in lines])
m = from_filtrations(fd)
print("lattice", sorted(m.lattice))
print("dims   ", [m.rep.dims[c] for c in sorted(m.lattice)])


# E_c is the intersection of the filtration pieces at c: at (1,1,0) only
# the third coordinate is still below its second step, so E_c is the third
# line; at (1,1,1) it is all of V.

# In[3]:

res = free_resolution(m)
for (i, I, c), b in sorted(betti_table(res).items()):
    print("beta_%d%s = %d" % (i, c, b))


# Three generators in degree 1 and one relation at (1,1,1): three lines in
# a plane have one linear dependency.

# In[4]:

print("exact on box:", verify_exactness(res, bounding_box(res, 1)))
print("differential:", res.differentials[0])
