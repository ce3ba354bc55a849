# coding: utf-8

# # MCM modules over a Z/3 quotient singularity
#
# A cone with class group Z/3. Cuboids of degrees that miss the image of
# L: M -> Z^3 give maximal Cohen-Macaulay modules.

# In[1]:

from toric_syzygy import (SimplicialCone, class_group, enumerate_singleton_classes,
                          enumerate_cuboid_classes, mcm_check, full_verify)
from toric_syzygy.toricmcm import symmetry_orbits


# In[2]:

cone = SimplicialCone([[1, 0, 1], [0, 1, 1], [-1, -1, 1]])
A = class_group(cone)
print("det", cone.det, "invariants", A.invariants)
print("(1,1,0) ->", A.class_of((1, 1, 0)), " (2,2,0) ->", A.class_of((2, 2, 0)))


# In[3]:

for c in enumerate_singleton_classes(cone):
    print("singleton", c, "class", A.class_of(c.i1))


# In[4]:

found = enumerate_cuboid_classes(cone, 2)
for c in found:
    v = full_verify(cone, c)
    print(c.shape, c.cuboid(), "mcm", mcm_check(cone, c), v["mcm"])
print(len(found), "classes in", len(symmetry_orbits(cone, found)), "symmetry orbits")
