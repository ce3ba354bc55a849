# coding: utf-8

# # An artinian quotient
#
# S/(x^2, xy, y^2) given by its graded pieces: K in degrees (0,0), (1,0),
# (0,1) and zero elsewhere in the box [0, 2]^2.

# In[1]:

from toric_syzygy import from_box, free_resolution
from toric_syzygy.exactla import Matrix
from toric_syzygy.gradedmod import betti_numbers, bounding_box, verify_exactness
from toric_syzygy.lattice import generate_lcm_lattice


# In[2]:

one = Matrix.identity(1)
dead = Matrix.zeros(0, 1)
dims = {(0, 0): 1, (1, 0): 1, (0, 1): 1}
maps = {((0, 0), 0): one, ((0, 0), 1): one,
        ((1, 0), 0): dead, ((1, 0), 1): dead, ((0, 1), 0): dead, ((0, 1), 1): dead}
m = from_box((0, 0), (2, 2), dims, maps)
print(sorted(m.lattice))


# The same lattice comes out of the lcm closure of 0 and the three
# generators of the ideal.

# In[3]:

print(sorted(generate_lcm_lattice([(0, 0), (2, 0), (1, 1), (0, 2)])))


# In[4]:

res = free_resolution(m)
print("Betti numbers", betti_numbers(res))
for j, t in enumerate(res.terms):
    print(j, t)
print("exact:", verify_exactness(res, bounding_box(res, 1)))
