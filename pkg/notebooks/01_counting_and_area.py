# coding: utf-8

# # Counting lattice points and measuring area

# A lattice polygon has integer vertices. Count the lattice points on its
# boundary and strictly inside, and the area follows with no geometry at all.
# Areas are carried as twice the area so everything stays an integer.

# In[1]:

from picklattice import (
    boundary_count,
    interior_count,
    interior_points,
    pick_twice_area,
    shoelace_twice_area,
    validate,
)


# In[2]:

tri = validate([(0, 0), (4, 0), (0, 4)])
boundary_count(tri), interior_count(tri), interior_points(tri)


# Twelve points on the boundary, three inside. Pick gives 12 + 2*3 - 2 = 16,
# which is twice the area of the triangle with legs of length 4.

# In[3]:

print(pick_twice_area(tri), shoelace_twice_area(tri))


# Clockwise input is accepted and normalised to counter-clockwise.

# In[4]:

cw = validate([(0, 0), (0, 1), (1, 1), (1, 0)])
print(cw.vertices)


# A nonconvex twelve-gon from the fixture set.

# In[5]:

from picklattice.io import read_polygon
from picklattice.fixtures import paths

star = read_polygon(next(p for p in paths() if p.stem == "nonconvex_12"))
print(boundary_count(star), interior_count(star), pick_twice_area(star), shoelace_twice_area(star))


# Self-crossing input is refused, and the error names the offending edges.

# In[6]:

from picklattice.errors import SelfIntersection

try:
    validate([(0, 0), (2, 2), (2, 0), (0, 2)])
except SelfIntersection as exc:
    print(exc)
