# coding: utf-8

# # Cutting a polygon into elementary triangles

# Every lattice polygon splits into triangles of area 1/2 whose only lattice
# points are their corners. The count is fixed by the boundary and interior
# point counts.

# In[1]:

from picklattice import reassembly_order, stats, triangulate, validate
from picklattice.svg import render_svg

tri = validate([(0, 0), (4, 0), (0, 4)])
pieces = triangulate(tri)
print(len(pieces), stats(pieces, tri))


# Put the pieces back one at a time. After each step the running union is a
# lattice polygon, and Pick's count matches the area so far.

# In[2]:

for step in reassembly_order(pieces):
    print(step.kind, step.n_boundary, step.n_interior, step.twice_f, step.twice_area)


# Write a figure.

# In[3]:

svg = render_svg(tri, pieces)
with open("triangle_4.svg", "w") as fh:
    fh.write(svg)
print(svg[:200])
