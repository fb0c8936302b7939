# coding: utf-8

# # Scaling, visibility and Farey fractions

# In[1]:

from fractions import Fraction

from picklattice import (
    farey_sequence,
    format_fraction,
    mediant,
    neighbor_to_cell,
    scaling_study,
    validate,
    visibility_measure,
)


# Each lattice point sees some fraction of a small disk around it. Interior
# points see all of it. The fractions add up to the area.

# In[2]:

tri = validate([(0, 0), (4, 0), (0, 4)])
rep = visibility_measure(tri)
for q, a in rep.per_point:
    print(q, a)
print("total", rep.total)


# Scale the unit square by k. Interior points per unit area creep up to the
# true area from below, with a deficit of order 1/k.

# In[3]:

square = validate([(0, 0), (1, 0), (1, 1), (0, 1)])
print(scaling_study(square, 10).to_csv())


# Farey fractions: neighbours a/b < c/d satisfy bc - ad = 1, so the vectors
# (b, a) and (d, c) span a unit cell.

# In[4]:

f5 = farey_sequence(5)
print(" ".join(format_fraction(f) for f in f5))
print(mediant(Fraction(1, 3), Fraction(2, 5)))
print(neighbor_to_cell(Fraction(1, 3), Fraction(2, 5)))
