# coding: utf-8

# # Simple vectors, Bezout and unit cells

# A lattice vector is simple when no lattice point sits strictly between its
# ends, which happens exactly when its components are coprime.

# In[1]:

from picklattice import (
    all_partners,
    cross,
    extended_gcd,
    interior_lattice_points_on_segment,
    is_simple,
    minimal_triangle,
    primitive_partner,
)

print(is_simple((173, 16)), is_simple((6, 4)), interior_lattice_points_on_segment((6, 4)))


# Extended Euclid returns a certificate that can be printed and re-checked.

# In[2]:

cert = extended_gcd(173, 16)
print(cert, cert.holds())


# The certificate turns into a partner w with cross(u, w) = 1, so u and w
# span a cell of area one.

# In[3]:

u = (173, 16)
w = primitive_partner(u)
print(w, cross(u, w))


# Partners are not unique: adding multiples of u keeps the determinant.

# In[4]:

for v in all_partners(u, 2):
    print(v, cross(u, v))


# For a vector that is not simple, the smallest triangle on it has twice-area
# equal to the gcd of the components.

# In[5]:

print(minimal_triangle(6, 4))
