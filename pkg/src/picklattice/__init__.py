"""Exact lattice-polygon geometry on Z^2.

Pick's area formula and its companions: lattice-point counts, the shoelace
sum, Bezout certificates and unit-area cells, elementary triangulations,
visibility-angle sums, integer scaling and Farey sequences. All areas are
carried as exact integers equal to twice the area.
"""

from .errors import *  # noqa: F401,F403
from .farey import farey_sequence, format_fraction, mediant, neighbor_to_cell, verify_neighbors
from .lattice import (
    BasisChange,
    BezoutCertificate,
    LatticePoint,
    LatticeVector,
    all_partners,
    cross,
    extended_gcd,
    gcd,
    interior_lattice_points_on_segment,
    is_simple,
    is_unimodular,
    minimal_triangle,
    primitive_partner,
)
from .measures import (
    ScalingReport,
    VisibilityReport,
    boundary_angle_sum,
    scale,
    scaling_study,
    visibility_measure,
)
from .polygon import (
    Polygon,
    boundary_count,
    boundary_points,
    canonical_vertices,
    classify_point,
    f_functional,
    interior_count,
    interior_points,
    pick_twice_area,
    shoelace_twice_area,
    split_by_chord,
    twice_area_of_triangle,
    validate,
)
from .triangulation import (
    ElementaryTriangle,
    TriangulationStats,
    reassembly_order,
    stats,
    triangulate,
)

__version__ = "0.1.0"
