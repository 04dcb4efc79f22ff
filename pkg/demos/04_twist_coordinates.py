"""Twist coordinates on pants decompositions.

Cutting a surface along disjoint loops leaves 3-holed spheres; a curve system
is then described by how often it meets each cutting loop (m), how much it
twists about it (t), and how often it meets each boundary component (b).  Two
systems with the same m and b differ exactly by twisting, and the twist
exponents are the differences of the t coordinates.
"""

from curvesys.corpus import dt_decompositions
from curvesys.dtcoords import (
    DTCoords,
    dehn_twist,
    solve_twists,
    twist_multiply,
    validate_coords,
    validate_decomposition,
)

decomps = dt_decompositions()

for name, (d, x) in sorted(decomps.items()):
    shape = validate_decomposition(d)
    print(f"{name}: genus {shape.genus}, {shape.boundary} boundary, "
          f"{shape.curves} cutting curves; sample coords m={x.m} t={x.t} b={x.b}")

# Twisting changes only t; the intersection data m, b are invariant.
d, x = decomps["genus2_closed"]
y = twist_multiply(x, (3, 0, 0))
print("after 3 twists about curve 1:", y)

# solve_twists recovers the exponents: it is the coordinate difference.
print("recovered exponents:", solve_twists(y, x))

# Twists about different cutting loops commute (the loops are disjoint).
z1 = twist_multiply(twist_multiply(x, (1, 0, 0)), (2, 0, 0))
z2 = twist_multiply(x, (3, 0, 0))
print("twists commute:", z1 == z2)

# A Dehn twist about cutting curve i shifts t_i by m_i.
print("Dehn twist about curve 1:", dehn_twist(x, 1, "positive").t, "from", x.t)

# Parity is a real constraint: each pants must see an even strand total.
try:
    validate_coords(d, DTCoords(m=(1, 1, 1), t=(0, 0, 0), b=()))
except Exception as exc:
    print("odd strand totals are rejected:", exc)
