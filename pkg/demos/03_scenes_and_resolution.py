"""Scenes: explicit multicurve configurations and crossing resolution.

A scene is a rotation system: vertices with a counterclockwise order of
half-edge ends, edges labelled by curve, optional homology markers.  Resolving
all crossings of two curves merges them into the product curve system, and the
marker bookkeeping lets the scene engine check the torus formula on its own.
"""

from curvesys import (
    components,
    crossing_count,
    find_bigons,
    multiply,
    normalize,
    parallel_copies,
    resolve,
    torus_grid_scene,
    torus_lines_scene,
    trace_faces,
    trivial_components,
    validate,
)
from curvesys.corpus import bigon_scene, genus2_filling_pair

# The meridian/longitude grid: one crossing, one square face.
scene = torus_grid_scene(1, 0, 0, 1)
diag = validate(scene)
print(f"{scene.name}: V={diag.v} E={diag.e} F={diag.f} genus={diag.genus}")

def pretty(multiset):
    return {str(cls): n for cls, n in multiset.items()}


# Resolving the crossing from a to b gives the (1,1) curve; from b to a
# the (1,-1) curve.  This pins the smoothing convention to the algebra.
for frm, to in [("a", "b"), ("b", "a")]:
    out = resolve(scene, frm, to)
    census = components(out)
    print(f"resolve {frm}->{to}:", pretty(census.class_multiset()))

# A bigger grid: class (2,0) against (0,3), six crossings, six squares.
grid = torus_grid_scene(2, 0, 0, 3)
print(f"{grid.name}: crossings={crossing_count(grid, 'a', 'b')}",
      f"faces={validate(grid).face_degrees}")
prod = multiply(normalize(2, 0), normalize(0, 3))
print("resolved census:", pretty(components(resolve(grid, "a", "b")).class_multiset()),
      f"  (formula predicts {prod.multiplicity} x {prod.primitive()})")
print("trivial components after resolving:", trivial_components(resolve(grid, "a", "b")))

# Parallel copies thicken a curve: crossings multiply, and resolving the
# doubled meridian against the longitude gives the square-twist class (2,1).
doubled = parallel_copies(scene, "a", 2)
print("doubled meridian crossings:", crossing_count(doubled, "a", "b"))
print("resolve doubled:", pretty(components(resolve(doubled, "a", "b")).class_multiset()))

# Three line families show the region condition behind associativity:
# the (1,0),(0,1),(1,1) triple has triangular complementary regions.
triple = torus_lines_scene([("c1", (1, 0)), ("c2", (0, 1)), ("c3", (1, 1))])
print("triple face degrees:", sorted(f.degree for f in trace_faces(triple)))

# Non-minimal configurations are detected and refused.
bigon = bigon_scene()
print("bigon control:", len(find_bigons(bigon, "a", "b")), "bigons found")

# Scenes are not restricted to the torus: a filling pair on genus 2.
g2 = genus2_filling_pair()
d2 = validate(g2)
print(f"{g2.name}: chi={d2.chi} genus={d2.genus} faces={d2.face_degrees}")
