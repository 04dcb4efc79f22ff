"""Flat-torus scene constructors.

A family with vector (X, Y) is realized as gcd(|X|, |Y|) straight closed
geodesics of the primitive direction (X, Y)/gcd on the square torus, at
distinct parallel offsets.  All geometry is exact rational arithmetic:
crossings are located by solving the line congruences, vertices receive their
counterclockwise cyclic order from the actual direction vectors, and each edge
carries the integer homology marker of its lift, so marker sums along
components recover the class exactly.

Offsets are chosen deterministically; if a choice happens to create a multiple
point or a coincident pair of lines (possible only with three or more
families, where a linear relation between offsets can make lines concurrent)
the constructor retries with fresh offsets.  Offset numerators grow
geometrically so that no small integer combination of them vanishes
identically; the built scene is always checked, never trusted.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InvalidScene, ParallelSlopes
from .scene import Curve, Edge, Scene, Vertex

__all__ = ["torus_grid_scene", "torus_lines_scene"]

Vec = Tuple[int, int]

# (denominator, numerator base) pairs for offset choices, tried in order.
_OFFSET_SCHEMES = tuple(
    (denom, base)
    for denom in (100003, 100019, 100043, 100057, 100069)
    for base in (64, 67, 71, 73)
)


def torus_grid_scene(p: int, q: int, r: int, s: int) -> Scene:
    """Scene of the classes (p, q) and (r, s) in flat position.

    Curves are named "a" and "b"; there are exactly |p s - q r| crossings and
    every complementary region is a quadrilateral.  Parallel inputs are
    rejected: a two-curve scene of parallel classes is not cellular on the
    torus (build it inside an ambient scene, e.g. with parallel_copies).
    """
    if (p, q) == (0, 0) or (r, s) == (0, 0):
        raise InvalidScene("grid vectors must be nonzero")
    if p * s - q * r == 0:
        raise ParallelSlopes(
            f"vectors ({p},{q}) and ({r},{s}) are parallel; the grid would not be cellular"
        )
    return torus_lines_scene(
        [("a", (p, q)), ("b", (r, s))], name=f"grid({p},{q},{r},{s})"
    )


def torus_lines_scene(
    families: Sequence[Tuple[str, Vec]], name: Optional[str] = None
) -> Scene:
    """Scene of several straight-line families on the flat torus.

    ``families`` maps curve ids to (possibly non-primitive) vectors; parallel
    families simply do not cross.  At least one pair of families must be
    non-parallel (otherwise nothing is cellular and there is nothing to hang
    the complement on) unless the scene has a single family, which is permitted
    for building blocks of larger scenes.
    """
    if not families:
        raise InvalidScene("need at least one curve family")
    ids = [cid for cid, _ in families]
    if len(set(ids)) != len(ids):
        raise InvalidScene(f"duplicate curve ids in {ids}")
    for cid, (x, y) in families:
        if (x, y) == (0, 0):
            raise InvalidScene(f"family {cid!r} has the zero vector")
    if name is None:
        name = "lines(" + ",".join(f"{cid}:({x},{y})" for cid, (x, y) in families) + ")"
    for denom, base in _OFFSET_SCHEMES:
        built = _build(families, denom, base, name)
        if built is not None:
            return built
    raise InvalidScene("could not find degenerate-free offsets")  # pragma: no cover


def _unimodular_partner(u: Vec) -> Vec:
    """v with det(u, v) = u.x * v.y - u.y * v.x = 1 (u must be primitive)."""
    x, y = u
    a, b = _ext_gcd(x, y)  # a x + b y = 1
    return (-b, a)


def _ext_gcd(x: int, y: int) -> Tuple[int, int]:
    old_r, r = x, y
    old_a, a = 1, 0
    old_b, b = 0, 1
    while r != 0:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_a, a = a, old_a - k * a
        old_b, b = b, old_b - k * b
    if old_r < 0:
        old_a, old_b = -old_a, -old_b
    return old_a, old_b


def _det(u: Vec, v: Vec) -> int:
    return u[0] * v[1] - u[1] * v[0]


class _Line:
    __slots__ = ("index", "curve", "u", "uperp", "c")

    def __init__(self, index: int, curve: str, u: Vec, uperp: Vec, c: Fraction):
        self.index = index
        self.curve = curve
        self.u = u  # primitive direction
        self.uperp = uperp  # det(u, uperp) = 1
        self.c = c  # transverse offset in the (u, uperp) frame

    def point(self, t: Fraction) -> Tuple[Fraction, Fraction]:
        return (
            t * self.u[0] + self.c * self.uperp[0],
            t * self.u[1] + self.c * self.uperp[1],
        )


def _build(
    families: Sequence[Tuple[str, Vec]], denom: int, base: int, name: str
) -> Optional[Scene]:
    lines: List[_Line] = []
    for k, (cid, (x, y)) in enumerate(families):
        g = gcd(abs(x), abs(y))
        u = (x // g, y // g)
        uperp = _unimodular_partner(u)
        shift = pow(base, k + 1, denom)
        for i in range(g):
            c = Fraction(i * denom + shift, g * denom)
            lines.append(_Line(len(lines), cid, u, uperp, c))

    # Distinct parallel lines: offsets must differ mod 1 in a common frame.
    by_dir: Dict[Vec, List[Fraction]] = {}
    for ln in lines:
        d = ln.u if (ln.u[0], ln.u[1]) > (-ln.u[0], -ln.u[1]) else (-ln.u[0], -ln.u[1])
        off = (ln.c * _det(d, ln.uperp)) % 1  # transverse offset in d's frame
        by_dir.setdefault(d, []).append(off)
    for offs in by_dir.values():
        if len(set(offs)) != len(offs):
            return None

    # Crossings: dict canonical torus point -> list of (line index, t param).
    crossings: Dict[Tuple[Fraction, Fraction], List[Tuple[int, Fraction]]] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            li, lj = lines[i], lines[j]
            den = _det(lj.u, li.u)
            if den == 0:
                continue
            # Points of li with det(lj.u, point) = lj.c (mod 1).
            t0 = (lj.c - li.c * _det(lj.u, li.uperp)) / den
            for m in range(abs(den)):
                t = (t0 + Fraction(m, 1) / den) % 1
                z = li.point(t)
                rep = (z[0] % 1, z[1] % 1)
                s = _det(rep, lj.uperp) % 1  # parameter of the point on lj
                crossings.setdefault(rep, []).append((i, t))
                crossings[rep].append((j, s))

    for rep, incid in crossings.items():
        if len(incid) != 2:
            return None  # multiple point; retry with other offsets

    # Per line: crossings sorted along the direction.
    on_line: Dict[int, List[Tuple[Fraction, Tuple[Fraction, Fraction]]]] = {
        ln.index: [] for ln in lines
    }
    for rep, incid in crossings.items():
        for line_idx, t in incid:
            on_line[line_idx].append((t, rep))
    for lst in on_line.values():
        lst.sort()

    # Allocate vertices at crossing points (sorted for determinism) and one
    # auxiliary plain vertex on every crossing-free line.
    vertex_id_of: Dict[Tuple[Fraction, Fraction], int] = {}
    for rep in sorted(crossings):
        vertex_id_of[rep] = len(vertex_id_of)
    next_vid = len(vertex_id_of)

    half_dir: Dict[int, Vec] = {}  # outward direction of each half-edge end
    vertex_halves: Dict[int, List[int]] = {}
    edges: List[Edge] = []
    next_hid = 0

    def new_half(vertex: int, direction: Vec) -> int:
        nonlocal next_hid
        h = next_hid
        next_hid += 1
        half_dir[h] = direction
        vertex_halves.setdefault(vertex, []).append(h)
        return h

    def neg(d: Vec) -> Vec:
        return (-d[0], -d[1])

    for ln in lines:
        hits = on_line[ln.index]
        if not hits:
            vid = next_vid
            next_vid += 1
            h_out = new_half(vid, ln.u)
            h_in = new_half(vid, neg(ln.u))
            edges.append(Edge(len(edges), (h_out, h_in), ln.curve, (ln.u[0], ln.u[1])))
            continue
        for a in range(len(hits)):
            t1, rep1 = hits[a]
            t2, rep2 = hits[(a + 1) % len(hits)]
            dt = t2 - t1 if a + 1 < len(hits) else t2 + 1 - t1
            v1 = vertex_id_of[rep1]
            v2 = vertex_id_of[rep2]
            h_start = new_half(v1, ln.u)
            h_end = new_half(v2, neg(ln.u))
            lift_end = (rep1[0] + dt * ln.u[0], rep1[1] + dt * ln.u[1])
            mx = lift_end[0] - rep2[0]
            my = lift_end[1] - rep2[1]
            if mx.denominator != 1 or my.denominator != 1:  # pragma: no cover
                raise InvalidScene("internal error: non-integral homology marker")
            edges.append(
                Edge(len(edges), (h_start, h_end), ln.curve, (int(mx), int(my)))
            )

    # Counterclockwise cyclic order at each crossing, by exact angle.
    vertices: List[Vertex] = []
    for rep in sorted(crossings):
        vid = vertex_id_of[rep]
        halves = vertex_halves[vid]
        halves.sort(key=lambda h: _angle_key(half_dir[h]))
        vertices.append(Vertex(vid, tuple(halves)))
    for vid in sorted(vertex_halves):  # plain vertices of crossing-free lines
        if vid >= len(vertex_id_of):
            vertices.append(Vertex(vid, tuple(vertex_halves[vid])))

    curves = [Curve(cid, gcd(abs(x), abs(y))) for cid, (x, y) in families]
    return Scene(name=name, vertices=vertices, edges=edges, curves=curves)


def _angle_key(d: Vec) -> Tuple[int, Fraction]:
    """Sort key for counterclockwise angle from the positive x-axis."""
    x, y = d
    if y == 0:
        return (0 if x > 0 else 2, Fraction(0))
    # Within each open half-plane, -x/y increases monotonically with angle.
    return (1 if y > 0 else 3, Fraction(-x, y))
