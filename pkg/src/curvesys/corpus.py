"""Curated scenes, shipped decompositions, and the on-disk corpus.

The builders here back the verification harness:

- :func:`genus2_filling_pair`: two loops crossing 4 times on the closed
  genus-2 surface whose complement is two octagons (so the pair fills).
- :func:`bigon_scene`: two isotopic torus loops crossing twice, the negative
  control for minimal position.
- :func:`trivial_component_scene`: a meridian/longitude grid plus a separate
  null-homologous circle, the positive control for triviality detection.
- :func:`dt_decompositions`: pair of pants, one-holed torus, closed genus 2,
  each with a sample coordinate vector.

:func:`write_corpus` materializes the whole corpus directory: one grid scene
per unordered pair of canonical classes with |x|, |y| <= 4 (sign flips of the
defining vectors yield isomorphic scenes, and the reversed order is the same
file with the curve roles swapped), plus the curated scenes and coordinate
files.
"""

from __future__ import annotations

from itertools import combinations
from pathlib import Path
from typing import Dict, List, Tuple, Union

from .dtcoords import DTCoords, PantsDecomposition, save_dt
from .grids import torus_grid_scene
from .scene import Curve, Edge, Scene, Vertex
from .sceneio import save_scene
from .torus import enumerate_classes, intersection

__all__ = [
    "genus2_filling_pair",
    "bigon_scene",
    "trivial_component_scene",
    "dt_decompositions",
    "grid_corpus_parameters",
    "write_corpus",
]

GRID_BOUND = 4


def genus2_filling_pair() -> Scene:
    """A filling pair on the closed genus-2 surface.

    Curve "a" runs through the four crossings in the order 0,1,2,3 and curve
    "b" in the order 0,1,3,2; at crossings 2 and 3 the strand of "b" passes
    with the opposite orientation.  The complement is two octagons, which is
    minimal for a filling pair in genus 2.
    """
    a_out = lambda v: 4 * v
    a_in = lambda v: 4 * v + 1
    b_out = lambda v: 4 * v + 2
    b_in = lambda v: 4 * v + 3

    b_order = (0, 1, 3, 2)
    flipped = (False, False, True, True)

    edges: List[Edge] = []
    for i in range(4):
        edges.append(Edge(i, (a_out(i), a_in((i + 1) % 4)), "a"))
    for j in range(4):
        edges.append(
            Edge(4 + j, (b_out(b_order[j]), b_in(b_order[(j + 1) % 4])), "b")
        )
    vertices = []
    for v in range(4):
        if flipped[v]:
            cycle = (a_out(v), b_out(v), a_in(v), b_in(v))
        else:
            cycle = (a_out(v), b_in(v), a_in(v), b_out(v))
        vertices.append(Vertex(v, cycle))
    return Scene(
        name="genus2-filling-pair",
        vertices=vertices,
        edges=edges,
        curves=[Curve("a", 1), Curve("b", 1)],
    )


def bigon_scene() -> Scene:
    """Two torus loops crossing three times where once is minimal.

    A finger of "b" is pushed across "a", giving one crossing more than
    |a . b| on each side of the finger: the complement is two bigons and an
    octagon.  (A pair with only two excess-free crossings, i.e. two parallel
    loops crossing twice, has an essential annulus in its complement and so
    is not cellular; this is the smallest cellular bigon configuration.)
    Used as the expected-detect control for find_bigons and for resolve's
    refusal of non-minimal input.
    """
    a_out = lambda v: 4 * v
    a_in = lambda v: 4 * v + 1
    b_out = lambda v: 4 * v + 2
    b_in = lambda v: 4 * v + 3
    edges: List[Edge] = []
    for i in range(3):
        edges.append(Edge(i, (a_out(i), a_in((i + 1) % 3)), "a"))
    for j in range(3):
        edges.append(Edge(3 + j, (b_out(j), b_in((j + 1) % 3)), "b"))
    vertices = []
    for v in range(3):
        if v == 2:  # the strand of b passes this crossing the other way
            cycle = (a_out(v), b_out(v), a_in(v), b_in(v))
        else:
            cycle = (a_out(v), b_in(v), a_in(v), b_out(v))
        vertices.append(Vertex(v, cycle))
    return Scene(
        name="bigon-control",
        vertices=vertices,
        edges=edges,
        curves=[Curve("a", 1), Curve("b", 1)],
    )


def trivial_component_scene() -> Scene:
    """A meridian/longitude grid plus a disjoint circle bounding a disk.

    The extra curve "c" is null-homologous (zero marker sum), sitting inside
    one complementary square of the filling grid; the detector must report
    exactly its component.
    """
    grid = torus_grid_scene(1, 0, 0, 1)
    max_vid, max_eid, max_hid = grid.max_ids()
    h = max_hid + 1
    vertices = list(grid.vertices) + [
        Vertex(max_vid + 1, (h, h + 1)),
        Vertex(max_vid + 2, (h + 2, h + 3)),
    ]
    edges = list(grid.edges) + [
        Edge(max_eid + 1, (h + 1, h + 2), "c", (0, 0)),
        Edge(max_eid + 2, (h + 3, h), "c", (0, 0)),
    ]
    curves = list(grid.curves) + [Curve("c", 1)]
    return Scene(
        name="trivial-component-control", vertices=vertices, edges=edges, curves=curves
    )


def dt_decompositions() -> Dict[str, Tuple[PantsDecomposition, DTCoords]]:
    """The three shipped decompositions with sample coordinates."""
    pants = PantsDecomposition(pants=("P",), gluing=())
    torus1 = PantsDecomposition(pants=("P",), gluing=((("P", 0), ("P", 1)),))
    genus2 = PantsDecomposition(
        pants=("P", "Q"),
        gluing=(
            (("P", 0), ("Q", 0)),
            (("P", 1), ("Q", 1)),
            (("P", 2), ("Q", 2)),
        ),
    )
    return {
        "pair_of_pants": (pants, DTCoords(m=(), t=(), b=(2, 1, 1))),
        "one_holed_torus": (torus1, DTCoords(m=(2,), t=(-1,), b=(2,))),
        "genus2_closed": (genus2, DTCoords(m=(2, 0, 0), t=(3, 0, 1), b=())),
    }


def grid_corpus_parameters(bound: int = GRID_BOUND) -> List[Tuple[int, int, int, int]]:
    """(p, q, r, s) for one grid per unordered pair of canonical classes."""
    classes = enumerate_classes(bound)
    out = []
    for a, b in combinations(classes, 2):
        if intersection(a, b) == 0:
            continue
        out.append((a.x, a.y, b.x, b.y))
    return out


def write_corpus(root: Union[str, Path], bound: int = GRID_BOUND) -> int:
    """Write the full corpus under ``root``; returns the number of files."""
    root = Path(root)
    (root / "grids").mkdir(parents=True, exist_ok=True)
    (root / "curated").mkdir(exist_ok=True)
    (root / "dt").mkdir(exist_ok=True)
    n = 0
    for p, q, r, s in grid_corpus_parameters(bound):
        save_scene(
            torus_grid_scene(p, q, r, s), root / "grids" / f"grid_{p}_{q}_{r}_{s}.json"
        )
        n += 1
    for name, scene in (
        ("genus2_filling_pair", genus2_filling_pair()),
        ("bigon_torus", bigon_scene()),
        ("trivial_component", trivial_component_scene()),
    ):
        save_scene(scene, root / "curated" / f"{name}.json")
        n += 1
    for name, (d, x) in dt_decompositions().items():
        save_dt(d, x, root / "dt" / f"{name}.json")
        n += 1
    return n


def main(argv: List[str] | None = None) -> int:
    import argparse

    parser = argparse.ArgumentParser(description="write the curvesys scene corpus")
    parser.add_argument("outdir", help="directory to write the corpus into")
    parser.add_argument("--bound", type=int, default=GRID_BOUND)
    args = parser.parse_args(argv)
    n = write_corpus(args.outdir, args.bound)
    print(f"wrote {n} files under {args.outdir}")
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
