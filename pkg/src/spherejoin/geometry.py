"""Exact-rational polytope representations and the dihedral-angle test.

Polytopes are given by both an inequality description (inward normals,
point feasible iff normal . x >= offset) and their vertex list; the two
are cross-validated exactly over the rationals.  Vertex enumeration from
inequalities alone is deliberately not implemented.

The non-obtuse dihedral test needs no angles or square roots: for inward
normals, an angle is non-obtuse exactly when the inner product of the two
normals is <= 0, which is a sign decision in exact arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .complexes import SimplicialComplex
from .errors import (
    InfeasibleVertexError,
    InvalidParameterError,
    NotSimpleError,
    RedundantInequalityError,
)
from .linalg import fraction_rank
from .reports import RecognitionReport

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class PolytopeHRep:
    """Inequality description: x is inside iff normal . x >= offset for every
    row; normals point inward."""

    dim: int
    inequalities: tuple[tuple[Vector, Fraction], ...]

    @property
    def facet_count(self) -> int:
        return len(self.inequalities)


@dataclass(frozen=True)
class PolytopeVRep:
    dim: int
    vertices: tuple[Vector, ...]


@dataclass(frozen=True)
class VertexFacetIncidence:
    """For each vertex, the set of facets it lies on; simple means exactly
    ``dim`` facets per vertex."""

    dim: int
    facet_count: int
    vertex_facets: tuple[frozenset[int], ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.dim,
            "facets": self.facet_count,
            "vertex_facets": sorted(sorted(s) for s in self.vertex_facets),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "VertexFacetIncidence":
        return cls(
            dim=int(data["n"]),
            facet_count=int(data["facets"]),
            vertex_facets=tuple(frozenset(s) for s in data["vertex_facets"]),
        )


def _dot(a: Vector, b: Vector) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def check_simple(incidence: VertexFacetIncidence, n: int) -> bool:
    """Every vertex lies on exactly n facets."""
    return all(len(s) == n for s in incidence.vertex_facets)


def _proportional_positive(a: tuple[Vector, Fraction], b: tuple[Vector, Fraction]) -> bool:
    na, oa = a
    nb, ob = b
    va = tuple(na) + (oa,)
    vb = tuple(nb) + (ob,)
    for i in range(len(va)):
        if (va[i] == 0) != (vb[i] == 0):
            return False
    ref = None
    for i in range(len(va)):
        if va[i] != 0:
            r = vb[i] / va[i]
            if r <= 0:
                return False
            if ref is None:
                ref = r
            elif r != ref:
                return False
    return ref is not None


def _affine_rank(points: list[Vector]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    rows = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    return fraction_rank(rows)


def incidence_from_hv(hrep: PolytopeHRep, vrep: PolytopeVRep) -> VertexFacetIncidence:
    """Exact vertex-facet incidence, with full validation.

    Checks: every vertex feasible; every vertex on exactly dim facets
    (simplicity); no two inequalities positive multiples of one another;
    each facet's incident vertices affinely span dimension dim-1 (so every
    inequality supports a genuine facet); the vertices affinely span the
    whole space.
    """
    n = hrep.dim
    if vrep.dim != n:
        raise InvalidParameterError(
            f"dimension mismatch: inequalities in R^{n}, vertices in R^{vrep.dim}"
        )
    for i, j in itertools.combinations(range(len(hrep.inequalities)), 2):
        if _proportional_positive(hrep.inequalities[i], hrep.inequalities[j]):
            raise RedundantInequalityError(
                f"inequalities {i} and {j} are positive multiples"
            )
    vertex_facets = []
    for vi, v in enumerate(vrep.vertices):
        tight = set()
        for fi, (normal, offset) in enumerate(hrep.inequalities):
            value = _dot(normal, v)
            if value < offset:
                raise InfeasibleVertexError(
                    f"vertex {vi} violates inequality {fi}: {value} < {offset}"
                )
            if value == offset:
                tight.add(fi)
        if len(tight) != n:
            raise NotSimpleError(
                f"vertex {vi} lies on {len(tight)} facets, expected {n}"
            )
        vertex_facets.append(frozenset(tight))
    if _affine_rank(list(vrep.vertices)) != n:
        raise RedundantInequalityError("vertex set is not full-dimensional")
    for fi in range(len(hrep.inequalities)):
        incident = [v for v, tight in zip(vrep.vertices, vertex_facets) if fi in tight]
        if len(incident) < n or _affine_rank(incident) != n - 1:
            raise RedundantInequalityError(
                f"inequality {fi} does not support an (n-1)-dimensional facet"
            )
    return VertexFacetIncidence(
        dim=n, facet_count=len(hrep.inequalities), vertex_facets=tuple(vertex_facets)
    )


def dual_boundary_complex(incidence: VertexFacetIncidence) -> SimplicialComplex:
    """Boundary complex of the dual simplicial polytope: one vertex per
    facet, one maximal face per polytope vertex."""
    from .complexes import is_pseudomanifold

    n = incidence.dim
    if not check_simple(incidence, n):
        raise NotSimpleError("incidence is not simple")
    if len(set(incidence.vertex_facets)) != len(incidence.vertex_facets):
        raise NotSimpleError("two vertices lie on the same facet set")
    covered = set().union(*incidence.vertex_facets) if incidence.vertex_facets else set()
    if covered != set(range(incidence.facet_count)):
        raise NotSimpleError("some facet contains no vertex")
    complex_ = SimplicialComplex(
        incidence.vertex_facets, vertices=range(incidence.facet_count)
    )
    if complex_.dim != n - 1:
        raise NotSimpleError(
            f"dual complex has dimension {complex_.dim}, expected {n - 1}"
        )
    if n == 1:
        if complex_.vertex_count != 2:
            raise NotSimpleError("a 1-polytope must have exactly two facets")
    elif not is_pseudomanifold(complex_):
        raise NotSimpleError("dual complex is not a pseudomanifold")
    return complex_


def product_polytope(
    h1: PolytopeHRep, v1: PolytopeVRep, h2: PolytopeHRep, v2: PolytopeVRep
) -> tuple[PolytopeHRep, PolytopeVRep]:
    """Cartesian product: block inequalities, product vertices.  Facets of
    the first factor come first; vertex order is first-factor major."""
    n1, n2 = h1.dim, h2.dim
    zeros1 = (Fraction(0),) * n1
    zeros2 = (Fraction(0),) * n2
    ineqs = [(tuple(normal) + zeros2, offset) for normal, offset in h1.inequalities]
    ineqs += [(zeros1 + tuple(normal), offset) for normal, offset in h2.inequalities]
    verts = [tuple(a) + tuple(b) for a in v1.vertices for b in v2.vertices]
    return (
        PolytopeHRep(dim=n1 + n2, inequalities=tuple(ineqs)),
        PolytopeVRep(dim=n1 + n2, vertices=tuple(verts)),
    )


# -- generators ------------------------------------------------------------------


def gen_simplex(n: int) -> tuple[PolytopeHRep, PolytopeVRep]:
    """The standard simplex realized full-dimensionally: x_i >= 0 and
    sum x_i <= 1.  Facet i is {x_i = 0} for i < n; facet n is the sum facet."""
    if n < 1:
        raise InvalidParameterError(f"simplex dimension must be >= 1, got {n}")
    ineqs = []
    for i in range(n):
        normal = tuple(Fraction(1 if j == i else 0) for j in range(n))
        ineqs.append((normal, Fraction(0)))
    ineqs.append((tuple(Fraction(-1) for _ in range(n)), Fraction(-1)))
    verts = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n):
        verts.append(tuple(Fraction(1 if j == i else 0) for j in range(n)))
    return (
        PolytopeHRep(dim=n, inequalities=tuple(ineqs)),
        PolytopeVRep(dim=n, vertices=tuple(verts)),
    )


# Fixed convex lattice polygons, one per k; counterclockwise vertex order.
# Regular polygons would need irrational coordinates, and any convex k-gon
# works for the criteria (for k >= 5 the angle sum forces an obtuse corner).
_POLYGONS = {
    3: [(0, 0), (1, 0), (0, 1)],
    4: [(0, 0), (1, 0), (1, 1), (0, 1)],
    5: [(0, 0), (1, 0), (2, 1), (1, 2), (0, 1)],
    6: [(0, 0), (1, 0), (2, 1), (2, 2), (1, 2), (0, 1)],
    7: [(0, 0), (2, 0), (3, 1), (3, 2), (2, 3), (1, 3), (0, 2)],
    8: [(0, 0), (1, 0), (2, 1), (2, 2), (1, 3), (0, 3), (-1, 2), (-1, 1)],
}


def gen_polygon(k: int) -> tuple[PolytopeHRep, PolytopeVRep]:
    """A fixed convex rational k-gon from the catalog, k in [3, 8].

    Facet i is the edge from vertex i to vertex i+1, so the dual boundary
    complex is the standard k-cycle.
    """
    if k not in _POLYGONS:
        raise InvalidParameterError(f"polygon catalog covers k in [3, 8], got {k}")
    pts = [(Fraction(x), Fraction(y)) for x, y in _POLYGONS[k]]
    ineqs = []
    for i in range(k):
        ax, ay = pts[i]
        bx, by = pts[(i + 1) % k]
        dx, dy = bx - ax, by - ay
        normal = (-dy, dx)  # points left of travel, i.e. inward for ccw order
        ineqs.append((normal, _dot(normal, pts[i])))
    return (
        PolytopeHRep(dim=2, inequalities=tuple(ineqs)),
        PolytopeVRep(dim=2, vertices=tuple(pts)),
    )


def gen_product_of_simplices(*dims: int) -> tuple[PolytopeHRep, PolytopeVRep]:
    """Product of standard simplices of the given dimensions."""
    if not dims:
        raise InvalidParameterError("need at least one simplex dimension")
    h, v = gen_simplex(dims[0])
    for n in dims[1:]:
        h2, v2 = gen_simplex(n)
        h, v = product_polytope(h, v, h2, v2)
    return h, v


def gen_truncated(incidence: VertexFacetIncidence, vertex: int) -> VertexFacetIncidence:
    """Cut one vertex off, combinatorially: the vertex is replaced by a new
    facet, and one new vertex appears per facet through the old one."""
    n = incidence.dim
    if not check_simple(incidence, n):
        raise NotSimpleError("truncation needs a simple incidence")
    if vertex < 0 or vertex >= len(incidence.vertex_facets):
        raise InvalidParameterError(f"no vertex {vertex}")
    star = incidence.vertex_facets[vertex]
    new_facet = incidence.facet_count
    kept = [s for i, s in enumerate(incidence.vertex_facets) if i != vertex]
    added = [frozenset(star - {f}) | {new_facet} for f in sorted(star)]
    return VertexFacetIncidence(
        dim=n,
        facet_count=incidence.facet_count + 1,
        vertex_facets=tuple(kept + added),
    )


def truncate_all_vertices(incidence: VertexFacetIncidence) -> VertexFacetIncidence:
    """Cut every original vertex off (highest index first, so the indices of
    the remaining originals stay put)."""
    count = len(incidence.vertex_facets)
    out = incidence
    for v in reversed(range(count)):
        out = gen_truncated(out, v)
    return out


# -- dihedral angles ---------------------------------------------------------------


def dihedral_nonobtuse_check(
    hrep: PolytopeHRep, incidence: VertexFacetIncidence
) -> RecognitionReport:
    """Every pair of adjacent facets meets at a non-obtuse dihedral angle.

    Adjacency is read off the edges of the dual boundary complex (the two
    agree for simple polytopes), and each pair is decided by the sign of
    the exact inner product of the inward normals; positive scaling of any
    inequality cannot change a verdict.
    """
    dual = dual_boundary_complex(incidence)
    if dual.dim >= 1:
        pairs = [tuple(sorted(e)) for e in dual.faces(1)]
    else:
        pairs = []
    for i, j in sorted(pairs):
        ip = _dot(hrep.inequalities[i][0], hrep.inequalities[j][0])
        if ip > 0:
            return RecognitionReport(
                "Dihedral",
                False,
                {
                    "kind": "obtuse_pair",
                    "facets": [i, j],
                    "inner_product": str(ip),
                },
            )
    return RecognitionReport("Dihedral", True)


# -- serialization ------------------------------------------------------------------


def _fraction_to_str(x: Fraction) -> str:
    return str(x)


def _fraction_from_str(s) -> Fraction:
    return Fraction(str(s))


def polytope_to_json_dict(hrep: PolytopeHRep, vrep: PolytopeVRep) -> dict:
    return {
        "dim": hrep.dim,
        "inequalities": [
            {
                "normal": [_fraction_to_str(x) for x in normal],
                "offset": _fraction_to_str(offset),
            }
            for normal, offset in hrep.inequalities
        ],
        "vertices": [[_fraction_to_str(x) for x in v] for v in vrep.vertices],
    }


def polytope_from_json_dict(data: dict) -> tuple[PolytopeHRep, PolytopeVRep]:
    dim = int(data["dim"])
    ineqs = tuple(
        (
            tuple(_fraction_from_str(x) for x in row["normal"]),
            _fraction_from_str(row["offset"]),
        )
        for row in data["inequalities"]
    )
    verts = tuple(
        tuple(_fraction_from_str(x) for x in v) for v in data["vertices"]
    )
    for normal, _ in ineqs:
        if len(normal) != dim:
            raise InvalidParameterError("normal length does not match dim")
    for v in verts:
        if len(v) != dim:
            raise InvalidParameterError("vertex length does not match dim")
    return PolytopeHRep(dim=dim, inequalities=ineqs), PolytopeVRep(dim=dim, vertices=verts)
