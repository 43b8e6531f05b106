"""Field-coefficient simplicial homology and the subset-sweep rank counts
used by the recognition criteria.

The central quantity is the total rank over all full subcomplexes: for a
complex K on vertex set V, sum over every J included in V of the total
reduced Betti number of K restricted to J (the empty J contributes 1).
For the boundary complex dual to a simple polytope this equals the total
cohomology rank of the associated real moment-angle manifold, and it is
2^(m - dim K - 1) exactly when the polytope is a product of simplices.

All arithmetic is exact: GF(2) uses bitset elimination, rational ranks use
fraction-free integer elimination.  Sweeps are pure functions of immutable
inputs, so results do not depend on evaluation order and the subset loop
could be partitioned across workers without changing any output.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .complexes import SimplicialComplex
from .errors import CapExceededError, InvalidDimensionError
from .linalg import gf2_rank, integer_rank

DEFAULT_CAP = 20


class Field(enum.Enum):
    """Coefficient field for homology ranks."""

    GF2 = "gf2"
    RATIONAL = "q"


@dataclass
class BettiData:
    """Reduced Betti numbers by degree (degree -1 allowed) over one field."""

    reduced: dict[int, int]
    field: Field

    @property
    def total(self) -> int:
        return sum(self.reduced.values())


@dataclass
class BigradedBettiTable:
    """Rank table graded by subset size: entry (i, 2j) collects the reduced
    cohomology in degree j-i-1 over all vertex subsets of size j."""

    entries: dict[tuple[int, int], int]
    field: Field

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def to_json_dict(self) -> dict:
        return {
            f"({-i},{j2})": v
            for (i, j2), v in sorted(self.entries.items())
        }


# -- core engine ---------------------------------------------------------------


def _boundary_rank(lower: list[int], upper: list[int], field: Field) -> int:
    """Rank of the boundary map from the faces in `upper` to those in `lower`.

    Faces are bitmasks; the rank of a matrix equals the rank of its
    transpose, so rows are indexed by the upper faces.
    """
    if not upper or not lower:
        return 0
    index = {m: i for i, m in enumerate(lower)}
    if field is Field.GF2:
        rows = []
        for f in upper:
            row = 0
            b = f
            while b:
                low = b & -b
                row |= 1 << index[f & ~low]
                b &= ~low
            rows.append(row)
        return gf2_rank(rows)
    rows = []
    width = len(lower)
    for f in upper:
        row = [0] * width
        sign = 1
        b = f
        while b:
            low = b & -b
            row[index[f & ~low]] = sign
            sign = -sign
            b &= ~low
        rows.append(row)
    return integer_rank(rows)


def _reduced_from_masks(by_dim: list[list[int]], field: Field) -> dict[int, int]:
    """Reduced Betti numbers from per-dimension face mask lists.

    Uses the augmented chain complex: the augmentation has rank 1 whenever
    there is a vertex, which makes degree -1 carry rank 1 exactly for the
    empty complex.
    """
    while by_dim and not by_dim[-1]:
        by_dim = by_dim[:-1]
    top = len(by_dim) - 1
    f = [len(lst) for lst in by_dim]
    ranks = [1 if (f and f[0]) else 0]
    for d in range(1, top + 1):
        ranks.append(_boundary_rank(by_dim[d - 1], by_dim[d], field))
    ranks.append(0)
    out = {-1: 1 - ranks[0]}
    for d in range(top + 1):
        out[d] = f[d] - ranks[d] - ranks[d + 1]
    return out


def reduced_betti(complex_: SimplicialComplex, field: Field) -> BettiData:
    """Reduced Betti numbers via ranks of the boundary matrices."""
    return BettiData(reduced=_reduced_from_masks(complex_.faces_by_dim(), field), field=field)


def _maximal_restrictions(max_masks: tuple[int, ...], jmask: int) -> list[int]:
    """Maximal faces of the full subcomplex on the vertex bitmask `jmask`."""
    cand = sorted({m & jmask for m in max_masks}, key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for g in cand:
        if not any(g & ~h == 0 for h in kept):
            kept.append(g)
    return kept


def _has_cone_vertex(max_masks: tuple[int, ...], jmask: int) -> bool:
    """True when some vertex of the restriction lies in all its maximal faces.

    Such a restriction is a cone, hence acyclic over every field; the sweep
    skips its matrix work entirely.
    """
    common = jmask
    for g in _maximal_restrictions(max_masks, jmask):
        common &= g
        if not common:
            return False
    return common != 0


@lru_cache(maxsize=None)
def _subset_sweep(complex_: SimplicialComplex, field: Field) -> dict[tuple[int, int], int]:
    """Reduced Betti ranks of every full subcomplex, keyed by (|J|, degree).

    Deterministic integer sums; the result is independent of the order in
    which subsets are processed.
    """
    n = complex_.vertex_count
    by_dim = complex_.faces_by_dim()
    max_masks = complex_._max_masks
    out: dict[tuple[int, int], int] = {(0, -1): 1}
    for jmask in range(1, 1 << n):
        if _has_cone_vertex(max_masks, jmask):
            continue
        notj = ~jmask
        sub = []
        for lst in by_dim:
            cur = [m for m in lst if m & notj == 0]
            sub.append(cur)
        size = bin(jmask).count("1")
        for d, b in _reduced_from_masks(sub, field).items():
            if b:
                key = (size, d)
                out[key] = out.get(key, 0) + b
    return out


def hochster_total_rank(
    complex_: SimplicialComplex, field: Field, cap: int = DEFAULT_CAP
) -> int:
    """Sum over all vertex subsets J of the total reduced Betti number of
    the restriction to J; the empty subset contributes exactly 1."""
    if complex_.vertex_count > cap:
        raise CapExceededError(
            f"subset sweep over {complex_.vertex_count} vertices exceeds cap {cap}"
        )
    return sum(_subset_sweep(complex_, field).values())


def hochster_rank_criterion(
    complex_: SimplicialComplex, field: Field, cap: int = DEFAULT_CAP
) -> bool:
    """True iff the total subset-sweep rank equals 2^(m - dim - 1)."""
    expected = 1 << (complex_.vertex_count - complex_.dim - 1)
    return hochster_total_rank(complex_, field, cap) == expected


def hochster_rank_via_double(
    complex_: SimplicialComplex, field: Field, cap: int = DEFAULT_CAP
) -> int:
    """Total subset-sweep rank of the doubled complex.

    The doubled sweep computes the total rank of the complex moment-angle
    space of the input, which must agree with the real one's total rank
    whenever the input is a polytopal sphere.
    """
    from .complexes import double

    if 2 * complex_.vertex_count > cap:
        raise CapExceededError(
            f"double needs a sweep over {2 * complex_.vertex_count} vertices, cap is {cap}"
        )
    doubled = double(complex_)
    return sum(_subset_sweep(doubled, field).values())


def bigraded_betti(
    complex_: SimplicialComplex, field: Field, cap: int = DEFAULT_CAP
) -> BigradedBettiTable:
    """Subset-size-graded rank table; its grand total equals the Hochster total."""
    if complex_.vertex_count > cap:
        raise CapExceededError(
            f"subset sweep over {complex_.vertex_count} vertices exceeds cap {cap}"
        )
    entries: dict[tuple[int, int], int] = {}
    for (size, degree), b in _subset_sweep(complex_, field).items():
        key = (size - degree - 1, 2 * size)
        entries[key] = entries.get(key, 0) + b
    return BigradedBettiTable(entries=entries, field=field)


def hochster_graded_ranks(
    complex_: SimplicialComplex, field: Field, cap: int = DEFAULT_CAP
) -> dict[int, int]:
    """Cohomology ranks of the glued space, by degree, from the subset sweep:
    degree p collects the reduced degree p-1 ranks over all subsets."""
    if complex_.vertex_count > cap:
        raise CapExceededError(
            f"subset sweep over {complex_.vertex_count} vertices exceeds cap {cap}"
        )
    out: dict[int, int] = {}
    for (_size, degree), b in _subset_sweep(complex_, field).items():
        out[degree + 1] = out.get(degree + 1, 0) + b
    return out


def gluing_euler_characteristic(incidence) -> int:
    """Euler characteristic of the manifold glued from 2^m reflected copies
    of a simple polytope along its facets.

    Counted cell by cell: each d-face of the polytope contributes
    2^(m-n+d) open cells.  Faces are read off the vertex-facet incidence
    (a d-face corresponds to an (n-d-1)-simplex of the dual complex), with
    the polytope itself as the single top cell.  This route is independent
    of the homology sweep and serves as its oracle.
    """
    from .geometry import dual_boundary_complex

    dual = dual_boundary_complex(incidence)
    n = incidence.dim
    m = incidence.facet_count
    f = dual.f_vector()
    chi = (-1) ** n * (1 << m)
    for d in range(n):
        chi += (-1) ** d * f[n - d - 1] * (1 << (m - n + d))
    return chi


@dataclass(frozen=True)
class LinkRankBound:
    """One vertex-link lower bound: rank must be at least 2^(m_v - n + 1)."""

    vertex: int
    m_v: int
    link_dim: int
    rank: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.rank >= self.bound


@dataclass
class RankBoundsReport:
    holds: bool
    total_rank: int
    total_bound: int
    per_link: tuple[LinkRankBound, ...]

    def __bool__(self) -> bool:
        return self.holds


def check_rank_lower_bounds(
    complex_: SimplicialComplex, field: Field, cap: int = DEFAULT_CAP
) -> RankBoundsReport:
    """The sweep total is at least 2^(m - dim - 1), and every vertex link's
    total is at least 2^(m_v - n + 1) where n = dim + 1 and m_v counts the
    link's supported vertices."""
    n = complex_.dim + 1
    total = hochster_total_rank(complex_, field, cap)
    total_bound = 1 << (complex_.vertex_count - complex_.dim - 1)
    per_link = []
    for v in complex_.vertices:
        lk = complex_.link({v})
        m_v = lk.vertex_count
        rank = hochster_total_rank(lk, field, cap)
        exponent = m_v - n + 1
        if exponent < 0:
            raise InvalidDimensionError(
                f"link of vertex {v} has too few vertices for dimension {n - 1}"
            )
        per_link.append(
            LinkRankBound(vertex=v, m_v=m_v, link_dim=lk.dim, rank=rank, bound=1 << exponent)
        )
    holds = total >= total_bound and all(b.holds for b in per_link)
    return RankBoundsReport(
        holds=holds, total_rank=total, total_bound=total_bound, per_link=tuple(per_link)
    )
