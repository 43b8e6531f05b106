"""Finite abstract simplicial complexes stored by maximal faces.

A complex lives on an explicit vertex set (arbitrary integer identifiers,
usually ``0..m-1``).  Faces are frozensets of vertex ids; the empty face
belongs to every complex.  The empty complex (whose only face is the empty
simplex, dimension -1) is a first-class value.  All values are immutable
and every operation returns a fresh complex, so everything here is safe to
call concurrently.

Subcomplex results keep the original vertex identifiers.  A link is
returned on the vertices that actually support a face, with the ambient
vertex set (all vertices of the host minus the face) recorded separately.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import (
    IndexOutOfRangeError,
    InvalidDimensionError,
    NotAFaceError,
    NotMaximalError,
    UncoveredVertexError,
)

Face = frozenset[int]


def _canonical_faces(faces: set[Face]) -> tuple[Face, ...]:
    """Drop dominated faces and sort lexicographically by sorted vertex tuple."""
    by_size = sorted(faces, key=len, reverse=True)
    kept: list[Face] = []
    for f in by_size:
        if not any(f < g for g in kept):
            kept.append(f)
    return tuple(sorted(kept, key=lambda f: tuple(sorted(f))))


class SimplicialComplex:
    """A finite abstract simplicial complex, stored by its maximal faces.

    Membership is decided by subset tests against the maximal faces; this
    is the simplest correct representation at the vertex counts this
    library targets (a few dozen at most).
    """

    __slots__ = (
        "vertices",
        "maximal_faces",
        "labels",
        "ambient_vertices",
        "_bit",
        "_max_masks",
        "_full_mask",
        "_faces_by_dim",
        "_minimal_non_faces",
        "__weakref__",
    )

    def __init__(
        self,
        faces,
        vertices=None,
        labels=None,
        ambient_vertices=None,
    ):
        face_set = {frozenset(f) for f in faces}
        if not face_set:
            face_set = {frozenset()}
        maximal = _canonical_faces(face_set)
        support = sorted(set().union(*maximal)) if maximal else []
        if vertices is None:
            verts = tuple(support)
        else:
            verts = tuple(sorted(vertices))
            if len(set(verts)) != len(verts):
                raise IndexOutOfRangeError(f"duplicate vertex ids in {verts}")
            support_set, vert_set = set(support), set(verts)
            missing = [v for v in verts if v not in support_set]
            if missing:
                raise UncoveredVertexError(
                    f"vertices {missing} appear in no face"
                )
            extra = [v for v in support if v not in vert_set]
            if extra:
                raise IndexOutOfRangeError(
                    f"faces use vertices {extra} outside the declared set"
                )
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != len(verts):
                raise IndexOutOfRangeError(
                    f"got {len(labels)} labels for {len(verts)} vertices"
                )
        self.vertices: tuple[int, ...] = verts
        self.maximal_faces: tuple[Face, ...] = maximal
        self.labels: tuple[str, ...] | None = labels
        self.ambient_vertices: tuple[int, ...] | None = (
            tuple(sorted(ambient_vertices)) if ambient_vertices is not None else None
        )
        self._bit = {v: i for i, v in enumerate(verts)}
        self._max_masks = tuple(self._mask(f) for f in maximal)
        self._full_mask = (1 << len(verts)) - 1
        self._faces_by_dim = None
        self._minimal_non_faces = None

    # -- basic protocol ---------------------------------------------------

    def __eq__(self, other):
        # label-agnostic: two complexes are equal iff they have identical
        # vertex sets and identical face sets
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and set(self.maximal_faces) == set(
            other.maximal_faces
        )

    def __hash__(self):
        return hash((self.vertices, frozenset(self.maximal_faces)))

    def __repr__(self):
        faces = [sorted(f) for f in self.maximal_faces]
        return f"SimplicialComplex(vertices={list(self.vertices)}, maximal_faces={faces})"

    def __contains__(self, face) -> bool:
        f = frozenset(face)
        if not f <= set(self.vertices):
            return False
        m = self._mask(f)
        return any(m & ~fm == 0 for fm in self._max_masks)

    def _mask(self, face) -> int:
        m = 0
        for v in face:
            m |= 1 << self._bit[v]
        return m

    def _unmask(self, mask: int) -> Face:
        verts = self.vertices
        return frozenset(verts[i] for i in range(len(verts)) if mask >> i & 1)

    # -- scalar invariants ------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def is_empty(self) -> bool:
        return self.maximal_faces == (frozenset(),)

    @property
    def dim(self) -> int:
        """Dimension: max face cardinality minus one; -1 for the empty complex."""
        return max(len(f) for f in self.maximal_faces) - 1

    def faces_by_dim(self) -> list[list[int]]:
        """All faces as bitmasks, grouped by dimension (index d = dimension).

        The empty face is not included.  Exponential in the size of the
        maximal faces; only call this where the face count is moderate.
        """
        if self._faces_by_dim is None:
            seen: set[int] = set()
            for fm in self._max_masks:
                bits = [1 << i for i in range(self._full_mask.bit_length()) if fm >> i & 1]
                for r in range(1, len(bits) + 1):
                    for combo in itertools.combinations(bits, r):
                        m = 0
                        for b in combo:
                            m |= b
                        seen.add(m)
            grouped: list[list[int]] = [[] for _ in range(self.dim + 1)]
            for m in seen:
                grouped[bin(m).count("1") - 1].append(m)
            for lst in grouped:
                lst.sort()
            self._faces_by_dim = grouped
        return self._faces_by_dim

    def f_vector(self) -> list[int]:
        """Number of d-simplices for d = 0..dim (empty simplex not counted)."""
        return [len(lst) for lst in self.faces_by_dim()]

    def faces(self, d: int) -> list[Face]:
        """The d-dimensional faces, canonically ordered."""
        if d < 0 or d > self.dim:
            return []
        out = [self._unmask(m) for m in self.faces_by_dim()[d]]
        return sorted(out, key=lambda f: tuple(sorted(f)))

    # -- subcomplex operations ---------------------------------------------

    def link(self, sigma) -> "SimplicialComplex":
        """Faces disjoint from ``sigma`` whose union with it is again a face.

        Returned on the vertices that actually appear; the ambient vertex
        set (host vertices minus ``sigma``) is recorded on the result.
        """
        s = frozenset(sigma)
        if not s:
            return self
        if s not in self:
            raise NotAFaceError(f"{sorted(s)} is not a face")
        smask = self._mask(s)
        faces = []
        for fm, f in zip(self._max_masks, self.maximal_faces):
            if smask & ~fm == 0:
                faces.append(f - s)
        ambient = [v for v in self.vertices if v not in s]
        return SimplicialComplex(faces, ambient_vertices=ambient)

    def full_subcomplex(self, subset) -> "SimplicialComplex":
        """All faces contained in ``subset``; the subset stays the vertex set."""
        w = frozenset(subset)
        bad = w - set(self.vertices)
        if bad:
            raise IndexOutOfRangeError(f"{sorted(bad)} are not vertices")
        faces = [f & w for f in self.maximal_faces]
        return SimplicialComplex(faces, vertices=w)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Join of two complexes on disjoint vertex sets."""
        overlap = set(self.vertices) & set(other.vertices)
        if overlap:
            raise IndexOutOfRangeError(
                f"join needs disjoint vertex sets; both use {sorted(overlap)}"
            )
        faces = [a | b for a in self.maximal_faces for b in other.maximal_faces]
        labels = None
        if self.labels is not None and other.labels is not None:
            pairs = dict(zip(self.vertices, self.labels))
            pairs.update(zip(other.vertices, other.labels))
            labels = [pairs[v] for v in sorted(pairs)]
        return SimplicialComplex(faces, labels=labels)

    def stellar_subdivide(self, sigma) -> "SimplicialComplex":
        """Replace a maximal face by the cone over its boundary from a new vertex.

        Dual picture: cutting the corresponding vertex off a simple polytope.
        """
        s = frozenset(sigma)
        if s not in set(self.maximal_faces):
            raise NotMaximalError(f"{sorted(s)} is not a maximal face")
        if len(s) < 2:
            raise InvalidDimensionError("cannot subdivide a face with fewer than 2 vertices")
        w = max(self.vertices) + 1
        faces = [f for f in self.maximal_faces if f != s]
        for v in s:
            faces.append((s - {v}) | {w})
        return SimplicialComplex(faces)

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        """Apply an injective vertex relabeling; labels travel with vertices."""
        if len(set(mapping.values())) != len(mapping):
            raise IndexOutOfRangeError("relabeling map is not injective")
        faces = [{mapping[v] for v in f} for f in self.maximal_faces]
        labels = None
        if self.labels is not None:
            by_new = {mapping[v]: lab for v, lab in zip(self.vertices, self.labels)}
            labels = [by_new[v] for v in sorted(by_new)]
        return SimplicialComplex(faces, labels=labels)

    # -- non-faces ----------------------------------------------------------

    def minimal_non_faces(self) -> tuple[Face, ...]:
        """Inclusion-minimal vertex subsets that are not faces.

        Enumerates by increasing cardinality; a subset is a candidate only
        when all its proper subsets are faces, i.e. when it contains no
        smaller minimal non-face.  Output is lexicographic on sorted
        vertex tuples.  Worst case 2^m, fine at this library's scale.
        """
        if self._minimal_non_faces is not None:
            return self._minimal_non_faces
        n = len(self.vertices)
        max_masks = sorted(self._max_masks, key=lambda m: -bin(m).count("1"))
        found: list[int] = []
        bits = [1 << i for i in range(n)]
        for size in range(2, n + 1):
            any_candidate = False
            for combo in itertools.combinations(bits, size):
                m = 0
                for b in combo:
                    m |= b
                if any(m & nf == nf for nf in found):
                    continue
                any_candidate = True
                if not any(m & ~fm == 0 for fm in max_masks):
                    found.append(m)
            if not any_candidate:
                break
        result = tuple(
            sorted((self._unmask(m) for m in found), key=lambda f: tuple(sorted(f)))
        )
        self._minimal_non_faces = result
        return result

    def is_simplex_boundary(self) -> bool:
        """True iff the maximal faces are exactly all (m-1)-subsets of the m vertices."""
        m = len(self.vertices)
        if m < 2:
            return False
        if len(self.maximal_faces) != m:
            return False
        vs = set(self.vertices)
        expected = {frozenset(vs - {v}) for v in vs}
        return set(self.maximal_faces) == expected

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical JSON form: vertices renumbered to 0..m-1 positionally."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        faces = sorted(sorted(pos[v] for v in f) for f in self.maximal_faces)
        out = {"m": len(self.vertices), "maximal_faces": faces}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "SimplicialComplex":
        m = int(data["m"])
        labels = data.get("labels")
        return build_complex(data["maximal_faces"], m, labels=labels)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


# -- constructors -------------------------------------------------------------


def build_complex(faces, vertex_count: int, labels=None) -> SimplicialComplex:
    """The complex generated by the given faces on vertices 0..vertex_count-1.

    Dominated faces are absorbed.  Every declared vertex must be covered.
    """
    if vertex_count < 0:
        raise IndexOutOfRangeError("vertex_count must be non-negative")
    cleaned = []
    for f in faces:
        fs = frozenset(f)
        for v in fs:
            if not isinstance(v, int) or v < 0 or v >= vertex_count:
                raise IndexOutOfRangeError(
                    f"vertex {v!r} outside range [0, {vertex_count})"
                )
        cleaned.append(fs)
    covered = set().union(*cleaned) if cleaned else set()
    missing = sorted(set(range(vertex_count)) - covered)
    if missing:
        raise UncoveredVertexError(f"vertices {missing} appear in no face")
    return SimplicialComplex(cleaned, vertices=range(vertex_count), labels=labels)


def simplex_boundary_on(vertices) -> SimplicialComplex:
    """Boundary of the simplex spanned by the given vertices (at least 2)."""
    vs = sorted(set(vertices))
    if len(vs) < 2:
        raise InvalidDimensionError("a simplex boundary needs at least 2 vertices")
    faces = [set(vs) - {v} for v in vs]
    return SimplicialComplex(faces, vertices=vs)


def boundary_of_simplex(k: int) -> SimplicialComplex:
    """The boundary complex of a k-simplex on vertices 0..k, dimension k-1."""
    if k <= 0:
        raise InvalidDimensionError(f"k must be >= 1, got {k}")
    return simplex_boundary_on(range(k + 1))


def reconstruct_from_non_faces(vertices, non_faces) -> SimplicialComplex:
    """The complex on ``vertices`` whose faces are the sets containing no
    listed non-face.

    Maximal faces are complements of the minimal transversals of the
    non-face family; together with ``minimal_non_faces`` this realizes the
    standard bijection between complexes and their minimal non-faces.
    """
    verts = tuple(sorted(set(vertices)))
    bit = {v: i for i, v in enumerate(verts)}
    full = (1 << len(verts)) - 1
    fam = []
    for nf in non_faces:
        m = 0
        for v in nf:
            if v not in bit:
                raise IndexOutOfRangeError(f"non-face vertex {v} not in vertex set")
            m |= 1 << bit[v]
        if m:
            fam.append(m)
    if not fam:
        if not verts:
            return SimplicialComplex([])
        return SimplicialComplex([verts], vertices=verts)
    transversals = _minimal_transversals(fam)
    faces = []
    for t in transversals:
        c = full & ~t
        faces.append(frozenset(verts[i] for i in range(len(verts)) if c >> i & 1))
    return SimplicialComplex(faces, vertices=verts)


def _minimal_transversals(family: list[int]) -> list[int]:
    """All inclusion-minimal sets (as bitmasks) hitting every set of the family."""
    results: list[int] = []

    def hits_all(t: int) -> bool:
        return all(t & s for s in family)

    def is_minimal(t: int) -> bool:
        b = t
        while b:
            low = b & -b
            if hits_all(t & ~low):
                return False
            b &= ~low
        return True

    def extend(chosen: int, remaining: list[int]) -> None:
        unhit = [s for s in remaining if not (s & chosen)]
        if not unhit:
            if is_minimal(chosen) and not any(
                r & ~chosen == 0 for r in results
            ):
                results.append(chosen)
            return
        pivot = min(unhit, key=lambda s: bin(s).count("1"))
        b = pivot
        while b:
            low = b & -b
            # prune: adding a vertex that already yields a known transversal
            cand = chosen | low
            if not any(r & ~cand == 0 for r in results):
                extend(cand, unhit)
            b &= ~low

    extend(0, family)
    # final antichain sweep (branch order can momentarily admit supersets)
    results.sort(key=lambda m: bin(m).count("1"))
    kept: list[int] = []
    for t in results:
        if not any(k & ~t == 0 for k in kept):
            kept.append(t)
    return kept


def double(complex_: SimplicialComplex) -> SimplicialComplex:
    """The doubling construction: each vertex splits into a pair, and the
    minimal non-faces are exactly the doubled minimal non-faces.

    Vertex i of the input becomes the pair 2i, 2i+1 of the output; labels
    are derived by suffixing a prime.  The result is rebuilt from the
    prescribed non-faces and re-verified against its own minimal non-face
    enumeration.
    """
    verts = complex_.vertices
    pos = {v: i for i, v in enumerate(verts)}
    m = len(verts)
    lifted = []
    for nf in complex_.minimal_non_faces():
        lifted.append(frozenset().union(*({2 * pos[v], 2 * pos[v] + 1} for v in nf)))
    out = reconstruct_from_non_faces(range(2 * m), lifted)
    base = (
        list(complex_.labels)
        if complex_.labels is not None
        else [f"v{v}" for v in verts]
    )
    labels = []
    for lab in base:
        labels.extend([lab, lab + "'"])
    out = SimplicialComplex(out.maximal_faces, vertices=range(2 * m), labels=labels)
    if set(out.minimal_non_faces()) != set(lifted):
        raise AssertionError("doubled complex has unexpected minimal non-faces")
    return out


# -- pseudomanifold test -------------------------------------------------------


@dataclass(frozen=True)
class PseudomanifoldReport:
    """Outcome of the pseudomanifold test, with concrete violations."""

    dim: int
    is_pure: bool
    ridge_violations: tuple[Face, ...]
    strongly_connected: bool

    @property
    def holds(self) -> bool:
        return self.is_pure and not self.ridge_violations and self.strongly_connected

    def __bool__(self) -> bool:
        return self.holds


def is_pseudomanifold(complex_: SimplicialComplex) -> PseudomanifoldReport:
    """Purity, the exactly-two-cofacet ridge condition, and strong connectivity.

    Strong connectivity is union-find over top-dimensional faces sharing a
    ridge.  Dimension must be at least 1.
    """
    n = complex_.dim
    if n < 1:
        raise InvalidDimensionError(f"pseudomanifold test needs dim >= 1, got {n}")
    pure = all(len(f) == n + 1 for f in complex_.maximal_faces)
    by_dim = complex_.faces_by_dim()
    tops = by_dim[n]
    ridges = by_dim[n - 1]
    cofacets: dict[int, list[int]] = {r: [] for r in ridges}
    for ti, t in enumerate(tops):
        b = t
        while b:
            low = b & -b
            cofacets[t & ~low].append(ti)
            b &= ~low
    violations = sorted(
        (r for r, c in cofacets.items() if len(c) != 2),
        key=lambda r: tuple(sorted(complex_._unmask(r))),
    )
    parent = list(range(len(tops)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in cofacets.values():
        for other in c[1:]:
            ra, rb = find(c[0]), find(other)
            if ra != rb:
                parent[ra] = rb
    connected = len({find(i) for i in range(len(tops))}) <= 1
    return PseudomanifoldReport(
        dim=n,
        is_pure=pure,
        ridge_violations=tuple(complex_._unmask(r) for r in violations),
        strongly_connected=connected,
    )


def cycle_length(complex_: SimplicialComplex) -> int | None:
    """Length of the closed cycle `complex_` is, or None if it is not one."""
    if complex_.dim != 1:
        return None
    if not all(len(f) == 2 for f in complex_.maximal_faces):
        return None
    degree = {v: 0 for v in complex_.vertices}
    for e in complex_.maximal_faces:
        for v in e:
            degree[v] += 1
    if any(d != 2 for d in degree.values()):
        return None
    if len(complex_.maximal_faces) != len(complex_.vertices):
        return None
    # walk the cycle to rule out two disjoint cycles
    start = complex_.vertices[0]
    prev, cur = None, start
    seen = 1
    while True:
        nxts = [w for e in complex_.maximal_faces if cur in e for w in e if w != cur]
        nxt = nxts[0] if nxts[0] != prev else nxts[1]
        if nxt == start:
            break
        prev, cur = cur, nxt
        seen += 1
    if seen != len(complex_.vertices):
        return None
    return seen
