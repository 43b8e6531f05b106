"""The product-of-simplices criteria as independent decision procedures.

Each criterion decides on its own whether the input complex is a join of
simplex boundaries (the combinatorial shadow of a product of simplices),
and produces a re-checkable witness when it says no.  A consolidated
runner executes all of them and reports whether they agree; on catalog
inputs (boundary complexes dual to simple polytopes) they must.

Positive answers are always certified constructively: the claimed
decomposition is re-joined and compared face-for-face with the input, so
criteria whose sufficiency assumes polytopality can never silently
mislabel a non-polytopal input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    SimplicialComplex,
    cycle_length,
    double,
    is_pseudomanifold,
    simplex_boundary_on,
)
from .errors import (
    CapExceededError,
    InvalidDimensionError,
    PreconditionViolatedError,
)
from .homology import DEFAULT_CAP, Field, hochster_rank_criterion
from .reports import CRITERIA, RecognitionReport

__all__ = [
    "SphereJoinDecomposition",
    "ConsolidatedReport",
    "decompose_by_non_faces",
    "check_non_face_partition",
    "check_simplex_link",
    "check_two_face",
    "recognize_recursive",
    "check_double",
    "recognize_all",
    "double",
]


@dataclass(frozen=True)
class SphereJoinDecomposition:
    """Vertex-set parts certifying the complex is the join of the boundary
    of a simplex on each part.  Parts are disjoint, cover the vertex set,
    each has at least 2 vertices, and are sorted by (size, smallest id)."""

    parts: tuple[tuple[int, ...], ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(p) - 1 for p in self.parts)

    def rebuild(self) -> SimplicialComplex:
        """The join of the simplex boundaries on the parts, on the same ids."""
        out = SimplicialComplex([])
        for p in self.parts:
            out = out.join(simplex_boundary_on(p))
        return out

    def to_json_dict(self) -> dict:
        return {"parts": [list(p) for p in self.parts], "dims": list(self.dims)}


def _sorted_parts(parts) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(sorted(p)) for p in sorted(parts, key=lambda p: (len(p), min(p)))
    )


def decompose_by_non_faces(
    complex_: SimplicialComplex,
) -> tuple[SphereJoinDecomposition | None, dict | None]:
    """Try to decompose via minimal non-faces.

    Succeeds iff the minimal non-faces partition the vertex set and the
    join rebuilt from them equals the input exactly.  Returns
    ``(decomposition, None)`` on success, ``(None, witness)`` on failure;
    witnesses report the lexicographically first violation.
    """
    nfs = complex_.minimal_non_faces()
    seen: dict[int, tuple[int, ...]] = {}
    for nf in nfs:
        part = tuple(sorted(nf))
        for v in part:
            if v in seen:
                return None, {
                    "kind": "non_face_overlap",
                    "non_faces": [list(seen[v]), list(part)],
                    "vertex": v,
                }
            seen[v] = part
    uncovered = sorted(set(complex_.vertices) - set(seen))
    if uncovered:
        return None, {"kind": "uncovered_vertices", "vertices": uncovered}
    dec = SphereJoinDecomposition(parts=_sorted_parts(nfs))
    if dec.rebuild() != complex_:
        return None, {
            "kind": "join_mismatch",
            "parts": [list(p) for p in dec.parts],
        }
    return dec, None


def check_non_face_partition(complex_: SimplicialComplex) -> RecognitionReport:
    dec, witness = decompose_by_non_faces(complex_)
    return RecognitionReport("NonFacePartition", dec is not None, witness)


def check_simplex_link(complex_: SimplicialComplex) -> RecognitionReport:
    """The maximal-simplex/link criterion.

    For every maximal simplex, the restriction to the complementary
    vertices must be a single simplex spanning all of them; and for every
    vertex of the maximal simplex, the part of that complementary simplex
    lying in the vertex's link must itself be a face (possibly empty).
    A restriction counts as a simplex only when its full vertex set is a
    face; an edgeless pair of points does not qualify.
    """
    vs = set(complex_.vertices)
    for sigma in complex_.maximal_faces:
        comp = frozenset(vs - sigma)
        if comp not in complex_:
            return RecognitionReport(
                "SimplexLink",
                False,
                {
                    "kind": "restriction_not_simplex",
                    "sigma": sorted(sigma),
                    "complement": sorted(comp),
                },
            )
        for v in sorted(sigma):
            support = frozenset(w for w in comp if frozenset({v, w}) in complex_)
            if support | {v} not in complex_:
                return RecognitionReport(
                    "SimplexLink",
                    False,
                    {
                        "kind": "link_intersection_not_simplex",
                        "sigma": sorted(sigma),
                        "vertex": v,
                        "support": sorted(support),
                    },
                )
    return RecognitionReport("SimplexLink", True)


def _require_pure_pseudomanifold(complex_: SimplicialComplex) -> None:
    if complex_.dim < 0:
        raise PreconditionViolatedError("the empty complex is not a pseudomanifold")
    if complex_.dim == 0:
        # the only boundary complex dual to a simple 1-polytope is a vertex pair
        if complex_.vertex_count != 2:
            raise PreconditionViolatedError(
                "0-dimensional input must be exactly two points"
            )
        return
    rep = is_pseudomanifold(complex_)
    if not (rep.is_pure and rep.holds):
        raise PreconditionViolatedError(
            "input is not a pure pseudomanifold; "
            f"pure={rep.is_pure}, violations={len(rep.ridge_violations)}, "
            f"strongly_connected={rep.strongly_connected}"
        )


def check_two_face(complex_: SimplicialComplex) -> RecognitionReport:
    """Every codimension-2 face must have a closed-cycle link of length 3 or 4
    (dually: every 2-dimensional face of the polytope is a 3- or 4-gon).

    At dimension 1 the complex itself plays that role (the codimension-2
    face is the empty simplex).  The input must be a pure pseudomanifold.
    """
    _require_pure_pseudomanifold(complex_)
    n = complex_.dim
    if n == 0:
        return RecognitionReport("TwoFace", True)
    if n == 1:
        etas = [frozenset()]
    else:
        etas = complex_.faces(n - 2)
    for eta in etas:
        link = complex_.link(eta) if eta else complex_
        length = cycle_length(link)
        if length is None:
            return RecognitionReport(
                "TwoFace",
                False,
                {"kind": "codim2_link_not_cycle", "eta": sorted(eta)},
            )
        if length > 4:
            return RecognitionReport(
                "TwoFace",
                False,
                {
                    "kind": "long_codim2_link",
                    "eta": sorted(eta),
                    "cycle_length": length,
                },
            )
    return RecognitionReport("TwoFace", True)


def recognize_recursive(complex_: SimplicialComplex) -> RecognitionReport:
    """Recursive recognizer: a pseudomanifold all of whose vertex links are
    themselves recognized, grounded at the 3- and 4-cycles in dimension 1.

    Dimension 0 is grounded at the two-point complex (the boundary of an
    edge), so duals of 1-dimensional polytopes recurse correctly.  Repeated
    links are memoized by exact face-set equality.
    """
    memo: dict[SimplicialComplex, dict | None] = {}

    def run(k: SimplicialComplex, path: tuple[int, ...]) -> dict | None:
        # returns None on success, a witness dict on failure
        if k in memo:
            return memo[k]
        n = k.dim
        if n < 0:
            raise InvalidDimensionError("recursive recognition needs dim >= 0")
        if n == 0:
            w = (
                None
                if k.vertex_count == 2
                else {
                    "kind": "bad_zero_dim_link",
                    "path": list(path),
                    "vertex_count": k.vertex_count,
                }
            )
        elif n == 1:
            length = cycle_length(k)
            if length in (3, 4):
                w = None
            else:
                w = {
                    "kind": "link_not_short_cycle",
                    "path": list(path),
                    "cycle_length": length,
                }
        else:
            rep = is_pseudomanifold(k)
            if not (rep.is_pure and rep.holds):
                w = {
                    "kind": "not_pseudomanifold",
                    "path": list(path),
                    "pure": rep.is_pure,
                    "ridge_violations": [sorted(r) for r in rep.ridge_violations[:3]],
                    "strongly_connected": rep.strongly_connected,
                }
            else:
                w = None
                for v in k.vertices:
                    link = k.link({v})
                    if link.dim != n - 1:
                        w = {
                            "kind": "link_dimension_drop",
                            "path": list(path + (v,)),
                            "link_dim": link.dim,
                            "expected": n - 1,
                        }
                        break
                    w = run(link, path + (v,))
                    if w is not None:
                        break
        memo[k] = w
        return w

    witness = run(complex_, ())
    return RecognitionReport("Recursive", witness is None, witness)


def check_double(
    complex_: SimplicialComplex, cap: int = DEFAULT_CAP
) -> RecognitionReport:
    """The doubled complex decomposes iff the input does.

    On success the parts of the double must all have even size, twice the
    input's part sizes when the input decomposes.
    """
    if 2 * complex_.vertex_count > cap:
        raise CapExceededError(
            f"double needs {2 * complex_.vertex_count} vertices, cap is {cap}"
        )
    doubled = double(complex_)
    dec, witness = decompose_by_non_faces(doubled)
    if dec is None:
        return RecognitionReport(
            "Double", False, {"kind": "double_decompose_failed", "inner": witness}
        )
    sizes = sorted(len(p) for p in dec.parts)
    if any(s % 2 for s in sizes):
        raise AssertionError(f"double produced odd part sizes {sizes}")
    own, _ = decompose_by_non_faces(complex_)
    if own is not None:
        expected = sorted(2 * len(p) for p in own.parts)
        if sizes != expected:
            raise AssertionError(
                f"double part sizes {sizes} do not match doubled input parts {expected}"
            )
    return RecognitionReport("Double", True)


@dataclass
class ConsolidatedReport:
    """All criterion reports, their agreement flag, and (when positive) the
    certified decomposition."""

    reports: list[RecognitionReport]
    decomposition: SphereJoinDecomposition | None
    agreement: bool

    @property
    def verdicts(self) -> dict[str, bool | None]:
        return {r.criterion: r.verdict for r in self.reports}

    @property
    def positive(self) -> bool:
        return self.agreement and all(
            r.verdict for r in self.reports if not r.skipped
        )

    def to_json_dict(self) -> dict:
        return {
            "criteria": [r.to_json_dict() for r in self.reports],
            "decomposition": (
                self.decomposition.to_json_dict() if self.decomposition else None
            ),
            "agreement": self.agreement,
        }


def recognize_all(
    complex_: SimplicialComplex,
    fields: frozenset[Field] | set[Field] = frozenset({Field.GF2, Field.RATIONAL}),
    cap: int = DEFAULT_CAP,
) -> ConsolidatedReport:
    """Run every criterion and assert their mutual agreement.

    Never short-circuits: the cross-check is the point.  The two-face
    criterion is skipped (verdict None) when its pure-pseudomanifold
    precondition fails, and the double criterion is skipped when the
    doubled vertex count exceeds the cap.  Disagreement between the
    criteria that did run is reported as a first-class result: it
    falsifies either the implementation or the assumption that the input
    is dual to a simple polytope.
    """
    if complex_.vertex_count > cap:
        raise CapExceededError(
            f"{complex_.vertex_count} vertices exceed cap {cap}"
        )
    dec, nf_witness = decompose_by_non_faces(complex_)
    reports = [
        RecognitionReport("NonFacePartition", dec is not None, nf_witness),
        check_simplex_link(complex_),
    ]
    try:
        reports.append(check_two_face(complex_))
    except PreconditionViolatedError as exc:
        reports.append(RecognitionReport("TwoFace", None, {"skipped": str(exc)}))
    reports.append(recognize_recursive(complex_))
    if 2 * complex_.vertex_count <= cap:
        reports.append(check_double(complex_, cap))
    else:
        reports.append(
            RecognitionReport(
                "Double",
                None,
                {"skipped": f"doubled vertex count {2 * complex_.vertex_count} exceeds cap {cap}"},
            )
        )
    if Field.GF2 in fields:
        reports.append(
            RecognitionReport(
                "HochsterGF2",
                hochster_rank_criterion(complex_, Field.GF2, cap),
                None,
            )
        )
    if Field.RATIONAL in fields:
        reports.append(
            RecognitionReport(
                "HochsterQ",
                hochster_rank_criterion(complex_, Field.RATIONAL, cap),
                None,
            )
        )
    for rep in reports:
        if rep.verdict is False and rep.witness is None:
            rep.witness = {
                "kind": "rank_mismatch",
                "expected": 1 << (complex_.vertex_count - complex_.dim - 1),
            }
    ran = [r.verdict for r in reports if not r.skipped]
    agreement = len(set(ran)) <= 1
    order = {name: i for i, name in enumerate(CRITERIA)}
    reports.sort(key=lambda r: order[r.criterion])
    return ConsolidatedReport(
        reports=reports,
        decomposition=dec if (agreement and ran and all(ran)) else None,
        agreement=agreement,
    )
