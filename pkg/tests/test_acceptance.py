"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria execute.
"""

import random
import time
from fractions import Fraction

from spherejoin import (
    Field,
    bigraded_betti,
    boundary_of_simplex,
    build_complex,
    check_rank_lower_bounds,
    check_two_face,
    cycle_length,
    decompose_by_non_faces,
    dihedral_nonobtuse_check,
    double,
    dual_boundary_complex,
    gen_product_of_simplices,
    gluing_euler_characteristic,
    hochster_graded_ranks,
    hochster_rank_via_double,
    hochster_total_rank,
    incidence_from_hv,
    recognize_all,
    recognize_recursive,
    reconstruct_from_non_faces,
    reduced_betti,
)
from spherejoin.catalog import build_catalog, product_partitions

BOTH = frozenset({Field.GF2, Field.RATIONAL})


def _report(num, name, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"\nacceptance {num} ({name}): {status}")
    assert not failures, f"{name}: {failures[:5]}"


def test_acceptance_1_product_recognition_sweep():
    failures = []
    partitions = product_partitions(5)
    if len(partitions) != 18:
        failures.append(f"expected 18 nonempty partitions, got {len(partitions)}")
    start = time.perf_counter()
    for dims in partitions:
        h, v = gen_product_of_simplices(*dims)
        k = dual_boundary_complex(incidence_from_hv(h, v))
        report = recognize_all(k, fields=BOTH)
        skipped = [r.criterion for r in report.reports if r.skipped]
        if skipped:
            failures.append(f"{dims}: criteria skipped {skipped}")
        if not (report.agreement and report.positive):
            failures.append(f"{dims}: verdicts {report.verdicts}")
            continue
        sizes = sorted(len(p) for p in report.decomposition.parts)
        if sizes != sorted(d + 1 for d in dims):
            failures.append(f"{dims}: part sizes {sizes}")
        q = len(dims)
        for field in (Field.GF2, Field.RATIONAL):
            total = hochster_total_rank(k, field)
            if total != 2**q:
                failures.append(f"{dims}: hochster {total} != 2^{q} over {field}")
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"sweep took {elapsed:.1f}s, budget 60s")
    _report(1, "product recognition sweep", failures)


def test_acceptance_2_kgon_table():
    failures = []
    expected = {3: 2, 4: 4, 5: 12, 6: 36, 7: 100, 8: 260}
    start = time.perf_counter()
    for k, want in expected.items():
        ck = build_complex([{i, (i + 1) % k} for i in range(k)], k)
        got = hochster_total_rank(ck, Field.GF2)
        if got != want:
            failures.append(f"k={k}: {got} != {want}")
    elapsed = time.perf_counter() - start
    if elapsed >= 5:
        failures.append(f"table took {elapsed:.1f}s, budget 5s")
    _report(2, "k-gon table", failures)


def test_acceptance_3_euler_oracle():
    failures = []
    pentagon_seen = False
    for entry in build_catalog():
        if entry.incidence is None or entry.complex.vertex_count > 10:
            continue
        chi = gluing_euler_characteristic(entry.incidence)
        graded = hochster_graded_ranks(entry.complex, Field.GF2)
        alternating = sum((-1) ** d * b for d, b in graded.items())
        if chi != alternating:
            failures.append(f"{entry.name}: formula {chi} != sweep {alternating}")
        if entry.name == "polygon:5":
            pentagon_seen = True
            if chi != -8:
                failures.append(f"pentagon euler {chi} != -8")
    if not pentagon_seen:
        failures.append("pentagon missing from catalog")
    _report(3, "euler characteristic oracle", failures)


def test_acceptance_4_double_consistency():
    failures = []
    for entry in build_catalog():
        k = entry.complex
        if k.vertex_count <= 6:
            via = hochster_rank_via_double(k, Field.GF2)
            direct = hochster_total_rank(k, Field.GF2)
            if via != direct:
                failures.append(f"{entry.name}: via double {via} != direct {direct}")
        d = double(k) if k.vertex_count <= 10 else None
        if d is not None and d.dim != k.vertex_count + k.dim:
            failures.append(f"{entry.name}: double dim {d.dim}")
    for k in range(1, 5):
        d = double(boundary_of_simplex(k))
        if not (d.is_simplex_boundary() and d.vertex_count == 2 * k + 2):
            failures.append(f"double of simplex boundary k={k} is not a simplex boundary")
    _report(4, "double consistency", failures)


def test_acceptance_5_negative_suite_with_witnesses():
    failures = []
    catalog = {e.name: e for e in build_catalog()}
    negatives = [
        ("pentagon dual (5-cycle)", catalog["polygon:5"].complex),
        ("prism:5 dual", catalog["prism:5"].complex),
        ("prism:6 dual", catalog["prism:6"].complex),
        ("prism:7 dual", catalog["prism:7"].complex),
        ("truncated cube dual", catalog["truncated:cube"].complex),
        ("truncated simplex3 dual", catalog["truncated:simplex3"].complex),
    ]
    for name, k in negatives:
        report = recognize_all(k, fields=BOTH)
        ran = [r for r in report.reports if not r.skipped]
        if not report.agreement:
            failures.append(f"{name}: criteria disagree {report.verdicts}")
        if any(r.verdict for r in ran):
            failures.append(f"{name}: unexpected positive {report.verdicts}")
        two_face = next(r for r in report.reports if r.criterion == "TwoFace")
        witness = two_face.witness or {}
        if witness.get("kind") != "long_codim2_link":
            failures.append(f"{name}: two-face witness {witness}")
            continue
        eta = frozenset(witness["eta"])
        link = k.link(eta) if eta else k
        length = cycle_length(link)
        if length != witness["cycle_length"] or length < 5:
            failures.append(f"{name}: witness does not re-verify ({length})")
        if len(eta) != k.dim - 1:
            failures.append(f"{name}: witness face not codimension 2")
    _report(5, "negative suite with witnesses", failures)


def test_acceptance_6_rank_lower_bounds():
    failures = []
    for entry in build_catalog():
        rep = check_rank_lower_bounds(entry.complex, Field.GF2)
        if not rep.holds:
            failures.append(f"{entry.name}: bound fails {rep}")
        equality = rep.total_rank == rep.total_bound
        if equality != entry.is_sphere_join:
            failures.append(
                f"{entry.name}: equality={equality} but sphere join={entry.is_sphere_join}"
            )
    _report(6, "rank lower bounds", failures)


def test_acceptance_7_geometry():
    failures = []
    passing = []
    for entry in build_catalog():
        if entry.hrep is None:
            continue
        rep = dihedral_nonobtuse_check(entry.hrep, entry.incidence)
        if entry.name.startswith("product:") and rep.verdict is not True:
            failures.append(f"{entry.name}: product should pass dihedral")
        if rep.verdict:
            passing.append(entry)
    cat = {e.name: e for e in build_catalog()}
    for name in ("polygon:5",):
        rep = dihedral_nonobtuse_check(cat[name].hrep, cat[name].incidence)
        if rep.verdict is not False or Fraction(rep.witness["inner_product"]) <= 0:
            failures.append(f"{name}: expected obtuse witness, got {rep.witness}")
    # pentagon prism built from the catalog pentagon and a segment
    prism = cat["prism:5"]
    rep = dihedral_nonobtuse_check(prism.hrep, prism.incidence)
    if rep.verdict is not False or Fraction(rep.witness["inner_product"]) <= 0:
        failures.append(f"prism:5: expected obtuse witness, got {rep.witness}")
    for entry in passing:
        rec = recognize_all(entry.complex)
        if not (rec.agreement and rec.positive):
            failures.append(f"{entry.name}: passes dihedral but not recognized")
    if not any(e.name == "product:1,1,1" for e in passing):
        failures.append("cube missing from dihedral-passing entries")
    _report(7, "dihedral geometry", failures)


def test_acceptance_8_property_suite():
    failures = []
    catalog = build_catalog()

    # join factorization and rank multiplicativity over catalog pairs
    small = [e.complex for e in catalog if e.complex.vertex_count <= 6][:8]
    for a in small:
        for b in small:
            if a.vertex_count + b.vertex_count > 12:
                continue
            shifted = b.relabel({v: v + 100 for v in b.vertices})
            j = a.join(shifted)
            want = set(a.minimal_non_faces()) | set(shifted.minimal_non_faces())
            if set(j.minimal_non_faces()) != want:
                failures.append(f"non-face factorization fails for {a} * {b}")
            ta = reduced_betti(a, Field.GF2).total
            tb = reduced_betti(b, Field.GF2).total
            if reduced_betti(j, Field.GF2).total != ta * tb:
                failures.append(f"rank multiplicativity fails for {a} * {b}")

    # bigraded totals across the whole catalog
    for entry in catalog:
        table = bigraded_betti(entry.complex, Field.GF2)
        if table.total != hochster_total_rank(entry.complex, Field.GF2):
            failures.append(f"{entry.name}: bigraded total mismatch")

    # identity and verdict invariance over 100 random relabelings
    rng = random.Random(20240817)
    baseline = {}
    for entry in catalog:
        k = entry.complex
        baseline[entry.name] = decompose_by_non_faces(k)[0] is not None
        if reconstruct_from_non_faces(k.vertices, k.minimal_non_faces()) != k:
            failures.append(f"{entry.name}: reconstruct identity fails")
    for i in range(100):
        entry = catalog[i % len(catalog)]
        k = entry.complex
        perm = list(k.vertices)
        rng.shuffle(perm)
        shuffled = k.relabel(dict(zip(k.vertices, perm)))
        if reconstruct_from_non_faces(shuffled.vertices, shuffled.minimal_non_faces()) != shuffled:
            failures.append(f"{entry.name}[{i}]: reconstruct identity fails after relabel")
        verdict = decompose_by_non_faces(shuffled)[0] is not None
        if verdict != baseline[entry.name]:
            failures.append(f"{entry.name}[{i}]: decompose verdict changed")
        if k.dim >= 1:
            if check_two_face(shuffled).verdict != check_two_face(k).verdict:
                failures.append(f"{entry.name}[{i}]: two-face verdict changed")
            if recognize_recursive(shuffled).verdict != baseline[entry.name]:
                failures.append(f"{entry.name}[{i}]: recursive verdict changed")
    _report(8, "property suite", failures)
