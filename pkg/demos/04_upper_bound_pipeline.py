"""The odd-dimensional upper-bound pipeline, end to end.

For a pure (2k+1)-dimensional complex whose vertex links are homology
manifolds that either have Euler characteristic 2 or are orientable with a
bounded middle Betti number, every face count is at most that of the cyclic
(2k+2)-polytope boundary on the same number of vertices.  The reports below
show the hypothesis check per vertex, the binding face-count and short-h
comparisons, and the informational h-vector rows.
"""

from ubckit import (
    boundary_simplex,
    check_lemma_hh,
    cross_polytope,
    suspension,
    torus_7,
    verify_ubc,
    wedge,
)

cases = {
    "boundary of the 4-simplex (equality case)": boundary_simplex(4),
    "wedge of two 3-spheres (singular but admissible)":
        wedge(boundary_simplex(4), boundary_simplex(4)),
    "4-dimensional cross-polytope boundary": cross_polytope(4),
    "suspension of the 7-vertex torus (inadmissible links)":
        suspension(torus_7()),
}

for label, sc in cases.items():
    report = verify_ubc(sc)
    print(f"== {label}")
    print(f"   outcome: {report.overall} (exit code {report.exit_code})")
    for h in report.failed_hypotheses():
        print(f"   failed hypothesis: {h.condition}: {h.witness}")
    for c in report.conclusions:
        tag = "" if c.binding else "   [informational]"
        mark = "<=" if c.holds else ">"
        print(f"   {c.label:<32} {c.left:>4} {mark} {c.right:<4}{tag}")
    print()

# The even-dimensional h-bound behind the theorem, applied to vertex links:
print("even-dimensional h-bound on the octahedron (equalities):")
report = check_lemma_hh(cross_polytope(3))
for c in report.conclusions:
    print(f"   {c.label}: {c.left} vs {c.right}")

print()
print("and on the torus, where the hypotheses fail and the bound is"
      " genuinely violated (vacuously reported):")
report = check_lemma_hh(torus_7())
print(f"   outcome: {report.overall}")
for c in report.conclusions:
    print(f"   {c.label}: {c.left} vs {c.right} -> holds = {c.holds}")
