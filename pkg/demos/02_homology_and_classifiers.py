"""Rational homology and the link-based classifier gallery.

Prints reduced Betti numbers for a handful of named complexes and then the
full classification table (Eulerian, semi-Eulerian, homology manifold,
pseudomanifold, Cohen-Macaulay, Buchsbaum) with failure witnesses.
"""

from ubckit import (
    betti_numbers,
    boundary_simplex,
    build_complex,
    classify,
    cross_polytope,
    join,
    projective_plane_6,
    suspension,
    torus_7,
    wedge,
)

gallery = {
    "tetrahedron boundary": boundary_simplex(3),
    "octahedron": cross_polytope(3),
    "7-vertex torus": torus_7(),
    "6-vertex projective plane": projective_plane_6(),
    "S1 * S1 (join, a 3-sphere)": join(boundary_simplex(2), boundary_simplex(2)),
    "wedge of two 2-spheres": wedge(boundary_simplex(3), boundary_simplex(3)),
    "suspension of the torus": suspension(torus_7()),
    "bowtie": build_complex([[0, 1, 2], [0, 3, 4]]),
}

print("reduced rational Betti numbers (indices -1..dim):")
for label, sc in gallery.items():
    print(f"   {label:<30} {betti_numbers(sc).entries}")
print()

flags = ("eulerian", "semi_eulerian", "homology_sphere", "homology_manifold",
         "orientable", "pseudomanifold", "cohen_macaulay", "buchsbaum")


def mark(value):
    return {True: "yes", False: "no", None: "n/a"}[value]


header = f"{'complex':<30}" + "".join(f"{f[:9]:>11}" for f in flags)
print(header)
for label, sc in gallery.items():
    report = classify(sc)
    row = f"{label:<30}" + "".join(f"{mark(getattr(report, f)):>11}" for f in flags)
    print(row)
print()

print("witnesses for the torus (why it fails Eulerian and Cohen-Macaulay):")
report = classify(torus_7())
for flag, witness in report.witnesses.items():
    print(f"   {flag}: face {list(witness.face) if witness.face is not None else None}"
          f" -- {witness.reason}")
