"""A tour of the basic invariants: f-, h- and short h-vectors.

Builds a few small complexes and prints the exact face-count data along
with the two equivalent routes to the short h-vector (summing h-vectors of
vertex links vs. the closed-form transform of the f-vector).
"""

from ubckit import (
    boundary_simplex,
    build_complex,
    cross_polytope,
    f_from_short_h,
    h_from_f,
    short_h_from_f,
    short_h_from_links,
    torus_7,
)

showcase = {
    "triangle boundary": boundary_simplex(2),
    "tetrahedron boundary": boundary_simplex(3),
    "octahedron": cross_polytope(3),
    "7-vertex torus": torus_7(),
    "solid triangle": build_complex([[0, 1, 2]]),
}

for label, sc in showcase.items():
    f = sc.f_vector()
    print(f"== {label}: dim {sc.dim}, {sc.n_vertices} vertices, "
          f"{len(sc.facets)} facets, pure = {sc.is_pure}")
    print(f"   f-vector      {f.entries}")
    print(f"   h-vector      {h_from_f(f).entries}")
    via_links = short_h_from_links(sc)
    via_f = short_h_from_f(f)
    assert via_links == via_f
    print(f"   short h       {via_links.entries}  (link sums == f transform)")
    print(f"   chi           {sc.euler_characteristic()}")
    print()

# The short h-vector determines the f-vector back, with exact divisibility:
sh = short_h_from_f(cross_polytope(3).f_vector())
print("octahedron f recovered from its short h-vector:",
      f_from_short_h(sh).entries)

# Links are complexes in their own right:
torus = torus_7()
link = torus.link((0,))
print("link of vertex 0 in the torus is a hexagon:",
      link.f_vector().entries, "chi =", link.euler_characteristic())
