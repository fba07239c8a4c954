"""Cyclic polytope boundaries from Gale's evenness condition.

Shows the facet lists for tiny parameters, the closed-form h-vector, and
neighborliness (cyclic d-polytopes are floor(d/2)-neighborly, meaning every
set of floor(d/2) vertices spans a face).
"""

from ubckit import cyclic_h, gale_facets, h_from_f, neighborliness

print("C_2(4), the square:", gale_facets(2, 4).facets)
print("C_3(5) facets:", gale_facets(3, 5).facets)
print()

print(" d   n   facets  neighborliness  h-vector")
for d in range(2, 7):
    for n in (d + 1, d + 2, 9):
        if n <= d:
            continue
        sc = gale_facets(d, n)
        h = h_from_f(sc.f_vector())
        closed = tuple(cyclic_h(d, n, i) for i in range(d + 1))
        assert h == closed
        print(f"{d:>2} {n:>3} {len(sc.facets):>8} {neighborliness(sc):>15}  {h.entries}")
print()
print("the enumerated h-vector always matches the closed form"
      " C(n-d+i-1, i) with its palindromic extension")

# The n = d+1 case degenerates to the simplex boundary:
print()
print("C_4(5) equals the boundary of the 4-simplex:",
      gale_facets(4, 5).facets == tuple(
          tuple(v for v in range(5) if v != skip) for skip in range(4, -1, -1)
      ))
