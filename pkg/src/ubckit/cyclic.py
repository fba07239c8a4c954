"""Boundary complexes of cyclic polytopes and their combinatorial data.

The facets of the d-dimensional cyclic polytope on vertices 0..n-1 are read
off Gale's evenness condition; no coordinates are involved.  These complexes
are the comparison benchmark for all upper-bound checks.
"""

from __future__ import annotations

from itertools import combinations

from .complexes import SimplicialComplex
from .vectors import binomial


def _check_spec(d: int, n: int) -> None:
    if d < 2:
        raise ValueError(f"cyclic polytope dimension must be >= 2, got {d}")
    if n <= d:
        raise ValueError(f"need more vertices than the dimension, got n={n}, d={d}")


def gale_facets(d: int, n: int) -> SimplicialComplex:
    """Boundary complex of the cyclic d-polytope on vertices 0..n-1.

    A d-subset S is a facet exactly when for every pair i < j of vertices
    outside S, the number of elements of S strictly between i and j is even.
    n = d+1 is allowed and yields the boundary of a simplex.
    """
    _check_spec(d, n)
    outside_pairs_cache = list(range(n))
    facets = []
    for subset in combinations(outside_pairs_cache, d):
        inside = set(subset)
        outside = [v for v in outside_pairs_cache if v not in inside]
        ok = True
        for a in range(len(outside)):
            for b in range(a + 1, len(outside)):
                i, j = outside[a], outside[b]
                between = sum(1 for s in subset if i < s < j)
                if between % 2:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            facets.append(subset)
    return SimplicialComplex(facets)


def cyclic_h(d: int, n: int, i: int) -> int:
    """h_i of the cyclic d-polytope boundary on n vertices.

    h_i = C(n-d+i-1, i) for i <= floor(d/2), extended palindromically by
    h_i = h_{d-i} above the middle.
    """
    _check_spec(d, n)
    if not 0 <= i <= d:
        raise ValueError(f"h-index {i} out of range 0..{d}")
    if i > d // 2:
        i = d - i
    return binomial(n - d + i - 1, i)


def neighborliness(sc: SimplicialComplex) -> int:
    """Largest l such that every l-subset of the vertices is a face.

    0 for the empty complex; cyclic d-polytope boundaries achieve floor(d/2)
    once they have at least d+2 vertices.
    """
    verts = sc.vertices
    best = 0
    for l in range(1, len(verts) + 1):
        if all(sc.has_face(subset) for subset in combinations(verts, l)):
            best = l
        else:
            break
    return best
