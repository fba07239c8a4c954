"""Independent oracles used to freeze expected test values.

Everything here deliberately avoids the library's own code paths: hull
facets come from exact orientation determinants over moment-curve points,
f-vectors from brute-force subset enumeration, and Betti numbers from a
plain rational Gaussian elimination.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def det_fraction(rows) -> Fraction:
    """Determinant by rational Gaussian elimination."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    sign = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    out = Fraction(sign)
    for i in range(n):
        out *= m[i][i]
    return out


def moment_curve_hull_facets(d: int, n: int) -> set[tuple[int, ...]]:
    """Facets of the convex hull of n moment-curve points (t, t^2, ..., t^d),
    t = 1..n, found by exhaustive exact side checks."""
    points = [tuple(t**e for e in range(1, d + 1)) for t in range(1, n + 1)]
    facets = set()
    for subset in combinations(range(n), d):
        signs = set()
        for other in range(n):
            if other in subset:
                continue
            rows = [list(points[i]) + [1] for i in subset]
            rows.append(list(points[other]) + [1])
            value = det_fraction(rows)
            signs.add(0 if value == 0 else (1 if value > 0 else -1))
        if len(signs) == 1 and 0 not in signs:
            facets.add(subset)
    return facets


def brute_force_f_vector(facets) -> tuple[int, ...]:
    """(f_-1, f_0, ...) by enumerating every subset of the vertex set and
    testing containment in some facet."""
    facet_sets = [frozenset(f) for f in facets]
    vertices = sorted({v for f in facet_sets for v in f})
    counts: dict[int, int] = {-1: 1}
    for size in range(1, len(vertices) + 1):
        total = 0
        for cand in combinations(vertices, size):
            cs = frozenset(cand)
            if any(cs <= f for f in facet_sets):
                total += 1
        if total == 0:
            break
        counts[size - 1] = total
    top = max(counts)
    return tuple(counts[i] for i in range(-1, top + 1))


def rank_fraction(mat) -> int:
    """Matrix rank over the rationals by plain Gaussian elimination."""
    if not mat or not mat[0]:
        return 0
    m = [[Fraction(x) for x in row] for row in mat]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for r in range(row + 1, nrows):
            factor = m[r][col] / m[row][col]
            for c in range(col, ncols):
                m[r][c] -= factor * m[row][c]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def brute_force_betti(facets) -> tuple[int, ...]:
    """Reduced rational Betti numbers (b_-1, b_0, ...) straight from the
    definition, with its own face enumeration and rank routine."""
    facet_sets = [frozenset(f) for f in facets]
    vertices = sorted({v for f in facet_sets for v in f})
    by_dim: dict[int, list[tuple[int, ...]]] = {-1: [()]}
    for size in range(1, len(vertices) + 1):
        level = [
            cand
            for cand in combinations(vertices, size)
            if any(frozenset(cand) <= f for f in facet_sets)
        ]
        if not level:
            break
        by_dim[size - 1] = level
    top = max(by_dim)

    def boundary(i: int):
        rows = by_dim.get(i - 1, [])
        cols = by_dim.get(i, [])
        index = {f: r for r, f in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for c, face in enumerate(cols):
            for m_pos in range(len(face)):
                sub = face[:m_pos] + face[m_pos + 1 :]
                mat[index[sub]][c] = -1 if m_pos % 2 else 1
        return mat

    ranks = [rank_fraction(boundary(i)) for i in range(0, top + 1)]
    ranks.append(0)
    betti = [1 - (ranks[0] if top >= 0 else 0)]
    for i in range(0, top + 1):
        betti.append(len(by_dim[i]) - ranks[i] - ranks[i + 1])
    return tuple(betti)
