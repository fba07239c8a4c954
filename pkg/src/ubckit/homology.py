"""Reduced rational simplicial homology and link-based classifiers.

Betti numbers are computed over the rationals from augmented boundary
matrices (the empty face sits at level -1), so every number reported here
is a reduced Betti number.  Ranks come from fraction-free integer
elimination, keeping the whole pipeline exact.

The classifiers scan faces from the top dimension downwards, so a reported
witness is always the highest-dimensional offending face (lexicographically
first within its dimension).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import Face, SimplicialComplex
from .vectors import _ExactVector


class BettiVector(_ExactVector):
    """Reduced rational Betti numbers (b_-1, b_0, ..., b_dim)."""

    __slots__ = ()
    _first_index = -1

    def _check(self, entries):
        if not entries:
            raise ValueError("a Betti vector has at least the b_-1 entry")
        if any(e < 0 for e in entries):
            raise ValueError(f"Betti numbers must be non-negative: {entries}")

    @property
    def dim(self) -> int:
        return len(self.entries) - 2


def boundary_matrix(sc: SimplicialComplex, i: int) -> list[list[int]]:
    """Augmented boundary matrix sending i-faces to (i-1)-faces.

    Rows are (i-1)-faces, columns i-faces, both sorted; the entry for
    dropping the m-th vertex (in sorted order) is (-1)^m.  For i = 0 the
    single row is the empty face and every column is 1.
    """
    rows = sc.faces(i - 1)
    cols = sc.faces(i)
    row_index = {f: r for r, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        for m in range(len(face)):
            sub = face[:m] + face[m + 1 :]
            mat[row_index[sub]][c] = -1 if m % 2 else 1
    return mat


def matrix_rank(mat: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination
    with partial pivoting on entry magnitude."""
    if not mat or not mat[0]:
        return 0
    m = [list(row) for row in mat]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        best = -1
        best_abs = 0
        for r in range(row, nrows):
            a = abs(m[r][col])
            if a > best_abs:
                best, best_abs = r, a
        if best < 0:
            continue
        if best != row:
            m[row], m[best] = m[best], m[row]
        pivot = m[row][col]
        pivot_row = m[row]
        for r in range(row + 1, nrows):
            factor = m[r][col]
            target = m[r]
            for c in range(col + 1, ncols):
                target[c] = (pivot * target[c] - factor * pivot_row[c]) // prev
            target[col] = 0
        prev = pivot
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


@lru_cache(maxsize=None)
def betti_numbers(sc: SimplicialComplex) -> BettiVector:
    """Reduced rational Betti numbers b_-1 .. b_dim.

    b_i = dim ker(boundary_i) - rank(boundary_{i+1}); b_-1 = 1 exactly for
    the empty complex.  The reduced Euler-Poincare identity
    sum (-1)^i b_i = chi - 1 is asserted on every computation.
    """
    d = sc.dim
    ranks = [matrix_rank(boundary_matrix(sc, i)) for i in range(0, d + 1)]
    ranks.append(0)
    counts = sc.face_counts()
    entries = [1 - (ranks[0] if d >= 0 else 0)]
    for i in range(0, d + 1):
        entries.append(counts[i + 1] - ranks[i] - ranks[i + 1])
    bv = BettiVector(entries)
    chi = sc.euler_characteristic()
    assert (
        sum((-1) ** i * b for i, b in bv.items()) == chi - 1
    ), f"Euler-Poincare identity failed on {sc!r}"
    return bv


@dataclass(frozen=True)
class Witness:
    """A face (None when the whole complex is at fault) plus the reason a
    check failed on it."""

    face: Face | None
    reason: str

    def to_json_dict(self) -> dict:
        return {
            "face": list(self.face) if self.face is not None else None,
            "reason": self.reason,
        }


def _faces_top_down(sc: SimplicialComplex, include_empty: bool):
    for i in range(sc.dim, -1, -1):
        yield from sc.faces(i)
    if include_empty:
        yield ()


def _sphere_chi(dim: int) -> int:
    return 1 + (-1) ** dim


def is_eulerian(sc: SimplicialComplex):
    """Every face link, the empty face included, has the Euler characteristic
    of the sphere of its dimension.  Returns (flag, witness); the flag is
    None (not applicable) for impure complexes."""
    if not sc.is_pure:
        return None, Witness(None, "complex is not pure")
    return _eulerian_condition(sc, include_empty=True)


def is_semi_eulerian(sc: SimplicialComplex):
    """Same as :func:`is_eulerian` but the empty face is exempt."""
    if not sc.is_pure:
        return None, Witness(None, "complex is not pure")
    return _eulerian_condition(sc, include_empty=False)


def _eulerian_condition(sc: SimplicialComplex, include_empty: bool):
    for face in _faces_top_down(sc, include_empty):
        link = sc.link(face)
        chi = link.euler_characteristic()
        expected = _sphere_chi(link.dim)
        if chi != expected:
            return False, Witness(
                face, f"chi(link) = {chi}, expected {expected} for dimension {link.dim}"
            )
    return True, None


def _is_sphere_betti(link: SimplicialComplex, m: int) -> bool:
    # reduced homology of the m-sphere; m = -1 means the empty complex
    if link.dim != m:
        return False
    b = betti_numbers(link)
    return all(entry == (1 if i == m else 0) for i, entry in b.items())


def connected_components(sc: SimplicialComplex) -> int:
    """Components of the underlying vertex graph (0 for the empty complex)."""
    parent = {v: v for v in sc.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in sc.faces(1):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in sc.vertices})


def is_homology_manifold(sc: SimplicialComplex):
    """Closed-case link criterion over the rationals: the link of every
    nonempty face has the reduced homology of a sphere of complementary
    dimension.

    Returns (flag, orientable, witness).  Orientability is reported only
    when the flag holds and means b_dim equals the number of connected
    components.
    """
    if not sc.is_pure:
        return None, None, Witness(None, "complex is not pure")
    for face in _faces_top_down(sc, include_empty=False):
        link = sc.link(face)
        m = sc.dim - len(face)
        if not _is_sphere_betti(link, m):
            b = betti_numbers(link)
            return False, None, Witness(
                face,
                f"link has reduced Betti numbers {list(b.entries)} "
                f"(indices -1..{link.dim}), not those of a {m}-sphere",
            )
    orientable = betti_numbers(sc)[sc.dim] == connected_components(sc) if sc.dim >= 0 else None
    return True, orientable, None


def is_homology_sphere(sc: SimplicialComplex) -> bool:
    """Homology manifold whose global reduced homology is a sphere's."""
    flag, _, _ = is_homology_manifold(sc)
    return bool(flag) and _is_sphere_betti(sc, sc.dim)


def is_pseudomanifold(sc: SimplicialComplex):
    """Pure, every ridge in exactly two facets, and the facet graph
    (adjacency through shared ridges) connected within every connected
    component of the complex.

    Returns (flag, orientable, witness); orientable is None unless the flag
    holds.
    """
    if not sc.is_pure:
        return None, None, Witness(None, "complex is not pure")
    d = sc.dim
    if d < 0:
        return True, None, None
    if d == 0:
        if sc.n_vertices != 2:
            return False, None, Witness(
                None, f"a 0-pseudomanifold has exactly 2 vertices, found {sc.n_vertices}"
            )
        return True, betti_numbers(sc)[0] == connected_components(sc), None

    facets = sc.facets
    ridge_count: dict[Face, list[int]] = {}
    for idx, facet in enumerate(facets):
        for m in range(len(facet)):
            ridge = facet[:m] + facet[m + 1 :]
            ridge_count.setdefault(ridge, []).append(idx)
    for ridge in sorted(ridge_count):
        owners = ridge_count[ridge]
        if len(owners) != 2:
            return False, None, Witness(
                ridge, f"ridge lies in {len(owners)} facets, expected exactly 2"
            )

    parent = list(range(len(facets)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for owners in ridge_count.values():
        ra, rb = find(owners[0]), find(owners[1])
        if ra != rb:
            parent[ra] = rb
    facet_groups = len({find(i) for i in range(len(facets))})
    if facet_groups != connected_components(sc):
        return False, None, Witness(
            None,
            "facets are not ridge-connected within each component "
            f"({facet_groups} facet groups vs {connected_components(sc)} components)",
        )
    orientable = betti_numbers(sc)[d] == connected_components(sc)
    return True, orientable, None


def satisfies_betti_bound(sc: SimplicialComplex, k: int) -> bool:
    """For a 2k-dimensional complex, check
    b_k <= 2 b_{k-1} + 2 sum_{i=0..k-3} b_i  (reduced Betti numbers).

    k = 0 is rejected: the index ranges degenerate and no convention is
    adopted for them.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if sc.dim != 2 * k:
        raise ValueError(f"complex has dimension {sc.dim}, expected {2 * k}")
    b = betti_numbers(sc)
    bound = 2 * b[k - 1] + 2 * sum(b[i] for i in range(0, k - 2))
    return b[k] <= bound


def is_cohen_macaulay(sc: SimplicialComplex):
    """Reisner's criterion over the rationals: for every face, the empty
    face included, the link has vanishing reduced homology below its
    dimension.  Returns (flag, witness)."""
    for face in _faces_top_down(sc, include_empty=True):
        link = sc.link(face)
        b = betti_numbers(link)
        for i in range(-1, link.dim):
            if b[i] != 0:
                return False, Witness(
                    face,
                    f"link has reduced Betti number {b[i]} in dimension {i} "
                    f"below its dimension {link.dim}",
                )
    return True, None


def is_buchsbaum(sc: SimplicialComplex):
    """Pure with every vertex link Cohen-Macaulay.  Returns (flag, witness)."""
    if not sc.is_pure:
        return False, Witness(None, "complex is not pure")
    for v in sc.vertices:
        flag, inner = is_cohen_macaulay(sc.link((v,)))
        if not flag:
            return False, Witness(
                (v,), f"link of vertex {v} is not Cohen-Macaulay: {inner.reason}"
            )
    return True, None


_TRISTATE = {True: True, False: False, None: "not-applicable"}

_FLAG_ORDER = (
    "eulerian",
    "semi_eulerian",
    "homology_sphere",
    "homology_manifold",
    "orientable",
    "pseudomanifold",
    "cohen_macaulay",
    "buchsbaum",
)


@dataclass(frozen=True)
class ClassificationReport:
    """Tri-state classifier flags for one complex.

    Every False flag carries a witness in ``witnesses``; None means the
    classifier does not apply (impure input, or orientability without an
    underlying pseudomanifold).
    """

    pure: bool
    eulerian: bool | None
    semi_eulerian: bool | None
    homology_sphere: bool
    homology_manifold: bool | None
    orientable: bool | None
    pseudomanifold: bool | None
    cohen_macaulay: bool
    buchsbaum: bool
    witnesses: dict[str, Witness]

    @property
    def first_failure(self) -> Witness | None:
        for flag in _FLAG_ORDER:
            if getattr(self, flag) is False:
                return self.witnesses[flag]
        return None

    def to_json_dict(self) -> dict:
        out = {"pure": self.pure}
        for flag in _FLAG_ORDER:
            out[flag] = _TRISTATE[getattr(self, flag)]
        out["witnesses"] = {
            flag: self.witnesses[flag].to_json_dict()
            for flag in _FLAG_ORDER
            if flag in self.witnesses
        }
        return out


def classify(sc: SimplicialComplex) -> ClassificationReport:
    """Run every classifier and assemble the report."""
    eul, eul_w = is_eulerian(sc)
    semi, semi_w = is_semi_eulerian(sc)
    hm, hm_orient, hm_w = is_homology_manifold(sc)
    pm, pm_orient, pm_w = is_pseudomanifold(sc)
    cm, cm_w = is_cohen_macaulay(sc)
    bb, bb_w = is_buchsbaum(sc)
    sphere = is_homology_sphere(sc)

    if hm:
        orientable = hm_orient
    elif pm:
        orientable = pm_orient
    else:
        orientable = None

    witnesses: dict[str, Witness] = {}
    for flag, value, wit in (
        ("eulerian", eul, eul_w),
        ("semi_eulerian", semi, semi_w),
        ("homology_manifold", hm, hm_w),
        ("pseudomanifold", pm, pm_w),
        ("cohen_macaulay", cm, cm_w),
        ("buchsbaum", bb, bb_w),
    ):
        if value is False and wit is not None:
            witnesses[flag] = wit
    if sphere is False:
        b = betti_numbers(sc)
        witnesses["homology_sphere"] = Witness(
            None,
            f"reduced Betti numbers {list(b.entries)} (indices -1..{sc.dim}) "
            f"are not those of a {sc.dim}-sphere, or the link criterion fails",
        )
    if orientable is False:
        witnesses["orientable"] = Witness(
            None,
            f"top Betti number {betti_numbers(sc)[sc.dim]} differs from the "
            f"{connected_components(sc)} connected component(s)",
        )

    return ClassificationReport(
        pure=sc.is_pure,
        eulerian=eul,
        semi_eulerian=semi,
        homology_sphere=sphere,
        homology_manifold=hm,
        orientable=orientable,
        pseudomanifold=pm,
        cohen_macaulay=cm,
        buchsbaum=bb,
        witnesses=witnesses,
    )
