"""Executable upper- and lower-bound statements with structured reports.

Each checker evaluates its hypotheses and its conclusion inequalities
separately.  Conclusions are evaluated even when hypotheses fail, so a
near-miss can be inspected; such conclusions are labeled vacuous and the
overall outcome is "hypotheses-not-met" (exit code 2) rather than "fail"
(exit code 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .complexes import SimplicialComplex
from .cyclic import cyclic_h, gale_facets
from .homology import (
    betti_numbers,
    is_buchsbaum,
    is_eulerian,
    is_homology_manifold,
    is_homology_sphere,
    is_pseudomanifold,
    satisfies_betti_bound,
)
from .vectors import h_from_f, short_h_from_f


@dataclass(frozen=True)
class Hypothesis:
    condition: str
    status: bool | None  # None = not applicable
    witness: str | None = None

    def to_json_dict(self) -> dict:
        status = self.status if self.status is not None else "not-applicable"
        return {"condition": self.condition, "status": status, "witness": self.witness}


@dataclass(frozen=True)
class Inequality:
    label: str
    left: int
    right: int
    holds: bool
    binding: bool = True  # non-binding rows are informational only

    def to_json_dict(self) -> dict:
        out = {"label": self.label, "left": self.left, "right": self.right, "holds": self.holds}
        if not self.binding:
            out["informational"] = True
        return out


@dataclass(frozen=True)
class VerificationReport:
    statement: str
    hypotheses: tuple[Hypothesis, ...]
    conclusions: tuple[Inequality, ...]

    @property
    def hypotheses_met(self) -> bool:
        return all(h.status is True for h in self.hypotheses)

    @property
    def conclusion_holds(self) -> bool:
        return all(c.holds for c in self.conclusions if c.binding)

    @property
    def overall(self) -> str:
        if not self.hypotheses_met:
            return "hypotheses-not-met"
        return "pass" if self.conclusion_holds else "fail"

    @property
    def exit_code(self) -> int:
        return {"pass": 0, "fail": 1, "hypotheses-not-met": 2}[self.overall]

    def failed_hypotheses(self) -> tuple[Hypothesis, ...]:
        return tuple(h for h in self.hypotheses if h.status is not True)

    def to_json_dict(self) -> dict:
        return {
            "statement": self.statement,
            "overall": self.overall,
            "exit_code": self.exit_code,
            "conclusions_vacuous": not self.hypotheses_met,
            "hypotheses": [h.to_json_dict() for h in self.hypotheses],
            "conclusions": [c.to_json_dict() for c in self.conclusions],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def _odd_dimension_k(sc: SimplicialComplex) -> int:
    if not sc.is_pure:
        raise ValueError("the statement applies to pure complexes only")
    dim = sc.dim
    if dim < 3 or dim % 2 == 0:
        raise ValueError(f"need an odd dimension 2k+1 with k >= 1, got dimension {dim}")
    return (dim - 1) // 2


def _admissible_link_theorem(link: SimplicialComplex, k: int):
    """Theorem-route admissibility of one vertex link: a homology manifold
    that either has Euler characteristic 2 (homology-sphere links land here)
    or is orientable with the middle Betti bound."""
    flag, orientable, wit = is_homology_manifold(link)
    if not flag:
        return False, f"link is not a homology manifold: {wit.reason}"
    chi = link.euler_characteristic()
    if chi == 2:
        return True, None
    b = betti_numbers(link)
    bound = 2 * b[k - 1] + 2 * sum(b[i] for i in range(0, k - 2))
    if orientable and satisfies_betti_bound(link, k):
        return True, None
    if not orientable:
        return False, f"chi(link) = {chi} != 2 and the link is not orientable"
    return False, (
        f"chi(link) = {chi} != 2 and the middle Betti bound fails: "
        f"beta_{k} = {b[k]} > {bound}"
    )


def _admissible_link_corollary(link: SimplicialComplex, k: int):
    flag, _, wit = is_homology_manifold(link)
    if not flag:
        return False, f"link is not a homology manifold: {wit.reason}"
    chi = link.euler_characteristic()
    middle = betti_numbers(link)[k]
    if middle == 0 or (-1) ** k * (chi - 2) <= 0:
        return True, None
    return False, (
        f"beta_{k}(link) = {middle} != 0 and (-1)^{k}*(chi-2) = "
        f"{(-1) ** k * (chi - 2)} > 0"
    )


def check_ubc_hypotheses(sc: SimplicialComplex, mode: str = "theorem") -> tuple[Hypothesis, ...]:
    """Per-vertex admissibility items for the odd-dimensional upper bound.

    theorem mode: every vertex link is a homology manifold with chi = 2, or
    an oriented homology manifold obeying the middle Betti bound.
    corollary mode: the complex is an oriented pseudomanifold and every
    vertex link is a homology manifold with vanishing middle homology or
    with (-1)^k (chi - 2) <= 0.
    """
    if mode not in ("theorem", "corollary"):
        raise ValueError(f"unknown mode {mode!r}")
    k = _odd_dimension_k(sc)
    items: list[Hypothesis] = []
    if mode == "corollary":
        pm, orientable, wit = is_pseudomanifold(sc)
        ok = bool(pm) and bool(orientable)
        reason = None
        if not pm:
            reason = wit.reason
        elif not orientable:
            reason = "pseudomanifold is not orientable"
        items.append(Hypothesis("complex is an oriented pseudomanifold", ok, reason))
    check = _admissible_link_theorem if mode == "theorem" else _admissible_link_corollary
    for v in sc.vertices:
        ok, reason = check(sc.link((v,)), k)
        items.append(Hypothesis(f"link of vertex {v} is admissible", ok, reason))
    return tuple(items)


def verify_ubc(sc: SimplicialComplex) -> VerificationReport:
    """Face-count upper bound for pure (2k+1)-dimensional complexes against
    the cyclic (2k+2)-polytope on the same number of vertices.

    Binding conclusions: f_i <= f_i(cyclic) for i = 1..2k+1 and the
    intermediate short-h comparison sh_i <= sh_i(cyclic) for i = 0..k+1.
    The entrywise h comparison for i = 0..k+1 is reported as informational
    only: whether it follows from the hypotheses is an open question.
    """
    k = _odd_dimension_k(sc)
    d = 2 * k + 2
    n = sc.n_vertices
    if n < d + 1:
        raise ValueError(f"need at least {d + 1} vertices for the cyclic comparison, got {n}")
    hypotheses = check_ubc_hypotheses(sc, "theorem")

    cyc = gale_facets(d, n)
    f_here, f_cyc = sc.f_vector(), cyc.f_vector()
    conclusions = [
        Inequality(
            f"f_{i} <= f_{i}(C_{d}({n}))", f_here[i], f_cyc[i], f_here[i] <= f_cyc[i]
        )
        for i in range(1, 2 * k + 2)
    ]
    sh_here, sh_cyc = short_h_from_f(f_here), short_h_from_f(f_cyc)
    conclusions.extend(
        Inequality(
            f"short_h_{i} <= short_h_{i}(C_{d}({n}))",
            sh_here[i],
            sh_cyc[i],
            sh_here[i] <= sh_cyc[i],
        )
        for i in range(0, k + 2)
    )
    h_here, h_cyc = h_from_f(f_here), h_from_f(f_cyc)
    conclusions.extend(
        Inequality(
            f"h_{i} <= h_{i}(C_{d}({n}))",
            h_here[i],
            h_cyc[i],
            h_here[i] <= h_cyc[i],
            binding=False,
        )
        for i in range(0, k + 2)
    )
    return VerificationReport("ubc", hypotheses, tuple(conclusions))


def check_lemma_hh(sc: SimplicialComplex, k: int | None = None) -> VerificationReport:
    """h-vector upper bound for even-dimensional homology manifolds:
    h_i <= h_i(cyclic (2k+1)-polytope on the same vertices) for i = 0..k+1,
    under chi = 2 or orientability plus the middle Betti bound."""
    dim = sc.dim
    if k is None:
        if dim < 2 or dim % 2:
            raise ValueError(f"need an even dimension 2k with k >= 1, got dimension {dim}")
        k = dim // 2
    if dim != 2 * k or k < 1:
        raise ValueError(f"complex has dimension {dim}, expected {2 * k} with k >= 1")
    r = sc.n_vertices
    d = 2 * k + 1
    if r < d + 1:
        raise ValueError(f"need at least {d + 1} vertices for the cyclic comparison, got {r}")

    flag, orientable, wit = is_homology_manifold(sc)
    hyp_manifold = Hypothesis(
        "complex is a homology manifold",
        flag,
        wit.reason if wit is not None else None,
    )
    chi = sc.euler_characteristic()
    if flag:
        if chi == 2:
            alt_status, alt_reason = True, None
        elif bool(orientable) and satisfies_betti_bound(sc, k):
            alt_status, alt_reason = True, None
        else:
            b = betti_numbers(sc)
            bound = 2 * b[k - 1] + 2 * sum(b[i] for i in range(0, k - 2))
            alt_status = False
            alt_reason = (
                f"chi = {chi} != 2; orientable = {bool(orientable)}; "
                f"beta_{k} = {b[k]} vs bound {bound}"
            )
    else:
        alt_status, alt_reason = None, "not evaluated: not a homology manifold"
    hyp_alt = Hypothesis(
        "chi = 2, or orientable with the middle Betti bound", alt_status, alt_reason
    )

    h_here = h_from_f(sc.f_vector())
    conclusions = tuple(
        Inequality(
            f"h_{i} <= h_{i}(C_{d}({r}))",
            h_here[i],
            cyclic_h(d, r, i),
            h_here[i] <= cyclic_h(d, r, i),
        )
        for i in range(0, k + 2)
    )
    return VerificationReport("lemma-hh", (hyp_manifold, hyp_alt), conclusions)


def check_sphere_ubc(sc: SimplicialComplex) -> VerificationReport:
    """h-vector upper bound for rational homology spheres:
    h_i <= h_i(cyclic d-polytope on the same vertices) for i = 0..d-1."""
    d = sc.dim + 1
    n = sc.n_vertices
    hypotheses = [
        Hypothesis("complex is a rational homology sphere", is_homology_sphere(sc))
    ]
    conclusions: tuple[Inequality, ...]
    if d >= 2 and n >= d + 1:
        h_here = h_from_f(sc.f_vector())
        conclusions = tuple(
            Inequality(
                f"h_{i} <= h_{i}(C_{d}({n}))",
                h_here[i],
                cyclic_h(d, n, i),
                h_here[i] <= cyclic_h(d, n, i),
            )
            for i in range(0, d)
        )
    else:
        hypotheses.append(
            Hypothesis(
                "cyclic comparison defined (needs dimension >= 1 and more than d vertices)",
                False,
                f"d = {d}, n = {n}",
            )
        )
        conclusions = ()
    return VerificationReport("sphere-ubc", tuple(hypotheses), conclusions)


def check_dehn_sommerville(sc: SimplicialComplex) -> VerificationReport:
    """Palindromicity h_i = h_{d-i} for Eulerian complexes."""
    eul, wit = is_eulerian(sc)
    hypotheses = (
        Hypothesis(
            "complex is Eulerian", eul, wit.reason if wit is not None else None
        ),
    )
    h = h_from_f(sc.f_vector())
    d = sc.dim + 1
    conclusions = tuple(
        Inequality(f"h_{i} == h_{d - i}", h[i], h[d - i], h[i] == h[d - i])
        for i in range(0, d + 1)
    )
    return VerificationReport("dehn-sommerville", hypotheses, conclusions)


def check_lower_bounds(sc: SimplicialComplex) -> VerificationReport:
    """Alternating skeleton Euler characteristics of a Buchsbaum complex:
    (-1)^i chi_i >= 0 for 0 <= i <= floor((d-1)/2)."""
    if not sc.is_pure:
        raise ValueError("lower bounds apply to pure complexes only")
    bb, wit = is_buchsbaum(sc)
    hypotheses = (
        Hypothesis(
            "complex is Buchsbaum (pure with Cohen-Macaulay vertex links)",
            bb,
            wit.reason if wit is not None else None,
        ),
    )
    d = sc.dim + 1
    conclusions = []
    for i in range(0, (d - 1) // 2 + 1):
        value = (-1) ** i * sc.chi_partial(i)
        conclusions.append(
            Inequality(f"(-1)^{i} * chi_{i} >= 0", value, 0, value >= 0)
        )
    return VerificationReport("lower-bounds", hypotheses, tuple(conclusions))


VERIFIERS = {
    "ubc": verify_ubc,
    "lemma-hh": check_lemma_hh,
    "sphere-ubc": check_sphere_ubc,
    "dehn-sommerville": check_dehn_sommerville,
    "lower-bounds": check_lower_bounds,
}
