"""Seiberg-Witten supports over circle bundles and the complexity bounds built on them.

Spin^c structures are represented by their first Chern classes in the free
quotient of H^2(N).  Twisting a structure by the Euler class e moves c1 by
2e, so the total-space invariant attached to a class is the sum of the
3-dimensional values along its 2e-orbit.
"""

from __future__ import annotations

import enum
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .bundle import Bundle4, ClassH2M, Manifold3, self_intersection
from .errors import DimensionMismatch, GysinViolation, MissingDataError, ZeroEulerClassError
from .exceptional import theta_test, xi_test
from .niceness import NicenessVerdict, NiceStatus
from .norms import fibered_cone_test, thurston_norm
from .polytope import maximizing_vertices

IntVec = tuple[int, ...]


class SWSupport:
    """Finitely supported map from c1-classes to nonzero integers."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[IntVec, int] = defaultdict(int)
        for c1, value in items:
            c1 = tuple(int(x) for x in c1)
            if len(c1) != dim:
                raise DimensionMismatch(f"class {c1} has length {len(c1)}, expected {dim}")
            acc[c1] += int(value)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "entries", tuple(sorted((k, v) for k, v in acc.items() if v != 0)))

    def __setattr__(self, name, value):
        raise AttributeError("SWSupport is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SWSupport):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.dim, self.entries))

    def __repr__(self) -> str:
        return f"SWSupport({self.dim}, {dict(self.entries)})"

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[IntVec, int]:
        return dict(self.entries)

    def classes(self) -> list[IntVec]:
        return [k for k, _ in self.entries]

    def total(self) -> int:
        return sum(v for _, v in self.entries)


def _pair(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _orbit_key(h: IntVec, step: IntVec) -> IntVec:
    i = next(i for i, c in enumerate(step) if c != 0)
    k = h[i] // step[i]
    return tuple(a - k * s for a, s in zip(h, step))


def orbits(sw: SWSupport, e: Sequence[int]) -> dict[IntVec, list[IntVec]]:
    """Group the support into orbits of translation by 2e, keyed by least member."""
    step = tuple(2 * int(c) for c in e)
    groups: dict[IntVec, list[IntVec]] = defaultdict(list)
    for h in sw.classes():
        groups[_orbit_key(h, step)].append(h)
    return {min(members): sorted(members) for members in groups.values()}


def baldridge_average(sw: SWSupport, e: Sequence[int]) -> SWSupport:
    """Orbit sums of the support under translation by 2e; zero sums dropped."""
    e = tuple(int(c) for c in e)
    if len(e) != sw.dim:
        raise DimensionMismatch(f"Euler class of length {len(e)} for classes of length {sw.dim}")
    if not any(e):
        raise ZeroEulerClassError("e = 0: use product_average (the product rule)")
    if sw.dim <= 2:
        warnings.warn("the averaging formula is stated for b1 > 2", stacklevel=2)
    values = sw.as_dict()
    return SWSupport(sw.dim, [(rep, sum(values[h] for h in members)) for rep, members in orbits(sw, e).items()])


def product_average(sw: SWSupport) -> SWSupport:
    """Product bundle: the 4-dimensional invariant equals the 3-dimensional one."""
    return sw


def four_dim_support(sw: SWSupport, e: Sequence[int]) -> SWSupport:
    if not any(e):
        return product_average(sw)
    return baldridge_average(sw, e)


def basic_classes_M(sw: SWSupport, e: Sequence[int]) -> list[IntVec]:
    return four_dim_support(sw, e).classes()


def adjunction_bound(basics: Iterable[Sequence[int]], a: ClassH2M) -> int:
    """max over basic classes k of |a.a| + k(sigma), floored at 0."""
    si = abs(self_intersection(a))
    best = 0
    for kappa in basics:
        if len(kappa) != len(a.sigma):
            raise DimensionMismatch(f"basic class {tuple(kappa)} does not match sigma")
        best = max(best, si + _pair(kappa, a.sigma))
    return best


class BoundStatus(enum.Enum):
    EXACT = "EXACT"
    LOWER_BOUND = "LOWER_BOUND"
    GABAI_LOWER_BOUND = "GABAI_LOWER_BOUND"
    UNSUPPORTED = "UNSUPPORTED"


# Citation label emitted in the output next to each status.
PROVENANCE = {
    BoundStatus.EXACT: "Corollary 1.5",
    BoundStatus.LOWER_BOUND: "Theorem 1.1",
    BoundStatus.GABAI_LOWER_BOUND: "Remark 2 / Gabai",
    BoundStatus.UNSUPPORTED: "none",
}


@dataclass(frozen=True)
class BoundResult:
    value: int
    status: BoundStatus
    provenance: str
    self_intersection: int
    thurston_norm: int
    in_xi: bool
    in_theta: bool

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "status": self.status.value,
            "provenance": self.provenance,
            "self_intersection": self.self_intersection,
            "thurston_norm": self.thurston_norm,
            "in_xi": self.in_xi,
            "in_theta": self.in_theta,
        }


def refined_bound(b: Bundle4, a: ClassH2M, nice_verdict: NicenessVerdict | None) -> BoundResult:
    if tuple(a.euler) != tuple(b.euler):
        raise GysinViolation("class was built for a different Euler class")
    si = self_intersection(a)
    ball = b.base.dual_ball
    norm = thurston_norm(ball, a.sigma)
    in_xi = xi_test(ball, b.euler)
    in_theta = theta_test(ball, b.euler)
    if not in_xi:
        nice = nice_verdict is not None and nice_verdict.status is NiceStatus.NICE
        status = BoundStatus.EXACT if nice else BoundStatus.LOWER_BOUND
    elif si == 0:
        status = BoundStatus.GABAI_LOWER_BOUND
    else:
        status = BoundStatus.UNSUPPORTED
    return BoundResult(abs(si) + norm, status, PROVENANCE[status], si, norm, in_xi, in_theta)


@dataclass
class ClaimReport:
    witness: IntVec | None
    candidates: list[IntVec] = field(default_factory=list)
    hypothesis_violations: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "witness": list(self.witness) if self.witness is not None else None,
            "candidates": [list(c) for c in self.candidates],
            "hypothesis_violations": self.hypothesis_violations,
        }


def claim_witness(m: Manifold3, e: Sequence[int], sigma: Sequence[int]) -> ClaimReport:
    """Search the norm-detecting classes for one whose 2e-orbit sum is nonzero.

    The model hypotheses (support inside the slab |h.sigma| <= ||sigma||, and
    every sigma-maximizing vertex of the ball present in the support) are
    checked and reported, but the search runs regardless.
    """
    if m.sw is None:
        raise MissingDataError(f"{m.name} has no SW support")
    e = tuple(int(c) for c in e)
    sigma = tuple(int(c) for c in sigma)
    if _pair(sigma, e) != 0:
        raise GysinViolation(f"sigma(e) = {_pair(sigma, e)} != 0")
    sw: SWSupport = m.sw
    norm = thurston_norm(m.dual_ball, sigma)
    violations = []
    for h in sw.classes():
        if abs(_pair(h, sigma)) > norm:
            violations.append(f"|h.sigma| > ||sigma|| for h = {list(h)}")
    top = {h for h in sw.classes() if _pair(h, sigma) == norm}
    for v in maximizing_vertices(m.dual_ball.ball, sigma):
        v = tuple(int(c) for c in v)
        if v not in top:
            violations.append(f"maximizing vertex {list(v)} is not in the support")
    candidates = sorted(top)
    if not candidates:
        return ClaimReport(None, [], violations)
    values = sw.as_dict()
    if any(e):
        sums = {rep: sum(values[h] for h in members) for rep, members in orbits(sw, e).items()}
        key = {h: rep for rep, members in orbits(sw, e).items() for h in members}
        for h in candidates:
            if sums[key[h]] != 0:
                return ClaimReport(h, candidates, violations)
        return ClaimReport(None, candidates, violations)
    return ClaimReport(candidates[0], candidates, violations)


def smoothed_complexity(chi_sigma: int, intersection_count: int) -> int:
    """Complexity after resolving the crossings of a norm-minimizing lift with the tori over a curve.

    The tori add nothing; each crossing costs 2.
    """
    if chi_sigma < 0 or intersection_count < 0:
        raise ValueError("inputs must be nonnegative")
    return chi_sigma + 2 * intersection_count


@dataclass(frozen=True)
class SymplecticStatus:
    symplectic_candidate: bool
    reasons: tuple[str, ...]

    def as_dict(self) -> dict:
        return {"symplectic_candidate": self.symplectic_candidate, "reasons": list(self.reasons)}


def symplectic_status(b: Bundle4, a: ClassH2M) -> SymplecticStatus:
    in_cone = fibered_cone_test(b.base, a.sigma)
    si = self_intersection(a)
    reasons = (
        f"fibered cone: {'yes' if in_cone else 'no'}",
        f"self-intersection {si} {'> 0' if si > 0 else '<= 0'}",
    )
    return SymplecticStatus(in_cone and si > 0, reasons)
