"""The niceness condition on an Alexander polynomial.

A polynomial is nice when no nonzero covector phi kills it, i.e. when
``specialize(delta, phi)`` is never the zero polynomial.  Content does not
matter (phi and phi/content kill the same polynomials), so it is enough to
look for any nonzero integer phi.

Exact decision: the level sets of a killing phi split the support into
blocks with zero coefficient sum, and phi is constant on each block.
Conversely any zero-sum partition whose within-block differences span a
proper sublattice yields such a phi.  We enumerate zero-sum partitions
depth first and stop a branch once the differences reach full rank.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ._linalg import nullspace, primitive, rref, sign_normalize
from .algebra import LaurentPoly, newton_polytope, specialize
from .errors import ZeroPolynomialError

DEFAULT_MAX_SUPPORT = 14
ENV_MAX_SUPPORT = "THURSTONLAB_MAX_SUPPORT"


class NiceStatus(enum.Enum):
    NICE = "NICE"
    NOT_NICE = "NOT_NICE"
    SUFFICIENT_ONLY_PASS = "SUFFICIENT_ONLY_PASS"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class NicenessVerdict:
    status: NiceStatus
    witness: tuple[int, ...] | None = None
    method: str = "exact"

    def __post_init__(self):
        if (self.witness is not None) != (self.status is NiceStatus.NOT_NICE):
            raise ValueError("a witness is present exactly for NOT_NICE verdicts")

    @property
    def is_nice(self) -> bool:
        return self.status in (NiceStatus.NICE, NiceStatus.SUFFICIENT_ONLY_PASS)


def max_support_from_env(default: int = DEFAULT_MAX_SUPPORT) -> int:
    raw = os.environ.get(ENV_MAX_SUPPORT)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def face_sum_criterion(delta: LaurentPoly) -> bool:
    """Nonzero coefficient sum on every face of the Newton polytope (sufficient for nice)."""
    if delta.is_zero():
        raise ZeroPolynomialError("face sums are undefined for the zero polynomial")
    P = newton_polytope(delta)
    for face in P.faces():
        facet_ids = [i for i, f in enumerate(P.facets) if face <= f.vertices]
        s = 0
        for exp, c in delta.terms:
            if all(sum(a * b for a, b in zip(P.facets[i].normal, exp)) == P.facets[i].offset for i in facet_ids):
                s += c
        if s == 0:
            return False
    return True


def _killing_covectors(terms: Sequence[tuple[tuple[int, ...], int]], n: int) -> set[tuple[int, ...]]:
    exps = [e for e, _ in terms]
    coeffs = [c for _, c in terms]
    found: set[tuple[int, ...]] = set()
    seen: set = set()

    def recurse(remaining: tuple[int, ...], diffs: list[list[int]]) -> None:
        span, _ = rref(diffs, n) if diffs else ([], [])
        if len(span) == n:
            return
        # what is left to explore depends only on the unassigned points and the span so far
        key = (remaining, tuple(tuple(r) for r in span))
        if key in seen:
            return
        seen.add(key)
        diffs = [list(r) for r in span]
        if not remaining:
            for v in nullspace(diffs, n):
                found.add(sign_normalize(primitive(v)))
            return
        first, rest = remaining[0], remaining[1:]
        # a block containing `first` needs at least one partner to cancel its coefficient
        for size in range(1, len(rest) + 1):
            for partners in combinations(rest, size):
                if coeffs[first] + sum(coeffs[j] for j in partners) != 0:
                    continue
                block_diffs = [[a - b for a, b in zip(exps[j], exps[first])] for j in partners]
                left = tuple(j for j in rest if j not in partners)
                recurse(left, diffs + block_diffs)

    recurse(tuple(range(len(exps))), [])
    return found


def is_nice(delta: LaurentPoly, max_support: int | None = None) -> NicenessVerdict:
    if max_support is None:
        max_support = max_support_from_env()
    n = delta.nvars
    if delta.is_zero():
        return NicenessVerdict(NiceStatus.NOT_NICE, (1,) + (0,) * (n - 1))
    if n == 1:
        return NicenessVerdict(NiceStatus.NICE)
    if len(delta.terms) > max_support:
        fast = face_sum_criterion(delta)
        return NicenessVerdict(NiceStatus.SUFFICIENT_ONLY_PASS if fast else NiceStatus.UNDECIDED, method="face-sum")
    found = _killing_covectors(delta.terms, n)
    if not found:
        return NicenessVerdict(NiceStatus.NICE)
    witness = min(found)
    assert specialize(delta, witness).is_zero()
    return NicenessVerdict(NiceStatus.NOT_NICE, witness)


def fast_check(delta: LaurentPoly) -> NicenessVerdict:
    ok = face_sum_criterion(delta)
    return NicenessVerdict(NiceStatus.SUFFICIENT_ONLY_PASS if ok else NiceStatus.UNDECIDED, method="face-sum")
