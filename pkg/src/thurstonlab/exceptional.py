"""Exceptional Euler classes of a dual norm ball.

A carrier is the segment {(x - v)/2 : x in E} for a vertex v and a closed
edge E.  The real exceptional set is the union of the carriers with the
origin removed; Xi is its set of integral points and Theta the integral
classes on open rays through it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor
from typing import Sequence

from ._linalg import rank, rref
from .norms import DualBall
from .polytope import Point, Segment, _check_dim, on_segment


@dataclass(frozen=True)
class Carrier:
    vertex: tuple[int, ...]
    edge: Segment
    segment: Segment


@dataclass(frozen=True)
class ExceptionalSet:
    carriers: tuple[Carrier, ...]
    degenerate: bool = False

    def contains(self, w: Sequence) -> bool:
        if all(c == 0 for c in w):
            return False
        return any(c.segment.contains(w) for c in self.carriers)


def exceptional_segments(B: DualBall) -> ExceptionalSet:
    out = []
    for e in B.edges():
        for v in B.vertices:
            seg = Segment(
                tuple((a - b) / 2 for a, b in zip(e.start, v)),
                tuple((a - b) / 2 for a, b in zip(e.end, v)),
            )
            out.append(Carrier(v, e, seg))
    return ExceptionalSet(tuple(out), B.is_degenerate)


def _lattice_points(seg: Segment) -> list[tuple[int, ...]]:
    lo = [ceil(min(a, b)) for a, b in zip(seg.start, seg.end)]
    hi = [floor(max(a, b)) for a, b in zip(seg.start, seg.end)]
    if any(l > h for l, h in zip(lo, hi)):
        return []
    return [p for p in product(*(range(l, h + 1) for l, h in zip(lo, hi))) if on_segment(seg.start, seg.end, p)]


def xi_enumerate(B: DualBall, exc: ExceptionalSet | None = None) -> list[tuple[int, ...]]:
    """All nonzero integral w such that v + 2w lies on a closed edge for some vertex v.

    Scans the integer bounding box of each carrier and keeps the points on
    the carrier; the union is sorted for deterministic output.
    """
    if exc is None:
        exc = exceptional_segments(B)
    found: set[tuple[int, ...]] = set()
    for c in exc.carriers:
        found.update(_lattice_points(c.segment))
    found.discard((0,) * B.dim)
    return sorted(found)


def xi_test(B: DualBall, e: Sequence[int]) -> bool:
    _check_dim(B.dim, e, "Euler class")
    if all(c == 0 for c in e):
        return False
    edge_list = B.edges()
    for v in B.vertices:
        x = tuple(a + 2 * b for a, b in zip(v, e))
        if any(s.contains(x) for s in edge_list):
            return True
    return False


def _ray_hits_segment(e: Sequence, seg: Segment) -> bool:
    """Does {lam * e : lam > 0} meet the closed segment?"""
    p = seg.start
    d = seg.direction
    n = len(e)
    cols = [[Fraction(e[i]), -d[i]] for i in range(n)]
    if rank(cols, 2) == 2:
        aug = [[Fraction(e[i]), -d[i], p[i]] for i in range(n)]
        red, piv = rref(aug, 3)
        if 2 in piv:
            return False
        lam, t = red[0][2], red[1][2]
        return lam > 0 and 0 <= t <= 1
    # e and d are parallel (or d = 0): the segment must lie on the line R e
    if rank([list(e), list(p)], n) > 1:
        return False
    i = next(i for i, c in enumerate(e) if c != 0)
    mu = Fraction(p[i]) / e[i]
    delta = Fraction(d[i]) / e[i]
    return max(mu, mu + delta) > 0


def theta_test(B: DualBall, e: Sequence[int], exc: ExceptionalSet | None = None) -> bool:
    _check_dim(B.dim, e, "Euler class")
    if all(c == 0 for c in e):
        return False
    if exc is None:
        exc = exceptional_segments(B)
    return any(_ray_hits_segment(e, c.segment) for c in exc.carriers)


def carrier_points(exc: ExceptionalSet) -> list[Point]:
    return [p for c in exc.carriers for p in (c.segment.start, c.segment.end)]
