"""Exact rational convex polytopes.

A :class:`Polytope` is stored by its canonical (sorted, irredundant) vertex
list.  Facets are derived on demand with a double-description pass over the
polar cone, after moving to coordinates on the affine hull so that points,
segments and other lower-dimensional polytopes are handled uniformly.  All
predicates use ``int``/``Fraction`` arithmetic only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import floor
from typing import Iterable, Sequence

from ._linalg import dot, inverse, nullspace, primitive, rank, rref
from .errors import DimensionMismatch, EmptyInput, ZeroVectorError

Point = tuple  # tuple of Fraction


def as_point(x: Iterable) -> Point:
    return tuple(Fraction(c) for c in x)


def _check_dim(dim: int, x: Sequence, what: str = "vector") -> None:
    if len(x) != dim:
        raise DimensionMismatch(f"{what} has length {len(x)}, expected {dim}")


class LocationKind(enum.Enum):
    OUTSIDE = "OUTSIDE"
    VERTEX = "VERTEX"
    ON_EDGE = "ON_EDGE"
    INTERIOR_OF_FACE = "INTERIOR_OF_FACE"


@dataclass(frozen=True)
class Location:
    kind: LocationKind
    face_dim: int | None = None

    @property
    def on_closed_edge(self) -> bool:
        return self.kind in (LocationKind.VERTEX, LocationKind.ON_EDGE)

    def __str__(self) -> str:
        if self.kind is LocationKind.INTERIOR_OF_FACE:
            return f"INTERIOR_OF_FACE({self.face_dim})"
        return self.kind.value


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    @property
    def direction(self) -> Point:
        return tuple(b - a for a, b in zip(self.start, self.end))

    @property
    def midpoint(self) -> Point:
        return tuple((a + b) / 2 for a, b in zip(self.start, self.end))

    def contains(self, x: Sequence) -> bool:
        return on_segment(self.start, self.end, x)

    def is_parallel_to(self, w: Sequence) -> bool:
        d = self.direction
        return any(c != 0 for c in d) and rank([d, list(w)]) == 1


def on_segment(a: Sequence, b: Sequence, x: Sequence) -> bool:
    """Closed-segment membership, exact."""
    d = [q - p for p, q in zip(a, b)]
    y = [q - p for p, q in zip(a, x)]
    dd = dot(d, d)
    if dd == 0:
        return all(c == 0 for c in y)
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            if y[i] * d[j] != y[j] * d[i]:
                return False
    t = dot(y, d)
    return 0 <= t <= dd


@dataclass(frozen=True)
class _Facet:
    normal: tuple[int, ...]
    offset: int
    vertices: frozenset[int]


def _double_description(rows: list[list[Fraction]], m: int) -> list[tuple[tuple[int, ...], int]]:
    """Extreme rays of the pointed cone {y : r.y <= 0 for every row r}.

    Returns (primitive integer ray, bitmask of tight rows).
    """
    chosen: list[int] = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in chosen] + [r], m) > len(chosen):
            chosen.append(i)
        if len(chosen) == m:
            break
    if len(chosen) < m:
        raise ValueError("cone is not pointed")
    inv = inverse([rows[i] for i in chosen])
    rays: list[tuple[tuple[int, ...], int]] = []
    processed = set(chosen)
    for j in range(m):
        ray = primitive([-inv[i][j] for i in range(m)])
        mask = 0
        for k, idx in enumerate(chosen):
            if k != j:
                mask |= 1 << idx
        rays.append((ray, mask))

    for i, r in enumerate(rows):
        if i in processed:
            continue
        processed.add(i)
        pos, neg, zero = [], [], []
        for ray, mask in rays:
            s = dot(r, ray)
            if s > 0:
                pos.append((ray, mask, s))
            elif s < 0:
                neg.append((ray, mask, s))
            else:
                zero.append((ray, mask | (1 << i)))
        if not pos:
            rays = [(ray, mask | (1 << i)) if dot(r, ray) == 0 else (ray, mask) for ray, mask in rays]
            continue
        new = list(zero) + [(ray, mask) for ray, mask, _ in neg]
        for p_ray, p_mask, ps in pos:
            for n_ray, n_mask, ns in neg:
                common = p_mask & n_mask
                if bin(common).count("1") < m - 2:
                    continue
                adjacent = True
                for o_ray, o_mask in rays:
                    if o_ray == p_ray or o_ray == n_ray:
                        continue
                    if common & ~o_mask == 0:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = [ps * a - ns * b for a, b in zip(n_ray, p_ray)]
                new.append((primitive(combo), common | (1 << i)))
        rays = new
    return rays


class Polytope:
    """Convex hull of finitely many rational points, kept by its vertices."""

    __slots__ = ("dim", "vertices", "__dict__")

    def __init__(self, vertices: Iterable[Sequence], *, _trusted: bool = False):
        pts = sorted({as_point(v) for v in vertices})
        if not pts:
            raise EmptyInput("a polytope needs at least one point")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise DimensionMismatch("points of different lengths")
        self.dim = dims.pop()
        if not _trusted:
            pts = _extreme_points(pts)
        self.vertices: tuple[Point, ...] = tuple(pts)

    def __repr__(self) -> str:
        inner = ", ".join("(" + ", ".join(str(c) for c in v) + ")" for v in self.vertices)
        return f"Polytope([{inner}])"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    @cached_property
    def _structure(self) -> "_Structure":
        return _Structure.build(self.vertices, self.dim)

    @property
    def affine_dim(self) -> int:
        return self._structure.k

    def contains(self, x: Sequence) -> bool:
        _check_dim(self.dim, x)
        return self._structure.contains(x)

    @cached_property
    def facets(self) -> tuple[_Facet, ...]:
        s = self._structure
        out = []
        for normal, offset in s.facets:
            inc = frozenset(i for i, v in enumerate(self.vertices) if dot(normal, v) == offset)
            out.append(_Facet(normal, offset, inc))
        return tuple(out)

    def face_vertices(self, facet_ids: Iterable[int]) -> frozenset[int]:
        verts = frozenset(range(len(self.vertices)))
        for f in facet_ids:
            verts &= self.facets[f].vertices
        return verts

    def faces(self) -> list[frozenset[int]]:
        """Vertex-index sets of all nonempty faces, the polytope itself included."""
        everything = frozenset(range(len(self.vertices)))
        found = {everything}
        frontier = [f.vertices for f in self.facets]
        while frontier:
            nxt = []
            for s in frontier:
                if s and s not in found:
                    found.add(s)
                    nxt.append(s)
            frontier = [a & f.vertices for a in nxt for f in self.facets if (a & f.vertices) != a]
        return sorted(found, key=lambda s: (len(s), sorted(s)))


def _affine_rank(points: Sequence[Sequence]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]], len(base))


@dataclass
class _Structure:
    k: int
    equations: list[tuple[tuple[int, ...], Fraction]]
    facets: list[tuple[tuple[int, ...], Fraction]] = field(default_factory=list)

    @classmethod
    def build(cls, points: Sequence[Point], n: int) -> "_Structure":
        npts = len(points)
        center = tuple(sum(p[i] for p in points) / npts for i in range(n))
        diffs = [[a - c for a, c in zip(p, center)] for p in points]
        basis, pivots = rref(diffs, n)
        k = len(basis)
        equations = []
        for eta in nullspace(basis, n) if k else nullspace([], n):
            eta_i = primitive(eta)
            equations.append((eta_i, Fraction(dot(eta_i, center))))
        if k == 0:
            return cls(0, equations)
        # local coordinates: y = x[pivots] - center[pivots] (rref basis has identity on pivots)
        local = [[d[c] for c in pivots] for d in diffs]
        rows = [y + [Fraction(-1)] for y in local]
        rows.append([Fraction(0)] * k + [Fraction(-1)])
        facets = []
        for ray, _mask in _double_description(rows, k + 1):
            amb = [0] * n
            for coef, c in zip(ray[:k], pivots):
                amb[c] = coef
            normal = primitive(amb)
            # every extreme ray is tight on k point rows, so the max is the offset
            offset = max(dot(normal, p) for p in points)
            facets.append((normal, offset))
        return cls(k, equations, facets)

    def contains(self, x: Sequence) -> bool:
        return all(dot(e, x) == c for e, c in self.equations) and all(dot(a, x) <= b for a, b in self.facets)


def _extreme_points(pts: list[Point]) -> list[Point]:
    if len(pts) == 1:
        return pts
    s = _Structure.build(pts, len(pts[0]))
    if s.k == 0:
        return pts[:1]
    out = []
    for p in pts:
        tight = [a for a, b in s.facets if dot(a, p) == b]
        if tight and rank(tight, len(p)) == s.k:
            out.append(p)
    return out


def hull(points: Iterable[Sequence]) -> Polytope:
    """Convex hull with redundant points removed."""
    return Polytope(points)


def locate(P: Polytope, x: Sequence) -> Location:
    _check_dim(P.dim, x)
    s = P._structure
    if not all(dot(e, x) == c for e, c in s.equations):
        return Location(LocationKind.OUTSIDE)
    tight = []
    for i, (a, b) in enumerate(s.facets):
        val = dot(a, x)
        if val > b:
            return Location(LocationKind.OUTSIDE)
        if val == b:
            tight.append(i)
    if tight:
        verts = [P.vertices[i] for i in sorted(P.face_vertices(tight))]
        k = _affine_rank(verts)
    else:
        k = s.k
    if k == 0:
        return Location(LocationKind.VERTEX, 0)
    if k == 1:
        return Location(LocationKind.ON_EDGE, 1)
    return Location(LocationKind.INTERIOR_OF_FACE, k)


def support_value(P: Polytope, sigma: Sequence) -> Fraction:
    _check_dim(P.dim, sigma, "covector")
    return max(dot(v, sigma) for v in P.vertices)


def maximizing_vertices(P: Polytope, sigma: Sequence) -> tuple[Point, ...]:
    best = support_value(P, sigma)
    return tuple(v for v in P.vertices if dot(v, sigma) == best)


def edges(P: Polytope) -> list[Segment]:
    n = len(P.vertices)
    if n < 2:
        return []
    if P.affine_dim == 1:
        return [Segment(P.vertices[0], P.vertices[1])]
    facets = P.facets
    out = []
    everything = frozenset(range(n))
    for i, j in combinations(range(n), 2):
        common = everything
        for f in facets:
            if i in f.vertices and j in f.vertices:
                common &= f.vertices
        if common == {i, j}:
            out.append(Segment(P.vertices[i], P.vertices[j]))
    return out


@dataclass(frozen=True)
class ObservationResult:
    hypothesis: bool
    edge_parallel: Segment | None = None
    vertex_witness: Point | None = None
    signs: tuple[int, ...] = ()


def _step_bound(P: Polytope, w: Sequence) -> int:
    bound = None
    for i, wi in enumerate(w):
        if wi == 0:
            continue
        coords = [v[i] for v in P.vertices]
        b = floor((max(coords) - min(coords)) / abs(wi))
        bound = b if bound is None else min(bound, b)
    return bound or 0


def observation_check(P: Polytope, w: Sequence) -> ObservationResult:
    """Test the translate hypothesis for ``w`` and produce the edge witnesses.

    Each vertex v gets sign +1 (resp. -1) when v + l*w lies in P for some
    l > 0 (resp. l < 0); a vertex cannot carry both.  Witnesses come from an
    edge parallel to ``w`` whose lower endpoint is positive, whose upper
    endpoint is negative and whose length is at least |w|.
    """
    _check_dim(P.dim, w)
    w = as_point(w)
    if all(c == 0 for c in w):
        raise ZeroVectorError("w must be nonzero")
    L = _step_bound(P, w)
    signs = []
    for v in P.vertices:
        sign = 0
        for l in range(1, L + 1):
            if P.contains(tuple(a + l * b for a, b in zip(v, w))):
                sign = 1
                break
            if P.contains(tuple(a - l * b for a, b in zip(v, w))):
                sign = -1
                break
        if sign == 0:
            return ObservationResult(False)
        signs.append(sign)
    sign_of = dict(zip(P.vertices, signs))

    candidates = []
    for e in edges(P):
        if not e.is_parallel_to(w):
            continue
        d = e.direction
        i = next(i for i, c in enumerate(w) if c != 0)
        t = d[i] / w[i]
        lo, hi = (e.start, e.end) if t > 0 else (e.end, e.start)
        candidates.append((abs(t), lo, hi, e))
    for t, lo, hi, e in candidates:
        if sign_of[lo] > 0 and sign_of[hi] < 0 and t >= 1:
            return ObservationResult(True, Segment(lo, hi), lo, tuple(signs))
    # the sign argument guarantees a hit above; keep a brute fallback for safety
    if candidates:
        for v in P.vertices:
            shifted = tuple(a + b for a, b in zip(v, w))
            if locate(P, shifted).on_closed_edge and any(s.contains(shifted) for s in edges(P)):
                return ObservationResult(True, candidates[0][3], v, tuple(signs))
    return ObservationResult(True, None, None, tuple(signs))
