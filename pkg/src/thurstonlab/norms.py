"""Dual Thurston norm balls and the seminorms they define."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import LaurentPoly, support_points
from .errors import InvalidBallError, MissingAnnotationError, ZeroNormError, ZeroPolynomialError
from .polytope import Polytope, Segment, _check_dim, edges, hull, maximizing_vertices, support_value


@dataclass(frozen=True)
class DualBall:
    """A centrally symmetric polytope with integral vertices."""

    ball: Polytope

    @property
    def dim(self) -> int:
        return self.ball.dim

    @property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(c) for c in v) for v in self.ball.vertices)

    @property
    def is_degenerate(self) -> bool:
        """True for the point and segment balls, which lie outside the generic picture."""
        return self.ball.affine_dim <= 1

    def edges(self) -> list[Segment]:
        return edges(self.ball)


def validate_dual_ball(B: Polytope) -> DualBall:
    verts = set(B.vertices)
    for v in B.vertices:
        if any(c.denominator != 1 for c in v):
            raise InvalidBallError("NON_INTEGRAL_VERTEX", f"vertex {tuple(str(c) for c in v)} is not integral")
    for v in B.vertices:
        if tuple(-c for c in v) not in verts:
            raise InvalidBallError("ASYMMETRIC", f"-v is not a vertex for v = {tuple(int(c) for c in v)}")
    return DualBall(B)


def dual_ball_from_vertices(vertices: Sequence[Sequence[int]]) -> DualBall:
    return validate_dual_ball(hull(vertices))


def thurston_norm(B: DualBall, sigma: Sequence[int]) -> int:
    """max of v.sigma over the vertices; a nonnegative integer."""
    value = support_value(B.ball, sigma)
    return int(value)


def dual_face(B: DualBall, sigma: Sequence[int]) -> Polytope:
    _check_dim(B.dim, sigma, "covector")
    if thurston_norm(B, sigma) == 0:
        raise ZeroNormError(f"sigma = {tuple(sigma)} has zero norm; its dual face is undefined")
    return Polytope(maximizing_vertices(B.ball, sigma), _trusted=True)


def alexander_dual_ball(delta: LaurentPoly) -> DualBall:
    """Difference body of the Newton polytope: hull of g - h over support pairs."""
    if delta.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no Alexander ball")
    pts = sorted(support_points(delta))
    diffs = {tuple(a - b for a, b in zip(g, h)) for g in pts for h in pts}
    return validate_dual_ball(hull(diffs))


def fibered_cone_test(m, sigma: Sequence[int]) -> bool:
    """Is ``sigma`` in the open cone dual to a marked vertex?

    ``m`` needs ``dual_ball`` and ``fibered_marks`` (marked vertices of the
    dual ball).  The open cone over the marked vertex consists of the classes
    for which that vertex is the unique maximizer.
    """
    marks = getattr(m, "fibered_marks", None)
    if not marks:
        raise MissingAnnotationError(f"{getattr(m, 'name', 'manifold')} carries no fibered-face marks")
    top = maximizing_vertices(m.dual_ball.ball, sigma)
    if len(top) != 1:
        return False
    winner = tuple(int(c) for c in top[0])
    return winner in {tuple(v) for v in marks}
