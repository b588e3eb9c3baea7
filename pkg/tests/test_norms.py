from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import balls, int_vec, laurent
from thurstonlab.algebra import LaurentPoly
from thurstonlab.bundle import Manifold3
from thurstonlab.errors import InvalidBallError, MissingAnnotationError, ZeroNormError
from thurstonlab.norms import (
    alexander_dual_ball,
    dual_ball_from_vertices,
    dual_face,
    fibered_cone_test,
    thurston_norm,
    validate_dual_ball,
)
from thurstonlab.polytope import hull

OCTA = dual_ball_from_vertices([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])


def test_validate_examples(square):
    assert set(square.vertices) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    with pytest.raises(InvalidBallError) as exc:
        validate_dual_ball(hull([(0, 0), (1, 0)]))
    assert exc.value.code == "ASYMMETRIC"
    half = Fraction(1, 2)
    with pytest.raises(InvalidBallError) as exc:
        validate_dual_ball(hull([(half, 0), (-half, 0), (0, 1), (0, -1)]))
    assert exc.value.code == "NON_INTEGRAL_VERTEX"


def test_thurston_norm_examples(square):
    assert thurston_norm(square, (2, 3)) == 5
    assert thurston_norm(square, (0, 0)) == 0
    assert thurston_norm(dual_ball_from_vertices([(0, 0)]), (4, -7)) == 0


def test_dual_face_examples(square):
    assert set(dual_face(square, (1, 0)).vertices) == {(1, 1), (1, -1)}
    assert dual_face(square, (1, 1)).vertices == ((1, 1),)
    assert set(dual_face(OCTA, (1, 1, 1)).vertices) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    with pytest.raises(ZeroNormError):
        dual_face(dual_ball_from_vertices([(0, 0)]), (1, 0))


def test_alexander_dual_ball_examples():
    assert set(alexander_dual_ball(LaurentPoly(1, {(0,): 1, (1,): 1})).vertices) == {(-1,), (1,)}
    hexagon = alexander_dual_ball(LaurentPoly(2, {(0, 0): 1, (1, 0): 1, (0, 1): 1}))
    assert set(hexagon.vertices) == {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}
    assert alexander_dual_ball(LaurentPoly.constant(2, 3)).vertices == ((0, 0),)


def test_fibered_cone_examples(square):
    m = Manifold3("sq", 2, square, fibered_marks=((1, 1),))
    assert fibered_cone_test(m, (1, 2))
    assert not fibered_cone_test(m, (1, 0))
    with pytest.raises(MissingAnnotationError):
        fibered_cone_test(Manifold3("sq", 2, square), (1, 2))


@given(balls(), st.data())
def test_seminorm_laws(B, data):
    s = data.draw(int_vec(B.dim, 6))
    t = data.draw(int_vec(B.dim, 6))
    k = data.draw(st.integers(-5, 5))
    ns = thurston_norm(B, s)
    assert isinstance(ns, int) and ns >= 0
    assert thurston_norm(B, tuple(k * c for c in s)) == abs(k) * ns
    assert thurston_norm(B, tuple(a + b for a, b in zip(s, t))) <= ns + thurston_norm(B, t)
    assert thurston_norm(B, tuple(-c for c in s)) == ns


@given(balls(), st.data())
def test_dual_face_attains_norm(B, data):
    s = data.draw(int_vec(B.dim, 6))
    n = thurston_norm(B, s)
    if n == 0:
        return
    F = dual_face(B, s)
    for v in F.vertices:
        assert sum(a * b for a, b in zip(v, s)) == n


@given(laurent(nvars=2, max_terms=5), st.data())
def test_alexander_ball_norm_is_support_width(delta, data):
    if delta.is_zero():
        return
    s = data.draw(int_vec(2, 5))
    levels = [sum(a * b for a, b in zip(h, s)) for h, _ in delta.terms]
    assert thurston_norm(alexander_dual_ball(delta), s) == max(levels) - min(levels)
