"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from thurstonlab.algebra import LaurentPoly
from thurstonlab.norms import validate_dual_ball
from thurstonlab.polytope import hull


def int_vec(dim, bound=3):
    return st.tuples(*[st.integers(-bound, bound)] * dim)


@st.composite
def balls(draw, dims=(2, 3), bound=3, max_points=4):
    dim = draw(st.sampled_from(dims))
    pts = draw(st.lists(int_vec(dim, bound), min_size=1, max_size=max_points))
    pts = pts + [tuple(-c for c in p) for p in pts]
    return validate_dual_ball(hull(pts))


@st.composite
def laurent(draw, nvars=None, max_terms=6, bound=2):
    n = nvars if nvars is not None else draw(st.integers(1, 3))
    terms = draw(st.dictionaries(int_vec(n, bound), st.integers(-3, 3).filter(bool), max_size=max_terms))
    return LaurentPoly(n, terms)
