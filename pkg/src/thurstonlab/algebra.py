"""Multivariable Laurent polynomials with integer coefficients."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, ZeroPolynomialError
from .polytope import Polytope, hull

Exponent = tuple[int, ...]
Covector = Sequence[int]

_EXP_LIMIT = 2**62


def _exponent(e: Iterable[int]) -> Exponent:
    out = tuple(int(x) for x in e)
    if any(abs(x) >= _EXP_LIMIT for x in out):
        raise OverflowError(f"exponent {out} out of range")
    return out


class LaurentPoly:
    """Finite sum of monomials ``coeff * x^exp`` with nonzero integer coefficients.

    Immutable.  Terms are kept sorted lexicographically by exponent, so two
    polynomials are equal exactly when their term tuples are equal.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = defaultdict(int)
        for exp, coeff in items:
            exp = _exponent(exp)
            if len(exp) != nvars:
                raise DimensionMismatch(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            acc[exp] += int(coeff)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls(len(exp), [(exp, coeff)])

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls(nvars, [((0,) * nvars, c)])

    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict[Exponent, int]:
        return dict(self.terms)

    def coefficient_sum(self) -> int:
        return sum(c for _, c in self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, self.terms))

    def __repr__(self) -> str:
        if not self.terms:
            return f"LaurentPoly({self.nvars}, 0)"
        return f"LaurentPoly({self.nvars}, {dict(self.terms)})"

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return add(self, other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, [(e, -c) for e, c in self.terms])

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return add(self, -other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return mul(self, other)


def _same_nvars(p: LaurentPoly, q: LaurentPoly) -> None:
    if p.nvars != q.nvars:
        raise DimensionMismatch(f"polynomials in {p.nvars} and {q.nvars} variables")


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _same_nvars(p, q)
    return LaurentPoly(p.nvars, list(p.terms) + list(q.terms))


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _same_nvars(p, q)
    return LaurentPoly(
        p.nvars,
        [(tuple(a + b for a, b in zip(e1, e2)), c1 * c2) for e1, c1 in p.terms for e2, c2 in q.terms],
    )


def _pair(exp: Exponent, phi: Covector) -> int:
    return sum(a * b for a, b in zip(exp, phi))


def level_sums(p: LaurentPoly, phi: Covector) -> dict[int, int]:
    """Coefficient sums over the level sets of ``phi`` on the support.

    Levels hit by the support are kept even when their sum is zero.
    """
    if len(phi) != p.nvars:
        raise DimensionMismatch(f"covector of length {len(phi)} for {p.nvars} variables")
    out: dict[int, int] = defaultdict(int)
    for exp, c in p.terms:
        out[_pair(exp, phi)] += c
    return dict(sorted(out.items()))


def specialize(p: LaurentPoly, phi: Covector) -> LaurentPoly:
    """One-variable polynomial sum_h a_h t^{phi(h)}."""
    return LaurentPoly(1, [((k,), c) for k, c in level_sums(p, phi).items()])


def support_points(p: LaurentPoly) -> frozenset[Exponent]:
    return frozenset(e for e, _ in p.terms)


def newton_polytope(p: LaurentPoly) -> Polytope:
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no Newton polytope")
    return hull(support_points(p))
