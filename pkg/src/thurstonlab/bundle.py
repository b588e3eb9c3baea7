"""Circle bundles over 3-manifolds: Betti numbers, classes and covers.

Homology is modelled in free quotients with fixed bases.  A second homology
class of the total space is stored as ``(sigma, curve)``: its image in
H_2(N), read as a covector on H_1(N), and a curve class that is defined only
modulo the Euler class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .algebra import LaurentPoly
from .errors import (
    DimensionMismatch,
    GysinViolation,
    InputError,
    NotDivisibleError,
    TorsionEulerError,
)
from .norms import DualBall, thurston_norm

IntVec = tuple[int, ...]


def _pair(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class Manifold3:
    name: str
    b1: int
    dual_ball: DualBall
    delta: LaurentPoly | None = None
    sw: "object | None" = None
    fibered_marks: tuple[IntVec, ...] | None = None
    ball_source: str = "input"

    def __post_init__(self):
        if self.b1 < 1:
            raise InputError("b1 must be positive")
        if self.dual_ball.dim != self.b1:
            raise DimensionMismatch(f"dual ball lives in dimension {self.dual_ball.dim}, b1 = {self.b1}")
        if self.delta is not None and self.delta.nvars != self.b1:
            raise DimensionMismatch(f"Alexander polynomial has {self.delta.nvars} variables, b1 = {self.b1}")
        if self.sw is not None and self.sw.dim != self.b1:
            raise DimensionMismatch(f"SW classes have length {self.sw.dim}, b1 = {self.b1}")
        if self.fibered_marks is not None:
            verts = set(self.dual_ball.vertices)
            for v in self.fibered_marks:
                if tuple(v) not in verts:
                    raise InputError(f"fibered mark {tuple(v)} is not a vertex of the dual ball")


@dataclass(frozen=True)
class Bundle4:
    base: Manifold3
    euler: IntVec
    torsion_flag: bool = False

    def __post_init__(self):
        object.__setattr__(self, "euler", tuple(int(c) for c in self.euler))
        if len(self.euler) != self.base.b1:
            raise DimensionMismatch(f"Euler class has length {len(self.euler)}, b1 = {self.base.b1}")
        if self.torsion_flag and any(self.euler):
            raise InputError("a torsion Euler class is modelled by the zero vector")

    @property
    def is_product_like(self) -> bool:
        return self.torsion_flag or not any(self.euler)


def _reduce_mod(curve: IntVec, euler: IntVec) -> IntVec:
    """Canonical representative of curve + Z*euler."""
    i = next((i for i, c in enumerate(euler) if c != 0), None)
    if i is None:
        return curve
    k = curve[i] // euler[i]
    return tuple(c - k * e for c, e in zip(curve, euler))


@dataclass(frozen=True, eq=False)
class ClassH2M:
    sigma: IntVec
    curve: IntVec
    euler: IntVec

    def __post_init__(self):
        for name in ("sigma", "curve", "euler"):
            object.__setattr__(self, name, tuple(int(c) for c in getattr(self, name)))
        if not len(self.sigma) == len(self.curve) == len(self.euler):
            raise DimensionMismatch("sigma, curve and euler must have equal length")
        if _pair(self.sigma, self.euler) != 0:
            raise GysinViolation(f"sigma(e) = {_pair(self.sigma, self.euler)} != 0")

    def _key(self):
        return self.sigma, _reduce_mod(self.curve, self.euler), self.euler

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassH2M):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())


def make_class(bundle: Bundle4, sigma: Sequence[int], curve: Sequence[int]) -> ClassH2M:
    if len(sigma) != bundle.base.b1 or len(curve) != bundle.base.b1:
        raise DimensionMismatch(f"classes must have length b1 = {bundle.base.b1}")
    return ClassH2M(tuple(sigma), tuple(curve), bundle.euler)


def betti_numbers(b: Bundle4) -> dict[str, int]:
    if b.is_product_like:
        raise TorsionEulerError("Betti formula needs a nontorsion Euler class")
    n = b.base.b1
    return {"b2M": 2 * n - 2, "b2plus": n - 1}


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def kernel_e(euler: Sequence[int]) -> list[IntVec]:
    """Lattice basis of {sigma in Z^n : sigma . euler = 0}.

    Column operations bring ``euler`` to (g, 0, ..., 0) while tracking a
    unimodular matrix; its last n - 1 columns span the kernel.
    """
    e = [int(c) for c in euler]
    n = len(e)
    if not any(e):
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    cols = [[int(i == j) for i in range(n)] for j in range(n)]  # cols[j] = column j of U
    row = list(e)
    for j in range(1, n):
        if row[j] == 0:
            continue
        g, x, y = _ext_gcd(row[0], row[j])
        a, b = row[0] // g, row[j] // g
        c0 = [x * p + y * q for p, q in zip(cols[0], cols[j])]
        cj = [-b * p + a * q for p, q in zip(cols[0], cols[j])]
        cols[0], cols[j] = c0, cj
        row[0], row[j] = g, 0
    basis = []
    for col in cols[1:]:
        first = next(c for c in col if c != 0)
        basis.append(tuple(col) if first > 0 else tuple(-c for c in col))
    return basis


def self_intersection(a: ClassH2M) -> int:
    if _pair(a.sigma, a.euler) != 0:
        raise GysinViolation(f"sigma(e) = {_pair(a.sigma, a.euler)} != 0")
    return 2 * _pair(a.sigma, a.curve)


@dataclass(frozen=True)
class CoverDatum:
    deg_N: int
    q: int
    pullback: tuple[IntVec, ...]
    pushforward: tuple[IntVec, ...]
    cover_base: Manifold3 | None = None

    def __post_init__(self):
        object.__setattr__(self, "pullback", tuple(tuple(int(x) for x in r) for r in self.pullback))
        object.__setattr__(self, "pushforward", tuple(tuple(int(x) for x in r) for r in self.pushforward))
        if self.deg_N < 1 or self.q < 1:
            raise InputError("deg_N and q must be positive")

    def apply_pullback(self, v: Sequence[int]) -> IntVec:
        if any(len(r) != len(v) for r in self.pullback):
            raise DimensionMismatch("pullback matrix does not act on this vector")
        return tuple(_pair(r, v) for r in self.pullback)

    def apply_pushforward(self, v: Sequence[int]) -> IntVec:
        if any(len(r) != len(v) for r in self.pushforward):
            raise DimensionMismatch("pushforward matrix does not act on this vector")
        return tuple(_pair(r, v) for r in self.pushforward)


def euler_of_cover(cd: CoverDatum, e: Sequence[int]) -> IntVec:
    pulled = cd.apply_pullback(e)
    if any(c % cd.q for c in pulled):
        raise NotDivisibleError(f"q = {cd.q} does not divide pullback(e) = {pulled}")
    return tuple(c // cd.q for c in pulled)


@dataclass
class CoverReport:
    deg_M: int
    checks: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def as_dict(self) -> dict:
        return {"deg_M": self.deg_M, "ok": self.ok, "checks": self.checks}


def sample_classes(b1: int) -> list[IntVec]:
    return [v for v in product((-1, 0, 1), repeat=b1) if any(v)]


def validate_cover(cd: CoverDatum, base: Manifold3, classes: Sequence[Sequence[int]] | None = None,
                   euler: Sequence[int] | None = None) -> CoverReport:
    n = base.b1
    report = CoverReport(deg_M=cd.q * cd.deg_N)
    shape_ok = len(cd.pullback) >= 1 and all(len(r) == n for r in cd.pullback) and len(cd.pushforward) == n \
        and all(len(r) == len(cd.pullback) for r in cd.pushforward)
    report.checks.append({"name": "matrix-shapes", "ok": shape_ok})
    if not shape_ok:
        return report
    m = len(cd.pullback)
    composite = [[sum(cd.pushforward[i][k] * cd.pullback[k][j] for k in range(m)) for j in range(n)] for i in range(n)]
    target = [[cd.deg_N * int(i == j) for j in range(n)] for i in range(n)]
    report.checks.append({
        "name": "pushforward-pullback",
        "ok": composite == target,
        "composite": composite,
    })
    if cd.cover_base is not None:
        if cd.cover_base.b1 != m:
            report.checks.append({"name": "cover-b1", "ok": False, "b1": cd.cover_base.b1, "expected": m})
        else:
            failures = []
            pool = [tuple(c) for c in classes] if classes is not None else sample_classes(n)
            for sigma in pool:
                lhs = thurston_norm(cd.cover_base.dual_ball, cd.apply_pullback(sigma))
                rhs = cd.deg_N * thurston_norm(base.dual_ball, sigma)
                if lhs != rhs:
                    failures.append({"sigma": list(sigma), "cover_norm": lhs, "expected": rhs})
            report.checks.append({
                "name": "transfer-norm",
                "ok": not failures,
                "classes_checked": len(pool),
                "failures": failures,
            })
    if euler is not None:
        try:
            lifted = euler_of_cover(cd, euler)
            report.checks.append({"name": "euler-of-cover", "ok": True, "euler_cover": list(lifted)})
        except NotDivisibleError as exc:
            report.checks.append({"name": "euler-of-cover", "ok": False, "error": str(exc)})
    return report
