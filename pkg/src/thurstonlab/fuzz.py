"""Randomized self-checks for the polyhedral Observation, the Claim and the seminorm laws.

Every harness is deterministic given its seed: trial ``i`` draws from
``random.Random(f"{seed}:{i}")``.  A failing trial is recorded with enough
data to reproduce it.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Callable

from .algebra import LaurentPoly
from .bundle import Manifold3, kernel_e
from .exceptional import xi_test
from .norms import DualBall, alexander_dual_ball, thurston_norm, validate_dual_ball
from .polytope import Polytope, edges, hull, locate, observation_check
from .swtheory import SWSupport, claim_witness

MAX_REPORTED = 5


def _rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def random_vector(rng: random.Random, dim: int, bound: int, nonzero: bool = False) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(dim))
        if not nonzero or any(v):
            return v


def random_ball(rng: random.Random, dim: int, bound: int = 3, npoints: int | None = None) -> DualBall:
    """Symmetric integral ball: hull of random points and their negatives."""
    if npoints is None:
        npoints = rng.randint(1, 4)
    pts = [random_vector(rng, dim, bound) for _ in range(npoints)]
    pts += [tuple(-c for c in p) for p in pts]
    return validate_dual_ball(hull(pts))


def observation_instance(rng: random.Random) -> tuple[Polytope, tuple[int, ...]]:
    """Mix of translate-closed polytopes (hypothesis holds) and arbitrary ones."""
    dim = rng.choice((2, 3))
    w = random_vector(rng, dim, 2, nonzero=True)
    base = [random_vector(rng, dim, 3) for _ in range(rng.randint(1, 5))]
    if rng.random() < 0.7:
        step = rng.choice((1, 1, 2))
        pts = base + [tuple(a + step * b for a, b in zip(p, w)) for p in base]
    else:
        pts = base + [random_vector(rng, dim, 3) for _ in range(rng.randint(0, 3))]
    return hull(pts), w


def _exhaustive_hypothesis(P: Polytope, w: tuple[int, ...]) -> bool:
    span = max(max(v[i] for v in P.vertices) - min(v[i] for v in P.vertices) for i in range(P.dim))
    limit = int(span) + 1
    for v in P.vertices:
        if not any(
            P.contains(tuple(a + l * b for a, b in zip(v, w)))
            for l in range(-limit, limit + 1)
            if l != 0
        ):
            return False
    return True


def check_observation_instance(P: Polytope, w: tuple[int, ...]) -> tuple[bool, str]:
    expected = _exhaustive_hypothesis(P, w)
    res = observation_check(P, w)
    if res.hypothesis != expected:
        return False, f"hypothesis {res.hypothesis}, exhaustive {expected}"
    if not expected:
        if res.edge_parallel is not None or res.vertex_witness is not None:
            return False, "witnesses present although the hypothesis fails"
        return True, ""
    if res.edge_parallel is None or res.vertex_witness is None:
        return False, "missing witness"
    edge_set = {(e.start, e.end) for e in edges(P)} | {(e.end, e.start) for e in edges(P)}
    if (res.edge_parallel.start, res.edge_parallel.end) not in edge_set:
        return False, "returned segment is not an edge"
    if not res.edge_parallel.is_parallel_to(w):
        return False, "edge not parallel to w"
    if res.vertex_witness not in P.vertices:
        return False, "vertex witness is not a vertex"
    shifted = tuple(a + b for a, b in zip(res.vertex_witness, w))
    if not locate(P, shifted).on_closed_edge:
        return False, f"v + w classifies as {locate(P, shifted)}"
    return True, ""


def claim_instance(rng: random.Random) -> tuple[Manifold3, tuple[int, ...], tuple[int, ...]]:
    """Ball, SW support inside it containing every vertex, sigma and a non-exceptional e with sigma(e) = 0."""
    e = None
    while e is None:
        dim = rng.choice((2, 3))
        ball = random_ball(rng, dim, bound=3)
        sigma = random_vector(rng, dim, 3)
        basis = kernel_e(sigma)
        for _ in range(20):
            coeffs = [rng.randint(-2, 2) for _ in basis]
            cand = tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(dim))
            if any(cand) and not xi_test(ball, cand):
                e = cand
                break
    support: dict[tuple[int, ...], int] = {}
    for v in ball.vertices:
        support[v] = rng.choice((-2, -1, 1, 2))
    for _ in range(rng.randint(0, 6)):
        h = random_vector(rng, dim, 3)
        if ball.ball.contains(h):
            support[h] = rng.choice((-2, -1, 1, 2))
    # orbit partners make cancellation possible
    for h in list(support):
        for l in (-1, 1):
            g = tuple(a + 2 * l * b for a, b in zip(h, e))
            if ball.ball.contains(g) and rng.random() < 0.5:
                support[g] = -support[h] if rng.random() < 0.5 else rng.choice((-1, 1))
    m = Manifold3("fuzz", dim, ball, sw=SWSupport(dim, support))
    return m, e, sigma


def _orbit_sum_by_scan(sw: SWSupport, h: tuple[int, ...], e: tuple[int, ...], reach: int) -> int:
    values = sw.as_dict()
    return sum(values.get(tuple(a + 2 * l * b for a, b in zip(h, e)), 0) for l in range(-reach, reach + 1))


def check_claim_instance(m: Manifold3, e: tuple[int, ...], sigma: tuple[int, ...]) -> tuple[bool, str]:
    rep = claim_witness(m, e, sigma)
    if rep.hypothesis_violations:
        return False, "generator produced an instance violating the model hypotheses"
    if rep.witness is None:
        return False, "no witness although e is not exceptional"
    h = rep.witness
    norm = thurston_norm(m.dual_ball, sigma)
    if sum(a * b for a, b in zip(h, sigma)) != norm:
        return False, "witness does not detect the norm"
    if _orbit_sum_by_scan(m.sw, h, e, reach=8) == 0:
        return False, "witness orbit sum vanishes"
    return True, ""


def norms_instance(rng: random.Random) -> dict:
    dim = rng.choice((2, 3))
    ball = random_ball(rng, dim)
    terms = {random_vector(rng, dim, 2): rng.choice((-2, -1, 1, 2)) for _ in range(rng.randint(1, 5))}
    return {
        "ball": ball,
        "sigma": random_vector(rng, dim, 5),
        "tau": random_vector(rng, dim, 5),
        "k": rng.randint(-4, 4),
        "delta": LaurentPoly(dim, terms),
    }


def check_norms_instance(inst: dict) -> tuple[bool, str]:
    ball, s, t, k = inst["ball"], inst["sigma"], inst["tau"], inst["k"]
    ns, nt = thurston_norm(ball, s), thurston_norm(ball, t)
    if thurston_norm(ball, tuple(k * c for c in s)) != abs(k) * ns:
        return False, "homogeneity"
    if thurston_norm(ball, tuple(a + b for a, b in zip(s, t))) > ns + nt:
        return False, "subadditivity"
    if thurston_norm(ball, tuple(-c for c in s)) != ns:
        return False, "symmetry"
    delta = inst["delta"]
    if not delta.is_zero():
        supp = [e for e, _ in delta.terms]
        brute = max(sum(a * (g - h) for a, g, h in zip(s, gg, hh)) for gg, hh in product(supp, supp))
        if thurston_norm(alexander_dual_ball(delta), s) != brute:
            return False, "alexander ball norm disagrees with support pairs"
    return True, ""


def _reproducer(kind: str, seed: int, trial: int, inst) -> dict:
    doc: dict = {"kind": kind, "seed": seed, "trial": trial}
    if kind == "observation":
        P, w = inst
        doc["vertices"] = [[str(c) for c in v] for v in P.vertices]
        doc["w"] = list(w)
    elif kind == "claim":
        m, e, sigma = inst
        doc["dual_ball_vertices"] = [list(v) for v in m.dual_ball.vertices]
        doc["sw_support"] = [{"c1": list(k), "value": v} for k, v in m.sw.entries]
        doc["euler"] = list(e)
        doc["sigma"] = list(sigma)
    else:
        doc["dual_ball_vertices"] = [list(v) for v in inst["ball"].vertices]
        doc["sigma"] = list(inst["sigma"])
        doc["tau"] = list(inst["tau"])
        doc["k"] = inst["k"]
        doc["alexander"] = [{"exp": list(e), "coeff": c} for e, c in inst["delta"].terms]
    return doc


def run(kind: str, trials: int, seed: int) -> dict:
    makers: dict[str, tuple[Callable, Callable]] = {
        "observation": (observation_instance, lambda inst: check_observation_instance(*inst)),
        "claim": (claim_instance, lambda inst: check_claim_instance(*inst)),
        "norms": (norms_instance, check_norms_instance),
    }
    if kind not in makers:
        raise ValueError(f"unknown fuzz target {kind!r}")
    make, check = makers[kind]
    failures = 0
    counterexamples = []
    extra = {"hypothesis_true": 0} if kind == "observation" else {}
    for i in range(trials):
        inst = make(_rng(seed, i))
        if kind == "observation" and _exhaustive_hypothesis(*inst):
            extra["hypothesis_true"] += 1
        ok, why = check(inst)
        if not ok:
            failures += 1
            if len(counterexamples) < MAX_REPORTED:
                counterexamples.append({"reason": why, "reproducer": _reproducer(kind, seed, i, inst)})
    return {
        "target": kind,
        "trials": trials,
        "seed": seed,
        "failures": failures,
        "counterexamples": counterexamples,
        **extra,
    }
