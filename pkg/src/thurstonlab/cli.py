"""Command-line front end.

Every command prints one canonical JSON document on stdout.  Exit status:
0 success, 1 input or schema error, 2 precondition violated, 3 fuzz
counterexample found.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from typing import Sequence

from . import fuzz
from .bundle import Bundle4, betti_numbers, kernel_e, make_class, validate_cover
from .errors import InputError, MissingDataError, PreconditionError, ThurstonLabError
from .exceptional import exceptional_segments, theta_test, xi_enumerate, xi_test
from .io import dumps, load_cover, load_input
from .niceness import fast_check, is_nice, max_support_from_env
from .norms import thurston_norm
from .swtheory import (
    adjunction_bound,
    claim_witness,
    four_dim_support,
    refined_bound,
    symplectic_status,
)

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3

TORSION_NOTE = "torsion Euler classes are never exceptional"


def _vec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _frac(x) -> int | str:
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _bundle(args, m, extra) -> Bundle4:
    torsion = bool(getattr(args, "torsion", False) or extra.get("euler_torsion", False))
    euler = args.euler if getattr(args, "euler", None) is not None else extra.get("euler")
    if euler is None:
        if not torsion:
            raise InputError("an Euler class is required (--euler or a bundle file)")
        euler = (0,) * m.b1
    return Bundle4(m, tuple(euler), torsion)


def _check_len(vec, b1: int, name: str) -> None:
    if vec is not None and len(vec) != b1:
        raise InputError(f"--{name} has length {len(vec)}, expected b1 = {b1}")


def cmd_norm(args) -> dict:
    m, _ = load_input(args.input)
    _check_len(args.sigma, m.b1, "sigma")
    return {"ball_source": m.ball_source, "sigma": list(args.sigma), "norm": thurston_norm(m.dual_ball, args.sigma)}


def cmd_ball(args) -> dict:
    m, _ = load_input(args.input)
    ball = m.dual_ball
    out = {
        "name": m.name,
        "ball_source": m.ball_source,
        "affine_dim": ball.ball.affine_dim,
        "degenerate": ball.is_degenerate,
        "vertices": [list(v) for v in ball.vertices],
        "edges": [[[_frac(c) for c in e.start], [_frac(c) for c in e.end]] for e in ball.edges()],
    }
    if args.svg:
        if m.b1 != 2:
            raise InputError("--svg is only available for b1 = 2")
        from .plotting import plot_dual_ball

        exc = exceptional_segments(ball)
        path = plot_dual_ball(ball, exc, xi_enumerate(ball, exc), args.svg, title=m.name)
        out["figure"] = str(path)
    return out


def cmd_xi(args):
    m, extra = load_input(args.input)
    ball = m.dual_ball
    if ball.is_degenerate:
        print("warning: degenerate dual ball (point or segment)", file=sys.stderr)
    if args.action == "list":
        return [list(w) for w in xi_enumerate(ball)]
    b = _bundle(args, m, extra)
    out = {"euler": list(b.euler), "in_xi": xi_test(ball, b.euler), "degenerate_ball": ball.is_degenerate}
    if b.torsion_flag:
        out["note"] = TORSION_NOTE
    return out


def cmd_theta(args) -> dict:
    m, extra = load_input(args.input)
    b = _bundle(args, m, extra)
    out = {
        "euler": list(b.euler),
        "in_theta": theta_test(m.dual_ball, b.euler),
        "degenerate_ball": m.dual_ball.is_degenerate,
    }
    if b.torsion_flag:
        out["note"] = TORSION_NOTE
    return out


def _niceness(m, mode: str = "default"):
    if m.delta is None:
        return None
    if mode == "fast":
        return fast_check(m.delta)
    if mode == "exact":
        return is_nice(m.delta, max_support=len(m.delta.terms))
    return is_nice(m.delta, max_support=max_support_from_env())


def cmd_nice(args) -> dict:
    m, _ = load_input(args.input)
    if m.delta is None:
        raise MissingDataError(f"{m.name} has no Alexander polynomial")
    mode = "fast" if args.fast else "exact" if args.exact else "default"
    v = _niceness(m, mode)
    return {
        "status": v.status.value,
        "witness": list(v.witness) if v.witness is not None else None,
        "method": v.method,
        "support_size": len(m.delta.terms),
    }


def _support_doc(sw) -> list[dict]:
    return [{"c1": list(k), "value": v} for k, v in sw.entries]


def cmd_sw(args) -> dict:
    m, extra = load_input(args.input)
    if m.sw is None:
        raise MissingDataError(f"{m.name} has no SW support")
    b = _bundle(args, m, extra)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        sw4 = four_dim_support(m.sw, b.euler)
    out = {
        "euler": list(b.euler),
        "rule": "product" if b.is_product_like else "orbit-sum",
        "warnings": [str(w.message) for w in caught],
    }
    if args.action == "average":
        out["support"] = _support_doc(sw4)
    else:
        out["basic_classes"] = [list(k) for k in sw4.classes()]
    return out


def cmd_bound(args) -> dict:
    m, extra = load_input(args.input)
    b = _bundle(args, m, extra)
    _check_len(args.sigma, m.b1, "sigma")
    _check_len(args.curve, m.b1, "curve")
    a = make_class(b, args.sigma, args.curve)
    verdict = _niceness(m)
    res = refined_bound(b, a, verdict)
    out = res.as_dict()
    out.update({
        "ball_source": m.ball_source,
        "euler": list(b.euler),
        "sigma": list(a.sigma),
        "curve": list(a.curve),
        "nice_status": verdict.status.value if verdict is not None else None,
    })
    if m.sw is not None:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            out["adjunction_bound"] = adjunction_bound(four_dim_support(m.sw, b.euler).classes(), a)
        out["warnings"] = [str(w.message) for w in caught]
    return out


def cmd_betti(args) -> dict:
    m, extra = load_input(args.input)
    b = _bundle(args, m, extra)
    if b.is_product_like:
        return {"euler": list(b.euler), "status": "product-up-to-cover", "kernel_rank": m.b1}
    out = betti_numbers(b)
    return {
        "euler": list(b.euler),
        "status": "nontorsion",
        "b2": out["b2M"],
        "b2_plus": out["b2plus"],
        "kernel_basis": [list(v) for v in kernel_e(b.euler)],
    }


def cmd_cover(args) -> dict:
    cd, base, extra = load_cover(args.file)
    report = validate_cover(cd, base, extra.get("classes"), extra.get("euler"))
    doc = report.as_dict()
    if not report.ok:
        doc["_exit"] = EXIT_PRECONDITION
    return doc


def cmd_symplectic(args) -> dict:
    m, extra = load_input(args.input)
    b = _bundle(args, m, extra)
    _check_len(args.sigma, m.b1, "sigma")
    _check_len(args.curve, m.b1, "curve")
    a = make_class(b, args.sigma, args.curve)
    return symplectic_status(b, a).as_dict()


def cmd_claim(args) -> dict:
    m, extra = load_input(args.input)
    b = _bundle(args, m, extra)
    _check_len(args.sigma, m.b1, "sigma")
    return claim_witness(m, b.euler, args.sigma).as_dict()


def cmd_fuzz(args) -> dict:
    report = fuzz.run(args.target, args.trials, args.seed)
    if report["failures"]:
        report["_exit"] = EXIT_COUNTEREXAMPLE
    return report


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="manifold or bundle JSON file")


def _add_euler(p: argparse.ArgumentParser, required: bool = False) -> None:
    p.add_argument("--euler", type=_vec, required=required, help="Euler class, e.g. 0,2 (use --euler=-1,0 for negatives)")
    p.add_argument("--torsion", action="store_true", help="the Euler class is torsion (modelled as 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thurstonlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="Thurston norm of a class")
    _add_input(p)
    p.add_argument("--sigma", type=_vec, required=True)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("ball", help="dual ball vertices and edges")
    _add_input(p)
    p.add_argument("--svg", help="write a figure (b1 = 2 only)")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("xi", help="exceptional classes")
    p.add_argument("action", choices=("list", "test"))
    _add_input(p)
    _add_euler(p)
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("theta", help="ray-exceptional classes")
    p.add_argument("action", choices=("test",))
    _add_input(p)
    _add_euler(p)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("nice", help="niceness of the Alexander polynomial")
    p.add_argument("action", choices=("check",))
    _add_input(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="exact decision regardless of support size")
    g.add_argument("--fast", action="store_true", help="face-sum criterion only")
    p.set_defaults(func=cmd_nice)

    p = sub.add_parser("sw", help="4-dimensional SW support of the bundle")
    p.add_argument("action", choices=("average", "basic"))
    _add_input(p)
    _add_euler(p)
    p.set_defaults(func=cmd_sw)

    p = sub.add_parser("bound", help="refined adjunction bound with status")
    _add_input(p)
    _add_euler(p)
    p.add_argument("--sigma", type=_vec, required=True)
    p.add_argument("--curve", type=_vec, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("betti", help="Betti numbers of the total space")
    _add_input(p)
    _add_euler(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("cover", help="validate cover data")
    p.add_argument("action", choices=("check",))
    p.add_argument("file", help="cover JSON file")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("symplectic", help="symplectic-cone status of a class")
    _add_input(p)
    _add_euler(p)
    p.add_argument("--sigma", type=_vec, required=True)
    p.add_argument("--curve", type=_vec, required=True)
    p.set_defaults(func=cmd_symplectic)

    p = sub.add_parser("claim", help="search for a norm-detecting class with nonzero orbit sum")
    _add_input(p)
    _add_euler(p)
    p.add_argument("--sigma", type=_vec, required=True)
    p.set_defaults(func=cmd_claim)

    p = sub.add_parser("fuzz", help="randomized self-checks")
    p.add_argument("target", choices=("observation", "claim", "norms"))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        doc = args.func(args)
    except InputError as exc:
        print(dumps({"error": exc.code, "message": str(exc)}))
        return EXIT_INPUT
    except PreconditionError as exc:
        print(dumps({"error": exc.code, "message": str(exc)}))
        return EXIT_PRECONDITION
    except ThurstonLabError as exc:
        print(dumps({"error": exc.code, "message": str(exc)}))
        return EXIT_INPUT
    code = EXIT_OK
    if isinstance(doc, dict) and "_exit" in doc:
        code = doc.pop("_exit")
    print(dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
