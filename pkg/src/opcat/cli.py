"""``opcat`` command-line front end.

Exit codes: 0 success / all suites pass, 1 a property or constraint failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import categories as cat
from . import cones
from . import io
from .errors import OpcatError
from .functors import FUNCTORS, DualMorphism, dual_compose, dual_norm
from .linalg import Field, Tolerances, operator_norm, pseudoinverse, residual
from .sampling import sample_rng, sample_subspaces
from .suites import SUITES, SuiteConfig, run_suite


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser):
    p.add_argument("--field", choices=[f.value for f in Field], default="real")
    p.add_argument("--dim", type=int, default=6, help="ambient dimension n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200, help="samples per property")
    p.add_argument("--eps", type=float, default=1e-8, help="equality tolerance")
    p.add_argument("--eps-rank", type=float, default=1e-10, help="rank cutoff")
    p.add_argument("--in", dest="inputs", nargs="*", default=[], metavar="FILE")
    p.add_argument("--out", metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opcat",
        description="Normal categories of finite-rank operators on K^n: "
        "one-shot operations and randomised verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run_suite", aliases=["run-suite"], help="run verification suites")
    _common(p)
    p.add_argument("--all", action="store_true", help="run every suite")
    p.add_argument("--suite", action="append", default=[], metavar="NAME",
                   help=f"suite to run (repeatable): {', '.join(SUITES)}")
    p.add_argument("--dims", default="1,2,3,4,5,6,7,8,9,10,11,12",
                   help="comma-separated dimensions for l2-profile")
    p.add_argument("--subspaces", type=int, default=20,
                   help="sampled subspaces per operator pair in cone-product")
    p.add_argument("--jobs", type=int, default=4)

    for name, help_ in [
        ("factorize", "normal factorization of a morphism file"),
        ("compose", "compose two morphism files (first, then second)"),
        ("norm", "operator norm of a matrix, morphism or cone file"),
        ("cone-product", "product of two cone files"),
        ("regularity-witness", "pseudoinverse witness T = T T+ T"),
    ]:
        _common(sub.add_parser(name, help=help_))
    p = sub.add_parser("functor-apply", help="apply one of the category isomorphisms")
    _common(p)
    p.add_argument("--functor", required=True, choices=list(FUNCTORS))
    p.add_argument("--inverse", action="store_true")
    return parser


def _tol(args) -> Tolerances:
    try:
        return Tolerances(eps_rank=min(args.eps_rank, args.eps), eps_eq=args.eps)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _inputs(args, count: int) -> list[dict]:
    if len(args.inputs) != count:
        raise UsageError(f"{args.command} needs exactly {count} --in file(s)")
    return [io.load(p) for p in args.inputs]


def _emit(obj, args):
    text = io.dumps(obj)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def cmd_run_suite(args) -> int:
    names = list(SUITES) if args.all else []
    for entry in args.suite:
        names += [s for s in entry.split(",") if s and s not in names]
    if not names:
        raise UsageError("choose suites with --suite NAME or --all")
    try:
        dims = [int(d) for d in args.dims.split(",") if d.strip()]
        cfg = SuiteConfig(
            field=Field(args.field), ambient_dim=args.dim, samples=args.samples,
            seed=args.seed, tol=_tol(args), suites=names, dims=dims,
            subspaces_per_pair=args.subspaces, jobs=args.jobs,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = run_suite(cfg)
    _emit(report, args)
    return 0 if report["passed"] else 1


def cmd_factorize(args) -> int:
    tol = _tol(args)
    (obj,) = _inputs(args, 1)
    f = io.morphism_from_json(obj)
    if isinstance(f, DualMorphism):
        raise UsageError("factorize takes a left, right or fh morphism")
    nf = cat.normal_factorize(f, tol)
    r = residual(nf.compose(tol).t, f.t)
    _emit({
        "q": io.to_json(nf.q), "u": io.to_json(nf.u), "j": io.to_json(nf.j),
        "epimorphic_component": io.to_json(cat.epimorphic_component(f, tol)),
        "reconstruction_residual": r,
    }, args)
    return 0 if r <= tol.eps_eq else 1


def cmd_compose(args) -> int:
    tol = _tol(args)
    f, g = (io.morphism_from_json(o) for o in _inputs(args, 2))
    if isinstance(f, DualMorphism) and isinstance(g, DualMorphism):
        out = dual_compose(f, g, tol)
    elif isinstance(f, DualMorphism) or isinstance(g, DualMorphism):
        raise OpcatError("cannot compose a dual morphism with a non-dual one")
    else:
        out = cat.compose(f, g, tol)
    _emit(io.to_json(out), args)
    return 0


def cmd_norm(args) -> int:
    (obj,) = _inputs(args, 1)
    if "entries" in obj:
        value = operator_norm(io.matrix_from_json(obj))
    elif "gen" in obj:
        value = cones.cone_norm(cones.ConeAlgebraElement.of(io.cone_from_json(obj)))
    else:
        f = io.morphism_from_json(obj)
        value = dual_norm(f) if isinstance(f, DualMorphism) else cat.hom_norm(f)
    _emit({"norm": value}, args)
    return 0


def cmd_cone_product(args) -> int:
    tol = _tol(args)
    c1, c2 = (io.cone_from_json(o) for o in _inputs(args, 2))
    prod = cones.cone_product(c1, c2)
    pointwise = cones.pointwise_product(c1, c2, tol)
    rng = sample_rng(args.seed, "cone-product-cli", 0)
    field = Field.COMPLEX if np.iscomplexobj(prod.gen) else Field.REAL
    worst = 0.0
    for m in sample_subspaces(rng, prod.ambient_dim, prod.ambient_dim + 4, field, [c1.vertex]):
        worst = max(worst, residual(pointwise(m).t, cones.cone_component(prod, m).t))
    out = io.cone_to_json(prod)
    out["pointwise_residual"] = worst
    _emit(out, args)
    return 0 if worst <= tol.eps_eq else 1


def cmd_functor_apply(args) -> int:
    tol = _tol(args)
    (obj,) = _inputs(args, 1)
    functor = FUNCTORS[args.functor]
    expected = functor.target if args.inverse else functor.source
    x = io.morphism_from_json(obj, check=True)
    if x.kind != expected:
        raise OpcatError(f"{args.functor} expects a {expected} morphism, got {x.kind}")
    y = (functor.inverse if args.inverse else functor.apply)(x)
    # Validate the image against its own category.
    if isinstance(y, DualMorphism):
        DualMorphism(y.src, y.d, y.dst, tol)
    else:
        type(y)(y.src, y.t, y.dst, tol)
    _emit(io.to_json(y), args)
    return 0


def cmd_regularity_witness(args) -> int:
    tol = _tol(args)
    (obj,) = _inputs(args, 1)
    t = io.matrix_from_json(obj)
    if t.shape[0] != t.shape[1]:
        raise OpcatError(f"operator must be square, got {t.shape}")
    tp = pseudoinverse(t, tol)
    r = residual(t @ tp @ t, t)
    _emit({"pinv": io.matrix_to_json(tp), "residual": r}, args)
    return 0 if r <= tol.eps_eq else 1


COMMANDS = {
    "run_suite": cmd_run_suite,
    "run-suite": cmd_run_suite,
    "factorize": cmd_factorize,
    "compose": cmd_compose,
    "norm": cmd_norm,
    "cone-product": cmd_cone_product,
    "functor-apply": cmd_functor_apply,
    "regularity-witness": cmd_regularity_witness,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.dim < 1:
            raise UsageError(f"--dim must be at least 1, got {args.dim}")
        if args.samples < 1:
            raise UsageError(f"--samples must be at least 1, got {args.samples}")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"opcat: error: {exc}", file=sys.stderr)
        return 2
    except (OpcatError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"opcat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
