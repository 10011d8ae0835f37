"""Randomised verification suites, one per claim being checked.

Every sample draws its own generator from (seed, suite name, sample index),
so a report depends only on the configuration, never on scheduling.  A
sample returns a nonnegative residual; boolean properties contribute 0 when
they hold and 1 when they fail.  A suite passes when its largest residual is
at most ``eps_eq``.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Callable

import numpy as np

from . import categories as cat
from . import cones
from . import functors as fun
from .categories import FHMorphism, LeftMorphism, LeftObject, RightMorphism, RightObject
from .errors import OpcatError
from .io import to_json
from .linalg import DEFAULT_TOL, Field, Tolerances, operator_norm, pseudoinverse, residual
from .sampling import (
    gaussian,
    random_morphism,
    random_nested_pair,
    random_operator,
    random_scalar,
    sample_rng,
    sample_subspaces,
)
from .subspace import eq, intersect, orth_complement, span


@dataclass
class SuiteConfig:
    field: Field = Field.REAL
    ambient_dim: int = 6
    samples: int = 200
    seed: int = 0
    tol: Tolerances = DEFAULT_TOL
    suites: list[str] = dc_field(default_factory=lambda: list(SUITES))
    dims: list[int] = dc_field(default_factory=lambda: list(range(1, 13)))
    subspaces_per_pair: int = 20
    jobs: int = 4

    def __post_init__(self):
        self.field = Field(self.field)
        if self.ambient_dim < 1:
            raise ValueError(f"ambient dimension must be at least 1, got {self.ambient_dim}")
        if self.samples < 1:
            raise ValueError(f"samples must be at least 1, got {self.samples}")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
        if not self.dims or min(self.dims) < 1:
            raise ValueError("profile dimensions must be positive")


def _flag(ok: bool) -> float:
    return 0.0 if ok else 1.0


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def _kind(i: int):
    return LeftMorphism if i % 2 == 0 else RightMorphism


def _flavor(i: int) -> cones.Flavor:
    return list(cones.Flavor)[i % 3]


# Each check takes (rng, cfg, index) and returns (residual, instance).


def check_principal_ideals(rng, cfg, i):
    n, fld = cfg.ambient_dim, cfg.field
    b = random_operator(rng, n, fld, rank=int(rng.integers(0, n)))
    case = i % 4
    if case == 0:
        a = gaussian(rng, (n, n), fld) @ b
    elif case == 1:
        a = b @ gaussian(rng, (n, n), fld)
    else:
        a = random_operator(rng, n, fld)

    # Brute-force oracles: S a <= S b iff a = X b is solvable, a S <= b S iff a = b Y is.
    x = np.linalg.lstsq(b.T, a.T, rcond=None)[0].T
    y = np.linalg.lstsq(b, a, rcond=None)[0]
    left_oracle = residual(x @ b, a) < 1e-6
    right_oracle = residual(b @ y, a) < 1e-6
    r = max(
        _flag(cat.principal_left_leq(a, b, cfg.tol) == left_oracle),
        _flag(cat.principal_right_leq(a, b, cfg.tol) == right_oracle),
    )
    return r, {"a": a, "b": b}


def check_homset_norm(rng, cfg, i):
    n, fld, tol = cfg.ambient_dim, cfg.field, cfg.tol
    kind = _kind(i)
    f = random_morphism(rng, n, fld, kind)
    g = random_morphism(rng, n, fld, kind, src=f.src, dst=f.dst)
    k = random_scalar(rng, fld)
    s = cat.hom_add(f, g, tol)
    nf, ng, ns = cat.hom_norm(f), cat.hom_norm(g), cat.hom_norm(s)
    canonical = f.src.proj @ f.t if kind is LeftMorphism else f.dst.proj @ f.t
    r = max(
        max(0.0, ns - nf - ng) / max(1.0, ns),
        _rel(cat.hom_norm(cat.hom_scale(k, f)), abs(k) * nf),
        _rel(nf, operator_norm(canonical)),
        _flag(cat.is_morphism(kind, s.src, s.t, s.dst, tol)),
        _flag(cat.same_morphism(cat.hom_add(f, cat.zero_morphism(f.src, f.dst, kind), tol), f, tol)),
    )
    return r, {"f": f, "g": g, "k": k}


def _other_retraction(m, n_, kind, rng, fld):
    """A retraction of ``M <= N`` other than the norm-one one, with its defect."""
    w = intersect(n_, orth_complement(m))
    a = gaussian(rng, (m.ambient_dim, m.ambient_dim), fld)
    if kind is LeftMorphism:
        off = w.proj @ a @ m.proj
    else:
        off = m.proj @ a @ w.proj
    return kind(n_, m.proj + off, m), operator_norm(off)


def check_retraction(rng, cfg, i):
    n, fld, tol = cfg.ambient_dim, cfg.field, cfg.tol
    kind = _kind(i)
    m, big = random_nested_pair(rng, n, fld)
    j = cat.inclusion(m, big, kind, tol)
    q = cat.retraction_of(m, big, kind, tol)
    back = cat.compose(j, q, tol)
    parts = [
        residual(back.t, cat.identity(m, kind).t),
        _flag(cat.is_inclusion(j, tol)),
        _flag(cat.is_retraction(q, tol)),
    ]
    if m.dim:
        parts += [_rel(cat.hom_norm(j), 1.0), _rel(cat.hom_norm(q), 1.0)]
    other, defect = _other_retraction(m, big, kind, rng, fld)
    parts.append(_flag(cat.is_retraction(other, tol)))
    if defect > 1e-3:
        parts.append(_flag(cat.hom_norm(other) > 1.0 + 1e-9))
    return max(parts), {"m": m, "n": big, "kind": kind.kind}


def check_factorization(rng, cfg, i):
    tol = cfg.tol
    f = random_morphism(rng, cfg.ambient_dim, cfg.field, _kind(i))
    return factorization_residual(f, tol), {"morphism": f}


def factorization_residual(f, tol=DEFAULT_TOL) -> float:
    nf = cat.normal_factorize(f, tol)
    epi = cat.epimorphic_component(f, tol)
    return max(
        residual(nf.compose(tol).t, f.t),
        _flag(eq(nf.q.src, f.src, tol) and eq(nf.j.dst, f.dst, tol)),
        _flag(cat.is_retraction(nf.q, tol)),
        _flag(cat.is_isomorphism(nf.u, tol)),
        _flag(cat.is_inclusion(nf.j, tol)),
        _flag(eq(epi.dst, nf.u.dst, tol)),
    )


def _chain(rng, cfg, kind):
    """Composable random morphisms ``f: M -> N`` and ``g: N -> U``."""
    n, fld = cfg.ambient_dim, cfg.field
    f = random_morphism(rng, n, fld, kind)
    g = random_morphism(rng, n, fld, kind, src=f.dst)
    return f, g


def check_left_fh(rng, cfg, i):
    tol, fld = cfg.tol, cfg.field
    f, g = _chain(rng, cfg, LeftMorphism)
    f2 = random_morphism(rng, cfg.ambient_dim, fld, LeftMorphism, src=f.src, dst=f.dst)
    h = random_morphism(rng, cfg.ambient_dim, fld, FHMorphism)
    k = random_scalar(rng, fld)
    m, big = random_nested_pair(rng, cfg.ambient_dim, fld)
    F, G = fun.left_to_fh, fun.fh_to_left
    fg = cat.compose(f, g, tol)
    r = max(
        _flag(cat.same_morphism(G(F(f)), f, tol)),
        _flag(cat.same_morphism(F(G(h)), h, tol)),
        _flag(eq(F(LeftObject(f.src)), f.src, tol) and eq(G(f.src).m, f.src, tol)),
        residual(F(fg).t, cat.compose(F(f), F(g), tol).t),
        residual(G(F(fg)).t, cat.compose(G(F(f)), G(F(g)), tol).t),
        _flag(cat.same_morphism(F(cat.identity(m)), cat.identity(m, FHMorphism), tol)),
        residual(F(cat.hom_add(f, f2, tol)).t, cat.hom_add(F(f), F(f2), tol).t),
        residual(F(cat.hom_scale(k, f)).t, cat.hom_scale(k, F(f)).t),
        _rel(operator_norm(F(f).restricted()), cat.hom_norm(f)),
        _flag(cat.is_inclusion(F(cat.inclusion(m, big)), tol)),
        _flag(cat.is_inclusion(G(cat.inclusion(m, big, FHMorphism)), tol)),
    )
    return r, {"f": f, "g": g, "k": k}


def check_fh_dual(rng, cfg, i):
    tol, fld = cfg.tol, cfg.field
    f, g = _chain(rng, cfg, FHMorphism)
    f2 = random_morphism(rng, cfg.ambient_dim, fld, FHMorphism, src=f.src, dst=f.dst)
    k = random_scalar(rng, fld)
    m, big = random_nested_pair(rng, cfg.ambient_dim, fld)
    D = fun.fh_to_dual
    df = D(f)
    r = max(
        residual(D(cat.hom_scale(k, f)).d, fun.dual_scale(np.conj(k), df).d),
        residual(D(cat.hom_add(f, f2, tol)).d, fun.dual_add(df, D(f2), tol).d),
        _rel(fun.dual_norm(df), operator_norm(f.restricted())),
        residual(D(cat.compose(f, g, tol)).d, fun.dual_compose(df, D(g), tol).d),
        residual(D(cat.identity(m, FHMorphism)).d, fun.dual_identity(m).d),
        _flag(cat.same_morphism(fun.dual_to_fh(df), f, tol)),
        _flag(fun.is_dual_inclusion(D(cat.inclusion(m, big, FHMorphism)), tol)),
        _valid_dual(df, tol),
    )
    return r, {"f": f, "g": g, "k": k}


def _valid_dual(d, tol) -> float:
    try:
        fun.DualMorphism(d.src, d.d, d.dst, tol)
    except OpcatError:
        return 1.0
    return 0.0


def check_right_dual(rng, cfg, i):
    tol, fld = cfg.tol, cfg.field
    f, g = _chain(rng, cfg, RightMorphism)
    f2 = random_morphism(rng, cfg.ambient_dim, fld, RightMorphism, src=f.src, dst=f.dst)
    h = random_morphism(rng, cfg.ambient_dim, fld, LeftMorphism)
    k = random_scalar(rng, fld)
    m, big = random_nested_pair(rng, cfg.ambient_dim, fld)
    F = fun.right_to_dual
    ff = F(f)
    square = fun.right_to_dual(fun.left_to_right(h))
    other_way = fun.fh_to_dual(fun.left_to_fh(h))
    r = max(
        residual(F(cat.hom_scale(k, f)).d, fun.dual_scale(k, ff).d),
        residual(F(cat.hom_add(f, f2, tol)).d, fun.dual_add(ff, F(f2), tol).d),
        _rel(fun.dual_norm(ff), cat.hom_norm(f)),
        residual(F(cat.compose(f, g, tol)).d, fun.dual_compose(ff, F(g), tol).d),
        residual(F(cat.identity(m, RightMorphism)).d, fun.dual_identity(m).d),
        _flag(cat.same_morphism(fun.dual_to_right(ff), f, tol)),
        _flag(eq(F(RightObject(m)).base, m, tol)),
        _flag(fun.is_dual_inclusion(F(cat.inclusion(m, big, RightMorphism)), tol)),
        _valid_dual(ff, tol),
        _flag(fun.same_dual(square, other_way, tol)),
    )
    return r, {"f": f, "g": g, "k": k, "h": h}


def check_left_right(rng, cfg, i):
    tol, fld = cfg.tol, cfg.field
    f, g = _chain(rng, cfg, LeftMorphism)
    f2 = random_morphism(rng, cfg.ambient_dim, fld, LeftMorphism, src=f.src, dst=f.dst)
    k = random_scalar(rng, fld)
    m, big = random_nested_pair(rng, cfg.ambient_dim, fld)
    F = fun.left_to_right
    ff = F(f)
    r = max(
        residual(F(cat.hom_scale(k, f)).t, cat.hom_scale(np.conj(k), ff).t),
        residual(F(cat.hom_add(f, f2, tol)).t, cat.hom_add(ff, F(f2), tol).t),
        _rel(cat.hom_norm(ff), cat.hom_norm(f)),
        residual(F(cat.compose(f, g, tol)).t, cat.compose(ff, F(g), tol).t),
        _flag(cat.same_morphism(F(cat.identity(m)), cat.identity(m, RightMorphism), tol)),
        _flag(cat.same_morphism(fun.right_to_left(ff), f, tol)),
        _flag(cat.is_inclusion(F(cat.inclusion(m, big)), tol)),
        _flag(cat.is_morphism(RightMorphism, ff.src, ff.t, ff.dst, tol)),
    )
    return r, {"f": f, "g": g, "k": k}


def cone_samples(c: cones.Cone, rng, field, extra: int = 3):
    """Components at the coordinate lines, a second random basis of lines,
    and a few random subspaces."""
    n = c.ambient_dim
    second = gaussian(rng, (n, n), field)
    subs = sample_subspaces(rng, n, n + extra, field)
    subs[n:n] = [span(second[:, j]) for j in range(n)]
    return [(m, cones.cone_component(c, m)) for m in subs]


def check_cone_semigroup(rng, cfg, i):
    n, fld, tol = cfg.ambient_dim, cfg.field, cfg.tol
    t = random_operator(rng, n, fld)
    flavor = _flavor(i)
    c = cones.Cone(t, flavor)
    rebuilt = cones.cone_from_assignment(cone_samples(c, rng, fld), tol)
    m, big = random_nested_pair(rng, n, fld)
    r = max(
        residual(rebuilt.gen, t),
        _flag(cones.cone_compatibility_check(c, m, big, tol)),
        _flag(cones.is_normal_at(c, cones.normalizing_subspace(c, tol), tol)),
        _flag(eq(rebuilt.vertex, c.vertex, tol)),
    )
    return r, {"cone": c}


def check_cone_product(rng, cfg, i):
    n, fld, tol = cfg.ambient_dim, cfg.field, cfg.tol
    flavor = _flavor(i)
    c1 = cones.Cone(random_operator(rng, n, fld), flavor)
    c2 = cones.Cone(random_operator(rng, n, fld), flavor)
    prod = cones.cone_product(c1, c2)
    pointwise = cones.pointwise_product(c1, c2, tol)
    extra = [c1.vertex, cones.normalizing_subspace(c1, tol)]
    worst = 0.0
    for m in sample_subspaces(rng, n, cfg.subspaces_per_pair, fld, extra):
        a, b = pointwise(m), cones.cone_component(prod, m)
        worst = max(worst, residual(a.t, b.t), _flag(eq(a.dst, b.dst, tol)))
    return worst, {"c1": c1, "c2": c2}


def check_regularity(rng, cfg, i):
    n, fld, tol = cfg.ambient_dim, cfg.field, cfg.tol
    t = random_operator(rng, n, fld)
    tp = pseudoinverse(t, tol)
    c, cp = cones.Cone(t, _flavor(i)), cones.Cone(tp, _flavor(i))
    outer = cones.pointwise_product(c, cones.cone_product(cp, c), tol)
    parts = [residual(t @ tp @ t, t), residual(tp @ t @ tp, tp)]
    for m in sample_subspaces(rng, n, n + 3, fld, [cones.normalizing_subspace(c, tol)]):
        a, b = outer(m), cones.cone_component(c, m)
        parts += [residual(a.t, b.t), _flag(eq(a.dst, b.dst, tol))]
    return max(parts), {"t": t}


def _bounded_algebra(rng, cfg, flavor: cones.Flavor):
    n, fld, tol = cfg.ambient_dim, cfg.field, cfg.tol
    t1, t2 = random_operator(rng, n, fld), random_operator(rng, n, fld)
    k = random_scalar(rng, fld)
    a, b = cones.phi(t1, flavor), cones.phi(t2, flavor)
    k_bar = np.conj(k) if flavor is cones.Flavor.RIGHT else k
    comp = cones.cone_component
    prod = cones.pointwise_product(a.cone, b.cone, tol)
    parts = [
        residual(cones.phi(k * t1, flavor).cone.gen, cones.cone_scale(k_bar, a).cone.gen),
        residual(cones.cone_add(a, b).cone.gen, cones.phi(t1 + t2, flavor).cone.gen),
        _rel(cones.cone_norm(a), operator_norm(t1)),
        _rel(cones.cone_norm(cones.cone_multiply(a, b)), operator_norm(t1 @ t2)),
    ]
    subs = sample_subspaces(rng, n, n + 4, fld, [cones.normalizing_subspace(a.cone, tol)])
    for m in subs:
        ca = comp(a.cone, m)
        parts += [
            residual(comp(cones.phi(t1 + t2, flavor).cone, m).t, ca.t + comp(b.cone, m).t),
            residual(comp(cones.phi(k * t1, flavor).cone, m).t, k_bar * ca.t),
            residual(comp(cones.cone_scale(k, a).cone, m).t, k * ca.t),
            residual(comp(cones.phi(t1 @ t2, flavor).cone, m).t, prod(m).t),
            max(0.0, cat.hom_norm(ca) - a.alpha) / max(1.0, a.alpha),
        ]
    attained = cat.hom_norm(comp(a.cone, cones.normalizing_subspace(a.cone, tol)))
    parts.append(_rel(attained, a.alpha))
    return max(parts), {"t1": t1, "t2": t2, "k": k}


def check_bounded_left(rng, cfg, i):
    return _bounded_algebra(rng, cfg, cones.Flavor.LEFT)


def check_bounded_right(rng, cfg, i):
    return _bounded_algebra(rng, cfg, cones.Flavor.RIGHT)


def check_l2_profile(rng, cfg, i):
    dims = cfg.dims
    n = dims[i]
    norms = cones.boundedness_profile([n] + ([dims[i - 1]] if i else []))
    expected = math.sqrt(sum(k * k for k in range(1, n + 1)))
    r = _rel(norms[0], expected)
    if i:
        r = max(r, _flag(norms[0] > norms[1]))
    return r, {"n": n, "norm": norms[0], "expected": expected}


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    check: Callable
    conjugate_linear: bool = False
    fixed_samples: bool = False
    summary: Callable | None = None


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite("lemma-3.1", "S a <= S b iff R(a) <= R(b); a S <= b S iff Z(b) <= Z(a), "
              "against a solvability oracle", check_principal_ideals),
        Suite("homset-norm", "hom-sets are normed spaces under ||rho(P_M,T,P_N)|| = ||T||",
              check_homset_norm),
        Suite("retraction", "inclusion then norm-one retraction is the identity; "
              "other retractions have norm > 1", check_retraction),
        Suite("factorization", "f = q u j with U = Z(T)^perp and V = R(T)",
              check_factorization),
        Suite("thm-4.1", "left ideals vs subspaces: FG = 1, GF = 1, functoriality, "
              "normed-space isomorphism of hom-sets", check_left_fh),
        Suite("thm-duality", "subspaces vs dual subspaces: conjugate-linear isometry of "
              "hom-sets", check_fh_dual, conjugate_linear=True),
        Suite("thm-4.3", "right ideals vs dual subspaces: linear isometry of hom-sets",
              check_right_dual),
        Suite("thm-4.4", "left vs right ideals via adjoints: conjugate-linear isometry",
              check_left_right, conjugate_linear=True),
        Suite("thm-5.1", "normal cones <-> finite-rank operators: reconstruction, "
              "compatibility, normality", check_cone_semigroup),
        Suite("cone-product", "pointwise cone product agrees with the generator product",
              check_cone_product),
        Suite("regularity", "T T+ T = T and the transported cone identity",
              check_regularity),
        Suite("bounded-algebra-left", "phi(T) = rho^T is an isometric algebra isomorphism",
              check_bounded_left),
        Suite("bounded-algebra-right", "phi(T) = lambda^{T*} is a conjugate-linear isometric "
              "algebra isomorphism", check_bounded_right, conjugate_linear=True),
        Suite("l2-profile", "||T_n|| = sqrt(sum k^2), strictly increasing in n",
              check_l2_profile, fixed_samples=True,
              summary=lambda cfg: {"dims": list(cfg.dims),
                                   "norms": cones.boundedness_profile(cfg.dims)}),
    )
}


def _serialize(value):
    if isinstance(value, (cat.Morphism, fun.DualMorphism, cones.Cone)) or (
        isinstance(value, np.ndarray)
    ):
        return to_json(value)
    if hasattr(value, "basis"):
        return to_json(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return value


def run_one(name: str, cfg: SuiteConfig) -> dict:
    suite = SUITES[name]
    count = len(cfg.dims) if suite.fixed_samples else cfg.samples
    start = time.perf_counter()
    worst, worst_instance, worst_index = -1.0, None, None
    for i in range(count):
        rng = sample_rng(cfg.seed, name, i)
        try:
            r, instance = suite.check(rng, cfg, i)
        except (OpcatError, np.linalg.LinAlgError) as exc:
            r, instance = math.inf, {"error": f"{type(exc).__name__}: {exc}"}
        if not r >= 0.0:  # NaN
            r = math.inf
        if r > worst:
            worst, worst_instance, worst_index = r, instance, i
    elapsed = time.perf_counter() - start
    extra = {"summary": suite.summary(cfg)} if suite.summary else {}
    return {
        **extra,
        "name": name,
        "description": suite.description,
        "passed": worst <= cfg.tol.eps_eq,
        "samples": count,
        "max_residual": worst if math.isfinite(worst) else "inf",
        "worst_index": worst_index,
        "worst_instance": {k: _serialize(v) for k, v in (worst_instance or {}).items()},
        "vacuous_over_real": suite.conjugate_linear and cfg.field is Field.REAL,
        "wall_time_s": elapsed,
    }


def run_suite(cfg: SuiteConfig) -> dict:
    with ThreadPoolExecutor(max_workers=max(1, cfg.jobs)) as pool:
        results = list(pool.map(lambda name: run_one(name, cfg), cfg.suites))
    return {
        "config": {
            "field": cfg.field.value,
            "ambient_dim": cfg.ambient_dim,
            "samples": cfg.samples,
            "seed": cfg.seed,
            "eps_rank": cfg.tol.eps_rank,
            "eps_eq": cfg.tol.eps_eq,
            "dims": cfg.dims,
            "subspaces_per_pair": cfg.subspaces_per_pair,
        },
        "passed": all(r["passed"] for r in results),
        "suites": results,
    }
