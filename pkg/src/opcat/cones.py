"""Normal cones generated by finite-rank operators and their algebra.

A cone is stored by its generator ``T`` only; its component at a subspace
``M`` is computed on demand:

* ``fh``    : ``T|_M : M -> R(T)``, the triple ``(M, P_M T, R(T))``
* ``left``  : ``rho(P_M, P_M T, P_R(T))``
* ``right`` : ``lambda(P_M, (P_M T)*, P_R(T))``, the transport of the left
  cone along ``S P_M -> P_M S``

In every flavor the cone product corresponds to the generator product, so
``Cone(T1) . Cone(T2) = Cone(T1 @ T2)``.  Scalars act on right cones
through the conjugate: ``k * Cone(T, right) = Cone(conj(k) T, right)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .categories import (
    FHMorphism,
    LeftMorphism,
    Morphism,
    RightMorphism,
    compose,
    epimorphic_component,
    inclusion,
    is_isomorphism,
    same_morphism,
)
from .errors import OrderError, ReconstructionError, ShapeError
from .linalg import DEFAULT_TOL, adjoint, close, operator_norm, rank
from .subspace import Subspace, eq, kernel_space, leq, orth_complement, range_space


class Flavor(str, enum.Enum):
    FH = "fh"
    LEFT = "left"
    RIGHT = "right"

    @property
    def morphism_type(self) -> type[Morphism]:
        return {Flavor.FH: FHMorphism, Flavor.LEFT: LeftMorphism,
                Flavor.RIGHT: RightMorphism}[self]


@dataclass(frozen=True, eq=False)
class Cone:
    gen: np.ndarray
    flavor: Flavor = Flavor.LEFT

    def __post_init__(self):
        object.__setattr__(self, "flavor", Flavor(self.flavor))
        g = np.asarray(self.gen)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise ShapeError(f"cone generator must be square, got {g.shape}")
        object.__setattr__(self, "gen", g)

    @property
    def ambient_dim(self) -> int:
        return self.gen.shape[0]

    @cached_property
    def vertex(self) -> Subspace:
        return range_space(self.gen)


def cone_component(c: Cone, m: Subspace) -> Morphism:
    if m.ambient_dim != c.ambient_dim:
        raise ShapeError(f"subspace of K^{m.ambient_dim} for a cone on K^{c.ambient_dim}")
    t = m.proj @ c.gen
    kind = c.flavor.morphism_type
    if c.flavor is Flavor.RIGHT:
        t = adjoint(t)
    return kind(m, t, c.vertex, check=False)


def cone_compatibility_check(c: Cone, m: Subspace, n: Subspace, tol=DEFAULT_TOL) -> bool:
    """Does the inclusion ``M <= N`` followed by ``c(N)`` give ``c(M)``?"""
    if not leq(m, n, tol):
        raise OrderError("compatibility is only defined for nested subspaces")
    j = inclusion(m, n, c.flavor.morphism_type, tol)
    return same_morphism(compose(j, cone_component(c, n), tol), cone_component(c, m), tol)


def _check_pair(c1: Cone, c2: Cone):
    if c1.flavor is not c2.flavor:
        raise ValueError(f"cannot combine {c1.flavor.value} and {c2.flavor.value} cones")
    if c1.ambient_dim != c2.ambient_dim:
        raise ShapeError("cones live on different spaces")


def cone_product(c1: Cone, c2: Cone) -> Cone:
    _check_pair(c1, c2)
    return Cone(c1.gen @ c2.gen, c1.flavor)


def pointwise_product(c1: Cone, c2: Cone, tol=DEFAULT_TOL):
    """The product cone as a map ``M -> c1(M)`` followed by the epimorphic
    part of ``c2`` at the vertex of ``c1``.

    Built only from components and normal factorization; it never forms
    ``c1.gen @ c2.gen``.
    """
    _check_pair(c1, c2)
    epi = epimorphic_component(cone_component(c2, c1.vertex), tol)
    return lambda m: compose(cone_component(c1, m), epi, tol)


def pointwise_product_component(c1: Cone, c2: Cone, m: Subspace, tol=DEFAULT_TOL) -> Morphism:
    return pointwise_product(c1, c2, tol)(m)


def normalizing_subspace(c: Cone, tol=DEFAULT_TOL) -> Subspace:
    """A subspace where the component is an isomorphism onto the vertex."""
    return orth_complement(kernel_space(c.gen, tol))


def is_normal_at(c: Cone, m: Subspace, tol=DEFAULT_TOL) -> bool:
    return is_isomorphism(cone_component(c, m), tol)


def _line_image(m: Subspace, comp: Morphism) -> np.ndarray:
    t = adjoint(comp.t) if isinstance(comp, RightMorphism) else comp.t
    return m.rows[0] @ t


def _reconstruct(lines, n, dtype, tol):
    chosen_rows, images, rest = [], [], []
    for m, comp in lines:
        candidate = chosen_rows + [m.rows[0]]
        if len(chosen_rows) < n and rank(np.array(candidate), tol) == len(candidate):
            chosen_rows.append(m.rows[0])
            images.append(_line_image(m, comp))
        else:
            rest.append((m, comp))
    if len(chosen_rows) < n:
        return None, rest
    b = np.array(chosen_rows, dtype=dtype)
    return np.linalg.solve(b, np.array(images, dtype=dtype)), rest


def cone_from_assignment(samples, tol=DEFAULT_TOL) -> Cone:
    """Recover the generator ``T`` from components ``(M, c(M))``.

    Lines ``<b>`` in the samples give ``T(b) = c(<b>)(b)``; the first ``n``
    independent lines determine ``T``.  A second basis among the remaining
    lines, if present, must give the same ``T``, and every sample must agree
    with the reconstructed cone.
    """
    samples = list(samples)
    if not samples:
        raise ReconstructionError("no samples")
    kinds = {type(comp) for _, comp in samples}
    if len(kinds) != 1:
        raise ReconstructionError("samples mix morphism kinds")
    flavor = {FHMorphism: Flavor.FH, LeftMorphism: Flavor.LEFT,
              RightMorphism: Flavor.RIGHT}[kinds.pop()]
    n = samples[0][0].ambient_dim
    complex_ = any(np.iscomplexobj(comp.t) or np.iscomplexobj(m.basis) for m, comp in samples)
    dtype = np.complex128 if complex_ else np.float64

    vertex = samples[0][1].dst
    for m, comp in samples:
        if not eq(m, comp.src, tol):
            raise ReconstructionError("a sample component does not start at its subspace")
        if not eq(comp.dst, vertex, tol):
            raise ReconstructionError("sample components do not share one vertex")

    lines = [(m, comp) for m, comp in samples if m.dim == 1]
    gen, rest = _reconstruct(lines, n, dtype, tol)
    if gen is None:
        raise ReconstructionError(f"samples contain fewer than {n} independent lines")
    second, _ = _reconstruct(rest, n, dtype, tol)
    if second is not None and not close(gen, second, tol):
        raise ReconstructionError("two reconstruction bases disagree")

    cone = Cone(gen, flavor)
    for i, (m, comp) in enumerate(samples):
        if not close(cone_component(cone, m).t, comp.t, tol):
            raise ReconstructionError(f"sample {i} is inconsistent with the reconstructed cone")
    if not eq(cone.vertex, vertex, tol):
        raise ReconstructionError("no component is an isomorphism onto the vertex")
    return cone


@dataclass(frozen=True, eq=False)
class ConeAlgebraElement:
    """A bounded cone together with its bound ``alpha = ||gen||``."""

    cone: Cone
    alpha: float

    @classmethod
    def of(cls, cone: Cone) -> "ConeAlgebraElement":
        return cls(cone, operator_norm(cone.gen))

    @property
    def flavor(self) -> Flavor:
        return self.cone.flavor


def phi(t, flavor: Flavor | str = Flavor.LEFT) -> ConeAlgebraElement:
    """``T -> rho^T`` (left/fh) or ``T -> lambda^{T*}`` (right)."""
    return ConeAlgebraElement.of(Cone(np.asarray(t), Flavor(flavor)))


def cone_add(a: ConeAlgebraElement, b: ConeAlgebraElement) -> ConeAlgebraElement:
    _check_pair(a.cone, b.cone)
    return ConeAlgebraElement.of(Cone(a.cone.gen + b.cone.gen, a.flavor))


def cone_scale(k, a: ConeAlgebraElement) -> ConeAlgebraElement:
    factor = np.conj(k) if a.flavor is Flavor.RIGHT else k
    return ConeAlgebraElement.of(Cone(factor * a.cone.gen, a.flavor))


def cone_multiply(a: ConeAlgebraElement, b: ConeAlgebraElement) -> ConeAlgebraElement:
    return ConeAlgebraElement.of(cone_product(a.cone, b.cone))


def cone_norm(a: ConeAlgebraElement) -> float:
    return a.alpha


def l2_truncation(n: int, dtype=np.float64) -> np.ndarray:
    """The operator ``e_k -> k e_1`` on K^n (rows are images of basis vectors)."""
    t = np.zeros((n, n), dtype=dtype)
    t[:, 0] = np.arange(1, n + 1)
    return t


def boundedness_profile(dims) -> list[float]:
    return [operator_norm(l2_truncation(n)) for n in dims]
