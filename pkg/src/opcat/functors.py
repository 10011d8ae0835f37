"""Isomorphisms between the left, right, subspace and dual-subspace categories.

The dual category has objects ``M' = {f_m : m in M}``.  A functional on K^n
is stored by its coefficient column ``c`` (``f(x) = x @ c``), so
``f_m`` has coefficients ``conj(m)`` and the transpose ``A'`` of an operator
acts on coefficients by ``c -> A @ c``.  A dual morphism ``M' -> N'`` is
therefore carried by a matrix ``D`` used in column action; its adjoint is
the map ``m -> m D*`` on Riesz vectors, which is what gets validated.

Every functor here is covariant.  Which of them are linear and which are
conjugate-linear on hom-sets is recorded in ``FUNCTORS``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .categories import (
    FHMorphism,
    LeftMorphism,
    LeftObject,
    RightMorphism,
    RightObject,
)
from .errors import CompositionError, DomainError
from .linalg import DEFAULT_TOL, adjoint, close, operator_norm, residual
from .subspace import Subspace, eq, leq


@dataclass(frozen=True)
class DualObject:
    base: Subspace


class DualMorphism:
    """A linear map ``M' -> N'`` carried by ``D = P_N T* P_M``."""

    kind = "dual"
    __slots__ = ("src", "d", "dst")

    def __init__(self, src: Subspace, d, dst: Subspace, tol=DEFAULT_TOL, *, check=True):
        d = np.asarray(d)
        if check:
            riesz = adjoint(d)
            failed = []
            if residual(src.proj @ riesz, riesz) > tol.eps_eq:
                failed.append("M^perp <= Z(D*)")
            if residual(riesz @ dst.proj, riesz) > tol.eps_eq:
                failed.append("R(D*) <= N")
            if failed:
                raise DomainError(f"not a dual morphism: violates {', '.join(failed)}")
        self.src = src
        self.d = dst.proj @ d @ src.proj
        self.dst = dst

    # Shared with the other morphism classes so generic helpers can read it.
    @property
    def t(self) -> np.ndarray:
        return self.d

    def __repr__(self):
        return f"DualMorphism(src={self.src!r}, dst={self.dst!r}, d=\n{self.d})"


def dual_compose(f: DualMorphism, g: DualMorphism, tol=DEFAULT_TOL) -> DualMorphism:
    """Apply ``f``, then ``g``; column action makes the carrier ``g.d @ f.d``."""
    if not eq(f.dst, g.src, tol):
        raise CompositionError("dual morphisms are not composable")
    return DualMorphism(f.src, g.d @ f.d, g.dst, check=False)


def dual_identity(m: Subspace) -> DualMorphism:
    return DualMorphism(m, m.proj, m, check=False)


def dual_add(f: DualMorphism, g: DualMorphism, tol=DEFAULT_TOL) -> DualMorphism:
    if not (eq(f.src, g.src, tol) and eq(f.dst, g.dst, tol)):
        raise DomainError("dual morphisms live in different hom-sets")
    return DualMorphism(f.src, f.d + g.d, f.dst, check=False)


def dual_scale(k, f: DualMorphism) -> DualMorphism:
    return DualMorphism(f.src, k * f.d, f.dst, check=False)


def dual_norm(f: DualMorphism) -> float:
    return operator_norm(f.d)


def is_dual_inclusion(f: DualMorphism, tol=DEFAULT_TOL) -> bool:
    return leq(f.src, f.dst, tol) and close(f.d, f.src.proj, tol)


def same_dual(f: DualMorphism, g: DualMorphism, tol=DEFAULT_TOL) -> bool:
    return eq(f.src, g.src, tol) and eq(f.dst, g.dst, tol) and close(f.d, g.d, tol)


def left_to_fh(x):
    """``S P_M -> M`` and ``rho(P_M, T, P_N) -> T|_M``."""
    if isinstance(x, LeftObject):
        return x.m
    if type(x) is not LeftMorphism:
        raise TypeError(f"expected a left object or morphism, got {type(x).__name__}")
    return FHMorphism(x.src, x.t, x.dst, check=False)


def fh_to_left(x):
    """``M -> S P_M`` and ``T -> rho(P_M, P_M T P_N, P_N)``."""
    if isinstance(x, Subspace):
        return LeftObject(x)
    if type(x) is not FHMorphism:
        raise TypeError(f"expected a subspace or linear map, got {type(x).__name__}")
    return LeftMorphism(x.src, x.src.proj @ x.t @ x.dst.proj, x.dst, check=False)


def fh_to_dual(x):
    """``M -> M'`` and ``T -> (P_N T* P_M)'`` restricted to ``M'``."""
    if isinstance(x, Subspace):
        return DualObject(x)
    if type(x) is not FHMorphism:
        raise TypeError(f"expected a subspace or linear map, got {type(x).__name__}")
    return DualMorphism(x.src, x.dst.proj @ adjoint(x.t) @ x.src.proj, x.dst, check=False)


def dual_to_fh(x):
    if isinstance(x, DualObject):
        return x.base
    if not isinstance(x, DualMorphism):
        raise TypeError(f"expected a dual object or morphism, got {type(x).__name__}")
    return FHMorphism(x.src, adjoint(x.d), x.dst, check=False)


def right_to_dual(x):
    """``P_M S -> M'`` and ``lambda(P_M, T, P_N) -> T'`` restricted to ``M'``."""
    if isinstance(x, RightObject):
        return DualObject(x.m)
    if type(x) is not RightMorphism:
        raise TypeError(f"expected a right object or morphism, got {type(x).__name__}")
    return DualMorphism(x.src, x.t, x.dst, check=False)


def dual_to_right(x):
    if isinstance(x, DualObject):
        return RightObject(x.base)
    if not isinstance(x, DualMorphism):
        raise TypeError(f"expected a dual object or morphism, got {type(x).__name__}")
    return RightMorphism(x.src, x.d, x.dst, check=False)


def left_to_right(x):
    """``S P_M -> P_M S`` and ``rho(P_M, T, P_N) -> lambda(P_M, T*, P_N)``."""
    if isinstance(x, LeftObject):
        return RightObject(x.m)
    if type(x) is not LeftMorphism:
        raise TypeError(f"expected a left object or morphism, got {type(x).__name__}")
    return RightMorphism(x.src, adjoint(x.t), x.dst, check=False)


def right_to_left(x):
    if isinstance(x, RightObject):
        return LeftObject(x.m)
    if type(x) is not RightMorphism:
        raise TypeError(f"expected a right object or morphism, got {type(x).__name__}")
    return LeftMorphism(x.src, adjoint(x.t), x.dst, check=False)


@dataclass(frozen=True)
class Functor:
    name: str
    apply: Callable
    inverse: Callable
    source: str
    target: str
    conjugate_linear: bool


FUNCTORS: dict[str, Functor] = {
    f.name: f
    for f in (
        Functor("L-to-FH", left_to_fh, fh_to_left, "left", "fh", False),
        Functor("FH-to-L", fh_to_left, left_to_fh, "fh", "left", False),
        Functor("FH-to-dual", fh_to_dual, dual_to_fh, "fh", "dual", True),
        Functor("R-to-dual", right_to_dual, dual_to_right, "right", "dual", False),
        Functor("L-to-R", left_to_right, right_to_left, "left", "right", True),
    )
}
