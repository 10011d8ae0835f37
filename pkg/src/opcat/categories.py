"""The categories of principal left ideals, principal right ideals, and
finite-dimensional subspaces, as validated morphism triples.

A morphism is a triple ``(src, t, dst)``.  Objects are subspaces ``M``:
for the left category ``M`` stands for the ideal ``S P_M``, for the right
category for ``P_M S``, and for the subspace category for ``M`` itself.

Composition is written left to right throughout: ``compose(f, g)`` applies
``f`` first, then ``g``.  For left and subspace morphisms the composite
carries ``f.t @ g.t``; right morphisms act by left multiplication
(``A -> T A``), so their composite carries ``g.t @ f.t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .errors import CompositionError, DomainError, OrderError
from .linalg import DEFAULT_TOL, Tolerances, close, operator_norm, rank, residual
from .subspace import (
    Subspace,
    eq,
    kernel_space,
    leq,
    orth_complement,
    range_space,
)


@dataclass(frozen=True)
class LeftObject:
    m: Subspace


@dataclass(frozen=True)
class RightObject:
    m: Subspace


class Morphism:
    kind: ClassVar[str]
    __slots__ = ("src", "t", "dst")

    def __init__(self, src: Subspace, t, dst: Subspace, tol: Tolerances = DEFAULT_TOL,
                 *, check: bool = True):
        t = np.asarray(t)
        n = src.ambient_dim
        if dst.ambient_dim != n or t.shape != (n, n):
            raise DomainError(
                f"{self.kind} morphism needs a {n}x{n} operator between subspaces of "
                f"K^{n}; got t of shape {t.shape} and target in K^{dst.ambient_dim}"
            )
        if check:
            failed = [name for name, r in self.constraint_residuals(src, t, dst)
                      if r > tol.eps_eq]
            if failed:
                raise DomainError(f"not a {self.kind} morphism: violates {', '.join(failed)}")
        self.src = src
        self.t = self._canonical(src, t, dst)
        self.dst = dst

    @staticmethod
    def constraint_residuals(src, t, dst) -> list[tuple[str, float]]:
        raise NotImplementedError

    @staticmethod
    def _canonical(src, t, dst):
        raise NotImplementedError

    @staticmethod
    def _compose_t(t1, t2):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}(src={self.src!r}, dst={self.dst!r}, t=\n{self.t})"


class LeftMorphism(Morphism):
    """``rho(P_M, T, P_N)``: ``A -> A T`` from ``S P_M`` to ``S P_N``.

    Needs ``M^perp <= Z(T)`` and ``R(T) <= N``; stored with ``t = P_M t``.
    """

    kind = "left"
    __slots__ = ()

    @staticmethod
    def constraint_residuals(src, t, dst):
        return [
            ("M^perp <= Z(T)", residual(src.proj @ t, t)),
            ("R(T) <= N", residual(t @ dst.proj, t)),
        ]

    @staticmethod
    def _canonical(src, t, dst):
        return src.proj @ t

    @staticmethod
    def _compose_t(t1, t2):
        return t1 @ t2


class FHMorphism(LeftMorphism):
    """A linear map ``T|_M : M -> N``, encoded by the same canonical triple
    as the corresponding left morphism."""

    kind = "fh"
    __slots__ = ()

    def restricted(self) -> np.ndarray:
        """Matrix of ``T|_M`` in the orthonormal bases of ``M`` and ``N``."""
        return self.src.rows @ self.t @ self.dst.basis.conj()


class RightMorphism(Morphism):
    """``lambda(P_M, T, P_N)``: ``A -> T A`` from ``P_M S`` to ``P_N S``.

    Needs ``N^perp <= Z(T)`` and ``R(T) <= M``; stored with ``t = P_N t``.
    """

    kind = "right"
    __slots__ = ()

    @staticmethod
    def constraint_residuals(src, t, dst):
        return [
            ("N^perp <= Z(T)", residual(dst.proj @ t, t)),
            ("R(T) <= M", residual(t @ src.proj, t)),
        ]

    @staticmethod
    def _canonical(src, t, dst):
        return dst.proj @ t

    @staticmethod
    def _compose_t(t1, t2):
        return t2 @ t1


KINDS: dict[str, type[Morphism]] = {
    cls.kind: cls for cls in (LeftMorphism, RightMorphism, FHMorphism)
}


def make_left_morphism(m, t, n, tol=DEFAULT_TOL) -> LeftMorphism:
    return LeftMorphism(m, t, n, tol)


def make_right_morphism(m, t, n, tol=DEFAULT_TOL) -> RightMorphism:
    return RightMorphism(m, t, n, tol)


def make_fh_morphism(m, t, n, tol=DEFAULT_TOL) -> FHMorphism:
    return FHMorphism(m, t, n, tol)


def is_morphism(cls: type[Morphism], src, t, dst, tol=DEFAULT_TOL) -> bool:
    return all(r <= tol.eps_eq for _, r in cls.constraint_residuals(src, np.asarray(t), dst))


def left_ideal_contains(m: Subspace, t, tol=DEFAULT_TOL) -> bool:
    """``T in S P_M``, i.e. ``R(T) <= M``."""
    t = np.asarray(t)
    return residual(t @ m.proj, t) <= tol.eps_eq


def right_ideal_contains(m: Subspace, t, tol=DEFAULT_TOL) -> bool:
    """``T in P_M S``, i.e. ``M^perp <= Z(T)``."""
    t = np.asarray(t)
    return residual(m.proj @ t, t) <= tol.eps_eq


def _same_kind(f: Morphism, g: Morphism):
    if type(f) is not type(g):
        raise CompositionError(f"cannot combine a {f.kind} morphism with a {g.kind} morphism")


def compose(f: Morphism, g: Morphism, tol=DEFAULT_TOL) -> Morphism:
    """Apply ``f``, then ``g``."""
    _same_kind(f, g)
    if not eq(f.dst, g.src, tol):
        raise CompositionError(
            f"target of the first morphism ({f.dst!r}) is not the source of the "
            f"second ({g.src!r})"
        )
    return type(f)(f.src, f._compose_t(f.t, g.t), g.dst, tol, check=False)


def identity(m: Subspace, kind: type[Morphism] = LeftMorphism) -> Morphism:
    return kind(m, m.proj, m, check=False)


def zero_morphism(m: Subspace, n: Subspace, kind: type[Morphism] = LeftMorphism) -> Morphism:
    return kind(m, np.zeros_like(m.proj + n.proj), n, check=False)


def inclusion(m: Subspace, n: Subspace, kind: type[Morphism] = LeftMorphism,
              tol=DEFAULT_TOL) -> Morphism:
    """The inclusion ``(M, P_M, N)`` for ``M <= N``."""
    if not leq(m, n, tol):
        raise OrderError(f"no inclusion: {m!r} is not contained in {n!r}")
    return kind(m, m.proj, n, check=False)


def retraction_of(m: Subspace, n: Subspace, kind: type[Morphism] = LeftMorphism,
                  tol=DEFAULT_TOL) -> Morphism:
    """The norm-one retraction ``(N, P_M, M)`` of the inclusion ``M <= N``.

    Other retractions exist (one per idempotent with range ``M`` below
    ``P_N``); only this one has norm 1.
    """
    if not leq(m, n, tol):
        raise OrderError(f"no retraction: {m!r} is not contained in {n!r}")
    return kind(n, m.proj, m, check=False)


def is_inclusion(f: Morphism, tol=DEFAULT_TOL) -> bool:
    return leq(f.src, f.dst, tol) and close(f.t, f.src.proj, tol)


def is_retraction(f: Morphism, tol=DEFAULT_TOL) -> bool:
    """``f`` is a right inverse of the inclusion of its target into its source."""
    if not leq(f.dst, f.src, tol):
        return False
    j = inclusion(f.dst, f.src, type(f), tol)
    return close(compose(j, f, tol).t, f.dst.proj, tol)


def is_isomorphism(f: Morphism, tol=DEFAULT_TOL) -> bool:
    if isinstance(f, RightMorphism):
        # T|_N : N -> M must be bijective.
        domain, codomain = f.dst, f.src
    else:
        domain, codomain = f.src, f.dst
    return eq(kernel_space(f.t, tol), orth_complement(domain), tol) and eq(
        range_space(f.t, tol), codomain, tol
    )


def same_morphism(f: Morphism, g: Morphism, tol=DEFAULT_TOL) -> bool:
    return (
        type(f) is type(g)
        and eq(f.src, g.src, tol)
        and eq(f.dst, g.dst, tol)
        and close(f.t, g.t, tol)
    )


@dataclass(frozen=True)
class NormalFactorization:
    q: Morphism
    u: Morphism
    j: Morphism

    def compose(self, tol=DEFAULT_TOL) -> Morphism:
        return compose(compose(self.q, self.u, tol), self.j, tol)


def normal_factorize(f: Morphism, tol=DEFAULT_TOL) -> NormalFactorization:
    """Factor ``f`` as retraction, isomorphism, inclusion.

    With ``U = Z(T)^perp`` and ``V = R(T)``, a left (or subspace) morphism
    ``(M, T, N)`` factors through ``U -> V``; a right morphism goes the
    other way, ``(M, P_V, V) (V, T, U) (U, P_U, N)``.
    """
    kind = type(f)
    coimage = orth_complement(kernel_space(f.t, tol))
    image = range_space(f.t, tol)
    if isinstance(f, RightMorphism):
        first, second = image, coimage
    else:
        first, second = coimage, image
    return NormalFactorization(
        q=kind(f.src, first.proj, first, tol),
        u=kind(first, f.t, second, tol),
        j=kind(second, second.proj, f.dst, tol),
    )


def epimorphic_component(f: Morphism, tol=DEFAULT_TOL) -> Morphism:
    nf = normal_factorize(f, tol)
    return compose(nf.q, nf.u, tol)


def _same_homset(f: Morphism, g: Morphism, tol):
    _same_kind(f, g)
    if not (eq(f.src, g.src, tol) and eq(f.dst, g.dst, tol)):
        raise DomainError("morphisms live in different hom-sets")


def hom_add(f: Morphism, g: Morphism, tol=DEFAULT_TOL) -> Morphism:
    _same_homset(f, g, tol)
    return type(f)(f.src, f.t + g.t, f.dst, check=False)


def hom_scale(k, f: Morphism) -> Morphism:
    return type(f)(f.src, k * f.t, f.dst, check=False)


def hom_norm(f: Morphism) -> float:
    return operator_norm(f.t)


def principal_left_leq(a, b, tol=DEFAULT_TOL) -> bool:
    """``S a <= S b`` exactly when ``R(a) <= R(b)``."""
    return leq(range_space(a, tol), range_space(b, tol), tol)


def principal_right_leq(a, b, tol=DEFAULT_TOL) -> bool:
    """``a S <= b S`` exactly when ``Z(b) <= Z(a)``."""
    return leq(kernel_space(b, tol), kernel_space(a, tol), tol)


def operator_rank(f: Morphism, tol=DEFAULT_TOL) -> int:
    return rank(f.t, tol)
