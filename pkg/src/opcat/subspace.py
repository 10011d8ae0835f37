"""Subspaces of K^n, their orthogonal projections, and the inclusion order.

A subspace is stored by an orthonormal basis (as matrix columns) together
with its projection.  Because operators act on row vectors, the projection
onto ``M`` is ``conj(B) @ B.T`` rather than ``B @ B*``; the two coincide
over the reals and are transposes of each other over the complex field.
Equality of subspaces is equality of projections.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import ShapeError
from .linalg import (
    DEFAULT_TOL,
    Field,
    Tolerances,
    field_of,
    rank_cutoff,
    residual,
    svd,
)


@dataclass(frozen=True, eq=False)
class Subspace:
    ambient_dim: int
    basis: np.ndarray
    proj: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def field(self) -> Field:
        return field_of(self.basis)

    @property
    def rows(self) -> np.ndarray:
        """The basis vectors as rows, i.e. in the form operators act on."""
        return self.basis.T

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def _sign_fix(q: np.ndarray) -> np.ndarray:
    q = q.copy()
    for j in range(q.shape[1]):
        col = q[:, j]
        big = np.abs(col) > 1e-9 * np.abs(col).max()
        pivot = col[np.argmax(big)]
        q[:, j] = col * (np.conj(pivot) / abs(pivot))
    return q + 0.0  # drop negative zeros


def _from_orthonormal(u: np.ndarray) -> Subspace:
    n, r = u.shape
    if r == 0:
        basis = np.zeros((n, 0), dtype=u.dtype)
        return Subspace(n, basis, np.zeros((n, n), dtype=u.dtype))
    gram = u @ u.conj().T
    q, _, _ = scipy.linalg.qr(gram, pivoting=True)
    basis = _sign_fix(q[:, :r])
    return Subspace(n, basis, basis.conj() @ basis.T)


def span(vectors, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    """Subspace spanned by the columns of ``vectors``."""
    vectors = np.asarray(vectors)
    if vectors.ndim == 1:
        vectors = vectors[:, None]
    if vectors.ndim != 2:
        raise ShapeError(f"expected column vectors, got shape {vectors.shape}")
    dtype = Field.COMPLEX.dtype if np.iscomplexobj(vectors) else Field.REAL.dtype
    vectors = vectors.astype(dtype)
    if vectors.shape[1] == 0:
        return _from_orthonormal(vectors)
    u, s, _ = svd(vectors, full=False)
    return _from_orthonormal(u[:, : rank_cutoff(s, tol)])


def zero_subspace(n: int, field: Field | str = Field.REAL) -> Subspace:
    return span(np.zeros((n, 0), dtype=Field(field).dtype))


def whole_space(n: int, field: Field | str = Field.REAL) -> Subspace:
    return span(np.eye(n, dtype=Field(field).dtype))


def coordinate_subspace(n: int, axes, field: Field | str = Field.REAL) -> Subspace:
    """Span of the standard basis vectors ``e_i`` for ``i`` in ``axes`` (0-based)."""
    eye = np.eye(n, dtype=Field(field).dtype)
    return span(eye[:, list(axes)])


def projection_onto(m: Subspace) -> np.ndarray:
    return m.proj


def range_space(t: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    """``R(T) = {x T}``: the span of the rows of ``t``."""
    u, s, v = svd(t)
    r = rank_cutoff(s, tol)
    return _from_orthonormal(v[:, :r].conj())


def kernel_space(t: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    """``Z(T) = {x : x T = 0}``."""
    u, s, v = svd(t)
    r = rank_cutoff(s, tol)
    return _from_orthonormal(u[:, r:].conj())


def _check_ambient(m: Subspace, n: Subspace):
    if m.ambient_dim != n.ambient_dim:
        raise ShapeError(f"ambient dimensions differ: {m.ambient_dim} vs {n.ambient_dim}")


def leq(m: Subspace, n: Subspace, tol: Tolerances = DEFAULT_TOL) -> bool:
    """``M <= N``, tested as ``P_M P_N = P_M``."""
    _check_ambient(m, n)
    return residual(m.proj @ n.proj, m.proj) <= tol.eps_eq


def eq(m: Subspace, n: Subspace, tol: Tolerances = DEFAULT_TOL) -> bool:
    _check_ambient(m, n)
    return residual(m.proj, n.proj) <= tol.eps_eq


def orth_complement(m: Subspace) -> Subspace:
    n = m.ambient_dim
    if m.dim == 0:
        return whole_space(n, m.field)
    u, _, _ = svd(m.basis)
    return _from_orthonormal(u[:, m.dim :])


def subspace_sum(m: Subspace, n: Subspace, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    _check_ambient(m, n)
    return span(np.hstack([m.basis, n.basis]), tol)


def intersect(m: Subspace, n: Subspace, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    _check_ambient(m, n)
    return orth_complement(subspace_sum(orth_complement(m), orth_complement(n), tol))
