"""Dense numerical kernel for operators on K^n.

Operators act on row vectors, ``x -> x @ a``.  Under that convention the
semigroup product ``T1 T2`` (first ``T1``, then ``T2``) is the plain matrix
product ``a @ b``, and the adjoint is still the conjugate transpose.

Matrices are numpy arrays: ``float64`` for the real field, ``complex128``
for the complex field.  The SVD is the single rank oracle for the package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import FieldError, NumericError, ShapeError


class Field(str, enum.Enum):
    REAL = "real"
    COMPLEX = "complex"

    @property
    def dtype(self) -> type:
        return np.float64 if self is Field.REAL else np.complex128


def field_of(a: np.ndarray) -> Field:
    return Field.COMPLEX if np.iscomplexobj(a) else Field.REAL


def scalar(value, field: Field | str = Field.REAL) -> float | complex:
    """Coerce ``value`` to a scalar of ``field``.

    Real-tagged scalars must have an exactly zero imaginary part.
    """
    field = Field(field)
    z = complex(value)
    if field is Field.REAL:
        if z.imag != 0.0:
            raise FieldError(f"real scalar with nonzero imaginary part: {value!r}")
        return z.real
    return z


@dataclass(frozen=True)
class Tolerances:
    """Thresholds for rank decisions and approximate equality.

    Both are relative to the largest singular value involved, with a floor
    of 1 so that pure round-off (e.g. ``P_M T`` for ``M`` inside ``Z(T)``)
    reads as zero rather than as a full-rank tiny matrix.
    """

    eps_rank: float = 1e-10
    eps_eq: float = 1e-8

    def __post_init__(self):
        if not (0.0 < self.eps_rank <= self.eps_eq < 1.0):
            raise ValueError(
                f"need 0 < eps_rank <= eps_eq < 1, got {self.eps_rank}, {self.eps_eq}"
            )


DEFAULT_TOL = Tolerances()


def as_mat(a, field: Field | str | None = None) -> np.ndarray:
    """Return ``a`` as a 2-D array of the requested (or inferred) field."""
    arr = np.asarray(a)
    if arr.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got shape {arr.shape}")
    if field is None:
        field = field_of(arr)
    field = Field(field)
    if field is Field.REAL and np.iscomplexobj(arr):
        if np.any(arr.imag != 0):
            raise FieldError("complex entries in a real-tagged matrix")
        arr = arr.real
    return np.array(arr, dtype=field.dtype)


def identity(n: int, field: Field | str = Field.REAL) -> np.ndarray:
    return np.eye(n, dtype=Field(field).dtype)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Semigroup product: apply ``a`` first, then ``b``."""
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    if field_of(a) is not field_of(b):
        raise FieldError(f"field mismatch: {field_of(a).value} vs {field_of(b).value}")
    return a @ b


def adjoint(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def _scale(*mats: np.ndarray) -> float:
    return max([1.0] + [operator_norm(m) for m in mats if m.size])


def svd(a: np.ndarray, full: bool = True):
    """Return ``(U, s, V)`` with ``a = U @ diag(s) @ V*`` and ``s`` descending."""
    try:
        u, s, vh = np.linalg.svd(a, full_matrices=full)
    except np.linalg.LinAlgError as exc:
        finite = bool(np.all(np.isfinite(a)))
        raise NumericError(
            f"SVD failed to converge for shape {a.shape} (all finite: {finite}): {exc}"
        ) from exc
    return u, s, vh.conj().T


def singular_values(a: np.ndarray) -> np.ndarray:
    if a.size == 0:
        return np.zeros(0)
    try:
        return np.linalg.svd(a, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"SVD failed to converge for shape {a.shape}: {exc}") from exc


def rank_cutoff(s: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> int:
    if s.size == 0:
        return 0
    return int(np.count_nonzero(s > tol.eps_rank * max(float(s[0]), 1.0)))


def rank(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> int:
    return rank_cutoff(singular_values(a), tol)


def operator_norm(a: np.ndarray) -> float:
    s = singular_values(a)
    return float(s[0]) if s.size else 0.0


def pseudoinverse(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose inverse, truncated at the package rank cutoff."""
    u, s, v = svd(a, full=False)
    r = rank_cutoff(s, tol)
    return (v[:, :r] / s[:r]) @ adjoint(u[:, :r])


def residual(a: np.ndarray, b: np.ndarray) -> float:
    """Relative distance ``||a - b|| / max(1, ||a||, ||b||)`` in operator norm."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ShapeError(f"cannot compare {a.shape} with {b.shape}")
    if a.size == 0:
        return 0.0
    return operator_norm(a - b) / _scale(a, b)


def close(a: np.ndarray, b: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> bool:
    return residual(a, b) <= tol.eps_eq
