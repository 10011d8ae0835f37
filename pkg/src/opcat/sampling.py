"""Seeded random instances: subspaces, operators, morphisms, scalars."""

from __future__ import annotations

import zlib

import numpy as np

from .categories import LeftMorphism, Morphism, RightMorphism
from .linalg import Field
from .subspace import Subspace, coordinate_subspace, span


def sample_rng(seed: int, suite: str, index: int) -> np.random.Generator:
    """Independent stream per (master seed, suite, sample index)."""
    return np.random.default_rng([seed & (2**64 - 1), zlib.crc32(suite.encode()), index])


def gaussian(rng: np.random.Generator, shape, field: Field | str = Field.REAL) -> np.ndarray:
    if Field(field) is Field.REAL:
        return rng.standard_normal(shape)
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_scalar(rng, field: Field | str = Field.REAL):
    z = gaussian(rng, (), field)
    return complex(z) if Field(field) is Field.COMPLEX else float(z)


def random_subspace(rng, n: int, field: Field | str = Field.REAL, dim: int | None = None) -> Subspace:
    if dim is None:
        dim = int(rng.integers(0, n + 1))
    return span(gaussian(rng, (n, dim), field))


def random_operator(rng, n: int, field: Field | str = Field.REAL, rank: int | None = None) -> np.ndarray:
    """Gaussian operator of the given (default: uniformly random) rank."""
    if rank is None:
        rank = int(rng.integers(0, n + 1))
    return gaussian(rng, (n, rank), field) @ gaussian(rng, (rank, n), field)


def random_nested_pair(rng, n: int, field: Field | str = Field.REAL) -> tuple[Subspace, Subspace]:
    """``M <= N`` with random dimensions."""
    big = int(rng.integers(0, n + 1))
    small = int(rng.integers(0, big + 1))
    vecs = gaussian(rng, (n, big), field)
    return span(vecs[:, :small]), span(vecs)


def random_morphism(rng, n: int, field: Field | str = Field.REAL,
                    kind: type[Morphism] = LeftMorphism,
                    src: Subspace | None = None, dst: Subspace | None = None) -> Morphism:
    src = random_subspace(rng, n, field) if src is None else src
    dst = random_subspace(rng, n, field) if dst is None else dst
    a = random_operator(rng, n, field)
    if issubclass(kind, RightMorphism):
        t = dst.proj @ a @ src.proj
    else:
        t = src.proj @ a @ dst.proj
    return kind(src, t, dst)


def coordinate_lines(n: int, field: Field | str = Field.REAL) -> list[Subspace]:
    return [coordinate_subspace(n, [i], field) for i in range(n)]


def sample_subspaces(rng, n: int, count: int, field: Field | str = Field.REAL,
                     extra=()) -> list[Subspace]:
    """Coordinate lines, the supplied subspaces, then random ones up to ``count``."""
    out = coordinate_lines(n, field) + list(extra)
    while len(out) < count:
        out.append(random_subspace(rng, n, field))
    return out
