import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_matmul
from opcat.errors import FieldError, ShapeError
from opcat.linalg import (
    Field,
    Tolerances,
    adjoint,
    as_mat,
    matmul,
    operator_norm,
    pseudoinverse,
    rank,
    scalar,
    svd,
)
from opcat.sampling import gaussian, random_operator

seeds = st.integers(min_value=0, max_value=2**32 - 1)

E12 = np.array([[0, 1, 0], [0, 0, 0], [0, 0, 0]], dtype=float)
E23_3 = np.array([[0, 0, 0], [0, 0, 3], [0, 0, 0]], dtype=float)
TWO_E12 = 2 * E12


def test_matmul_hand_example():
    expected = naive_matmul(E12.tolist(), E23_3.tolist())
    np.testing.assert_array_equal(expected, [[0, 0, 3], [0, 0, 0], [0, 0, 0]])
    np.testing.assert_array_equal(matmul(E12, E23_3), expected)


def test_matmul_identity(rng):
    b = rng.standard_normal((3, 3))
    np.testing.assert_array_equal(matmul(np.eye(3), b), b)


def test_matmul_first_column_member_times_hom_matrix():
    a, b, c = 1.5, -2.0, 0.25
    member = np.array([[a, 0, 0], [b, 0, 0], [c, 0, 0]])
    t = np.array([[0, 1, 1], [0, 0, 0], [0, 0, 0]], dtype=float)
    expected = naive_matmul(member.tolist(), t.tolist())
    np.testing.assert_allclose(expected, [[0, a, a], [0, b, b], [0, c, c]])
    np.testing.assert_allclose(matmul(member, t), expected)


def test_matmul_errors():
    with pytest.raises(ShapeError):
        matmul(np.eye(2), np.eye(3))
    with pytest.raises(FieldError):
        matmul(np.eye(2), np.eye(2, dtype=complex))


def test_adjoint_examples():
    np.testing.assert_array_equal(adjoint(np.array([[0, 2], [0, 0]])), [[0, 0], [2, 0]])
    np.testing.assert_array_equal(adjoint(np.array([[1j, 0], [0, 0]])), [[-1j, 0], [0, 0]])


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_adjoint_laws(seed):
    rng = np.random.default_rng(seed)
    a = gaussian(rng, (4, 4), "complex")
    b = gaussian(rng, (4, 4), "complex")
    np.testing.assert_array_equal(adjoint(adjoint(a)), a)
    np.testing.assert_allclose(adjoint(a @ b), adjoint(b) @ adjoint(a), atol=1e-12)
    assert abs(operator_norm(adjoint(a)) - operator_norm(a)) <= 1e-8


def test_svd_examples():
    _, s, _ = svd(np.diag([3.0, 1.0]))
    np.testing.assert_allclose(s, [3, 1])
    _, s, _ = svd(TWO_E12)
    np.testing.assert_allclose(s, [2, 0, 0], atol=1e-15)
    _, s, _ = svd(np.zeros((3, 3)))
    np.testing.assert_array_equal(s, 0)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_svd_reconstructs(seed):
    a = gaussian(np.random.default_rng(seed), (5, 5), "complex")
    u, s, v = svd(a)
    np.testing.assert_allclose(u @ np.diag(s) @ adjoint(v), a, atol=1e-12)
    np.testing.assert_allclose(adjoint(u) @ u, np.eye(5), atol=1e-12)
    assert np.all(np.diff(s) <= 0)


def test_operator_norm_examples():
    assert operator_norm(TWO_E12) == pytest.approx(2.0)
    assert operator_norm(np.diag([1.0, 1.0, 0.0])) == pytest.approx(1.0)
    l2 = np.zeros((3, 3))
    l2[:, 0] = [1, 2, 3]
    assert operator_norm(l2) == pytest.approx(np.sqrt(14), abs=1e-12)


def penrose_residuals(a, p):
    return [
        np.abs(a @ p @ a - a).max(),
        np.abs(p @ a @ p - p).max(),
        np.abs(adjoint(a @ p) - a @ p).max(),
        np.abs(adjoint(p @ a) - p @ a).max(),
    ]


def test_pseudoinverse_examples():
    np.testing.assert_allclose(pseudoinverse(np.diag([2.0, 0.0])), np.diag([0.5, 0.0]))
    p = pseudoinverse(TWO_E12)
    np.testing.assert_allclose(p, [[0, 0, 0], [0.5, 0, 0], [0, 0, 0]], atol=1e-15)
    assert max(penrose_residuals(TWO_E12, p)) <= 1e-12
    a = np.array([[2.0, 1.0], [1.0, 3.0]])
    np.testing.assert_allclose(pseudoinverse(a), np.linalg.inv(a), atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(seeds, st.sampled_from(["real", "complex"]))
def test_pseudoinverse_penrose_and_regularity(seed, field):
    rng = np.random.default_rng(seed)
    a = random_operator(rng, 5, field)
    p = pseudoinverse(a)
    assert max(penrose_residuals(a, p)) <= 1e-8 * max(1.0, operator_norm(a)) ** 2
    np.testing.assert_allclose(matmul(a, matmul(p, a)), a, atol=1e-8)


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_submultiplicative(seed):
    rng = np.random.default_rng(seed)
    a, b = gaussian(rng, (4, 4), "complex"), gaussian(rng, (4, 4), "complex")
    assert operator_norm(a @ b) <= operator_norm(a) * operator_norm(b) + 1e-8


def test_rank_uses_relative_cutoff():
    assert rank(np.diag([1.0, 1e-12, 0.0])) == 1
    assert rank(np.diag([1.0, 1e-9])) == 2
    assert rank(np.zeros((3, 3))) == 0
    # Pure round-off reads as zero.
    assert rank(np.full((3, 3), 1e-17)) == 0


def test_scalar_and_field_tags():
    assert scalar(2, "real") == 2.0
    with pytest.raises(FieldError):
        scalar(1 + 1j, Field.REAL)
    z = scalar(1 + 2j, "complex")
    assert np.conj(np.conj(z)) == z
    with pytest.raises(FieldError):
        as_mat([[1j]], "real")
    assert as_mat([[1, 2]], "complex").dtype == np.complex128


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerances(eps_rank=1e-6, eps_eq=1e-8)
    with pytest.raises(ValueError):
        Tolerances(eps_rank=0.0)
