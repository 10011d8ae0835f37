import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opcat.categories import (
    FHMorphism,
    LeftMorphism,
    LeftObject,
    RightMorphism,
    RightObject,
    compose,
    hom_add,
    hom_norm,
    hom_scale,
    identity,
    make_fh_morphism,
    same_morphism,
)
from opcat.errors import DomainError
from opcat.functors import (
    FUNCTORS,
    DualMorphism,
    DualObject,
    dual_add,
    dual_compose,
    dual_identity,
    dual_norm,
    dual_scale,
    dual_to_fh,
    dual_to_right,
    fh_to_dual,
    fh_to_left,
    left_to_fh,
    left_to_right,
    right_to_dual,
    right_to_left,
    same_dual,
)
from opcat.linalg import operator_norm, residual
from opcat.sampling import random_morphism, random_scalar
from opcat.subspace import coordinate_subspace

seeds = st.integers(min_value=0, max_value=2**32 - 1)
fields = st.sampled_from(["real", "complex"])


def chain(seed, field, kind, n=5):
    rng = np.random.default_rng(seed)
    f = random_morphism(rng, n, field, kind)
    g = random_morphism(rng, n, field, kind, src=f.dst)
    h = random_morphism(rng, n, field, kind, src=f.src, dst=f.dst)
    return rng, f, g, h


def test_object_maps(r3):
    m = r3["XY"]
    assert left_to_fh(LeftObject(m)) is m
    assert fh_to_left(m) == LeftObject(m)
    assert fh_to_dual(m) == DualObject(m)
    assert dual_to_fh(DualObject(m)) is m
    assert right_to_dual(RightObject(m)) == DualObject(m)
    assert left_to_right(LeftObject(m)) == RightObject(m)
    assert right_to_left(RightObject(m)) == LeftObject(m)


def test_wrong_input_types(r3):
    f = identity(r3["X"], LeftMorphism)
    with pytest.raises(TypeError):
        fh_to_dual(f)
    with pytest.raises(TypeError):
        right_to_dual(f)
    with pytest.raises(TypeError):
        left_to_fh(identity(r3["X"], FHMorphism))


def test_restriction_example(r3):
    t = np.array([[0, 1.0, 0], [0, 0, 0], [0, 0, 0]])
    f = make_fh_morphism(r3["X"], t, r3["Y"])
    # In the canonical bases, T|_X : X -> Y is the 1x1 matrix [1].
    np.testing.assert_allclose(np.abs(f.restricted()), [[1.0]])
    d = fh_to_dual(f)
    np.testing.assert_allclose(d.d, t.T)
    assert same_morphism(dual_to_fh(d), f)


def test_dual_morphism_rejects_bad_carrier(r3):
    with pytest.raises(DomainError):
        DualMorphism(r3["X"], np.eye(3), r3["Y"])


def test_functor_registry():
    assert set(FUNCTORS) == {"L-to-FH", "FH-to-L", "FH-to-dual", "R-to-dual", "L-to-R"}
    assert FUNCTORS["FH-to-dual"].conjugate_linear
    assert FUNCTORS["L-to-R"].conjugate_linear
    assert not FUNCTORS["R-to-dual"].conjugate_linear


@settings(max_examples=60, deadline=None)
@given(seeds, fields)
def test_left_fh_isomorphism(seed, field):
    rng, f, g, h = chain(seed, field, LeftMorphism)
    assert same_morphism(fh_to_left(left_to_fh(f)), f)
    ff = left_to_fh(f)
    assert same_morphism(left_to_fh(fh_to_left(ff)), ff)
    assert same_morphism(left_to_fh(compose(f, g)), compose(left_to_fh(f), left_to_fh(g)))
    assert same_morphism(left_to_fh(identity(f.src)), identity(f.src, FHMorphism))
    k = random_scalar(rng, field)
    assert same_morphism(left_to_fh(hom_add(f, h)), hom_add(left_to_fh(f), left_to_fh(h)))
    assert same_morphism(left_to_fh(hom_scale(k, f)), hom_scale(k, left_to_fh(f)))
    # Norm of the restriction in orthonormal coordinates is the hom-set norm.
    assert abs(operator_norm(ff.restricted()) - hom_norm(f)) <= 1e-8


@settings(max_examples=60, deadline=None)
@given(seeds, fields)
def test_fh_dual_is_conjugate_linear_isometry(seed, field):
    rng, f, g, h = chain(seed, field, FHMorphism)
    d = fh_to_dual(f)
    DualMorphism(d.src, d.d, d.dst)  # passes validation
    assert same_morphism(dual_to_fh(d), f)
    assert same_dual(fh_to_dual(compose(f, g)), dual_compose(d, fh_to_dual(g)))
    assert same_dual(fh_to_dual(identity(f.src, FHMorphism)), dual_identity(f.src))
    assert same_dual(fh_to_dual(hom_add(f, h)), dual_add(d, fh_to_dual(h)))
    k = random_scalar(rng, field)
    assert same_dual(fh_to_dual(hom_scale(k, f)), dual_scale(np.conj(k), d))
    assert abs(dual_norm(d) - hom_norm(f)) <= 1e-8


@settings(max_examples=60, deadline=None)
@given(seeds, fields)
def test_right_dual_is_linear_and_square_commutes(seed, field):
    rng, f, g, h = chain(seed, field, RightMorphism)
    d = right_to_dual(f)
    assert same_morphism(dual_to_right(d), f)
    assert same_dual(right_to_dual(compose(f, g)), dual_compose(d, right_to_dual(g)))
    k = random_scalar(rng, field)
    assert same_dual(right_to_dual(hom_scale(k, f)), dual_scale(k, d))
    assert abs(dual_norm(d) - hom_norm(f)) <= 1e-8
    left = random_morphism(rng, 5, field, LeftMorphism)
    via_right = right_to_dual(left_to_right(left))
    via_fh = fh_to_dual(left_to_fh(left))
    assert same_dual(via_right, via_fh)


@settings(max_examples=60, deadline=None)
@given(seeds, fields)
def test_left_right_is_conjugate_linear_isometry(seed, field):
    rng, f, g, h = chain(seed, field, LeftMorphism)
    r = left_to_right(f)
    RightMorphism(r.src, r.t, r.dst)  # passes validation
    assert same_morphism(right_to_left(r), f)
    assert same_morphism(left_to_right(compose(f, g)), compose(r, left_to_right(g)))
    assert same_morphism(left_to_right(hom_add(f, h)), hom_add(r, left_to_right(h)))
    k = random_scalar(rng, field)
    assert same_morphism(left_to_right(hom_scale(k, f)), hom_scale(np.conj(k), r))
    assert abs(hom_norm(r) - hom_norm(f)) <= 1e-8


def test_conjugate_linearity_is_visible_over_complex():
    x, y = coordinate_subspace(3, [0], "complex"), coordinate_subspace(3, [1], "complex")
    t = np.zeros((3, 3), dtype=complex)
    t[0, 1] = 1.0
    f = make_fh_morphism(x, t, y)
    d = fh_to_dual(hom_scale(1j, f))
    assert residual(d.d, -1j * fh_to_dual(f).d) <= 1e-12
    assert residual(d.d, 1j * fh_to_dual(f).d) > 1
