"""Normal categories of principal ideals of finite-rank operators on K^n."""

from .categories import (
    FHMorphism,
    LeftMorphism,
    RightMorphism,
    compose,
    normal_factorize,
)
from .cones import Cone, Flavor, cone_product
from .linalg import DEFAULT_TOL, Field, Tolerances
from .subspace import Subspace, span

__all__ = [
    "Cone",
    "DEFAULT_TOL",
    "FHMorphism",
    "Field",
    "Flavor",
    "LeftMorphism",
    "RightMorphism",
    "Subspace",
    "Tolerances",
    "compose",
    "cone_product",
    "normal_factorize",
    "span",
]
