"""JSON file forms for matrices, subspaces, morphisms and cones.

Matrix file::

    {"field": "real" | "complex", "rows": r, "cols": c,
     "entries": [[re, im], ...]}          # row-major, r * c pairs

A subspace file is a matrix file whose columns span the subspace; it is
canonicalised on load.  A morphism file is
``{"kind": ..., "src": subspace, "t": matrix, "dst": subspace}`` and a cone
file is ``{"flavor": ..., "gen": matrix}``.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .categories import KINDS, Morphism
from .cones import Cone, Flavor
from .errors import FieldError, ShapeError
from .functors import DualMorphism
from .linalg import Field, field_of
from .subspace import Subspace, span


def matrix_to_json(a: np.ndarray) -> dict:
    a = np.asarray(a)
    field = field_of(a)
    flat = a.reshape(-1)
    entries = [[float(np.real(z)), float(np.imag(z))] for z in flat]
    return {"field": field.value, "rows": a.shape[0], "cols": a.shape[1], "entries": entries}


def matrix_from_json(obj: dict) -> np.ndarray:
    try:
        field = Field(obj["field"])
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = obj["entries"]
    except (KeyError, ValueError, TypeError) as exc:
        raise ShapeError(f"malformed matrix file: {exc}") from exc
    if rows < 1 or cols < 0 or len(entries) != rows * cols:
        raise ShapeError(f"matrix file declares {rows}x{cols} but has {len(entries)} entries")
    pairs = [(e, 0.0) if isinstance(e, (int, float)) else tuple(e) for e in entries]
    if field is Field.REAL:
        if any(im != 0 for _, im in pairs):
            raise FieldError("real matrix file with nonzero imaginary parts")
        data = np.array([re for re, _ in pairs], dtype=np.float64)
    else:
        data = np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)
    return data.reshape(rows, cols)


def subspace_to_json(m: Subspace) -> dict:
    return matrix_to_json(m.basis)


def subspace_from_json(obj: dict) -> Subspace:
    return span(matrix_from_json(obj))


def morphism_to_json(f) -> dict:
    return {
        "kind": f.kind,
        "src": subspace_to_json(f.src),
        "t": matrix_to_json(f.t),
        "dst": subspace_to_json(f.dst),
    }


def morphism_from_json(obj: dict, check: bool = True):
    kind = obj.get("kind", "left")
    src = subspace_from_json(obj["src"])
    dst = subspace_from_json(obj["dst"])
    t = matrix_from_json(obj["t"])
    if kind == "dual":
        return DualMorphism(src, t, dst, check=check)
    if kind not in KINDS:
        raise ShapeError(f"unknown morphism kind {kind!r}")
    return KINDS[kind](src, t, dst, check=check)


def cone_to_json(c: Cone) -> dict:
    return {"flavor": c.flavor.value, "gen": matrix_to_json(c.gen)}


def cone_from_json(obj: dict) -> Cone:
    return Cone(matrix_from_json(obj["gen"]), Flavor(obj.get("flavor", "left")))


def to_json(x) -> dict:
    if isinstance(x, (Morphism, DualMorphism)):
        return morphism_to_json(x)
    if isinstance(x, Cone):
        return cone_to_json(x)
    if isinstance(x, Subspace):
        return subspace_to_json(x)
    return matrix_to_json(x)


def load(path: str | Path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
