import numpy as np
import pytest

from opcat.linalg import Field
from opcat.subspace import coordinate_subspace

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture(params=[Field.REAL, Field.COMPLEX], ids=["real", "complex"])
def field(request):
    return request.param


@pytest.fixture
def r3():
    """Named coordinate subspaces of R^3."""
    return {
        "X": coordinate_subspace(3, [0]),
        "Y": coordinate_subspace(3, [1]),
        "Z": coordinate_subspace(3, [2]),
        "XY": coordinate_subspace(3, [0, 1]),
        "YZ": coordinate_subspace(3, [1, 2]),
        "H": coordinate_subspace(3, [0, 1, 2]),
        "0": coordinate_subspace(3, []),
    }


def naive_matmul(a, b):
    """Triple-loop product, independent of numpy's matmul."""
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            out[i][j] = sum(a[i][k] * b[k][j] for k in range(inner))
    return np.array(out)
