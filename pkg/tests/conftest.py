from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from superformats.exactmat import Matrix
from superformats.graded import Format, GradedMatrix

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Collects one PASS/FAIL line per acceptance criterion."""
    def _record(label: str, ok: bool) -> bool:
        _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}")
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def naive_product(a: Matrix, b: Matrix) -> Matrix:
    """Dense triple loop; independent of the library's sparse product."""
    p = a.size
    return Matrix([[sum((a[i, k] * b[k, j] for k in range(1, p + 1)), Fraction(0))
                    for j in range(1, p + 1)] for i in range(1, p + 1)])


def naive_graded_bracket(m: GradedMatrix, n: GradedMatrix) -> Matrix:
    """Entrywise index formula sum_j M_ij N_jk - (-1)^{(a_i+a_j)(a_j+a_k)} N_ij M_jk."""
    a = [0 if s == 1 else 1 for s in m.fmt.signs]
    p = m.size
    M, N = m.mat.rows(), n.mat.rows()
    out = [[Fraction(0)] * p for _ in range(p)]
    for i in range(p):
        for j in range(p):
            x, y = M[i][j], N[i][j]
            if not (x or y):
                continue
            for k in range(p):
                sign = (-1) ** ((a[i] + a[j]) * (a[j] + a[k]))
                out[i][k] += x * N[j][k] - sign * y * M[j][k]
    return Matrix(out)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def formats(draw, min_size=1, max_size=7):
    p = draw(st.integers(min_size, max_size))
    return Format(tuple(draw(st.lists(st.sampled_from([1, -1]), min_size=p, max_size=p))))


@st.composite
def matrices(draw, p):
    return Matrix([[draw(rationals) for _ in range(p)] for _ in range(p)])


@st.composite
def graded_pairs(draw, max_size=6):
    fmt = draw(formats(max_size=max_size))
    return (GradedMatrix(draw(matrices(fmt.size)), fmt),
            GradedMatrix(draw(matrices(fmt.size)), fmt))
