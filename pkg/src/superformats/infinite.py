"""Finite windows of sl_inf and osp_inf, with integer row and column labels."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebras import ChevalleyBasis
from .exactmat import Matrix, format_rational
from .graded import Format, GradedMatrix

SL_INF = "sl_inf"
OSP_INF = "osp_inf"


def window_format(N: int) -> Format:
    """Label l has parity l mod 2, so label 0 is even."""
    return Format(tuple((-1) ** (l % 2) for l in range(-N, N + 1)))


@dataclass(frozen=True)
class WindowedMatrix:
    """Matrix with labels -N..N; label l sits at 1-based position l + N + 1."""

    window: int
    mat: Matrix

    def __post_init__(self):
        if self.window < 0:
            raise ValueError("window must be non-negative")
        if self.mat.size != 2 * self.window + 1:
            raise ValueError(f"window {self.window} needs a matrix of size {2 * self.window + 1}")

    @classmethod
    def from_labels(cls, N: int, entries: dict[tuple[int, int], object]) -> "WindowedMatrix":
        for i, j in entries:
            _check_label(i, N)
            _check_label(j, N)
        return cls(N, Matrix.from_entries(2 * N + 1,
                                          {(i + N + 1, j + N + 1): v for (i, j), v in entries.items()}))

    @classmethod
    def zeros(cls, N: int) -> "WindowedMatrix":
        return cls(N, Matrix.zeros(2 * N + 1))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        _check_label(i, self.window)
        _check_label(j, self.window)
        return self.mat[i + self.window + 1, j + self.window + 1]

    def support(self) -> list[tuple[int, int]]:
        N = self.window
        return [(i - N - 1, j - N - 1) for i, j in self.mat.support()]

    def labels_touched(self) -> set[int]:
        return {l for ij in self.support() for l in ij}

    def graded(self) -> GradedMatrix:
        return GradedMatrix(self.mat, window_format(self.window))

    def __add__(self, other: "WindowedMatrix") -> "WindowedMatrix":
        return WindowedMatrix(self.window, self.mat + other.mat)

    def __sub__(self, other: "WindowedMatrix") -> "WindowedMatrix":
        return WindowedMatrix(self.window, self.mat - other.mat)

    def __neg__(self) -> "WindowedMatrix":
        return WindowedMatrix(self.window, -self.mat)

    def __matmul__(self, other: "WindowedMatrix") -> "WindowedMatrix":
        return WindowedMatrix(self.window, self.mat @ other.mat)

    def to_json(self) -> dict:
        return {"window": self.window,
                "entries": [{"row": i, "col": j, "value": format_rational(self[i, j])}
                            for i, j in self.support()]}

    @classmethod
    def from_json(cls, obj: dict) -> "WindowedMatrix":
        return cls.from_labels(obj["window"], {(e["row"], e["col"]): Fraction(e["value"])
                                               for e in obj["entries"]})


def _check_label(i: int, N: int) -> None:
    if not -N <= i <= N:
        raise IndexError(f"label {i} outside the window -{N}..{N}")


def ceil_half(d: int) -> int:
    """Smallest integer >= d/2."""
    return -((-d) // 2)


def osp_inf_element(i: int, j: int, N: int) -> WindowedMatrix:
    """E_{i,j} - (-1)^{ceil((i-j)/2)} E_{-j,-i}.

    When (i, j) = (-j, -i) the two terms coincide: the result is 2 E_{i,-i}
    for odd i and zero for even i.
    """
    for l in (i, j):
        _check_label(l, N)
    s = (-1) ** (ceil_half(i - j) % 2)
    entries: dict[tuple[int, int], int] = {(i, j): 1}
    entries[(-j, -i)] = entries.get((-j, -i), 0) - s
    return WindowedMatrix.from_labels(N, entries)


def inf_chevalley(kind: str, i: int, N: int) -> tuple[WindowedMatrix, WindowedMatrix, WindowedMatrix]:
    """(e_i, f_i, h_i) of sl_inf (any integer i) or osp_inf (i >= 0) in a window."""
    if kind == SL_INF:
        labels = (i, i + 1)
        s = (-1) ** ((i + 1) % 2)
        e = {(i, i + 1): s}
        f = {(i + 1, i): 1}
        h = {(i, i): s, (i + 1, i + 1): s}
    elif kind == OSP_INF:
        if i < 0:
            raise ValueError("osp_inf generators are indexed by i >= 0")
        labels = (i + 1, -i - 1)
        e = {(i, i + 1): 1, (-i - 1, -i): -1}
        f = {(i + 1, i): 1, (-i, -i - 1): 1}
        h: dict[tuple[int, int], int] = {}
        for (a, c) in ((i + 1, 1), (i, 1), (-i, -1), (-i - 1, -1)):
            h[(a, a)] = h.get((a, a), 0) + c
    else:
        raise ValueError(f"kind must be {SL_INF!r} or {OSP_INF!r}")
    if any(abs(l) > N for l in labels) or abs(i) > N:
        raise ValueError(f"window {N} is too small for generator {i} of {kind}")
    return (WindowedMatrix.from_labels(N, e), WindowedMatrix.from_labels(N, f),
            WindowedMatrix.from_labels(N, {k: v for k, v in h.items() if v}))


def interior_indices(kind: str, N: int) -> list[int]:
    """Generator indices whose support stays inside labels -N+1..N-1."""
    if kind == SL_INF:
        return list(range(-N + 1, N - 1))
    if kind == OSP_INF:
        return list(range(0, N - 1))
    raise ValueError(f"unknown kind {kind!r}")


def inf_basis(kind: str, indices: list[int], N: int) -> ChevalleyBasis:
    triples = [inf_chevalley(kind, i, N) for i in indices]
    for i, t in zip(indices, triples):
        touched = set().union(*(x.labels_touched() for x in t))
        if touched and max(abs(l) for l in touched) > N - 1:
            raise ValueError(f"generator {i} touches the window boundary")
    return ChevalleyBasis(None,
                          tuple(t[2].graded() for t in triples),
                          tuple(t[0].graded() for t in triples),
                          tuple(t[1].graded() for t in triples))


def sl_inf_cartan(indices: list[int]) -> Matrix:
    """a_{ij} = (-1)^{min(i,j)+1} for |i-j| = 1, zero otherwise."""
    return Matrix([[(-1) ** ((min(a, b) + 1) % 2) if abs(a - b) == 1 else 0
                    for b in indices] for a in indices])


def osp_inf_symmetric(w: WindowedMatrix) -> bool:
    """M_{ij} = -(-1)^{ceil((i-j)/2)} M_{-j,-i} at every label pair."""
    N = w.window
    for i in range(-N, N + 1):
        for j in range(-N, N + 1):
            s = (-1) ** (ceil_half(i - j) % 2)
            if w[i, j] != -s * w[-j, -i]:
                return False
    return True

