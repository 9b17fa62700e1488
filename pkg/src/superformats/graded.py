"""Gradings given by diagonal involutions, and the graded matrix operations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactmat import Matrix, Scalar, diag_band


@dataclass(frozen=True)
class Format:
    """The diagonal of the parity involution; +1 marks an even basis vector."""

    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if not signs:
            raise ValueError("a format needs at least one basis vector")
        if any(s not in (1, -1) for s in signs):
            raise ValueError(f"format signs must be +1 or -1, got {signs}")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def block(cls, n_even: int, n_odd: int) -> "Format":
        return cls((1,) * n_even + (-1,) * n_odd)

    @classmethod
    def alternating(cls, p: int, first: int = 1) -> "Format":
        """Strictly alternating signs starting with ``first``."""
        return cls(tuple(first * (-1) ** t for t in range(p)))

    @classmethod
    def parse(cls, text: str) -> "Format":
        """Accept ``"++--"``, ``"+,+,-"`` or ``"1,-1,1"``."""
        text = text.replace(" ", "")
        if set(text) <= {"+", "-"}:
            return cls(tuple(1 if c == "+" else -1 for c in text))
        return cls(tuple(int(s) for s in text.split(",")))

    @property
    def size(self) -> int:
        return len(self.signs)

    def parity(self, i: int) -> int:
        return parity(self, i)

    def involution(self) -> Matrix:
        return diag_band(0, list(self.signs), self.size)

    @property
    def even_dim(self) -> int:
        return self.signs.count(1)

    @property
    def odd_dim(self) -> int:
        return self.signs.count(-1)

    def to_json(self) -> dict:
        return {"signs": list(self.signs)}

    @classmethod
    def from_json(cls, obj: dict) -> "Format":
        return cls(tuple(obj["signs"]))

    def __str__(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)


def parity(fmt: Format, i: int) -> int:
    """Parity of the i-th basis vector (1-based)."""
    if not 1 <= i <= fmt.size:
        raise IndexError(f"index {i} outside 1..{fmt.size}")
    return 0 if fmt.signs[i - 1] == 1 else 1


@dataclass(frozen=True)
class GradedMatrix:
    mat: Matrix
    fmt: Format

    def __post_init__(self):
        if self.mat.size != self.fmt.size:
            raise ValueError(f"matrix size {self.mat.size} does not match "
                             f"format size {self.fmt.size}")

    @property
    def size(self) -> int:
        return self.mat.size

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.mat[ij]

    def _check(self, other: "GradedMatrix") -> None:
        if not isinstance(other, GradedMatrix):
            raise TypeError(f"expected GradedMatrix, got {type(other).__name__}")
        if other.fmt != self.fmt:
            raise ValueError("graded matrices live in different formats")

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check(other)
        return GradedMatrix(self.mat + other.mat, self.fmt)

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check(other)
        return GradedMatrix(self.mat - other.mat, self.fmt)

    def __neg__(self) -> "GradedMatrix":
        return GradedMatrix(-self.mat, self.fmt)

    def scale(self, c: Scalar) -> "GradedMatrix":
        return GradedMatrix(self.mat.scale(c), self.fmt)

    def __mul__(self, c):
        if isinstance(c, (GradedMatrix, Matrix)):
            raise TypeError("use @ for the matrix product")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check(other)
        return GradedMatrix(self.mat @ other.mat, self.fmt)

    def is_zero(self) -> bool:
        return self.mat.is_zero()

    @property
    def degree(self) -> int | None:
        return degree(self)

    def to_json(self) -> dict:
        return {"format": self.fmt.to_json(), "matrix": self.mat.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "GradedMatrix":
        return cls(Matrix.from_json(obj["matrix"]), Format.from_json(obj["format"]))


def entry_degree(fmt: Format, i: int, j: int) -> int:
    return (parity(fmt, i) + parity(fmt, j)) % 2


def degree(m: GradedMatrix) -> int | None:
    """0 or 1 for homogeneous matrices, None for mixed ones.

    The zero matrix counts as even.
    """
    s = m.fmt.signs
    seen = set()
    for i, row in enumerate(m.mat.rows()):
        for j, x in enumerate(row):
            if x:
                seen.add(0 if s[i] == s[j] else 1)
                if len(seen) == 2:
                    return None
    return seen.pop() if seen else 0


def ad_epsilon(m: GradedMatrix) -> GradedMatrix:
    """Conjugation by the involution: flips the sign of every odd entry."""
    s = m.fmt.signs
    rows = [[x if s[i] == s[j] else -x for j, x in enumerate(row)]
            for i, row in enumerate(m.mat.rows())]
    return GradedMatrix(Matrix(rows), m.fmt)


def homogeneous_parts(m: GradedMatrix) -> tuple[GradedMatrix, GradedMatrix]:
    s = m.fmt.signs
    z = Fraction(0)
    even = [[x if s[i] == s[j] else z for j, x in enumerate(row)]
            for i, row in enumerate(m.mat.rows())]
    odd = [[z if s[i] == s[j] else x for j, x in enumerate(row)]
           for i, row in enumerate(m.mat.rows())]
    return GradedMatrix(Matrix(even), m.fmt), GradedMatrix(Matrix(odd), m.fmt)


def supertrace(m: GradedMatrix) -> Fraction:
    rows = m.mat.rows()
    return sum((s * rows[i][i] for i, s in enumerate(m.fmt.signs)), Fraction(0))


def graded_commutator(m: GradedMatrix, n: GradedMatrix) -> GradedMatrix:
    """[M, N} = MN - (-1)^{deg M deg N} NM, extended bilinearly."""
    m._check(n)
    dm, dn = degree(m), degree(n)
    if dm is not None and dn is not None:
        if dm and dn:
            return m @ n + n @ m
        return m @ n - n @ m
    out = GradedMatrix(Matrix.zeros(m.size), m.fmt)
    for a in homogeneous_parts(m):
        if a.is_zero():
            continue
        for b in homogeneous_parts(n):
            if not b.is_zero():
                out = out + graded_commutator(a, b)
    return out


def supertranspose(m: GradedMatrix) -> GradedMatrix:
    """(M^sT)_{ij} = (-1)^{a(i)(a(j)+1)} M_{ji}, with a the label parity."""
    a = [0 if s == 1 else 1 for s in m.fmt.signs]
    rows = m.mat.rows()
    p = m.size
    out = [[-rows[j][i] if a[i] and not a[j] else rows[j][i] for j in range(p)]
           for i in range(p)]
    return GradedMatrix(Matrix(out), m.fmt)


def supertranspose_dual(m: GradedMatrix) -> GradedMatrix:
    """The dual convention (-1)^{a(j)(a(i)+1)} M_{ji}; equals Ad_eps of supertranspose."""
    a = [0 if s == 1 else 1 for s in m.fmt.signs]
    rows = m.mat.rows()
    p = m.size
    out = [[-rows[j][i] if a[j] and not a[i] else rows[j][i] for j in range(p)]
           for i in range(p)]
    return GradedMatrix(Matrix(out), m.fmt)


def graded(mat: Matrix, fmt: Format | Sequence[int]) -> GradedMatrix:
    if not isinstance(fmt, Format):
        fmt = Format(tuple(fmt))
    return GradedMatrix(mat, fmt)
