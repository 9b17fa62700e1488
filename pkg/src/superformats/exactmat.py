"""Exact rational scalars and dense square matrices.

All indices in the public API are 1-based.  Storage is a tuple of row
tuples of :class:`fractions.Fraction`; matrices are immutable and hashable.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-1/2"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Matrix:
    """Square matrix of exact rationals with 1-based indexing."""

    __slots__ = ("_rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        p = len(data)
        if p == 0:
            raise ValueError("matrix size must be positive")
        if any(len(r) != p for r in data):
            raise ValueError("matrix must be square")
        self._rows = data
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple) -> "Matrix":
        obj = cls.__new__(cls)
        obj._rows = rows
        obj._hash = None
        return obj

    @classmethod
    def zeros(cls, p: int) -> "Matrix":
        _check_size(p)
        z = Fraction(0)
        return cls._raw(tuple((z,) * p for _ in range(p)))

    @classmethod
    def identity(cls, p: int) -> "Matrix":
        return diag_band(0, [1] * p, p)

    @classmethod
    def from_entries(cls, p: int, entries: dict) -> "Matrix":
        """Build from a ``{(i, j): value}`` map with 1-based keys."""
        _check_size(p)
        rows = [[Fraction(0)] * p for _ in range(p)]
        for (i, j), v in entries.items():
            _check_index(i, p)
            _check_index(j, p)
            rows[i - 1][j - 1] = as_rational(v)
        return cls._raw(tuple(tuple(r) for r in rows))

    # -- access -------------------------------------------------------
    @property
    def size(self) -> int:
        return len(self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        p = self.size
        _check_index(i, p)
        _check_index(j, p)
        return self._rows[i - 1][j - 1]

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def support(self) -> list[tuple[int, int]]:
        """1-based positions of the nonzero entries, row-major."""
        return [(i + 1, j + 1) for i, row in enumerate(self._rows)
                for j, x in enumerate(row) if x]

    def band(self, k: int) -> list[Fraction]:
        """Entries of the k-th diagonal, top to bottom."""
        p = self.size
        if abs(k) >= p:
            raise ValueError(f"diagonal index {k} out of range for size {p}")
        if k >= 0:
            return [self._rows[t][t + k] for t in range(p - k)]
        return [self._rows[t - k][t] for t in range(p + k)]

    def is_zero(self) -> bool:
        return not any(x for row in self._rows for x in row)

    def is_diagonal(self) -> bool:
        return all(not x for i, row in enumerate(self._rows)
                   for j, x in enumerate(row) if i != j)

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(self.size)), Fraction(0))

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self._rows)))

    def antitranspose(self) -> "Matrix":
        """Reflection across the antidiagonal: (i, j) -> (p+1-j, p+1-i)."""
        p = self.size
        return Matrix._raw(tuple(
            tuple(self._rows[p - 1 - j][p - 1 - i] for j in range(p))
            for i in range(p)))

    # -- arithmetic ---------------------------------------------------
    def _same_size(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.size != self.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_size(other)
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s))
                                 for r, s in zip(self._rows, other._rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_size(other)
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s))
                                 for r, s in zip(self._rows, other._rows)))

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._rows))

    def scale(self, c: Scalar) -> "Matrix":
        c = as_rational(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self._rows))

    def __mul__(self, c):
        if isinstance(c, Matrix):
            raise TypeError("use @ for the matrix product")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matrix_product(self, other)

    def __pow__(self, k: int) -> "Matrix":
        return power(self, k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        terms = [f"{format_rational(self[i, j])}*E{i},{j}" for i, j in self.support()]
        return f"Matrix(p={self.size}: {' + '.join(terms) or '0'})"

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; raises ValueError when singular."""
        p = self.size
        aug = [list(r) + [Fraction(int(i == j)) for j in range(p)]
               for i, r in enumerate(self._rows)]
        red, pivots = rref(aug)
        if pivots[:p] != list(range(p)):
            raise ValueError("matrix is singular")
        return Matrix._raw(tuple(tuple(r[p:]) for r in red[:p]))

    # -- serialization ------------------------------------------------
    def to_json(self) -> dict:
        return {"size": self.size,
                "entries": [[format_rational(x) for x in r] for r in self._rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "Matrix":
        m = cls(obj["entries"])
        if "size" in obj and obj["size"] != m.size:
            raise ValueError("declared size does not match entries")
        return m

    def to_text(self) -> str:
        cells = [[format_rational(x) for x in r] for r in self._rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    @classmethod
    def from_text(cls, text: str) -> "Matrix":
        return cls(line.split() for line in text.strip().splitlines() if line.strip())

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _check_size(p: int) -> None:
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"matrix size must be a positive integer, got {p!r}")


def _check_index(i: int, p: int) -> None:
    if not 1 <= i <= p:
        raise IndexError(f"index {i} outside 1..{p}")


def unit_entry(i: int, j: int, p: int) -> Matrix:
    """The matrix unit E_{ij} of size p."""
    return Matrix.from_entries(p, {(i, j): 1})


def diag_band(k: int, entries: Sequence, p: int) -> Matrix:
    """Matrix whose only nonzero diagonal is the k-th, filled top to bottom."""
    _check_size(p)
    if abs(k) >= p:
        raise ValueError(f"diagonal index {k} out of range for size {p}")
    if len(entries) != p - abs(k):
        raise ValueError(f"diagonal {k} of a size-{p} matrix needs {p - abs(k)} entries,"
                         f" got {len(entries)}")
    rows = [[Fraction(0)] * p for _ in range(p)]
    for t, a in enumerate(entries):
        if k >= 0:
            rows[t][t + k] = as_rational(a)
        else:
            rows[t - k][t] = as_rational(a)
    return Matrix._raw(tuple(tuple(r) for r in rows))


def adiag_build(entries: Sequence, p: int) -> Matrix:
    """Antidiagonal matrix; the t-th entry sits at row p+1-t, column t."""
    _check_size(p)
    if len(entries) != p:
        raise ValueError(f"antidiagonal of a size-{p} matrix needs {p} entries")
    return Matrix.from_entries(p, {(p + 1 - t, t): a for t, a in enumerate(entries, 1)})


def matrix_product(a: Matrix, b: Matrix) -> Matrix:
    a._same_size(b)
    p = a.size
    b_rows = [[(j, x) for j, x in enumerate(row) if x] for row in b._rows]
    zero = Fraction(0)
    out = []
    for row in a._rows:
        acc = [zero] * p
        for k, x in enumerate(row):
            if x:
                for j, y in b_rows[k]:
                    acc[j] += x * y
        out.append(tuple(acc))
    return Matrix._raw(tuple(out))


def power(m: Matrix, k: int) -> Matrix:
    if k < 0:
        raise ValueError("negative powers are not supported")
    result = Matrix.identity(m.size)
    base = m
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def linear_combination(coeffs: Sequence, mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise ValueError("empty combination")
    out = Matrix.zeros(mats[0].size)
    for c, m in zip(coeffs, mats, strict=True):
        if c:
            out = out + m.scale(c)
    return out


# -- rectangular linear algebra over Q ---------------------------------

def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a rectangular matrix.

    Returns the reduced rows and the 0-based pivot columns.
    """
    m = [[as_rational(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        if lead != 1:
            m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} for the rectangular system with the given rows.

    Each basis vector has a 1 in its own free column.
    """
    live = [r for r in rows if any(r)]
    if any(len(r) != ncols for r in live):
        raise ValueError("row length does not match column count")
    red, pivots = rref(live) if live else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        basis.append(v)
    return basis


def rank(rows: Sequence[Sequence]) -> int:
    live = [r for r in rows if any(r)]
    return len(rref(live)[1]) if live else 0
