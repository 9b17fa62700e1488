"""Concrete superalgebras: Chevalley bases, Cartan data, metrics, membership."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exactmat import Matrix, adiag_build, diag_band, nullspace, rref, unit_entry
from .graded import (Format, GradedMatrix, degree, graded_commutator, supertrace,
                     supertranspose)

FAMILIES = ("gl", "sl", "osp_minus", "osp_plus")
FORMATS = ("block", "diagonal")


class UnsupportedAlgebra(ValueError):
    pass


class ConsistencyError(AssertionError):
    """Two independent membership predicates disagreed."""


@dataclass(frozen=True)
class AlgebraId:
    """gl/sl(n+1|n) with parameter n, or osp(2m-+1|2m) with parameter m."""

    family: str
    parameter: int
    format: str = "diagonal"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedAlgebra(f"unknown family {self.family!r}")
        if self.format not in FORMATS:
            raise UnsupportedAlgebra(f"unknown format {self.format!r}")
        if not isinstance(self.parameter, int) or self.parameter < 1:
            raise ValueError(f"parameter must be a positive integer, got {self.parameter!r}")

    @property
    def size(self) -> int:
        k = self.parameter
        return {"gl": 2 * k + 1, "sl": 2 * k + 1,
                "osp_minus": 4 * k - 1, "osp_plus": 4 * k + 1}[self.family]

    @property
    def rank(self) -> int:
        k = self.parameter
        return {"gl": 2 * k + 1, "sl": 2 * k,
                "osp_minus": 2 * k - 1, "osp_plus": 2 * k}[self.family]

    @property
    def block_dims(self) -> tuple[int, int]:
        k = self.parameter
        return {"gl": (k + 1, k), "sl": (k + 1, k),
                "osp_minus": (2 * k - 1, 2 * k), "osp_plus": (2 * k + 1, 2 * k)}[self.family]

    @property
    def is_osp(self) -> bool:
        return self.family.startswith("osp")

    @property
    def grading(self) -> Format:
        if self.format == "block":
            return Format.block(*self.block_dims)
        # osp(2m-1|2m) in diagonal format has eps_ii = (-1)^i
        first = -1 if self.family == "osp_minus" else 1
        return Format.alternating(self.size, first)

    def with_format(self, fmt: str) -> "AlgebraId":
        return AlgebraId(self.family, self.parameter, fmt)

    def name(self) -> str:
        k = self.parameter
        return {"gl": f"gl({k + 1}|{k})", "sl": f"sl({k + 1}|{k})",
                "osp_minus": f"osp({2 * k - 1}|{2 * k})",
                "osp_plus": f"osp({2 * k + 1}|{2 * k})"}[self.family] + f" [{self.format}]"

    def to_json(self) -> dict:
        key = "m" if self.is_osp else "n"
        return {"family": self.family, key: self.parameter, "format": self.format}

    @classmethod
    def from_json(cls, obj: dict) -> "AlgebraId":
        param = obj.get("m", obj.get("n"))
        return cls(obj["family"], param, obj.get("format", "diagonal"))


@dataclass(frozen=True)
class ChevalleyBasis:
    algebra: AlgebraId | None
    h: tuple[GradedMatrix, ...]
    e: tuple[GradedMatrix, ...]
    f: tuple[GradedMatrix, ...]

    def __post_init__(self):
        if not (len(self.h) == len(self.e) == len(self.f)):
            raise ValueError("h, e, f lists must have equal length")

    @property
    def rank(self) -> int:
        return len(self.h)

    @property
    def fmt(self) -> Format:
        return self.h[0].fmt

    def generators(self) -> list[GradedMatrix]:
        return [*self.h, *self.e, *self.f]

    def to_json(self) -> dict:
        return {"algebra": self.algebra.to_json() if self.algebra else None,
                "h": [x.to_json() for x in self.h],
                "e": [x.to_json() for x in self.e],
                "f": [x.to_json() for x in self.f]}

    @classmethod
    def from_json(cls, obj: dict) -> "ChevalleyBasis":
        alg = AlgebraId.from_json(obj["algebra"]) if obj.get("algebra") else None
        return cls(alg, *(tuple(GradedMatrix.from_json(x) for x in obj[k]) for k in "hef"))


@dataclass(frozen=True)
class CartanData:
    a: Matrix
    a_inv: Matrix

    def __post_init__(self):
        if self.a @ self.a_inv != Matrix.identity(self.a.size):
            raise ValueError("a_inv is not the inverse of a")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    residual: Matrix | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.residual is not None:
            out["residual"] = self.residual.to_json()
        return out


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __len__(self) -> int:
        return len(self.checks)

    def __add__(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.checks + other.checks)

    def to_json(self) -> dict:
        return {"passed": self.passed, "count": len(self.checks),
                "failures": len(self.failures()),
                "checks": [c.to_json() for c in self.checks]}


def check_equal(name: str, got: GradedMatrix | Matrix, want: GradedMatrix | Matrix) -> Check:
    g = got.mat if isinstance(got, GradedMatrix) else got
    w = want.mat if isinstance(want, GradedMatrix) else want
    if g == w:
        return Check(name, True)
    return Check(name, False, g - w)


# -- Chevalley bases ---------------------------------------------------

def _combo(p: int, terms: Iterable[tuple[int, int, int]]) -> Matrix:
    entries: dict[tuple[int, int], Fraction] = {}
    for c, i, j in terms:
        entries[(i, j)] = entries.get((i, j), Fraction(0)) + c
    return Matrix.from_entries(p, entries)


def _sl_diagonal(n: int) -> tuple[list, list, list]:
    p = 2 * n + 1
    h, e, f = [], [], []
    for i in range(1, 2 * n + 1):
        s = (-1) ** (i + 1)
        h.append(_combo(p, [(s, i, i), (s, i + 1, i + 1)]))
        e.append(_combo(p, [(s, i, i + 1)]))
        f.append(_combo(p, [(1, i + 1, i)]))
    return h, e, f


def _sl_block(n: int) -> tuple[list, list, list]:
    # e_i = E_{i,i+1}; only e_{n+1} crosses the even/odd boundary
    p = 2 * n + 1
    h, e, f = [], [], []
    for i in range(1, 2 * n + 1):
        s = 1 if i == n + 1 else -1
        h.append(_combo(p, [(1, i, i), (s, i + 1, i + 1)]))
        e.append(unit_entry(i, i + 1, p))
        f.append(unit_entry(i + 1, i, p))
    return h, e, f


def _osp_minus_diagonal(m: int) -> tuple[list, list, list]:
    p = 4 * m - 1
    h, e, f = [], [], []
    for i in range(1, 2 * m):
        s = (-1) ** (i + 1)
        h.append(_combo(p, [(s, 2 * m - i, 2 * m - i), (-s, 2 * m + i, 2 * m + i),
                            (s, 2 * m + 1 - i, 2 * m + 1 - i),
                            (-s, 2 * m - 1 + i, 2 * m - 1 + i)]))
        e.append(_combo(p, [(-s, 2 * m - 1 + i, 2 * m + i), (s, 2 * m - i, 2 * m + 1 - i)]))
        f.append(_combo(p, [(1, 2 * m + i, 2 * m - 1 + i), (1, 2 * m + 1 - i, 2 * m - i)]))
    return h, e, f


def _osp_plus_diagonal(m: int) -> tuple[list, list, list]:
    p = 4 * m + 1
    h, e, f = [], [], []
    for i in range(1, 2 * m + 1):
        s = (-1) ** (i + 1)
        h.append(_combo(p, [(s, 2 * m + 1 - i, 2 * m + 1 - i), (-s, 2 * m + 1 + i, 2 * m + 1 + i),
                            (s, 2 * m + 2 - i, 2 * m + 2 - i), (-s, 2 * m + i, 2 * m + i)]))
        e.append(_combo(p, [(-s, 2 * m + i, 2 * m + 1 + i), (s, 2 * m + 1 - i, 2 * m + 2 - i)]))
        f.append(_combo(p, [(1, 2 * m + 1 + i, 2 * m + i), (1, 2 * m + 2 - i, 2 * m + 1 - i)]))
    return h, e, f


def _osp_minus_block(m: int) -> tuple[list, list, list]:
    p = 4 * m - 1
    r = 2 * m - 1
    h, e, f = [None] * r, [None] * r, [None] * r
    for i in range(1, m + 1):
        t = 2 * i - 2
        e[t] = _combo(p, [(1, m + 1 - i, 4 * m - i), (1, 3 * m - i, m - 1 + i)])
        f[t] = _combo(p, [(1, m - 1 + i, 3 * m - i), (-1, 4 * m - i, m + 1 - i)])
        h[t] = _combo(p, [(1, 3 * m - i, 3 * m - i), (-1, 4 * m - i, 4 * m - i),
                          (-1, m + 1 - i, m + 1 - i), (1, m - 1 + i, m - 1 + i)])
    for i in range(1, m):
        t = 2 * i - 1
        e[t] = _combo(p, [(1, m + i, 3 * m - i), (-1, 4 * m - i, m - i)])
        f[t] = _combo(p, [(-1, m - i, 4 * m - i), (-1, 3 * m - i, m + i)])
        h[t] = _combo(p, [(1, m - i, m - i), (-1, m + i, m + i),
                          (-1, 3 * m - i, 3 * m - i), (1, 4 * m - i, 4 * m - i)])
    return h, e, f


def _osp_plus_block(m: int) -> tuple[list, list, list]:
    p = 4 * m + 1
    r = 2 * m
    h, e, f = [None] * r, [None] * r, [None] * r
    for i in range(1, m + 1):
        a, b = 2 * i - 2, 2 * i - 1
        e[a] = _combo(p, [(1, m + 2 - i, 4 * m + 2 - i), (1, 3 * m + 2 - i, m + i)])
        e[b] = _combo(p, [(1, m + 1 + i, 3 * m + 2 - i), (-1, 4 * m + 2 - i, m + 1 - i)])
        f[a] = _combo(p, [(1, m + i, 3 * m + 2 - i), (-1, 4 * m + 2 - i, m + 2 - i)])
        f[b] = _combo(p, [(-1, m + 1 - i, 4 * m + 2 - i), (-1, 3 * m + 2 - i, m + 1 + i)])
        h[a] = _combo(p, [(1, 3 * m + 2 - i, 3 * m + 2 - i), (-1, 4 * m + 2 - i, 4 * m + 2 - i),
                          (-1, m + 2 - i, m + 2 - i), (1, m + i, m + i)])
        h[b] = _combo(p, [(1, m + 1 - i, m + 1 - i), (-1, m + 1 + i, m + 1 + i),
                          (-1, 3 * m + 2 - i, 3 * m + 2 - i), (1, 4 * m + 2 - i, 4 * m + 2 - i)])
    return h, e, f


_BUILDERS: dict[tuple[str, str], Callable[[int], tuple[list, list, list]]] = {
    ("sl", "diagonal"): _sl_diagonal,
    ("sl", "block"): _sl_block,
    ("osp_minus", "diagonal"): _osp_minus_diagonal,
    ("osp_minus", "block"): _osp_minus_block,
    ("osp_plus", "diagonal"): _osp_plus_diagonal,
    ("osp_plus", "block"): _osp_plus_block,
}


def chevalley_basis(alg: AlgebraId) -> ChevalleyBasis:
    """Closed-form Chevalley generators of ``alg`` in its own format.

    sl in block format uses e_i = E_{i,i+1}, the distinguished root system;
    every other supported case is the fermionic one.
    """
    try:
        build = _BUILDERS[(alg.family, alg.format)]
    except KeyError:
        raise UnsupportedAlgebra(f"no Chevalley basis for {alg.family} in {alg.format} format")
    fmt = alg.grading
    h, e, f = build(alg.parameter)
    wrap = lambda ms: tuple(GradedMatrix(x, fmt) for x in ms)  # noqa: E731
    return ChevalleyBasis(alg, wrap(h), wrap(e), wrap(f))


# -- Cartan matrices -----------------------------------------------------

def _check_rank(family: str, rank: int) -> None:
    ok = {"sl": rank >= 2 and rank % 2 == 0,
          "osp_minus": rank >= 1 and rank % 2 == 1,
          "osp_plus": rank >= 2 and rank % 2 == 0}
    if family not in ok:
        raise UnsupportedAlgebra(f"no closed-form Cartan matrix for family {family!r}")
    if not ok[family]:
        raise ValueError(f"rank {rank} is inconsistent with family {family}")


def cartan_matrix(family: str, rank: int) -> Matrix:
    """Cartan matrix of the all-fermionic simple root system."""
    _check_rank(family, rank)
    if family == "sl":
        alt = [(-1) ** t for t in range(rank - 1)]
        return diag_band(1, alt, rank) + diag_band(-1, alt, rank)
    off = [(-1) ** i for i in range(1, rank)]
    a = unit_entry(1, 1, rank)
    if rank > 1:
        a = a + diag_band(1, off, rank) + diag_band(-1, off, rank)
    return a


def _alternating_sum(rank: int, ks: Iterable[int], start: int, value: int) -> Matrix:
    # sum over k of diag_k(x_1, x_2, ...) with x_t = value on every other slot
    out = Matrix.zeros(rank)
    for k in ks:
        if abs(k) >= rank:
            continue
        pattern = [value if t % 2 == start else 0 for t in range(rank - abs(k))]
        out = out + diag_band(k, pattern, rank)
    return out


def inverse_cartan(family: str, rank: int) -> Matrix:
    """Closed-form inverse of :func:`cartan_matrix`."""
    _check_rank(family, rank)
    evens = [k for k in range(-rank + 1, rank) if k % 2 == 0]
    odds = [k for k in range(-rank + 1, rank) if k % 2]
    if family == "sl":
        return _alternating_sum(rank, odds, 0, 1)
    if family == "osp_minus":
        return _alternating_sum(rank, evens, 0, 1) + _alternating_sum(rank, odds, 1, 1)
    return _alternating_sum(rank, evens, 1, -1) + _alternating_sum(rank, odds, 0, -1)


def distinguished_cartan(n: int) -> Matrix:
    """Cartan matrix of sl(n+1|n) for e_i = E_{i,i+1} in block format."""
    r = 2 * n
    entries: dict[tuple[int, int], int] = {}
    for i in range(1, r + 1):
        entries[(i, i)] = 0 if i == n + 1 else 2
        if i > 1:
            entries[(i, i - 1)] = -1
        if i < r:
            entries[(i, i + 1)] = 1 if i == n + 1 else -1
    return Matrix.from_entries(r, entries)


def closed_cartan(alg: AlgebraId) -> Matrix:
    if alg.family == "sl" and alg.format == "block":
        return distinguished_cartan(alg.parameter)
    return cartan_matrix(alg.family, alg.rank)


def cartan_data(alg: AlgebraId) -> CartanData:
    if alg.family == "sl" and alg.format == "block":
        a = distinguished_cartan(alg.parameter)
        return CartanData(a, a.inverse())
    return CartanData(cartan_matrix(alg.family, alg.rank), inverse_cartan(alg.family, alg.rank))


def pairing(x: GradedMatrix, y: GradedMatrix) -> Fraction:
    """Supertrace form <x, y> = str(xy) of the defining representation."""
    return supertrace(x @ y)


def cartan_from_basis(b: ChevalleyBasis) -> Matrix:
    """a_ij = <h_i, h_j> / <e_j, f_j>; also requires <e_i, f_j> = 0 for i != j."""
    r = b.rank
    norms = []
    for j in range(r):
        for i in range(r):
            v = pairing(b.e[i], b.f[j])
            if i != j and v:
                raise ValueError(f"<e_{i + 1}, f_{j + 1}> = {v} should vanish")
            if i == j:
                if not v:
                    raise ValueError(f"degenerate pairing <e_{j + 1}, f_{j + 1}> = 0")
                norms.append(v)
    rows = [[pairing(b.h[i], b.h[j]) / norms[j] for j in range(r)] for i in range(r)]
    return Matrix(rows)


def verify_chevalley(b: ChevalleyBasis, a: Matrix) -> VerificationReport:
    """Check all four relation families for every index pair."""
    r = b.rank
    if a.size != r:
        raise ValueError(f"Cartan matrix has size {a.size}, basis has rank {r}")
    zero = GradedMatrix(Matrix.zeros(b.fmt.size), b.fmt)
    gc = graded_commutator
    checks = []
    for i in range(r):
        for j in range(r):
            I, J = i + 1, j + 1
            checks.append(check_equal(f"[h_{I}, h_{J}] = 0", gc(b.h[i], b.h[j]), zero))
            checks.append(check_equal(f"[h_{I}, e_{J}] = a_{I}{J} e_{J}",
                                      gc(b.h[i], b.e[j]), b.e[j].scale(a[I, J])))
            checks.append(check_equal(f"{{e_{I}, f_{J}}} = delta_{I}{J} h_{J}",
                                      gc(b.e[i], b.f[j]), b.h[j] if i == j else zero))
            checks.append(check_equal(f"[h_{I}, f_{J}] = -a_{I}{J} f_{J}",
                                      gc(b.h[i], b.f[j]), b.f[j].scale(-a[I, J])))
    return VerificationReport(tuple(checks))


# -- metrics and membership ----------------------------------------------

def supermetric(alg: AlgebraId) -> Matrix:
    if not alg.is_osp:
        raise UnsupportedAlgebra(f"{alg.family} carries no supermetric")
    m = alg.parameter
    p = alg.size
    sign = (-1) ** m
    if alg.format == "diagonal":
        if alg.family == "osp_minus":
            return adiag_build([sign * (-1) ** ((p + 1 - t + 1) // 2) for t in range(1, p + 1)], p)
        return adiag_build([sign * (-1) ** ((p + 1 - t) // 2) for t in range(1, p + 1)], p)
    n_even = alg.block_dims[0]
    entries = {(i, n_even + 1 - i): 1 for i in range(1, n_even + 1)}
    for i in range(1, m + 1):
        entries[(n_even + i, n_even + m + i)] = -1
        entries[(n_even + m + i, n_even + i)] = 1
    return Matrix.from_entries(p, entries)


def metric_condition(alg: AlgebraId, x: GradedMatrix) -> bool:
    """M^sT G + G M = 0."""
    g = supermetric(alg)
    return (supertranspose(x).mat @ g + g @ x.mat).is_zero()


def symmetry_condition(x: GradedMatrix) -> bool:
    """Antidiagonal symmetry of diagonal-format osp elements.

    Entry (i, j) equals (-1)^{k+1} times its antidiagonal mirror
    (p+1-j, p+1-i), where k = floor((j-i)/2).
    """
    p = x.size
    rows = x.mat.rows()
    for i in range(p):
        for j in range(p):
            k = (j - i) // 2
            mirror = rows[p - 1 - j][p - 1 - i]
            if rows[i][j] != (-mirror if k % 2 == 0 else mirror):
                return False
    return True


def _check_member_shape(alg: AlgebraId, x: GradedMatrix) -> None:
    if x.size != alg.size:
        raise ValueError(f"matrix size {x.size} does not match {alg.name()} (size {alg.size})")
    if x.fmt != alg.grading:
        raise ValueError(f"matrix format {x.fmt} differs from the {alg.format} format "
                         f"{alg.grading} of {alg.name()}")


def is_member(alg: AlgebraId, x: GradedMatrix, cross_check: bool = True) -> bool:
    _check_member_shape(alg, x)
    if alg.family == "gl":
        return True
    if alg.family == "sl":
        return supertrace(x) == 0
    by_metric = metric_condition(alg, x)
    if cross_check and alg.format == "diagonal":
        by_symmetry = symmetry_condition(x)
        if by_symmetry != by_metric:
            raise ConsistencyError(f"metric predicate says {by_metric}, symmetry predicate "
                                   f"says {by_symmetry} for {alg.name()}")
    return by_metric


def membership_equations(alg: AlgebraId, positions: Sequence[tuple[int, int]] | None = None
                         ) -> list[list[Fraction]]:
    """Rows of the linear system whose solutions are the members of ``alg``.

    Unknowns are the entries at ``positions`` (all p*p positions by default).
    """
    p = alg.size
    if positions is None:
        positions = [(i, j) for i in range(1, p + 1) for j in range(1, p + 1)]
    fmt = alg.grading
    if alg.family == "gl":
        return []
    if alg.family == "sl":
        return [[Fraction(fmt.signs[i - 1]) if i == j else Fraction(0) for i, j in positions]]
    g = supermetric(alg)
    cols = []
    for i, j in positions:
        u = GradedMatrix(unit_entry(i, j, p), fmt)
        r = supertranspose(u).mat @ g + g @ u.mat
        cols.append([x for row in r.rows() for x in row])
    return [list(r) for r in zip(*cols)]


def solution_space(alg: AlgebraId, parity: int | None = None) -> list[GradedMatrix]:
    """Basis of ``alg`` from the kernel of its membership equations."""
    p = alg.size
    fmt = alg.grading
    positions = [(i, j) for i in range(1, p + 1) for j in range(1, p + 1)
                 if parity is None or (fmt.signs[i - 1] != fmt.signs[j - 1]) == bool(parity)]
    rows = membership_equations(alg, positions)
    out = []
    for v in nullspace(rows, len(positions)):
        entries = {pos: c for pos, c in zip(positions, v) if c}
        out.append(GradedMatrix(Matrix.from_entries(p, entries), fmt))
    return out


def _flatten(x: GradedMatrix) -> list[Fraction]:
    return [c for row in x.mat.rows() for c in row]


def generated_span(generators: Sequence[GradedMatrix]) -> list[GradedMatrix]:
    """Linear basis of the subalgebra generated under the graded commutator."""
    if not generators:
        return []
    basis: list[GradedMatrix] = []
    echelon: list[list[Fraction]] = []
    pivots: list[int] = []

    def reduce(v: list[Fraction]) -> list[Fraction]:
        for row, pc in zip(echelon, pivots):
            if v[pc]:
                c = v[pc]
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(x: GradedMatrix) -> bool:
        v = reduce(_flatten(x))
        pc = next((k for k, c in enumerate(v) if c), None)
        if pc is None:
            return False
        lead = v[pc]
        v = [c / lead for c in v]
        for idx, row in enumerate(echelon):
            if row[pc]:
                c = row[pc]
                echelon[idx] = [a - c * b for a, b in zip(row, v)]
        echelon.append(v)
        pivots.append(pc)
        basis.append(x)
        return True

    queue = [g for g in generators if add(g)]
    while queue:
        x = queue.pop()
        for g in generators:
            y = graded_commutator(g, x)
            if not y.is_zero() and add(y):
                queue.append(y)
    return basis


def span_dimension(mats: Sequence[GradedMatrix]) -> int:
    if not mats:
        return 0
    return len(rref([_flatten(x) for x in mats])[1])


def random_combination(mats: Sequence[GradedMatrix], rng: random.Random,
                       lo: int = -9, hi: int = 9) -> GradedMatrix:
    """Random rational combination with small numerators and denominators."""
    out = GradedMatrix(Matrix.zeros(mats[0].size), mats[0].fmt)
    for x in mats:
        c = Fraction(rng.randint(lo, hi), rng.randint(1, 5))
        if c:
            out = out + x.scale(c)
    return out


def algebra_basis(alg: AlgebraId) -> list[GradedMatrix]:
    """Basis of the algebra generated by the Chevalley generators."""
    return generated_span(chevalley_basis(alg).generators())


# -- basis transformations -----------------------------------------------

def chevalley_involution(b: ChevalleyBasis) -> ChevalleyBasis:
    """sigma(h) = -h, sigma(e) = -f, sigma(f) = e on odd simple roots.

    On an even simple root sigma(f) = -e instead, as for Lie algebras;
    with e and f both negated there the bracket still lands on -h.
    """
    f = tuple(e if degree(e) == 1 else -e for e in b.e)
    return ChevalleyBasis(b.algebra, tuple(-x for x in b.h), tuple(-x for x in b.f), f)


def rescale_basis(b: ChevalleyBasis, alpha: Sequence, beta: Sequence) -> ChevalleyBasis:
    """e_i -> alpha_i e_i, f_i -> beta_i f_i, h_i -> alpha_i beta_i h_i."""
    if len(alpha) != b.rank or len(beta) != b.rank:
        raise ValueError("need one alpha and one beta per simple root")
    alpha = [Fraction(a) for a in alpha]
    beta = [Fraction(c) for c in beta]
    if any(a == 0 for a in alpha) or any(c == 0 for c in beta):
        raise ValueError("rescaling coefficients must be nonzero")
    return ChevalleyBasis(b.algebra,
                          tuple(x.scale(a * c) for x, a, c in zip(b.h, alpha, beta)),
                          tuple(x.scale(a) for x, a in zip(b.e, alpha)),
                          tuple(x.scale(c) for x, c in zip(b.f, beta)))


def normalizing_rescale(b: ChevalleyBasis) -> ChevalleyBasis:
    """Rescale so that <e_i, f_i> becomes 1 and the Cartan matrix symmetric."""
    norms = [pairing(e, f) for e, f in zip(b.e, b.f)]
    return rescale_basis(b, [1] * b.rank, [1 / v for v in norms])
