"""Format-changing transformations and similarity transport between formats."""
from __future__ import annotations

from dataclasses import dataclass

from .exactmat import Matrix
from .graded import Format, GradedMatrix


class FormatError(ValueError):
    """A basis change that does not land on a format (involution not diagonal +-1)."""


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..p} stored as its 1-based image list."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, pi in enumerate(self.images, 1):
            inv[pi - 1] = i
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, p: int) -> "Permutation":
        return cls(tuple(range(1, p + 1)))

    def to_json(self) -> dict:
        return {"perm": list(self.images)}

    @classmethod
    def from_json(cls, obj: dict) -> "Permutation":
        return cls(tuple(obj["perm"]))


def _is_signed_permutation(mat: Matrix) -> bool:
    rows = mat.rows()
    cols_hit = set()
    for row in rows:
        nz = [(j, x) for j, x in enumerate(row) if x]
        if len(nz) != 1 or nz[0][1] not in (1, -1):
            return False
        cols_hit.add(nz[0][0])
    return len(cols_hit) == mat.size


@dataclass(frozen=True)
class FormatChanger:
    """Invertible F acting by M -> F M F^-1."""

    mat: Matrix
    kind: str = "general"

    def __post_init__(self):
        signed = _is_signed_permutation(self.mat)
        if self.kind == "signed-permutation" and not signed:
            raise ValueError("matrix is not a signed permutation")
        if self.kind not in ("signed-permutation", "general"):
            raise ValueError(f"unknown changer kind {self.kind!r}")
        if signed:
            object.__setattr__(self, "kind", "signed-permutation")
        else:
            self.mat.inverse()  # raises when singular

    @property
    def size(self) -> int:
        return self.mat.size

    @property
    def inverse_mat(self) -> Matrix:
        if self.kind == "signed-permutation":
            return self.mat.transpose()
        return self.mat.inverse()

    def inverse(self) -> "FormatChanger":
        return FormatChanger(self.inverse_mat, self.kind)

    def conjugate(self, m: Matrix) -> Matrix:
        return self.mat @ m @ self.inverse_mat

    def then(self, other: "FormatChanger") -> "FormatChanger":
        """Apply self first, then other."""
        return FormatChanger(other.mat @ self.mat)


def perm_matrix(perm: Permutation) -> FormatChanger:
    """F with F_{ij} = delta_{P(i) j}, so (F v)_i = v_{P(i)}."""
    p = perm.size
    return FormatChanger(Matrix.from_entries(p, {(i, perm(i)): 1 for i in range(1, p + 1)}),
                         "signed-permutation")


def alternating_perm(n_even: int, n_odd: int) -> Permutation:
    """Interleave the even and odd blocks of a block-format basis.

    The larger block supplies the first vector; with equal blocks the even
    one does.
    """
    if n_even < 0 or n_odd < 0 or n_even + n_odd == 0:
        raise ValueError("block dimensions must be non-negative and not both zero")
    if abs(n_even - n_odd) > 1:
        raise ValueError(f"no alternating arrangement for gl({n_even}|{n_odd})")
    evens = list(range(1, n_even + 1))
    odds = list(range(n_even + 1, n_even + n_odd + 1))
    first, second = (odds, evens) if n_odd > n_even else (evens, odds)
    images = []
    for t in range(n_even + n_odd):
        images.append(first[t // 2] if t % 2 == 0 else second[t // 2])
    return Permutation(tuple(images))


def transport_format(fmt: Format, changer: FormatChanger) -> Format:
    """The format whose involution is F eps F^-1; rejects non-formats."""
    if changer.size != fmt.size:
        raise ValueError("format and changer sizes differ")
    eps = changer.conjugate(fmt.involution())
    if not eps.is_diagonal() or any(eps[i, i] not in (1, -1) for i in range(1, fmt.size + 1)):
        raise FormatError("transported involution is not diagonal with +-1 entries; "
                          "this is a change of realization, not of format")
    return Format(tuple(int(eps[i, i]) for i in range(1, fmt.size + 1)))


def change_format(m: GradedMatrix, changer: FormatChanger) -> GradedMatrix:
    new_fmt = transport_format(m.fmt, changer)
    return GradedMatrix(changer.conjugate(m.mat), new_fmt)


def osp_L_matrix(variant: str, m: int) -> Matrix:
    """The signed permutation L with M_diag = L^-1 M_block L for osp(2m-+1|2m)."""
    if m < 1:
        raise ValueError("m must be positive")
    terms: dict[tuple[int, int], int] = {}

    def put(i, j, s):
        if (i, j) in terms:
            raise AssertionError(f"duplicate entry ({i},{j}) in L")
        terms[(i, j)] = s

    if variant == "minus":
        p = 4 * m - 1
        for i in range(0, m):
            put(2 * m + i, 2 * i + 1, (-1) ** (i + 1))
        for i in range(1, m + 1):
            put(2 * m - i, 2 * i, (-1) ** i)
            put(4 * m - i, 2 * m + 2 * i - 1, (-1) ** (m + 1))
        for i in range(1, m):
            put(m - i, 2 * m + 2 * i, (-1) ** m)
    elif variant == "plus":
        p = 4 * m + 1
        for i in range(0, m + 1):
            put(2 * m + 1 - i, 2 * i + 1, (-1) ** i)
        for i in range(1, m + 1):
            put(2 * m + 1 + i, 2 * i, (-1) ** i)
            put(4 * m + 2 - i, 2 * m + 2 * i, (-1) ** (m + 1))
            put(m + 1 - i, 2 * m + 1 + 2 * i, (-1) ** m)
    else:
        raise ValueError(f"variant must be 'minus' or 'plus', got {variant!r}")
    return Matrix.from_entries(p, terms)


def osp_L(variant: str, m: int) -> FormatChanger:
    """Changer taking the block osp format to the diagonal one.

    Its matrix is L^-1 = L^T, so that ``change_format`` computes L^-1 M L.
    """
    return FormatChanger(osp_L_matrix(variant, m).transpose(), "signed-permutation")


def preserves_format(changer: FormatChanger, fmt: Format) -> bool:
    """True iff F is invertible and even in ``fmt``."""
    if changer.size != fmt.size:
        raise ValueError("format and changer sizes differ")
    s = fmt.signs
    return all(not x for i, row in enumerate(changer.mat.rows())
               for j, x in enumerate(row) if s[i] != s[j])


def swap_changer(p: int, a: int, b: int) -> FormatChanger:
    """Permutation matrix exchanging basis vectors a and b."""
    images = list(range(1, p + 1))
    images[a - 1], images[b - 1] = b, a
    return perm_matrix(Permutation(tuple(images)))


def sorting_perm(source: Format, target: Format) -> Permutation:
    """Stable permutation P with target.signs[i] == source.signs[P(i)]."""
    if sorted(source.signs) != sorted(target.signs):
        raise FormatError("formats have different even/odd dimensions")
    pools = {1: [i for i, s in enumerate(source.signs, 1) if s == 1],
             -1: [i for i, s in enumerate(source.signs, 1) if s == -1]}
    return Permutation(tuple(pools[s].pop(0) for s in target.signs))

