"""Principal osp(1|2) embedding and its highest-weight generators."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebras import (AlgebraId, ChevalleyBasis, Check, UnsupportedAlgebra,
                       VerificationReport, chevalley_basis, check_equal,
                       inverse_cartan, membership_equations)
from .exactmat import Matrix, diag_band, nullspace, power, unit_entry
from .graded import Format, GradedMatrix, graded_commutator


@dataclass(frozen=True)
class PrincipalTriple:
    J_minus: GradedMatrix
    J_plus: GradedMatrix
    H: GradedMatrix

    def to_json(self) -> dict:
        return {"J_minus": self.J_minus.to_json(), "J_plus": self.J_plus.to_json(),
                "H": self.H.to_json()}


@dataclass(frozen=True)
class BosonicPair:
    X_plus: GradedMatrix
    X_minus: GradedMatrix

    def to_json(self) -> dict:
        return {"X_plus": self.X_plus.to_json(), "X_minus": self.X_minus.to_json()}


def principal_osp12(b: ChevalleyBasis, a_inv: Matrix) -> PrincipalTriple:
    """J_- = sum f_i, J_+ = sum_ij a^ij e_i, H = {J_+, J_-}."""
    r = b.rank
    if a_inv.size != r:
        raise ValueError(f"inverse Cartan matrix has size {a_inv.size}, basis has rank {r}")
    zero = GradedMatrix(Matrix.zeros(b.fmt.size), b.fmt)
    j_minus = zero
    for f in b.f:
        j_minus = j_minus + f
    j_plus = zero
    for i in range(r):
        row_sum = sum(a_inv.rows()[i], Fraction(0))
        if row_sum:
            j_plus = j_plus + b.e[i].scale(row_sum)
    return PrincipalTriple(j_minus, j_plus, graded_commutator(j_plus, j_minus))


def principal_h_from_cartan(b: ChevalleyBasis, a_inv: Matrix) -> GradedMatrix:
    """The second expression for H: sum_ij a^ij h_i."""
    out = GradedMatrix(Matrix.zeros(b.fmt.size), b.fmt)
    for i in range(b.rank):
        out = out + b.h[i].scale(sum(a_inv.rows()[i], Fraction(0)))
    return out


def principal_closed(n: int) -> PrincipalTriple:
    """Closed-form principal triple of sl(n+1|n) in diagonal format."""
    if n < 1:
        raise ValueError("n must be positive")
    p = 2 * n + 1
    fmt = Format.alternating(p)
    plus = []
    for s in range(1, n + 1):
        plus += [n - s + 1, -s]
    return PrincipalTriple(
        GradedMatrix(diag_band(-1, [1] * (p - 1), p), fmt),
        GradedMatrix(diag_band(1, plus, p), fmt),
        GradedMatrix(diag_band(0, list(range(n, -n - 1, -1)), p), fmt))


def bosonic_pair(t: PrincipalTriple) -> BosonicPair:
    half = Fraction(1, 2)
    return BosonicPair(graded_commutator(t.J_plus, t.J_plus).scale(half),
                       graded_commutator(t.J_minus, t.J_minus).scale(half))


def osp12_relations(t: PrincipalTriple, x: BosonicPair | None = None) -> VerificationReport:
    """Every defining relation of the osp(1|2) triple and its bosonic pair."""
    x = x or bosonic_pair(t)
    gc = graded_commutator
    H, Jp, Jm = t.H, t.J_plus, t.J_minus
    return VerificationReport((
        check_equal("[H, J+] = J+", gc(H, Jp), Jp),
        check_equal("[H, J-] = -J-", gc(H, Jm), -Jm),
        check_equal("{J+, J-} = H", gc(Jp, Jm), H),
        check_equal("[H, X+] = 2 X+", gc(H, x.X_plus), x.X_plus.scale(2)),
        check_equal("[H, X-] = -2 X-", gc(H, x.X_minus), x.X_minus.scale(-2)),
        check_equal("[X+, X-] = -H", gc(x.X_plus, x.X_minus), -H),
        check_equal("[J-, X+] = J+", gc(Jm, x.X_plus), Jp),
        check_equal("[J+, X-] = -J-", gc(Jp, x.X_minus), -Jm),
    ))


def antidiagonal_symmetric(m: Matrix) -> bool:
    return m.antitranspose() == m


def antidiagonal_antisymmetric(m: Matrix) -> bool:
    return m.antitranspose() == -m


def highest_weights_closed(n: int, k: int) -> GradedMatrix:
    """M_k = M_1^k with M_1 = diag_{+1}(n, 1, n-1, 2, ..., n)."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= k <= 2 * n + 1:
        raise ValueError(f"k must lie in 1..{2 * n + 1}, got {k}")
    p = 2 * n + 1
    band = []
    for s in range(1, n + 1):
        band += [n - s + 1, s]
    m1 = diag_band(1, band, p)
    return GradedMatrix(power(m1, k), Format.alternating(p))


def principal_triple_for(alg: AlgebraId) -> PrincipalTriple:
    if alg.family not in ("sl", "osp_minus", "osp_plus") or alg.format != "diagonal":
        raise UnsupportedAlgebra(f"no principal triple for {alg.name()}")
    return principal_osp12(chevalley_basis(alg), inverse_cartan(alg.family, alg.rank))


def highest_weights_solve(alg: AlgebraId, k: int) -> list[GradedMatrix]:
    """Exact basis of {M in alg : [H, M] = k M, [J_+, M} = 0}.

    Unknowns are the entries in the k-eigenspace of ad_H, i.e. the positions
    (i, j) with H_ii - H_jj = k.
    """
    if k < 1:
        raise ValueError("grade must be positive")
    t = principal_triple_for(alg)
    p = alg.size
    fmt = t.H.fmt
    hd = [t.H[i, i] for i in range(1, p + 1)]
    positions = [(i, j) for i in range(1, p + 1) for j in range(1, p + 1)
                 if hd[i - 1] - hd[j - 1] == k]
    if not positions:
        return []
    cols = []
    for i, j in positions:
        img = graded_commutator(t.J_plus, GradedMatrix(unit_entry(i, j, p), fmt))
        cols.append([c for row in img.mat.rows() for c in row])
    rows = [list(r) for r in zip(*cols)]
    rows += membership_equations(alg, positions)
    out = []
    for v in nullspace(rows, len(positions)):
        entries = {pos: c for pos, c in zip(positions, v) if c}
        out.append(GradedMatrix(Matrix.from_entries(p, entries), fmt))
    return out


def proportionality(x: Matrix, y: Matrix) -> Fraction | None:
    """c with x = c * y, or None when x is not a multiple of y."""
    pivot = next(((i, j) for i, j in y.support()), None)
    if pivot is None:
        return Fraction(0) if x.is_zero() else None
    c = x[pivot] / y[pivot]
    return c if x == y.scale(c) else None


def normalize_to(x: GradedMatrix, ref: GradedMatrix) -> GradedMatrix:
    """Scale x so its first nonzero entry matches the same entry of ``ref``."""
    pos = x.mat.support()[0]
    return x.scale(ref[pos] / x[pos])


def highest_weight_report(alg: AlgebraId, k: int, solved: list[GradedMatrix]) -> Check:
    """Whether a solved grade-k space has the expected size and direction."""
    if alg.family == "sl":
        n = alg.parameter
        if k > 2 * n:
            return Check(f"{alg.name()} grade {k}: empty", not solved)
        ok = len(solved) == 1 and proportionality(
            solved[0].mat, highest_weights_closed(n, k).mat) is not None
        return Check(f"{alg.name()} grade {k}: span{{M_1^{k}}}", ok)
    expected = 1 if k % 4 in (2, 3) and k < alg.size else 0
    return Check(f"{alg.name()} grade {k}: dimension {expected}", len(solved) == expected)
