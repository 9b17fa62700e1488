"""Simple root systems read off from a format, for e_i = E_{i,i+1}."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exactmat import Matrix, diag_band, unit_entry
from .graded import Format, GradedMatrix, graded_commutator, parity

EPS = "eps"
DELTA = "delta"


@dataclass(frozen=True, order=True)
class WeightSymbol:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in (EPS, DELTA):
            raise ValueError(f"weight kind must be 'eps' or 'delta', got {self.kind!r}")
        if self.index < 1:
            raise ValueError("weight indices start at 1")

    def __str__(self) -> str:
        return f"{'ε' if self.kind == EPS else 'δ'}_{self.index}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "index": self.index}

    @classmethod
    def from_json(cls, obj: dict) -> "WeightSymbol":
        return cls(obj["kind"], obj["index"])


@dataclass(frozen=True)
class SimpleRoot:
    positive: WeightSymbol
    negative: WeightSymbol
    parity: int

    def __str__(self) -> str:
        return f"{self.positive}-{self.negative}"

    def coefficients(self) -> dict[WeightSymbol, int]:
        return {self.positive: 1, self.negative: -1}

    def evaluate(self, weights: Mapping[WeightSymbol, Fraction]) -> Fraction:
        return Fraction(weights[self.positive]) - Fraction(weights[self.negative])

    def to_json(self) -> dict:
        return {"positive": self.positive.to_json(), "negative": self.negative.to_json(),
                "parity": self.parity}

    @classmethod
    def from_json(cls, obj: dict) -> "SimpleRoot":
        return cls(WeightSymbol.from_json(obj["positive"]),
                   WeightSymbol.from_json(obj["negative"]), obj["parity"])


def weight_symbols(fmt: Format) -> list[WeightSymbol]:
    """eps_1, eps_2, ... on the even slots and delta_1, ... on the odd ones, in order."""
    counts = {EPS: 0, DELTA: 0}
    out = []
    for s in fmt.signs:
        kind = EPS if s == 1 else DELTA
        counts[kind] += 1
        out.append(WeightSymbol(kind, counts[kind]))
    return out


def simple_root_system(fmt: Format) -> list[SimpleRoot]:
    if fmt.size < 2:
        raise ValueError("need at least two basis vectors")
    w = weight_symbols(fmt)
    return [SimpleRoot(w[i - 1], w[i], (parity(fmt, i) + parity(fmt, i + 1)) % 2)
            for i in range(1, fmt.size)]


def sign_changes(fmt: Format) -> int:
    s = fmt.signs
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def odd_simple_root_count(fmt: Format) -> int:
    """Number of odd simple roots, computed twice and cross-checked."""
    by_parity = sum(r.parity for r in simple_root_system(fmt)) if fmt.size > 1 else 0
    by_signs = sign_changes(fmt)
    if by_parity != by_signs:
        raise AssertionError(f"odd root count {by_parity} != sign changes {by_signs}")
    return by_signs


def admits_fermionic_srs(fmt: Format) -> bool:
    """True iff every simple root is odd, i.e. the signs alternate strictly."""
    return sign_changes(fmt) == fmt.size - 1


def cartan_element(fmt: Format, weights: Mapping[WeightSymbol, Fraction]) -> GradedMatrix:
    """Diagonal h whose i-th entry is the weight assigned to the i-th symbol."""
    vals = [Fraction(weights[w]) for w in weight_symbols(fmt)]
    return GradedMatrix(diag_band(0, vals, fmt.size), fmt)


def root_eigenvalues(fmt: Format, h: GradedMatrix) -> list[Fraction]:
    """alpha_i(h) read off from [h, E_{i,i+1}] = alpha_i(h) E_{i,i+1}."""
    if not h.mat.is_diagonal():
        raise ValueError("h must be diagonal")
    out = []
    for i in range(1, fmt.size):
        e = GradedMatrix(unit_entry(i, i + 1, fmt.size), fmt)
        br = graded_commutator(h, e).mat
        if br != Matrix.zeros(fmt.size) and br.support() != [(i, i + 1)]:
            raise AssertionError(f"[h, e_{i}] is not a multiple of e_{i}")
        out.append(br[i, i + 1])
    return out


def format_of_signs(signs: Sequence[int]) -> Format:
    return Format(tuple(signs))
