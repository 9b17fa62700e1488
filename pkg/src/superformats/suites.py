"""Named verification suites shared by the CLI and the test-suite."""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import Callable, Iterable, Sequence

from .algebras import (AlgebraId, ChevalleyBasis, Check, VerificationReport,
                       algebra_basis, cartan_from_basis, chevalley_basis,
                       closed_cartan, inverse_cartan, is_member,
                       metric_condition, random_combination, symmetry_condition,
                       verify_chevalley)
from .embeddings import (highest_weight_report, highest_weights_solve,
                         osp12_relations, principal_triple_for)
from .exactmat import Matrix
from .formats import change_format, osp_L, osp_L_matrix
from .graded import Format, GradedMatrix, supertrace
from .infinite import (OSP_INF, SL_INF, inf_basis, interior_indices,
                       sl_inf_cartan)
from .rootspace import odd_simple_root_count, simple_root_system

SUITES = ("chevalley", "cartan", "membership", "osp12", "highest-weights",
          "format-transport", "roots", "infinite", "all")
JOBS_ENV = "SUPERFORMATS_JOBS"


def _prefix(alg: AlgebraId | str, report: VerificationReport) -> VerificationReport:
    label = alg if isinstance(alg, str) else alg.name()
    return VerificationReport(tuple(replace(c, name=f"{label}: {c.name}") for c in report.checks))


def inject_fault(b: ChevalleyBasis) -> ChevalleyBasis:
    """Flip the sign of e_1."""
    return ChevalleyBasis(b.algebra, b.h, (-b.e[0],) + b.e[1:], b.f)


def algebras_in_range(families: Iterable[str], max_n: int, max_m: int,
                      formats: Sequence[str] = ("diagonal", "block")) -> list[AlgebraId]:
    out = []
    for fam in families:
        top = max_n if fam == "sl" else max_m
        for k in range(1, top + 1):
            for fmt in formats:
                if fam == "sl" and fmt == "block":
                    continue
                out.append(AlgebraId(fam, k, fmt))
    return out


def chevalley_suite(alg: AlgebraId, fault: bool = False) -> VerificationReport:
    b = chevalley_basis(alg)
    if fault:
        b = inject_fault(b)
    return _prefix(alg, verify_chevalley(b, closed_cartan(alg)))


def cartan_suite(alg: AlgebraId) -> VerificationReport:
    a = closed_cartan(alg)
    checks = [Check("cartan_from_basis = closed form", cartan_from_basis(chevalley_basis(alg)) == a)]
    if not (alg.family == "sl" and alg.format == "block"):
        a_inv = inverse_cartan(alg.family, alg.rank)
        checks.append(Check("a . a_inv = 1", a @ a_inv == Matrix.identity(alg.rank)))
        if alg.family == "sl":
            n = alg.parameter
            want = [i // 2 if i % 2 == 0 else n - (i - 1) // 2 for i in range(1, 2 * n + 1)]
            got = [sum(r) for r in a_inv.rows()]
            checks.append(Check("inverse row sums", got == want))
    return _prefix(alg, VerificationReport(tuple(checks)))


def membership_suite(alg: AlgebraId, samples: int = 20, seed: int = 0) -> VerificationReport:
    rng = random.Random(f"{seed}:{alg}")
    b = chevalley_basis(alg)
    checks = [Check(f"generator {k} is a member", is_member(alg, x))
              for k, x in enumerate(b.generators(), 1)]
    if alg.is_osp:
        span = algebra_basis(alg)
        for s in range(samples):
            x = random_combination(span, rng)
            checks.append(Check(f"random member {s}", is_member(alg, x)))
            y = GradedMatrix(Matrix([[rng.randint(-5, 5) for _ in range(alg.size)]
                                     for _ in range(alg.size)]), alg.grading)
            rejected = not metric_condition(alg, y)
            if alg.format == "diagonal":
                rejected = rejected and not symmetry_condition(y)
            checks.append(Check(f"random non-member {s} rejected", rejected))
    return _prefix(alg, VerificationReport(tuple(checks)))


def osp12_suite(alg: AlgebraId) -> VerificationReport:
    return _prefix(alg, osp12_relations(principal_triple_for(alg)))


def highest_weight_suite(alg: AlgebraId) -> VerificationReport:
    checks = [highest_weight_report(alg, k, highest_weights_solve(alg, k))
              for k in range(1, alg.size + 1)]
    return VerificationReport(tuple(checks))


def transport_suite(variant: str, m: int) -> VerificationReport:
    fam = f"osp_{variant}"
    block = chevalley_basis(AlgebraId(fam, m, "block"))
    diag = chevalley_basis(AlgebraId(fam, m, "diagonal"))
    changer = osp_L(variant, m)
    L = osp_L_matrix(variant, m)
    checks = [Check("L L^T = 1", L @ L.transpose() == Matrix.identity(L.size))]
    for name, src, dst in (("h", block.h, diag.h), ("e", block.e, diag.e), ("f", block.f, diag.f)):
        for i, (x, y) in enumerate(zip(src, dst), 1):
            moved = change_format(x, changer)
            checks.append(Check(f"L^-1 {name}_{i} L = diagonal {name}_{i}",
                                moved.mat == y.mat and moved.fmt == y.fmt))
            checks.append(Check(f"str {name}_{i} preserved", supertrace(moved) == supertrace(x)))
    return _prefix(f"osp({2 * m - 1 if variant == 'minus' else 2 * m + 1}|{2 * m})",
                   VerificationReport(tuple(checks)))


def roots_suite() -> VerificationReport:
    block, diag = Format.block(3, 2), Format.alternating(5)
    rb = [str(r) for r in simple_root_system(block)]
    rd = [str(r) for r in simple_root_system(diag)]
    return VerificationReport((
        Check("sl(3|2) block: distinguished SRS",
              rb == ["ε_1-ε_2", "ε_2-ε_3", "ε_3-δ_1", "δ_1-δ_2"]),
        Check("sl(3|2) diagonal: fermionic SRS",
              rd == ["ε_1-δ_1", "δ_1-ε_2", "ε_2-δ_2", "δ_2-ε_3"]),
        Check("sl(3|2) block: 1 odd root", odd_simple_root_count(block) == 1),
        Check("sl(3|2) diagonal: 4 odd roots", odd_simple_root_count(diag) == 4),
    ))


def infinite_suite(N: int = 6) -> VerificationReport:
    out = VerificationReport()
    for kind in (SL_INF, OSP_INF):
        idx = interior_indices(kind, N)
        b = inf_basis(kind, idx, N)
        a = cartan_from_basis(b)
        out = out + _prefix(f"{kind} N={N}", verify_chevalley(b, a))
        if kind == SL_INF:
            out = out + VerificationReport((Check(f"{kind} N={N}: Cartan closed form",
                                                  a == sl_inf_cartan(idx)),))
    return out


def _jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def fan_out(fn: Callable, args: Sequence) -> VerificationReport:
    """Run fn over args, in worker processes when the jobs env var asks for it.

    Results are concatenated in argument order either way.
    """
    jobs = _jobs()
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(fn, args))
    else:
        parts = [fn(a) for a in args]
    out = VerificationReport()
    for p in parts:
        out = out + p
    return out


def _chevalley_faulty(alg: AlgebraId) -> VerificationReport:
    return chevalley_suite(alg, fault=True)


def _transport_args(args: tuple[str, int]) -> VerificationReport:
    return transport_suite(*args)


def run_suite(name: str, algebras: Sequence[AlgebraId], fault: bool = False
              ) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if name == "all":
        out = VerificationReport()
        for sub in SUITES[:-1]:
            out = out + run_suite(sub, algebras, fault)
        return out
    if name == "chevalley":
        return fan_out(_chevalley_faulty if fault else chevalley_suite, algebras)
    if name == "cartan":
        return fan_out(cartan_suite, algebras)
    if name == "membership":
        return fan_out(membership_suite, [a for a in algebras if a.family != "gl"])
    principal = [a for a in algebras if a.format == "diagonal" and a.family != "gl"]
    if name == "osp12":
        return fan_out(osp12_suite, principal)
    if name == "highest-weights":
        return fan_out(highest_weight_suite, principal)
    if name == "format-transport":
        pairs = sorted({(a.family[4:], a.parameter) for a in algebras if a.is_osp})
        return fan_out(_transport_args, pairs)
    if name == "roots":
        return roots_suite()
    return infinite_suite()
