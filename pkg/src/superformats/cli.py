"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or a non-format target in
``convert``), 2 usage or validation error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import suites
from .algebras import (FAMILIES, AlgebraId, UnsupportedAlgebra, cartan_data,
                       cartan_from_basis, chevalley_basis, supermetric)
from .embeddings import (bosonic_pair, highest_weights_closed,
                         highest_weights_solve, principal_triple_for)
from .exactmat import Matrix, format_rational
from .formats import (FormatChanger, FormatError, Permutation, alternating_perm,
                      change_format, osp_L, perm_matrix, sorting_perm)
from .graded import Format, GradedMatrix, supertrace
from .rootspace import admits_fermionic_srs, odd_simple_root_count, simple_root_system


class UsageError(Exception):
    pass


def _emit(payload: dict, text: str, mode: str) -> None:
    if mode == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _graded_text(x: GradedMatrix) -> str:
    return f"format {x.fmt}\n{x.mat.to_text()}"


def _algebra(args) -> AlgebraId:
    if args.algebra is None:
        raise UsageError("--algebra is required")
    if args.algebra.startswith("osp"):
        param = args.m
        if param is None:
            raise UsageError(f"--m is required for {args.algebra}")
    else:
        param = args.n
        if param is None:
            raise UsageError(f"--n is required for {args.algebra}")
    try:
        return AlgebraId(args.algebra, param, args.format)
    except ValueError as exc:
        raise UsageError(str(exc))


def _add_algebra_opts(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--algebra", choices=FAMILIES, required=required)
    p.add_argument("--n", type=int, help="sl/gl(n+1|n)")
    p.add_argument("--m", type=int, help="osp(2m-1|2m) or osp(2m+1|2m)")
    p.add_argument("--format", choices=("diagonal", "block"), default="diagonal")


def _add_out(p: argparse.ArgumentParser, default: str = "json") -> None:
    p.add_argument("--out", choices=("json", "text"), default=default)


# -- generate ------------------------------------------------------------

def run_generate(args) -> int:
    alg = _algebra(args)
    what = args.what
    if what == "basis":
        b = chevalley_basis(alg)
        text = []
        for name, mats in (("h", b.h), ("e", b.e), ("f", b.f)):
            for i, x in enumerate(mats, 1):
                text.append(f"{name}_{i}:\n{x.mat.to_text()}")
        _emit(b.to_json(), f"{alg.name()} format {b.fmt}\n" + "\n\n".join(text), args.out)
    elif what == "metric":
        g = supermetric(alg)
        _emit({"algebra": alg.to_json(), "metric": g.to_json()}, g.to_text(), args.out)
    elif what == "cartan":
        cd = cartan_data(alg)
        _emit({"algebra": alg.to_json(), "cartan": cd.a.to_json(), "inverse": cd.a_inv.to_json()},
              f"a:\n{cd.a.to_text()}\n\na^-1:\n{cd.a_inv.to_text()}", args.out)
    elif what == "osp12":
        t = principal_triple_for(alg)
        x = bosonic_pair(t)
        _emit({"algebra": alg.to_json(), **t.to_json(), **x.to_json()},
              "\n\n".join(f"{k}:\n{v.mat.to_text()}" for k, v in
                          (("J-", t.J_minus), ("J+", t.J_plus), ("H", t.H),
                           ("X+", x.X_plus), ("X-", x.X_minus))), args.out)
    elif what == "highest-weights":
        found = {k: highest_weights_solve(alg, k) for k in range(1, alg.size)}
        payload = {"algebra": alg.to_json(),
                   "grades": {str(k): [v.to_json() for v in vs] for k, vs in found.items()}}
        text = "\n\n".join(f"M_{k}:\n{vs[0].mat.to_text()}" for k, vs in found.items() if vs)
        _emit(payload, text, args.out)
    return 0


# -- cartan ----------------------------------------------------------------

def run_cartan(args) -> int:
    alg = _algebra(args)
    cd = cartan_data(alg)
    payload = {"algebra": alg.to_json(), "cartan": cd.a.to_json(), "inverse": cd.a_inv.to_json()}
    text = f"a:\n{cd.a.to_text()}\n\na^-1:\n{cd.a_inv.to_text()}"
    if args.from_basis:
        computed = cartan_from_basis(chevalley_basis(alg))
        payload["from_basis"] = computed.to_json()
        payload["agrees"] = computed == cd.a
        text += f"\n\nfrom basis ({'agrees' if computed == cd.a else 'DIFFERS'}):\n{computed.to_text()}"
        _emit(payload, text, args.out)
        return 0 if computed == cd.a else 1
    _emit(payload, text, args.out)
    return 0


# -- convert ---------------------------------------------------------------

def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _parse_graded(raw: str, from_signs: str | None) -> tuple[Matrix, Format | None]:
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError:
        mat, fmt = Matrix.from_text(raw), None
    else:
        if "matrix" in obj:
            mat = Matrix.from_json(obj["matrix"])
            fmt = Format.from_json(obj["format"]) if "format" in obj else None
        else:
            mat, fmt = Matrix.from_json(obj), None
    if from_signs:
        fmt = Format.parse(from_signs)
    return mat, fmt


def run_convert(args) -> int:
    try:
        mat, fmt = _parse_graded(_read_input(args.input), args.from_signs)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read input matrix: {exc}")
    if args.via_L:
        if args.m is None:
            raise UsageError("--via-L needs --m")
        changer = osp_L(args.via_L, args.m)
        if fmt is None:
            start = "diagonal" if args.inverse else "block"
            fmt = AlgebraId(f"osp_{args.via_L}", args.m, start).grading
    else:
        if fmt is None:
            raise UsageError("input carries no format; pass --from-signs")
        if args.perm:
            changer = perm_matrix(Permutation(tuple(int(x) for x in args.perm.split(","))))
        elif args.alternating:
            if list(fmt.signs) != sorted(fmt.signs, reverse=True):
                raise UsageError("--alternating expects a block-format input")
            changer = perm_matrix(alternating_perm(fmt.even_dim, fmt.odd_dim))
        elif args.to_signs:
            changer = perm_matrix(sorting_perm(fmt, Format.parse(args.to_signs)))
        elif args.changer:
            changer = FormatChanger(Matrix.from_json(json.loads(_read_input(args.changer))))
        else:
            raise UsageError("choose one of --perm, --alternating, --to-signs, --changer, --via-L")
    if args.inverse:
        changer = changer.inverse()
    if changer.size != mat.size or fmt.size != mat.size:
        raise UsageError(f"size mismatch: matrix {mat.size}, format {fmt.size}, "
                         f"changer {changer.size}")
    src = GradedMatrix(mat, fmt)
    try:
        dst = change_format(src, changer)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    before, after = supertrace(src), supertrace(dst)
    payload = {**dst.to_json(), "supertrace_before": format_rational(before),
               "supertrace_after": format_rational(after)}
    text = (f"{_graded_text(dst)}\nsupertrace before={format_rational(before)} "
            f"after={format_rational(after)}")
    _emit(payload, text, args.out)
    return 0 if before == after else 1


# -- verify ----------------------------------------------------------------

def run_verify(args) -> int:
    if args.algebra:
        algs = [_algebra(args)]
    else:
        algs = suites.algebras_in_range(FAMILIES[1:], args.max_n, args.max_m)
    report = suites.run_suite(args.suite, algs, fault=args.inject_fault)
    payload = {"suite": args.suite, **report.to_json()}
    if args.out == "json":
        for c in payload["checks"]:
            c.pop("residual", None)
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}" for c in report.checks]
    lines.append(f"{len(report) - len(report.failures())}/{len(report)} checks passed")
    _emit(payload, "\n".join(lines), args.out)
    for c in report.failures():
        print(f"FAILED: {c.name}", file=sys.stderr)
    return 0 if report.passed else 1


# -- roots -----------------------------------------------------------------

def run_roots(args) -> int:
    if args.signs:
        fmt = Format.parse(args.signs)
    else:
        fmt = _algebra(args).grading
    roots = simple_root_system(fmt)
    count = odd_simple_root_count(fmt)
    payload = {"format": fmt.to_json(), "roots": [r.to_json() for r in roots],
               "odd_count": count, "fermionic": admits_fermionic_srs(fmt)}
    text = "\n".join(f"alpha_{i} = {r}  ({'odd' if r.parity else 'even'})"
                     for i, r in enumerate(roots, 1))
    _emit(payload, f"format {fmt}\n{text}\nodd simple roots: {count}", args.out)
    return 0


# -- embed -----------------------------------------------------------------

def run_embed(args) -> int:
    alg = _algebra(args)
    t = principal_triple_for(alg)
    grades = [args.k] if args.k else list(range(1, alg.size))
    found = {k: highest_weights_solve(alg, k) for k in grades}
    payload = {"algebra": alg.to_json(), "triple": t.to_json(),
               "highest_weights": {str(k): [v.to_json() for v in vs] for k, vs in found.items()}}
    text = [f"{k}:\n{v.mat.to_text()}" for k, v in
            (("J-", t.J_minus), ("J+", t.J_plus), ("H", t.H))]
    for k, vs in found.items():
        text.append(f"grade {k}: dimension {len(vs)}")
        if alg.family == "sl" and vs:
            text.append(highest_weights_closed(alg.parameter, k).mat.to_text())
        elif vs:
            text.append(vs[0].mat.to_text())
    _emit(payload, "\n\n".join(text), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superformats",
                                     description="Exact matrix formats of Lie superalgebras")
    sub = parser.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("generate", help="emit bases, metrics, Cartan data or embeddings")
    _add_algebra_opts(g)
    g.add_argument("--what", choices=("basis", "metric", "cartan", "osp12", "highest-weights"),
                   default="basis")
    _add_out(g)
    g.set_defaults(func=run_generate)

    c = sub.add_parser("cartan", help="Cartan matrix and inverse")
    _add_algebra_opts(c)
    c.add_argument("--from-basis", action="store_true",
                   help="also recompute it from the Chevalley basis")
    _add_out(c)
    c.set_defaults(func=run_cartan)

    cv = sub.add_parser("convert", help="transport a matrix to another format")
    cv.add_argument("--input", default="-", help="JSON or text matrix file, - for stdin")
    cv.add_argument("--from-signs", help="format of the input, e.g. +++-- or 1,1,-1")
    cv.add_argument("--perm", help="1-based image list, e.g. 1,4,2,5,3")
    cv.add_argument("--alternating", action="store_true", help="block -> alternating format")
    cv.add_argument("--to-signs", help="target format; stable reordering of the basis")
    cv.add_argument("--changer", help="JSON file holding a general invertible F")
    cv.add_argument("--via-L", choices=("minus", "plus"), help="osp block -> diagonal")
    cv.add_argument("--m", type=int)
    cv.add_argument("--inverse", action="store_true", help="apply the inverse transformation")
    _add_out(cv)
    cv.set_defaults(func=run_convert)

    v = sub.add_parser("verify", help="run exact verification suites")
    v.add_argument("--suite", choices=suites.SUITES, default="all")
    _add_algebra_opts(v, required=False)
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--max-m", type=int, default=2)
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    _add_out(v)
    v.set_defaults(func=run_verify)

    r = sub.add_parser("roots", help="simple root system of a format")
    r.add_argument("--signs", help="format signs, e.g. +++--")
    _add_algebra_opts(r, required=False)
    _add_out(r, "text")
    r.set_defaults(func=run_roots)

    e = sub.add_parser("embed", help="principal osp(1|2) and highest weights")
    _add_algebra_opts(e)
    e.add_argument("--k", type=int, help="single grade")
    _add_out(e)
    e.set_defaults(func=run_embed)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, UnsupportedAlgebra, FormatError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
