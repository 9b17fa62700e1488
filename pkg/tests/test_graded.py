import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superformats.exactmat import Matrix
from superformats.formats import FormatChanger, change_format, perm_matrix, Permutation
from superformats.graded import (Format, GradedMatrix, ad_epsilon, degree,
                                 graded_commutator, homogeneous_parts, parity,
                                 supertrace, supertranspose, supertranspose_dual)

from conftest import formats, graded_pairs, matrices, naive_graded_bracket


def block_supertranspose(m: Matrix, n_even: int) -> Matrix:
    """[[A, B], [C, D]] -> [[A^T, C^T], [-B^T, D^T]], written with slices."""
    rows = m.rows()
    p = len(rows)
    A = [[rows[i][j] for j in range(n_even)] for i in range(n_even)]
    B = [[rows[i][j] for j in range(n_even, p)] for i in range(n_even)]
    C = [[rows[i][j] for j in range(n_even)] for i in range(n_even, p)]
    D = [[rows[i][j] for j in range(n_even, p)] for i in range(n_even, p)]
    t = lambda X: [list(r) for r in zip(*X)] if X and X[0] else []
    At, Bt, Ct, Dt = t(A), t(B), t(C), t(D)
    top = [At[i] + (Ct[i] if Ct else []) for i in range(n_even)]
    bottom = [[-x for x in (Bt[i] if Bt else [])] + Dt[i] for i in range(p - n_even)]
    return Matrix(top + bottom)


def test_format_constructors():
    assert Format.block(3, 2).signs == (1, 1, 1, -1, -1)
    assert Format.alternating(5).signs == (1, -1, 1, -1, 1)
    assert Format.alternating(3, first=-1).signs == (-1, 1, -1)
    assert Format.parse("++-") == Format.parse("1,1,-1")
    assert str(Format.parse("+-+")) == "+-+"
    f = Format.parse("+--+")
    assert (f.even_dim, f.odd_dim) == (2, 2)
    assert Format.from_json(json.loads(json.dumps(f.to_json()))) == f


def test_format_rejects_bad_signs():
    with pytest.raises(ValueError):
        Format((1, 0, -1))
    with pytest.raises(ValueError):
        Format(())


def test_parity_reads_the_involution():
    f = Format.parse("+-+-+")
    assert [parity(f, i) for i in range(1, 6)] == [0, 1, 0, 1, 0]
    assert f.involution() == Matrix([[1 if i == j and i % 2 == 0 else -1 if i == j else 0
                                      for j in range(5)] for i in range(5)])


def test_graded_matrix_requires_matching_size():
    with pytest.raises(ValueError):
        GradedMatrix(Matrix.identity(2), Format.parse("+-+"))


def test_degree_and_parts():
    f = Format.parse("+-")
    even = GradedMatrix(Matrix([[1, 0], [0, 2]]), f)
    odd = GradedMatrix(Matrix([[0, 1], [3, 0]]), f)
    assert degree(even) == 0 and degree(odd) == 1
    assert degree(even + odd) is None
    assert degree(GradedMatrix(Matrix.zeros(2), f)) == 0
    e, o = homogeneous_parts(even + odd)
    assert e == even and o == odd


def test_supertrace_small():
    f = Format.parse("+-+")
    assert supertrace(GradedMatrix(Matrix.identity(3), f)) == 1
    assert supertrace(GradedMatrix(Matrix([[1, 0], [0, 1]]), Format.parse("+-"))) == 0


def test_odd_bracket_is_anticommutator():
    f = Format.parse("+-")
    x = GradedMatrix(Matrix([[0, 1], [0, 0]]), f)
    y = GradedMatrix(Matrix([[0, 0], [1, 0]]), f)
    assert graded_commutator(x, y).mat == Matrix.identity(2)


def test_dual_convention_is_ad_epsilon_of_supertranspose():
    f = Format.parse("+-+-")
    m = GradedMatrix(Matrix([[i * 4 + j for j in range(4)] for i in range(4)]), f)
    assert supertranspose_dual(m) == ad_epsilon(supertranspose(m))


@settings(max_examples=60, deadline=None)
@given(graded_pairs())
def test_bracket_matches_index_formula(mn):
    m, n = mn
    assert graded_commutator(m, n).mat == naive_graded_bracket(m, n)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 5).flatmap(lambda e: st.integers(0, 5).filter(lambda o: e + o > 0).flatmap(
    lambda o: st.tuples(st.just(e), matrices(e + o)))))
def test_supertranspose_matches_block_form(args):
    n_even, m = args
    fmt = Format.block(n_even, m.size - n_even)
    assert supertranspose(GradedMatrix(m, fmt)).mat == block_supertranspose(m, n_even)


@settings(max_examples=60, deadline=None)
@given(graded_pairs())
def test_bracket_is_graded_antisymmetric_on_homogeneous_parts(mn):
    m, n = mn
    for a in homogeneous_parts(m):
        for b in homogeneous_parts(n):
            sign = (-1) ** (degree(a) * degree(b))
            assert graded_commutator(a, b) == -(graded_commutator(b, a).scale(sign))


@settings(max_examples=40, deadline=None)
@given(formats(max_size=5).flatmap(lambda f: st.tuples(
    st.just(f), matrices(f.size), matrices(f.size), matrices(f.size))))
def test_graded_jacobi_on_homogeneous_parts(args):
    f, x, y, z = args
    xs = homogeneous_parts(GradedMatrix(x, f))
    ys = homogeneous_parts(GradedMatrix(y, f))
    zs = homogeneous_parts(GradedMatrix(z, f))
    for a in xs:
        for b in ys:
            for c in zs:
                da, db, dc = degree(a), degree(b), degree(c)
                total = (graded_commutator(a, graded_commutator(b, c)).scale((-1) ** (da * dc))
                         + graded_commutator(b, graded_commutator(c, a)).scale((-1) ** (db * da))
                         + graded_commutator(c, graded_commutator(a, b)).scale((-1) ** (dc * db)))
                assert total.is_zero()


@settings(max_examples=60, deadline=None)
@given(graded_pairs())
def test_supertrace_of_bracket_vanishes(mn):
    assert supertrace(graded_commutator(*mn)) == 0


@settings(max_examples=60, deadline=None)
@given(graded_pairs())
def test_double_supertranspose_is_ad_epsilon(mn):
    m, _ = mn
    assert supertranspose(supertranspose(m)) == ad_epsilon(m)
    assert supertranspose_dual(supertranspose_dual(m)) == ad_epsilon(m)
    assert supertrace(supertranspose(m)) == supertrace(m)


@settings(max_examples=60, deadline=None)
@given(graded_pairs())
def test_product_and_bracket_under_supertranspose(mn):
    m, n = mn
    for a in homogeneous_parts(m):
        for b in homogeneous_parts(n):
            sign = (-1) ** (degree(a) * degree(b))
            for st_ in (supertranspose, supertranspose_dual):
                assert st_(a @ b) == (st_(b) @ st_(a)).scale(sign)
    for st_ in (supertranspose, supertranspose_dual):
        assert st_(graded_commutator(m, n)) == -graded_commutator(st_(m), st_(n))


@settings(max_examples=60, deadline=None)
@given(formats(max_size=6).flatmap(lambda f: st.tuples(
    st.just(f), matrices(f.size), st.permutations(range(1, f.size + 1)),
    st.lists(st.sampled_from([1, -1]), min_size=f.size, max_size=f.size))))
def test_supertrace_invariant_under_signed_permutation(args):
    f, x, images, signs = args
    perm = perm_matrix(Permutation(tuple(images))).mat
    signed = FormatChanger(Matrix([[signs[i] * perm.rows()[i][j] for j in range(f.size)]
                                   for i in range(f.size)]))
    m = GradedMatrix(x, f)
    moved = change_format(m, signed)
    assert supertrace(moved) == supertrace(m)
    assert degree(moved) == degree(m)


def test_arithmetic_needs_common_format():
    a = GradedMatrix(Matrix.identity(2), Format.parse("++"))
    b = GradedMatrix(Matrix.identity(2), Format.parse("+-"))
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        graded_commutator(a, b)


def test_graded_json_roundtrip():
    m = GradedMatrix(Matrix([[Fraction(1, 3), 0], [2, -1]]), Format.parse("+-"))
    assert GradedMatrix.from_json(json.loads(json.dumps(m.to_json()))) == m
