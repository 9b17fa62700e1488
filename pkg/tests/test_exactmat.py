import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superformats.exactmat import (Matrix, adiag_build, as_rational, diag_band,
                                   matrix_product, nullspace, power, rank, rref,
                                   unit_entry)

from conftest import matrices, naive_product, rationals


def E(i, j, p):
    return unit_entry(i, j, p)


def test_unit_entry_single_one():
    m = unit_entry(1, 2, 3)
    assert m.support() == [(1, 2)]
    assert m[1, 2] == 1


def test_unit_entry_out_of_range():
    with pytest.raises(IndexError):
        unit_entry(0, 1, 3)
    with pytest.raises(IndexError):
        unit_entry(1, 4, 3)


def test_unit_entry_idempotent_and_chain():
    assert E(2, 2, 2) @ E(2, 2, 2) == E(2, 2, 2)
    assert E(1, 2, 3) @ E(2, 3, 3) == E(1, 3, 3)


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
def test_delta_rule_exhaustive(p):
    zero = Matrix.zeros(p)
    idx = range(1, p + 1)
    for a, b, c, d in itertools.product(idx, repeat=4):
        want = E(a, d, p) if b == c else zero
        assert E(a, b, p) @ E(c, d, p) == want


def test_diag_band_examples():
    assert diag_band(0, [1, -1, 1], 3) == Matrix([[1, 0, 0], [0, -1, 0], [0, 0, 1]])
    jm = diag_band(-1, [1, 1, 1, 1], 5)
    assert jm.support() == [(2, 1), (3, 2), (4, 3), (5, 4)]
    jp = diag_band(1, [2, -1, 1, -2], 5)
    assert [jp[t, t + 1] for t in range(1, 5)] == [2, -1, 1, -2]


def test_diag_band_errors():
    with pytest.raises(ValueError):
        diag_band(1, [1, 2, 3], 3)
    with pytest.raises(ValueError):
        diag_band(3, [], 3)


def test_adiag_bottom_left_enumeration():
    # expansion of the osp(1|2) diagonal metric sum, written out entry by entry
    assert adiag_build([-1, 1, 1], 3) == -E(3, 1, 3) + E(2, 2, 3) + E(1, 3, 3)
    assert adiag_build([1], 1) == Matrix([[1]])
    g = -E(1, 5, 5) + E(2, 4, 5) + E(3, 3, 5) - E(4, 2, 5) - E(5, 1, 5)
    assert adiag_build([-1, -1, 1, 1, -1], 5) == g
    with pytest.raises(ValueError):
        adiag_build([1, 2], 3)


def test_product_identity_and_mismatch():
    m = Matrix([[1, Fraction(1, 2)], [3, 4]])
    assert Matrix.identity(2) @ m == m
    with pytest.raises(ValueError):
        m @ Matrix.identity(3)


def test_highest_weight_power_nilpotent():
    m1 = diag_band(1, [2, 1, 1, 2], 5)
    assert power(m1, 5).is_zero()
    assert power(m1, 2) == diag_band(2, [2, 1, 2], 5)
    assert power(m1, 0) == Matrix.identity(5)


def test_rational_normalisation():
    x = as_rational("-6/4")
    assert (x.numerator, x.denominator) == (-3, 2)
    assert as_rational(0) == Fraction(0, 1)
    with pytest.raises(TypeError):
        as_rational(0.5)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda p: st.tuples(matrices(p), matrices(p), matrices(p))))
def test_product_associative_and_matches_naive(abc):
    a, b, c = abc
    assert (a @ b) @ c == a @ (b @ c)
    assert matrix_product(a, b) == naive_product(a, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6).flatmap(lambda p: st.tuples(
    st.just(p), st.integers(-p + 1, p - 1), st.integers(-p + 1, p - 1),
    st.lists(rationals, min_size=p, max_size=p), st.lists(rationals, min_size=p, max_size=p))))
def test_band_products_stay_on_summed_band(args):
    p, k, l, xs, ys = args
    a = diag_band(k, xs[:p - abs(k)], p)
    b = diag_band(l, ys[:p - abs(l)], p)
    assert all(j - i == k + l for i, j in (a @ b).support())


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4).flatmap(matrices))
def test_inverse_roundtrip(m):
    try:
        inv = m.inverse()
    except ValueError:
        assert rank(m.rows()) < m.size
        return
    assert m @ inv == Matrix.identity(m.size)


def test_rref_and_nullspace():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    red, piv = rref(rows)
    assert piv == [0, 1]
    ns = nullspace(rows, 3)
    assert len(ns) == 1
    v = ns[0]
    for r in rows:
        assert sum(Fraction(a) * b for a, b in zip(r, v)) == 0


def test_serialization_roundtrip():
    m = Matrix([[Fraction(-1, 2), 3], [0, Fraction(7, 3)]])
    assert Matrix.from_json(json.loads(m.dumps())) == m
    assert m.to_json()["entries"][0] == ["-1/2", "3"]
    assert Matrix.from_text(m.to_text()) == m


def test_text_is_right_aligned():
    lines = Matrix([[1, -10], [100, 0]]).to_text().splitlines()
    assert len({len(l) for l in lines}) == 1
