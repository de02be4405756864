import random

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from eulerseidel.euler_seidel import (
    ESMatrix,
    binomial_transform,
    build_matrix,
    first_column,
    inverse_binomial_transform,
)
from eulerseidel.exact_core import IntPolynomial as P
from eulerseidel.sequences import bell_number, bell_polynomial, fubini_polynomial

big_lists = st.lists(st.integers(-(10**30), 10**30), min_size=1, max_size=64)


def test_bell_matrix_matches_displayed_entries():
    m = build_matrix([1, 1, 2, 5, 15, 52])
    displayed = [[1, 1, 2, 5, 15, 52], [2, 3, 7, 20], [5, 10, 27], [15, 37], [52]]
    for row, shown in zip(m.rows, displayed):
        assert list(row[: len(shown)]) == shown
    assert [len(r) for r in m.rows] == [6, 5, 4, 3, 2, 1]
    assert first_column(m) == [1, 2, 5, 15, 52, 203]


def test_zero_matrix():
    m = build_matrix([0] * 5)
    assert all(v == 0 for _, _, v in m.entries())
    assert first_column(m) == [0] * 5


def test_fubini_matrix_follows_recurrence_not_misprint():
    m = build_matrix([1, 1, 3, 13, 75])
    assert m.rows == ((1, 1, 3, 13, 75), (2, 4, 16, 88), (6, 20, 104), (26, 124), (150,))
    # the printed table repeats the Bell interior (3, 7, 20 / 10, 27 / 37)
    assert m.rows[1][1:4] != (3, 7, 20)
    assert first_column(m) == [1, 2, 6, 26, 150]


def test_bell_polynomial_matrix_first_column():
    m = build_matrix([bell_polynomial(n) for n in range(4)])
    assert first_column(m) == [P([1]), P([1, 1]), P([1, 3, 1]), P([1, 7, 6, 1])]
    assert m.rows[1] == (P([1, 1]), P([0, 2, 1]), P([0, 2, 4, 1]))
    assert m.rows[2] == (P([1, 3, 1]), P([0, 4, 5, 1]))


def test_build_matrix_rejects_bad_input():
    with pytest.raises(ValueError):
        build_matrix([])
    with pytest.raises(TypeError):
        build_matrix([1.5, 2.0])


def test_matrix_is_immutable():
    m = build_matrix([1, 2])
    with pytest.raises(AttributeError):
        m.rows = ()


def test_binomial_transform_examples():
    assert binomial_transform([1, 1, 2, 5, 15]) == [1, 2, 5, 15, 52]
    assert binomial_transform([7] * 6) == [7 * 2**n for n in range(6)]
    assert binomial_transform([1, 1, 3, 13, 75]) == [1, 2, 6, 26, 150]


def test_inverse_binomial_transform_examples():
    assert inverse_binomial_transform([1, 2, 5, 15, 52]) == [1, 1, 2, 5, 15]
    assert inverse_binomial_transform([1, 2, 6, 26, 150]) == [1, 1, 3, 13, 75]


@settings(max_examples=200, deadline=None)
@given(big_lists)
def test_first_column_is_binomial_transform(a):
    m = build_matrix(a)
    assert first_column(m) == binomial_transform(a)
    assert m.recurrence_violations() == []


@settings(max_examples=200, deadline=None)
@given(big_lists)
def test_inverse_pair_round_trip(a):
    assert inverse_binomial_transform(binomial_transform(a)) == a
    assert binomial_transform(inverse_binomial_transform(a)) == a


def test_polynomial_transforms_round_trip():
    polys = [fubini_polynomial(n) for n in range(12)]
    assert inverse_binomial_transform(binomial_transform(polys)) == polys
    assert first_column(build_matrix(polys)) == binomial_transform(polys)


def test_recurrence_violations_detects_tampering():
    m = build_matrix([1, 1, 2, 5])
    rows = [list(r) for r in m.rows]
    rows[2][1] += 1
    # the entry below-left now disagrees too
    assert ESMatrix(rows).recurrence_violations() == [(2, 1), (3, 0)]


@pytest.mark.parametrize("n", [1, 5, 12, 20])
def test_polynomial_matrix_commutes_with_evaluation(n):
    poly_matrix = build_matrix([bell_polynomial(k) for k in range(n + 1)])
    num_matrix = build_matrix([bell_number(k) for k in range(n + 1)])
    assert poly_matrix.evaluate(1) == num_matrix


def test_random_polynomial_duality():
    rng = random.Random(7)
    for _ in range(20):
        seq = [P([rng.randint(-9, 9) for _ in range(rng.randint(0, 5))]) for _ in range(rng.randint(1, 12))]
        assert first_column(build_matrix(seq)) == binomial_transform(seq)
