import pytest

from eulerseidel.exact_core import IntPolynomial as P
from eulerseidel.exact_core import binomial, poly_derivative, poly_eval_int
from eulerseidel.sequences import (
    SeqKind,
    SequenceTables,
    bell_number,
    bell_polynomial,
    fubini_number,
    fubini_polynomial,
    gamma_transform,
    stirling2,
    terms,
)

BELL_TABLE = [P([1]), P([0, 1]), P([0, 1, 1]), P([0, 1, 3, 1]), P([0, 1, 7, 6, 1])]
FUBINI_TABLE = [P([1]), P([0, 1]), P([0, 1, 2]), P([0, 1, 6, 6]), P([0, 1, 14, 36, 24])]


def test_stirling2_values():
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert stirling2(0, 0) == 1
    assert all(stirling2(n, 0) == 0 for n in range(1, 10))
    assert stirling2(3, 5) == 0


def test_stirling2_rejects_negative():
    with pytest.raises(ValueError):
        stirling2(-1, 0)


def test_stirling2_counts_partitions():
    # brute force: set partitions of {0..n-1} into k blocks
    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for part in partitions(rest):
            yield [[first]] + part
            for i in range(len(part)):
                yield part[:i] + [[first] + part[i]] + part[i + 1:]

    for n in range(7):
        counts = [0] * (n + 1)
        for part in partitions(list(range(n))):
            counts[len(part)] += 1
        assert counts == [stirling2(n, k) for k in range(n + 1)]


def test_polynomial_tables():
    assert [bell_polynomial(n) for n in range(5)] == BELL_TABLE
    assert [fubini_polynomial(n) for n in range(5)] == FUBINI_TABLE
    assert [bell_number(n) for n in range(5)] == [1, 1, 2, 5, 15]
    assert [fubini_number(n) for n in range(5)] == [1, 1, 3, 13, 75]


def test_bell_polynomial_matches_derivative_recurrence():
    phi = P([1])
    for _ in range(12):
        phi = (phi + poly_derivative(phi)).shift(1)
    assert bell_polynomial(12) == phi


def test_fubini_polynomial_matches_recurrence():
    F = [P([1])]
    for n in range(1, 11):
        acc = P()
        for k in range(n):
            acc = acc + binomial(n, k) * F[k]
        F.append(acc.shift(1))
    assert fubini_polynomial(10) == F[10]


def test_large_numbers_match_recurrences():
    b = [1]
    for n in range(25):
        b.append(sum(binomial(n, k) * b[k] for k in range(n + 1)))
    assert bell_number(25) == b[25] == 4638590332229999353
    f = [1]
    for n in range(1, 26):
        f.append(sum(binomial(n, k) * f[k] for k in range(n)))
    assert fubini_number(25) == f[25] == 106697365438475775825583498141


def test_gamma_transform_examples():
    assert gamma_transform(P([0, 1, 1])) == P([0, 1, 2]) == fubini_polynomial(2)
    assert gamma_transform(P([5])) == P([5])
    assert gamma_transform(BELL_TABLE[4]) == FUBINI_TABLE[4]


@pytest.mark.parametrize("n", range(0, 61, 6))
def test_sequence_invariants(n):
    phi, F = bell_polynomial(n), fubini_polynomial(n)
    assert gamma_transform(phi) == F
    assert poly_eval_int(phi, 1) == bell_number(n)
    assert poly_eval_int(F, 1) == fubini_number(n)
    assert phi.degree == F.degree == n
    if n >= 1:
        assert all(c > 0 for c in phi.coeffs[1:])
        assert all(c > 0 for c in F.coeffs[1:])
    row = [stirling2(n, k) for k in range(n + 1)]
    assert sum(row) == bell_number(n)
    assert sum(s * fact for s, fact in zip(row, _factorials(n))) == fubini_number(n)


def _factorials(n):
    out, f = [], 1
    for k in range(n + 1):
        out.append(f)
        f *= k + 1
    return out


def test_terms_and_kinds():
    assert terms(SeqKind.STIRLING2, 3, m=0) == [1, 0, 0]
    assert terms(SeqKind.BELL_NUMBER, 5) == [1, 1, 2, 5, 15]
    assert terms(SeqKind.FUBINI_POLY, 4)[-1] == FUBINI_TABLE[3]
    with pytest.raises(ValueError):
        terms(SeqKind.STIRLING2, 3)


def test_sequence_tables_with_term_copies():
    T = SequenceTables.build(6)
    T2 = T.with_term("bell_numbers", 5, 53)
    assert T.bell_numbers[5] == 52 and T2.bell_numbers[5] == 53
    T3 = T.with_term("stirling", (4, 2), 8)
    assert T.S(4, 2) == 7 and T3.S(4, 2) == 8
