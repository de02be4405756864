"""Euler-Seidel matrices and the binomial transform pair.

Row 0 of the matrix is the initial sequence and every later entry is the sum
of the entry above it and the entry above-right::

    a[k][n] = a[k-1][n] + a[k-1][n+1]

A finite initial sequence of length ``N`` yields a triangle: row ``k`` holds
``N - k`` entries.  Entries are ``int`` or :class:`IntPolynomial`.
"""
from __future__ import annotations

from typing import Sequence, TypeVar, Union

from .exact_core import IntPolynomial, binomial, poly_eval_int

E = TypeVar("E", int, IntPolynomial)
Entry = Union[int, IntPolynomial]


def _check_entries(values: Sequence) -> None:
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, IntPolynomial)):
            raise TypeError(f"Euler-Seidel entries must be int or IntPolynomial, got {type(v).__name__}")


class ESMatrix:
    """Immutable triangular Euler-Seidel table; ``rows[k][n]`` is ``a_n^k``."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Entry]]):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("ESMatrix is immutable")

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, kn: tuple[int, int]) -> Entry:
        k, n = kn
        return self.rows[k][n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ESMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"ESMatrix({[list(r) for r in self.rows]})"

    def entries(self):
        """Yield ``(k, n, a_n^k)`` row-major."""
        for k, row in enumerate(self.rows):
            for n, v in enumerate(row):
                yield k, n, v

    def map(self, fn) -> "ESMatrix":
        return ESMatrix([[fn(v) for v in row] for row in self.rows])

    def evaluate(self, x: int) -> "ESMatrix":
        """Evaluate every polynomial entry at ``x``."""
        return self.map(lambda v: poly_eval_int(v, x) if isinstance(v, IntPolynomial) else v)

    def recurrence_violations(self) -> list[tuple[int, int]]:
        """Positions ``(k, n)`` where the defining recurrence fails."""
        bad = []
        for k in range(1, len(self.rows)):
            for n, v in enumerate(self.rows[k]):
                if v != self.rows[k - 1][n] + self.rows[k - 1][n + 1]:
                    bad.append((k, n))
        return bad


def build_matrix(initial: Sequence[E]) -> ESMatrix:
    if len(initial) == 0:
        raise ValueError("build_matrix: initial sequence is empty")
    _check_entries(initial)
    rows = [tuple(initial)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append(tuple(prev[n] + prev[n + 1] for n in range(len(prev) - 1)))
    return ESMatrix(rows)


def first_column(m: ESMatrix) -> list[Entry]:
    """The sequence ``a_0^n``."""
    return [row[0] for row in m.rows]


def first_row(m: ESMatrix) -> list[Entry]:
    return list(m.rows[0]) if m.rows else []


def _weighted_sum(terms: list):
    acc = terms[0]
    for t in terms[1:]:
        acc = acc + t
    return acc


def binomial_transform(a: Sequence[E]) -> list[E]:
    """``b_n = sum_{k<=n} C(n,k) a_k``, by the explicit sum."""
    _check_entries(a)
    return [_weighted_sum([binomial(n, k) * a[k] for k in range(n + 1)]) for n in range(len(a))]


def inverse_binomial_transform(b: Sequence[E]) -> list[E]:
    """``a_n = sum_{k<=n} C(n,k) (-1)^(n-k) b_k``."""
    _check_entries(b)
    out = []
    for n in range(len(b)):
        out.append(_weighted_sum([(-1) ** (n - k) * binomial(n, k) * b[k] for k in range(n + 1)]))
    return out
