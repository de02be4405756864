"""Stirling numbers of the second kind, exponential (Bell) and geometric
(Fubini) numbers and polynomials.

The Stirling triangle is built from ``S(n,k) = k S(n-1,k) + S(n-1,k-1)`` and
memoized; the generating-function definitions are checked separately by
:mod:`eulerseidel.series_engine`, so the two stay independent.
"""
from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass, field, replace

from .exact_core import IntPolynomial, poly_eval_int


class SeqKind(enum.Enum):
    STIRLING2 = "stirling2"
    BELL_NUMBER = "bell"
    BELL_POLY = "bellpoly"
    FUBINI_NUMBER = "fubini"
    FUBINI_POLY = "fubinipoly"

    @property
    def is_polynomial(self) -> bool:
        return self in (SeqKind.BELL_POLY, SeqKind.FUBINI_POLY)


class _StirlingTriangle:
    """Rows of the Stirling triangle, extended on demand.

    Readers only ever see fully built rows; extension happens under a lock.
    """

    def __init__(self):
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                m = len(self._rows)
                # row m has entries k = 0..m
                new = [0] * (m + 1)
                for k in range(1, m + 1):
                    left = prev[k - 1]
                    up = prev[k] if k < m else 0
                    new[k] = k * up + left
                self._rows.append(tuple(new))
            return self._rows[n]


_TRIANGLE = _StirlingTriangle()


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError(f"stirling2 needs nonnegative arguments, got ({n}, {k})")
    if k > n:
        return 0
    return _TRIANGLE.row(n)[k]


def stirling2_row(n: int) -> tuple[int, ...]:
    """``S(n, 0), ..., S(n, n)``."""
    if n < 0:
        raise ValueError(f"stirling2_row needs n >= 0, got {n}")
    return _TRIANGLE.row(n)


def bell_polynomial(n: int) -> IntPolynomial:
    """Exponential polynomial ``phi_n(x) = sum_k S(n,k) x^k``."""
    return IntPolynomial(stirling2_row(n))


def bell_number(n: int) -> int:
    return poly_eval_int(bell_polynomial(n), 1)


def fubini_polynomial(n: int) -> IntPolynomial:
    """Geometric polynomial ``F_n(x) = sum_k S(n,k) k! x^k``."""
    return IntPolynomial(s * math.factorial(k) for k, s in enumerate(stirling2_row(n)))


def fubini_number(n: int) -> int:
    return poly_eval_int(fubini_polynomial(n), 1)


def gamma_transform(p: IntPolynomial) -> IntPolynomial:
    """Replace ``x^k`` by ``k! x^k``.

    This is the exact value of ``int_0^oo p(x*lam) exp(-lam) dlam``, since
    ``int_0^oo lam^k exp(-lam) dlam = k!``.
    """
    return IntPolynomial(c * math.factorial(k) for k, c in enumerate(p.coeffs))


def terms(kind: SeqKind, count: int, m: int | None = None) -> list:
    """First ``count`` terms (indices ``0..count-1``) of a sequence."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    if kind is SeqKind.STIRLING2:
        if m is None or m < 0:
            raise ValueError("stirling2 needs a nonnegative column m")
        return [stirling2(n, m) for n in range(count)]
    gen = {
        SeqKind.BELL_NUMBER: bell_number,
        SeqKind.BELL_POLY: bell_polynomial,
        SeqKind.FUBINI_NUMBER: fubini_number,
        SeqKind.FUBINI_POLY: fubini_polynomial,
    }[kind]
    return [gen(n) for n in range(count)]


@dataclass(frozen=True)
class SequenceTables:
    """Precomputed terms ``0..size-1`` of every sequence family.

    Identity checks read their values from here rather than from the
    generators, so a corrupted table (see :meth:`with_term`) is visible to
    them exactly as a corrupted cache would be.
    """

    size: int
    stirling: tuple[tuple[int, ...], ...] = field(repr=False)
    bell_numbers: tuple[int, ...] = field(repr=False)
    bell_polys: tuple[IntPolynomial, ...] = field(repr=False)
    fubini_numbers: tuple[int, ...] = field(repr=False)
    fubini_polys: tuple[IntPolynomial, ...] = field(repr=False)

    @classmethod
    def build(cls, size: int) -> "SequenceTables":
        if size < 1:
            raise ValueError("table size must be at least 1")
        return cls(
            size=size,
            stirling=tuple(stirling2_row(n) for n in range(size)),
            bell_numbers=tuple(bell_number(n) for n in range(size)),
            bell_polys=tuple(bell_polynomial(n) for n in range(size)),
            fubini_numbers=tuple(fubini_number(n) for n in range(size)),
            fubini_polys=tuple(fubini_polynomial(n) for n in range(size)),
        )

    def S(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        return self.stirling[n][k]

    def with_term(self, table: str, index, value) -> "SequenceTables":
        """Copy with one entry replaced; ``index`` is ``(n, k)`` for ``stirling``."""
        if table == "stirling":
            n, k = index
            row = list(self.stirling[n])
            row[k] = value
            rows = list(self.stirling)
            rows[n] = tuple(row)
            return replace(self, stirling=tuple(rows))
        seq = list(getattr(self, table))
        seq[index] = value
        return replace(self, **{table: tuple(seq)})
